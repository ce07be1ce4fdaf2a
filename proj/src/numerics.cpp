#include "cpwall/numerics.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <queue>

#include "cpwall/model.hpp"

namespace cpwall {

QuadResult& QuadResult::operator+=(const QuadResult& o) {
  value += o.value;
  error_estimate += o.error_estimate;
  evaluations += o.evaluations;
  converged = converged && o.converged;
  images = std::max(images, o.images);
  return *this;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a, b, value, error, resabs;
  std::int64_t order;  // creation index, tie-break
};

struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.order > y.order;
  }
};

Panel gk21(const std::function<double(double)>& f, double a, double b) {
  using K = boost::math::quadrature::gauss_kronrod<double, 21>;
  using G = boost::math::quadrature::gauss<double, 10>;
  const auto& xk = K::abscissa();
  const auto& wk = K::weights();
  const auto& wg = G::weights();
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  if (!std::isfinite(fc)) throw InvalidInput("non-finite integrand sample");
  double rk = wk[0] * fc, rg = 0, ra = wk[0] * std::abs(fc);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    double f1 = f(c - h * xk[i]), f2 = f(c + h * xk[i]);
    if (!std::isfinite(f1) || !std::isfinite(f2))
      throw InvalidInput("non-finite integrand sample");
    rk += wk[i] * (f1 + f2);
    ra += wk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) rg += wg[i / 2] * (f1 + f2);
  }
  Panel p{a, b, rk * h, 0, ra * std::abs(h), 0};
  p.error = std::max(std::abs((rk - rg) * h), 50 * kEps * p.resabs);
  return p;
}

}  // namespace

QuadResult integrate_gk(const std::function<double(double)>& f,
                        const std::vector<double>& breaks, double rel_tol,
                        double abs_floor, int max_panels) {
  QuadResult r;
  if (breaks.size() < 2) return r;
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> q;
  std::int64_t order = 0;
  double value = 0, error = 0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    Panel p = gk21(f, breaks[i], breaks[i + 1]);
    p.order = order++;
    value += p.value;
    error += p.error;
    q.push(p);
  }
  r.evaluations = 21 * order;
  int panels = static_cast<int>(q.size());
  while (error > std::max(rel_tol * std::abs(value), abs_floor)) {
    if (panels >= max_panels || q.empty()) {
      r.converged = false;
      break;
    }
    Panel p = q.top();
    double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) {  // cannot split further
      r.converged = false;
      break;
    }
    q.pop();
    Panel l = gk21(f, p.a, mid), u = gk21(f, mid, p.b);
    l.order = order++;
    u.order = order++;
    r.evaluations += 42;
    value += l.value + u.value - p.value;
    error += l.error + u.error - p.error;
    q.push(l);
    q.push(u);
    ++panels;
  }
  // resum from scratch to shed accumulated update roundoff
  value = 0;
  error = 0;
  std::vector<Panel> all;
  while (!q.empty()) {
    all.push_back(q.top());
    q.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  for (const auto& p : all) {
    value += p.value;
    error += p.error;
  }
  r.value = value;
  r.error_estimate = error;
  if (r.converged && error > std::max(rel_tol * std::abs(value), abs_floor))
    r.converged = false;
  return r;
}

QuadResult integrate_damped(const QuadSpec& spec) {
  if (!(spec.rel_tol > 0 && spec.rel_tol < 1))
    throw InvalidInput("rel_tol must lie in (0, 1)");
  if (!(spec.scale > 0)) throw InvalidInput("scale must be > 0");
  double pmax = 0;
  for (double p : spec.peaks) {
    if (!(p >= 0) || !std::isfinite(p)) throw InvalidInput("bad peak location");
    pmax = std::max(pmax, p);
  }
  double cut = 50;
  if (spec.abs_floor > 0) cut = std::max(cut, -std::log(spec.abs_floor));
  double vmax = pmax + cut;

  std::vector<double> br{0.0, vmax};
  for (double p : spec.peaks) {
    br.push_back(p);
    for (double d = spec.scale; d < vmax; d *= 4) {
      br.push_back(p + d);
      if (p - d > 0) br.push_back(p - d);
    }
  }
  for (double d = 1; d < vmax; d *= 4) br.push_back(d);  // e^{-v} itself
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  while (!br.empty() && br.back() > vmax) br.pop_back();
  if (br.back() < vmax) br.push_back(vmax);

  QuadResult r =
      integrate_gk(spec.integrand, br, spec.rel_tol, spec.abs_floor, spec.max_panels);

  // discarded tail: |integrand| <= C e^{-v} with C taken over the last panel
  double C = 0;
  if (spec.tail_majorant) {
    C = spec.tail_majorant(vmax);
  } else {
    double a = br[br.size() - 2];
    for (int i = 0; i <= 8; ++i) {
      double v = a + (vmax - a) * i / 8.0;
      C = std::max(C, std::abs(spec.integrand(v)) * std::exp(v));
    }
    r.evaluations += 9;
  }
  double tail = C * std::exp(-vmax);
  r.error_estimate += tail;
  if (!r.converged ||
      r.error_estimate > std::max(spec.rel_tol * std::abs(r.value), spec.abs_floor))
    throw NonConvergence("damped quadrature hit the panel limit");
  return r;
}

QuadResult sum_images(const SeriesSpec& spec) {
  QuadResult out;
  if (spec.single_term) {
    out = spec.term(0);
    out.images = 0;
    return out;
  }
  if (!spec.tail && !spec.tail_bound)
    throw InvalidInput("sum_images needs a tail bound or tail estimate");

  // terms kept in index order so the reduction is independent of K history
  std::vector<QuadResult> pos{spec.term(0)}, neg{QuadResult{}};
  std::int64_t K = std::max<std::int64_t>(spec.min_images, 1);
  for (;;) {
    for (std::int64_t k = static_cast<std::int64_t>(pos.size()); k <= K; ++k) {
      pos.push_back(spec.term(k));
      neg.push_back(spec.term(-k));
    }
    QuadResult partial;
    for (std::int64_t k = K; k >= 1; --k) {  // small terms first
      QuadResult pair = pos[k];
      pair += neg[k];
      partial += pair;
    }
    partial += pos[0];

    QuadResult tail;
    if (spec.tail) {
      tail = spec.tail(K);
    } else {
      tail.error_estimate = spec.tail_bound(K);
    }
    double total = partial.value + tail.value;
    double target = std::max(spec.rel_tol * std::abs(total), spec.abs_floor);
    if (tail.error_estimate <= target || K >= spec.max_images) {
      out = partial;
      out.value = total;
      out.error_estimate = partial.error_estimate + tail.error_estimate;
      out.evaluations += tail.evaluations;
      out.converged = partial.converged && tail.converged && tail.error_estimate <= target;
      out.images = K;
      if (tail.error_estimate > target)
        throw NonConvergence("image sum did not converge within the image cap");
      return out;
    }
    K = std::min(2 * K, spec.max_images);
  }
}

}  // namespace cpwall
