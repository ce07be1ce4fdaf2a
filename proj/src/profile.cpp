#include "profile.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace cpwall::detail {

RationalProfile::RationalProfile(double a, std::vector<RationalTerm> terms) : a_(a) {
  std::map<std::pair<int, int>, double> merged;
  for (const auto& t : terms) merged[{t.m, t.n}] += t.c;
  for (const auto& [k, c] : merged)
    if (c != 0) terms_.push_back({c, k.first, k.second});
}

double RationalProfile::operator()(double s) const {
  double qi = 1 / (s * s + a_ * a_);
  double r = 0;
  for (const auto& t : terms_) r += t.c * std::pow(s, t.m) * std::pow(qi, t.n);
  return r;
}

double RationalProfile::envelope(double s) const {
  double qi = 1 / (s * s + a_ * a_);
  double as = std::abs(s), r = 0;
  for (const auto& t : terms_) r += std::abs(t.c) * std::pow(as, t.m) * std::pow(qi, t.n);
  return r;
}

double RationalProfile::envelope_sup(double x) const {
  double r = 0;
  for (const auto& t : terms_) {
    double peak = a_ * std::sqrt(double(t.m) / (2 * t.n - t.m));
    double u = std::max(x, peak);
    r += std::abs(t.c) * std::pow(u, t.m) * std::pow(1 / (u * u + a_ * a_), t.n);
  }
  return r;
}

double RationalProfile::mass() const {
  double r = 0;
  for (const auto& t : terms_) {
    double h = 0.5 * (t.m + 1);
    r += std::abs(t.c) * std::pow(a_, t.m + 1 - 2 * t.n) *
         std::exp(std::lgamma(h) + std::lgamma(t.n - h) - std::lgamma(t.n));
  }
  return r;
}

RationalProfile RationalProfile::derivative() const {
  std::vector<RationalTerm> d;
  for (const auto& t : terms_) {
    if (t.m > 0) d.push_back({t.c * t.m, t.m - 1, t.n});
    d.push_back({-2.0 * t.n * t.c, t.m + 1, t.n + 1});
  }
  return RationalProfile(a_, std::move(d));
}

double RationalProfile::tail_integral(double S) const {
  double r = 0;
  for (const auto& t : terms_) {
    if (t.m != 0) throw std::logic_error("tail_integral needs m = 0 terms");
    r += t.c * lorentz_tail(t.n, a_, S);
  }
  return r;
}

double lorentz_tail(int n, double a, double S) {
  if (S > 2 * a) {
    // binomial series in (a/S)^2, ratio <= 1/4
    double x = (a / S) * (a / S);
    double binom = 1, xp = 1, r = 0;
    for (int j = 0; j < 200; ++j) {
      double term = binom * xp / (2 * n + 2 * j - 1);
      r += (j % 2 ? -term : term);
      if (std::abs(term) < 1e-18 * std::abs(r)) break;
      binom *= double(n + j) / (j + 1);
      xp *= x;
    }
    return r / std::pow(S, 2 * n - 1);
  }
  // s = a cot(phi): a^{1-2n} integral_0^psi sin^{2n-2}
  double psi = std::atan2(a, S);
  double sn = std::sin(psi), cs = std::cos(psi);
  double J = psi;
  for (int m = 1; m <= n - 1; ++m)
    J = -std::pow(sn, 2 * m - 1) * cs / (2 * m) + (2.0 * m - 1) / (2 * m) * J;
  return std::pow(a, 1 - 2 * n) * J;
}

}  // namespace cpwall::detail
