#include "cpwall/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "profile.hpp"

namespace cpwall {

namespace {

using detail::RationalProfile;

constexpr double kSeriesSwitch = 1e-4;

double factorial(int n) { return std::tgamma(n + 1.0); }

// Laurent coefficients: f_hat = sum_n c_n zeta^{2n-3}
double series_coeff(Axis axis, int n) {
  if (n == 0) return axis == Axis::parallel ? -1 : -2;
  double s = (n % 2 ? -1.0 : 1.0) * std::pow(4.0, n);
  if (axis == Axis::parallel)
    return s * (-1 / factorial(2 * n) - 1 / factorial(2 * n - 2) + 1 / factorial(2 * n - 1));
  return s * (-2 / factorial(2 * n) + 2 / factorial(2 * n - 1));
}

void check_zeta(double zeta) {
  if (!(std::isfinite(zeta) && zeta > 0)) throw InvalidInput("zeta must be finite and > 0");
}

RationalProfile profile(Axis axis, double zeta) {
  double a = 2 * zeta;
  if (axis == Axis::parallel) return RationalProfile(a, {{1, 0, 2}, {-2 * a * a, 0, 3}});
  return RationalProfile(a, {{1, 0, 2}});
}

RationalProfile zeta_derivative_profile(Axis axis, double zeta) {
  double a = 2 * zeta;
  if (axis == Axis::parallel)
    return RationalProfile(a, {{-32 * zeta, 0, 3}, {48 * zeta * a * a, 0, 4}});
  return RationalProfile(a, {{-16 * zeta, 0, 3}});
}

// F(s) = int_0^inf e^{-v} h(v + s) dv
QuadResult damped(const RationalProfile& h, double s, double tol) {
  double mass = h.mass();
  double scale = std::min(h.envelope(std::abs(s)), mass);
  if (s < 0) scale += std::exp(s) * mass;
  QuadSpec q;
  q.integrand = [&h, s](double v) { return std::exp(-v) * h(v + s); };
  q.peaks = {s < 0 ? -s : 0.0};
  q.scale = h.a();
  q.rel_tol = tol / 10;
  q.abs_floor = tol / 10 * scale;
  // the cutoff lies past the peak, so v + s > 0 there
  q.tail_majorant = [&h, s](double v) { return h.envelope_sup(v + s); };
  return integrate_damped(q);
}

QuadResult image_sum(const RationalProfile& h, double sign, const ReducedPoint& p,
                     double tol, const ImageOptions& opt) {
  const double pref = sign * 64 / std::numbers::pi;
  const double theta = p.theta;
  const bool zero_t = std::isinf(theta);

  SeriesSpec spec;
  spec.term = [&](std::int64_t k) {
    QuadResult r = damped(h, zero_t ? 0.0 : double(k) * theta, tol);
    return r;
  };
  spec.single_term = zero_t;
  if (!zero_t) {
    RationalProfile h1 = h.derivative();
    RationalProfile h3 = h1.derivative().derivative();
    // Euler-Maclaurin (midpoint form) for the images with |k| > K:
    // (1/theta)[2H(S) - F(S) + F(-S)] + (theta/24)[F'(S) - F'(-S)]
    //   - (7 theta^3/5760)[F'''(S) - F'''(-S)],  S = (K + 1/2) theta,
    // using int_S^inf F = H(S) - F(S), int_-inf^-S F = H(S) + F(-S), F' = F - h.
    spec.tail = [&h, h1, h3, theta, tol](std::int64_t K) {
      double S = (double(K) + 0.5) * theta;
      QuadResult fp = damped(h, S, tol), fm = damped(h, -S, tol);
      QuadResult d1p = damped(h1, S, tol), d1m = damped(h1, -S, tol);
      QuadResult d3p = damped(h3, S, tol), d3m = damped(h3, -S, tol);
      double H = h.tail_integral(S);
      double c3 = 7 * theta * theta * theta / 5760;
      double last = c3 * (d3p.value - d3m.value);
      QuadResult t;
      t.value = (2 * H - fp.value + fm.value) / theta +
                theta / 24 * (d1p.value - d1m.value) - last;
      t.error_estimate = std::abs(last) +
                         (fp.error_estimate + fm.error_estimate) / theta +
                         theta / 24 * (d1p.error_estimate + d1m.error_estimate) +
                         c3 * (d3p.error_estimate + d3m.error_estimate);
      t.evaluations = fp.evaluations + fm.evaluations + d1p.evaluations +
                      d1m.evaluations + d3p.evaluations + d3m.evaluations;
      return t;
    };
    // keep e^{-S} negligible at the starting image count when the
    // images are widely spaced
    std::int64_t k0 = 2;
    if (theta > 0.5) k0 = std::max<std::int64_t>(2, std::int64_t(std::ceil(45 / theta)));
    spec.min_images = k0 * std::max<std::int64_t>(1, opt.min_images_factor);
    spec.max_images = opt.max_images;
  }
  spec.rel_tol = tol;
  double s0 = std::min(h.envelope(0), h.mass());
  spec.abs_floor = 1e-3 * tol * s0;

  QuadResult r = sum_images(spec);
  r.value *= pref;
  r.error_estimate *= std::abs(pref);
  return r;
}

void check_point(const ReducedPoint& p, double tol) {
  validate(p);
  // per-term quadrature runs at tol/10, which must stay above rounding
  if (!(tol >= kMinKernelTol && tol < 1))
    throw InvalidInput("tolerance must lie in [1e-12, 1)");
}

}  // namespace

double f_hat(Axis axis, double zeta) {
  check_zeta(zeta);
  if (zeta < kSeriesSwitch) {
    double z2 = zeta * zeta, r = 0;
    for (int n = 4; n >= 0; --n) r = r * z2 + series_coeff(axis, n);
    return r / (z2 * zeta);
  }
  double c = std::cos(2 * zeta), s = std::sin(2 * zeta);
  double z2 = zeta * zeta, z3 = z2 * zeta;
  if (axis == Axis::parallel) return (4 * z2 - 1) / z3 * c - 2 / z2 * s;
  return -2 / z3 * c - 4 / z2 * s;
}

double df_hat_dzeta(Axis axis, double zeta) {
  check_zeta(zeta);
  if (zeta < kSeriesSwitch) {
    double z2 = zeta * zeta, r = 0;
    for (int n = 4; n >= 0; --n) r = r * z2 + (2 * n - 3) * series_coeff(axis, n);
    return r / (z2 * z2);
  }
  double c = std::cos(2 * zeta), s = std::sin(2 * zeta);
  double z = zeta, z2 = z * z, z3 = z2 * z, z4 = z2 * z2;
  if (axis == Axis::parallel) return -8 * s / z - 8 * c / z2 + 6 * s / z3 + 3 * c / z4;
  return 6 * c / z4 + 12 * s / z3 - 8 * c / z2;
}

QuadResult g_hat(Axis axis, const ReducedPoint& p, double tol, const ImageOptions& opt) {
  check_point(p, tol);
  return image_sum(profile(axis, p.zeta), axis == Axis::parallel ? 1 : -1, p, tol, opt);
}

QuadResult dg_hat_dzeta(Axis axis, const ReducedPoint& p, double tol,
                        const ImageOptions& opt) {
  check_point(p, tol);
  return image_sum(zeta_derivative_profile(axis, p.zeta), axis == Axis::parallel ? 1 : -1,
                   p, tol, opt);
}

KernelValue kernel(Axis axis, const ReducedPoint& p, double tol, const ImageOptions& opt) {
  KernelValue kv;
  kv.axis = axis;
  kv.point = p;
  QuadResult g = g_hat(axis, p, tol, opt);
  QuadResult dg = dg_hat_dzeta(axis, p, tol, opt);
  kv.f_hat = f_hat(axis, p.zeta);
  kv.df_dzeta = df_hat_dzeta(axis, p.zeta);
  kv.g_hat = g.value;
  kv.g_error = g.error_estimate;
  kv.dg_dzeta = dg.value;
  kv.dg_error = dg.error_estimate;
  kv.images = std::max(g.images, dg.images);
  kv.evaluations = g.evaluations + dg.evaluations;
  return kv;
}

}  // namespace cpwall
