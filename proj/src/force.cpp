#include "cpwall/force.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cpwall {

const char* to_string(Direction d) {
  switch (d) {
    case Direction::attractive: return "attractive";
    case Direction::repulsive: return "repulsive";
    case Direction::null: return "null";
  }
  return "?";
}

namespace {

Direction direction_of(double value, double err) {
  if (std::abs(value) <= err) return Direction::null;
  return value < 0 ? Direction::attractive : Direction::repulsive;
}

}  // namespace

ForceValue assemble_force(State state, const PointKernels& k) {
  if (!k.with_derivatives) throw InvalidInput("force needs kernel derivatives");
  StateCoefficients c = coefficients(state, k.point.theta);
  double Pdf = 0, Pdg = 0, Pdge = 0;
  if (k.w.par > 0) {
    Pdf += k.w.par * k.par.df_dzeta;
    Pdg += k.w.par * k.par.dg_dzeta;
    Pdge += k.w.par * k.par.dg_error;
  }
  if (k.w.perp > 0) {
    Pdf += k.w.perp * k.perp.df_dzeta;
    Pdg += k.w.perp * k.perp.dg_dzeta;
    Pdge += k.w.perp * k.perp.dg_error;
  }
  ForceValue f;
  f.state = state;
  f.point = k.point;
  f.tf = -(c.cf * Pdf + c.cg * Pdg);
  f.rr = -Pdf;
  f.value = f.tf + f.rr;
  f.error_estimate = std::abs(c.cg) * Pdge;
  f.direction = direction_of(f.value, f.error_estimate);
  return f;
}

ForceValue force(State state, const AtomSpec& atom, const ReducedPoint& p, double tol) {
  return assemble_force(state, evaluate_kernels(atom, p, tol, true));
}

ForceValue force_si(const ForceValue& r, const AtomSpec& atom) {
  if (r.units == Units::si) return r;
  double u = force_unit(atom);
  ForceValue f = r;
  f.units = Units::si;
  f.value *= u;
  f.tf *= u;
  f.rr *= u;
  f.error_estimate *= u;
  return f;
}

FiniteDifferenceReport force_vs_finite_difference(State state, const AtomSpec& atom,
                                                  const ReducedPoint& p, double threshold) {
  constexpr double tol = 1e-12;
  ForceValue F = force(state, atom, p, tol);
  auto E = [&](double z) { return shift_total(state, atom, {z, p.theta}, tol).total; };
  // Richardson-extrapolated central difference, O(h^4)
  double h = 0.01 * std::min(p.zeta, 1.0);
  double d1 = (E(p.zeta + h) - E(p.zeta - h)) / (2 * h);
  double d2 = (E(p.zeta + h / 2) - E(p.zeta - h / 2)) / h;
  double d3 = (E(p.zeta + h / 4) - E(p.zeta - h / 4)) / (h / 2);
  double r12 = (4 * d2 - d1) / 3, r23 = (4 * d3 - d2) / 3;
  double deriv = (16 * r23 - r12) / 15;
  FiniteDifferenceReport rep;
  rep.analytic = F.value;
  rep.numeric = -deriv;
  rep.step = h;
  rep.scale = std::max({std::abs(F.value), std::abs(F.tf), std::abs(F.rr)});
  rep.rel_deviation = std::abs(rep.analytic - rep.numeric) / rep.scale;
  rep.pass = rep.rel_deviation < threshold;
  return rep;
}

std::vector<ForceZero> find_force_zeros(State state, const AtomSpec& atom, double theta,
                                        double zeta_lo, double zeta_hi, double tol,
                                        int points_per_period, double kernel_tol) {
  validate(atom);
  if (!(zeta_lo > 0 && zeta_hi > zeta_lo && std::isfinite(zeta_hi)))
    throw InvalidInput("zeta interval must satisfy 0 < lo < hi");
  if (points_per_period < 2) throw InvalidInput("points per period must be >= 2");
  validate(ReducedPoint{zeta_lo, theta});

  auto F = [&](double z) { return force(state, atom, {z, theta}, kernel_tol).value; };
  const double period = std::numbers::pi;
  auto n = static_cast<std::int64_t>(
      std::ceil((zeta_hi - zeta_lo) / period * points_per_period));
  n = std::max<std::int64_t>(n, 2);

  std::vector<double> zs(n + 1), fs(n + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    zs[i] = i == n ? zeta_hi : zeta_lo + (zeta_hi - zeta_lo) * double(i) / double(n);
    fs[i] = F(zs[i]);
  }

  std::vector<ForceZero> out;
  for (std::int64_t i = 0; i < n; ++i) {
    double a = zs[i], b = zs[i + 1], fa = fs[i], fb = fs[i + 1];
    if (fa == 0 && i > 0) continue;  // counted at the previous interval
    if (!((fa < 0 && fb > 0) || (fa > 0 && fb < 0) || fb == 0)) continue;
    if (fb == 0) {
      a = b;
    } else {
      while (b - a > tol * std::max(1.0, std::abs(a))) {
        double m = 0.5 * (a + b);
        double fm = F(m);
        if (fm == 0) {
          a = b = m;
          break;
        }
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
    }
    ForceZero zr;
    zr.zeta = 0.5 * (a + b);
    zr.before = fs[i] < 0 ? Direction::attractive : Direction::repulsive;
    double after = i + 2 <= n && fs[i + 1] == 0 ? fs[i + 2] : fs[i + 1];
    zr.after = after < 0 ? Direction::attractive
                         : (after > 0 ? Direction::repulsive : Direction::null);
    zr.stable = fs[i] > 0 && after < 0;
    out.push_back(zr);
  }
  return out;
}

}  // namespace cpwall
