#include "cpwall/shifts.hpp"

#include <cmath>

namespace cpwall {

StateCoefficients coefficients(State state, double theta) {
  // coth(theta/2) = 1 + 2/(e^theta - 1)
  double coth = 1, tanh = 1;
  if (!std::isinf(theta)) {
    tanh = std::tanh(theta / 2);
    coth = 1 / tanh;
  }
  switch (state) {
    case State::excited: return {coth, -1};
    case State::ground: return {-coth, 1};
    case State::average: return {-1, tanh};
  }
  return {};
}

PointKernels evaluate_kernels(const AtomSpec& atom, const ReducedPoint& p, double tol,
                              bool with_derivatives, const ImageOptions& opt) {
  validate(atom);
  validate(p);
  PointKernels k;
  k.w = weights(atom);
  k.point = p;
  k.with_derivatives = with_derivatives;
  auto one = [&](Axis axis) {
    KernelValue kv;
    kv.axis = axis;
    kv.point = p;
    kv.f_hat = f_hat(axis, p.zeta);
    kv.df_dzeta = df_hat_dzeta(axis, p.zeta);
    QuadResult g = g_hat(axis, p, tol, opt);
    kv.g_hat = g.value;
    kv.g_error = g.error_estimate;
    kv.images = g.images;
    kv.evaluations = g.evaluations;
    if (with_derivatives) {
      QuadResult dg = dg_hat_dzeta(axis, p, tol, opt);
      kv.dg_dzeta = dg.value;
      kv.dg_error = dg.error_estimate;
      kv.images = std::max(kv.images, dg.images);
      kv.evaluations += dg.evaluations;
    }
    return kv;
  };
  if (k.w.par > 0) k.par = one(Axis::parallel);
  if (k.w.perp > 0) k.perp = one(Axis::perpendicular);
  return k;
}

ShiftBreakdown assemble_shift(State state, const PointKernels& k) {
  StateCoefficients c = coefficients(state, k.point.theta);
  double Pf = 0, Pg = 0, Pge = 0;
  if (k.w.par > 0) {
    Pf += k.w.par * k.par.f_hat;
    Pg += k.w.par * k.par.g_hat;
    Pge += k.w.par * k.par.g_error;
  }
  if (k.w.perp > 0) {
    Pf += k.w.perp * k.perp.f_hat;
    Pg += k.w.perp * k.perp.g_hat;
    Pge += k.w.perp * k.perp.g_error;
  }
  ShiftBreakdown b;
  b.state = state;
  b.units = Units::reduced;
  b.tf = c.cf * Pf + c.cg * Pg;
  b.rr = Pf;
  b.total = b.tf + b.rr;
  b.tf_error = std::abs(c.cg) * Pge;
  b.rr_error = 0;
  b.error_estimate = b.tf_error + b.rr_error;
  return b;
}

double shift_tf(State state, const AtomSpec& atom, const ReducedPoint& p, double tol) {
  if (state == State::ground) return -shift_tf(State::excited, atom, p, tol);
  return assemble_shift(state, evaluate_kernels(atom, p, tol, false)).tf;
}

double shift_rr(const AtomSpec& atom, const ReducedPoint& p) {
  validate(atom);
  validate(p);
  Weights w = weights(atom);
  double r = 0;
  if (w.par > 0) r += w.par * f_hat(Axis::parallel, p.zeta);
  if (w.perp > 0) r += w.perp * f_hat(Axis::perpendicular, p.zeta);
  return r;
}

ShiftBreakdown shift_total(State state, const AtomSpec& atom, const ReducedPoint& p,
                           double tol) {
  return assemble_shift(state, evaluate_kernels(atom, p, tol, false));
}

std::array<ShiftBreakdown, 3> shift_all(const AtomSpec& atom, const ReducedPoint& p,
                                        double tol) {
  PointKernels k = evaluate_kernels(atom, p, tol, false);
  return {assemble_shift(State::ground, k), assemble_shift(State::excited, k),
          assemble_shift(State::average, k)};
}

ShiftBreakdown to_si(const ShiftBreakdown& r, const AtomSpec& atom) {
  if (r.units == Units::si) return r;
  double E = energy_unit(atom);
  ShiftBreakdown s = r;
  s.units = Units::si;
  s.tf *= E;
  s.rr *= E;
  s.total = s.tf + s.rr;
  s.tf_error *= E;
  s.rr_error *= E;
  s.error_estimate = s.tf_error + s.rr_error;
  return s;
}

ShiftBreakdown shift_si(State state, const AtomSpec& atom, const Environment& env,
                        double tol) {
  return to_si(shift_total(state, atom, to_reduced(atom, env), tol), atom);
}

}  // namespace cpwall
