#pragma once

#include <array>

#include "cpwall/kernels.hpp"
#include "cpwall/model.hpp"

namespace cpwall {

inline constexpr double kShiftTol = 1e-8;

// Reduced energies are in units of energy_unit(atom); si multiplies by it
// ("paper-convention SI", see README).
struct ShiftBreakdown {
  State state = State::ground;
  Units units = Units::reduced;
  double tf = 0, rr = 0, total = 0;
  double tf_error = 0, rr_error = 0;
  double error_estimate = 0;  // tf_error + rr_error
};

// tf = cf * P(f_hat) + cg * P(g_hat), rr = P(f_hat), with
// P(K) = w_par K_par + w_perp K_perp
struct StateCoefficients {
  double cf = 0, cg = 0;
};
StateCoefficients coefficients(State state, double theta);

// kernel values needed for one point; axes with zero weight are skipped
struct PointKernels {
  Weights w;
  ReducedPoint point;
  KernelValue par, perp;
  bool with_derivatives = false;
};
PointKernels evaluate_kernels(const AtomSpec& atom, const ReducedPoint& p, double tol,
                              bool with_derivatives, const ImageOptions& opt = {});

ShiftBreakdown assemble_shift(State state, const PointKernels& k);

double shift_tf(State state, const AtomSpec& atom, const ReducedPoint& p,
                double tol = kShiftTol);
double shift_rr(const AtomSpec& atom, const ReducedPoint& p);
ShiftBreakdown shift_total(State state, const AtomSpec& atom, const ReducedPoint& p,
                           double tol = kShiftTol);
// ground, excited, average from one kernel evaluation
std::array<ShiftBreakdown, 3> shift_all(const AtomSpec& atom, const ReducedPoint& p,
                                        double tol = kShiftTol);
ShiftBreakdown shift_si(State state, const AtomSpec& atom, const Environment& env,
                        double tol = kShiftTol);
ShiftBreakdown to_si(const ShiftBreakdown& reduced, const AtomSpec& atom);

}  // namespace cpwall
