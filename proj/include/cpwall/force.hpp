#pragma once

// F = -d(shift)/dz with +z pointing away from the wall, so F < 0 is
// attraction. Reduced F = -d(reduced shift)/dzeta; newtons via force_unit.
// For the excited state this is the gradient of the excited-level shift,
// which need not be a true potential force.

#include <vector>

#include "cpwall/shifts.hpp"

namespace cpwall {

enum class Direction { attractive, repulsive, null };
const char* to_string(Direction d);

struct ForceValue {
  State state = State::ground;
  ReducedPoint point;
  Units units = Units::reduced;
  double value = 0;
  double tf = 0, rr = 0;  // -d/dzeta of each part
  double error_estimate = 0;
  Direction direction = Direction::null;
};

ForceValue assemble_force(State state, const PointKernels& k);
ForceValue force(State state, const AtomSpec& atom, const ReducedPoint& p,
                 double tol = kShiftTol);
ForceValue force_si(const ForceValue& reduced, const AtomSpec& atom);

struct FiniteDifferenceReport {
  double analytic = 0;
  double numeric = 0;
  double step = 0;
  double scale = 0;          // max(|F|, |F_tf|, |F_rr|)
  double rel_deviation = 0;  // |analytic - numeric| / scale
  bool pass = false;
};

FiniteDifferenceReport force_vs_finite_difference(State state, const AtomSpec& atom,
                                                  const ReducedPoint& p,
                                                  double threshold = 1e-6);

struct ForceZero {
  double zeta = 0;
  bool stable = false;   // force decreases through zero
  Direction before = Direction::null;  // direction just below zeta
  Direction after = Direction::null;
};

std::vector<ForceZero> find_force_zeros(State state, const AtomSpec& atom, double theta,
                                        double zeta_lo, double zeta_hi,
                                        double tol = 1e-10, int points_per_period = 64,
                                        double kernel_tol = kShiftTol);

}  // namespace cpwall
