#pragma once

// Regime classification and the closed-form limiting shifts. Each formula
// is written as (hbar/4 pi eps0)(omega0^4/c^3) alpha T(zeta, theta) with
// omega0 = c = 1; in energy_unit terms that is (32/3)(alpha/alpha0) T.

#include <string>
#include <vector>

#include "cpwall/model.hpp"
#include "cpwall/shifts.hpp"

namespace cpwall {

enum class TempLimit { low, high, crossover, any };
enum class DistanceRegime { short_range, intermediate, long_range, crossover, any };
enum class Part { tf, rr, total };

const char* to_string(TempLimit t);
const char* to_string(DistanceRegime d);
const char* to_string(Part p);
Part parse_part(const std::string& s);

struct RegimeTag {
  TempLimit temperature = TempLimit::crossover;
  DistanceRegime distance = DistanceRegime::crossover;
  double threshold = 10;
  // governing ratios
  double theta = 0;
  double zeta = 0;
  double zeta_over_theta = 0;

  std::string label() const;  // e.g. "low-T/short"
};

RegimeTag classify(const ReducedPoint& p, double threshold = 10);

struct FormulaKey {
  int id = 0;
  State state = State::ground;
  Part part = Part::total;
  bool operator==(const FormulaKey&) const = default;
};

struct FormulaInfo {
  FormulaKey key;
  TempLimit temperature;
  DistanceRegime distance;
  bool isotropic_only;
  const char* description;
};

const std::vector<FormulaInfo>& formula_catalog();
const FormulaInfo& formula_info(const FormulaKey& key);  // InvalidInput if unknown

// true when the point is classified into the formula's regime (and the atom
// is isotropic if the formula requires it)
bool formula_valid(const FormulaKey& key, const AtomSpec& atom, const ReducedPoint& p,
                   double threshold = 10);

struct AsymptoticValue {
  double value = 0;      // reduced units
  bool extrapolated = false;
};

// tol is used only by formulas that need the kernels (12, 21)
AsymptoticValue asymptotic_shift(const FormulaKey& key, const AtomSpec& atom,
                                 const ReducedPoint& p, double tol = kShiftTol);

struct RegimePointReport {
  ReducedPoint point;
  double exact = 0;
  double asymptotic = 0;
  double rel_deviation = 0;
  bool in_regime = false;
};

struct RegimeReport {
  FormulaKey key;
  std::vector<RegimePointReport> points;
  double max_rel_deviation = 0;
  bool pass = false;
};

RegimeReport validate_regime(const FormulaKey& key, const AtomSpec& atom,
                             const std::vector<ReducedPoint>& grid, double tol,
                             double kernel_tol = kShiftTol);

}  // namespace cpwall
