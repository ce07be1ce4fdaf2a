#include "cpwall/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cpwall {

const char* to_string(TempLimit t) {
  switch (t) {
    case TempLimit::low: return "low-T";
    case TempLimit::high: return "high-T";
    case TempLimit::crossover: return "crossover-T";
    case TempLimit::any: return "any-T";
  }
  return "?";
}

const char* to_string(DistanceRegime d) {
  switch (d) {
    case DistanceRegime::short_range: return "short";
    case DistanceRegime::intermediate: return "intermediate";
    case DistanceRegime::long_range: return "long";
    case DistanceRegime::crossover: return "crossover";
    case DistanceRegime::any: return "any";
  }
  return "?";
}

const char* to_string(Part p) {
  switch (p) {
    case Part::tf: return "tf";
    case Part::rr: return "rr";
    case Part::total: return "total";
  }
  return "?";
}

Part parse_part(const std::string& s) {
  if (s == "tf") return Part::tf;
  if (s == "rr") return Part::rr;
  if (s == "total") return Part::total;
  throw InvalidInput("unknown part '" + s + "' (tf, rr, total)");
}

std::string RegimeTag::label() const {
  if (temperature == TempLimit::crossover) return "crossover";
  return std::string(to_string(temperature)) + "/" + to_string(distance);
}

RegimeTag classify(const ReducedPoint& p, double threshold) {
  validate(p);
  if (!(threshold > 1)) throw InvalidInput("threshold must be > 1");
  RegimeTag t;
  t.threshold = threshold;
  t.theta = p.theta;
  t.zeta = p.zeta;
  t.zeta_over_theta = p.zeta / p.theta;
  const double lo = 1 / threshold, hi = threshold;
  const double z = p.zeta, r = t.zeta_over_theta;
  if (p.theta > hi) {
    t.temperature = TempLimit::low;
    if (z < lo)
      t.distance = DistanceRegime::short_range;
    else if (z > hi && r < lo)
      t.distance = DistanceRegime::intermediate;
    else if (r > hi)
      t.distance = DistanceRegime::long_range;
  } else if (p.theta < lo) {
    t.temperature = TempLimit::high;
    if (r < lo)
      t.distance = DistanceRegime::short_range;
    else if (r > hi && z < lo)
      t.distance = DistanceRegime::intermediate;
    else if (z > hi)
      t.distance = DistanceRegime::long_range;
  }
  return t;
}

namespace {

using TL = TempLimit;
using DR = DistanceRegime;
constexpr State G = State::ground, E = State::excited, A = State::average;

const std::vector<FormulaInfo> kCatalog = {
    {{1, G, Part::total}, TL::low, DR::short_range, false, "ground total, low T, short distance"},
    {{2, G, Part::total}, TL::low, DR::short_range, true, "ground total, low T, short distance, isotropic (van der Waals)"},
    {{3, G, Part::total}, TL::low, DR::intermediate, false, "ground total, low T, intermediate distance (Casimir-Polder)"},
    {{4, G, Part::total}, TL::low, DR::intermediate, true, "ground total, low T, intermediate distance, isotropic"},
    {{5, G, Part::total}, TL::low, DR::long_range, false, "ground total, low T, long distance"},
    {{6, G, Part::total}, TL::low, DR::long_range, true, "ground total, low T, long distance, isotropic (Lifshitz)"},
    {{7, E, Part::total}, TL::low, DR::short_range, false, "excited total, low T, short distance"},
    {{8, E, Part::total}, TL::low, DR::intermediate, false, "excited total, low T, intermediate distance"},
    {{9, E, Part::total}, TL::low, DR::intermediate, true, "excited total, low T, intermediate distance, isotropic"},
    {{10, E, Part::total}, TL::low, DR::long_range, false, "excited total, low T, long distance"},
    {{11, E, Part::total}, TL::low, DR::long_range, true, "excited total, low T, long distance, isotropic"},
    {{12, G, Part::tf}, TL::high, DR::any, false, "ground tf, high T, coth -> 2/theta"},
    {{12, E, Part::tf}, TL::high, DR::any, false, "excited tf, high T, coth -> 2/theta"},
    {{13, G, Part::tf}, TL::high, DR::short_range, false, "ground tf, high T, short distance"},
    {{13, E, Part::tf}, TL::high, DR::short_range, false, "excited tf, high T, short distance"},
    {{14, G, Part::rr}, TL::high, DR::short_range, false, "ground rr, high T, short distance"},
    {{14, E, Part::rr}, TL::high, DR::short_range, false, "excited rr, high T, short distance"},
    {{15, G, Part::total}, TL::high, DR::short_range, true, "ground total, high T, short distance, isotropic"},
    {{15, E, Part::total}, TL::high, DR::short_range, true, "excited total, high T, short distance, isotropic"},
    {{16, G, Part::total}, TL::high, DR::intermediate, false, "ground total, high T, intermediate distance"},
    {{17, E, Part::total}, TL::high, DR::intermediate, false, "excited total, high T, intermediate distance"},
    {{18, G, Part::total}, TL::high, DR::intermediate, true, "ground total, high T, intermediate distance, isotropic"},
    {{18, E, Part::total}, TL::high, DR::intermediate, true, "excited total, high T, intermediate distance, isotropic"},
    {{19, G, Part::tf}, TL::high, DR::long_range, false, "ground tf, high T, long distance"},
    {{19, E, Part::tf}, TL::high, DR::long_range, false, "excited tf, high T, long distance"},
    {{19, G, Part::rr}, TL::high, DR::long_range, false, "ground rr, high T, long distance"},
    {{19, E, Part::rr}, TL::high, DR::long_range, false, "excited rr, high T, long distance"},
    {{20, G, Part::total}, TL::high, DR::long_range, true, "ground total, high T, long distance, isotropic"},
    {{20, E, Part::total}, TL::high, DR::long_range, true, "excited total, high T, long distance, isotropic"},
    {{21, A, Part::tf}, TL::any, DR::any, false, "thermal average tf, exact"},
    {{21, A, Part::rr}, TL::any, DR::any, false, "thermal average rr, exact"},
    {{21, A, Part::total}, TL::any, DR::any, false, "thermal average total, exact"},
    {{22, A, Part::tf}, TL::high, DR::short_range, false, "thermal average tf, high T, short distance"},
    {{22, A, Part::rr}, TL::high, DR::short_range, false, "thermal average rr, high T, short distance"},
    {{22, A, Part::total}, TL::high, DR::short_range, false, "thermal average total, high T, short distance"},
    {{23, A, Part::total}, TL::high, DR::short_range, true, "thermal average total, high T, short distance, isotropic"},
    {{24, A, Part::tf}, TL::high, DR::intermediate, false, "thermal average tf, high T, intermediate distance"},
    {{24, A, Part::rr}, TL::high, DR::intermediate, false, "thermal average rr, high T, intermediate distance"},
    {{24, A, Part::total}, TL::high, DR::intermediate, false, "thermal average total, high T, intermediate distance"},
    {{25, A, Part::tf}, TL::high, DR::long_range, false, "thermal average tf, high T, long distance"},
    {{25, A, Part::rr}, TL::high, DR::long_range, false, "thermal average rr, high T, long distance"},
    {{25, A, Part::total}, TL::high, DR::long_range, false, "thermal average total, high T, long distance"},
    {{26, G, Part::tf}, TL::low, DR::short_range, false, "ground tf, low T, short distance"},
    {{26, E, Part::tf}, TL::low, DR::short_range, false, "excited tf, low T, short distance"},
    {{27, G, Part::rr}, TL::low, DR::short_range, false, "ground rr, low T, short distance"},
    {{27, E, Part::rr}, TL::low, DR::short_range, false, "excited rr, low T, short distance"},
    {{28, G, Part::tf}, TL::low, DR::intermediate, false, "ground tf, low T, intermediate distance"},
    {{28, E, Part::tf}, TL::low, DR::intermediate, false, "excited tf, low T, intermediate distance"},
    {{29, G, Part::rr}, TL::low, DR::intermediate, false, "ground rr, low T, intermediate distance"},
    {{29, E, Part::rr}, TL::low, DR::intermediate, false, "excited rr, low T, intermediate distance"},
    {{30, G, Part::tf}, TL::low, DR::long_range, false, "ground tf, low T, long distance"},
    {{30, E, Part::tf}, TL::low, DR::long_range, false, "excited tf, low T, long distance"},
    {{31, G, Part::rr}, TL::low, DR::long_range, false, "ground rr, low T, long distance"},
    {{31, E, Part::rr}, TL::low, DR::long_range, false, "excited rr, low T, long distance"},
};

// polarization combinations, in alpha/alpha0
struct Combos {
  double wz, sp, p1, s3, sm, sm2, sm23;
};

Combos combos(const AtomSpec& atom) {
  Weights w = weights(atom);
  double sp = w.par, wz = w.perp;
  return {wz, sp, sp + 2 * wz, 2 * sp - wz, sp - wz, sp - 2 * wz, sp - 2.0 / 3.0 * wz};
}

// T-form; reduced = (32/3) T
double t_form(const FormulaKey& k, const AtomSpec& atom, const ReducedPoint& p,
              double tol) {
  constexpr double pi = std::numbers::pi;
  const Combos w = combos(atom);
  const double z = p.zeta, th = p.theta;
  const double z2 = z * z, z3 = z2 * z, z4 = z2 * z2;
  const double inv_th = std::isinf(th) ? 0.0 : 1 / th;
  const double th6 = std::isinf(th) ? 0.0 : 32 * std::pow(pi, 5) * z2 / (315 * std::pow(th, 6));
  const double cs = std::cos(2 * z), sn = std::sin(2 * z);
  // oscillating radiation-reaction form, ground state
  const double osc = (3 * w.sp / (8 * z) - 3 * w.p1 / (32 * z3)) * cs - 3 * w.p1 / (16 * z2) * sn;
  const double osc_iso = (1 / (2 * z) - 1 / (4 * z3)) * cs - sn / (2 * z2);
  const double cp = 3 / (8 * pi * z4);
  const double sgn = k.state == State::excited ? -1 : 1;  // tf flips with state

  switch (k.id) {
    case 1:
      return -(3 * w.p1 / (32 * z3) - 3 * w.wz / (4 * pi * z2) - w.sp * std::log(z) + th6 * w.s3);
    case 2: return -(1 / (8 * z3) + th6);
    case 3: return -(cp + th6 * w.s3);
    case 4: return -(cp + th6);
    case 5: return -3 * w.p1 / (16 * z3) * inv_th;
    case 6: return -1 / (4 * z3) * inv_th;
    case 7: return -(3 * w.p1 / (32 * z3) - th6 * w.s3);
    case 8: return 2 * osc + cp + th6 * w.s3;
    case 9: return osc_iso + cp + th6;
    case 10: return 2 * osc + 3 * w.p1 / (16 * z3) * inv_th;
    case 11: return osc_iso + 1 / (4 * z3) * inv_th;
    case 12: {
      Weights ww = weights(atom);
      double Pf = 0, Pg = 0;
      for (Axis ax : {Axis::parallel, Axis::perpendicular}) {
        double wa = ax == Axis::parallel ? ww.par : ww.perp;
        if (wa == 0) continue;
        Pf += wa * f_hat(ax, z);
        Pg += wa * g_hat(ax, p, tol).value;
      }
      // already reduced; undo the 32/3 applied by the caller
      return sgn * -(2 * inv_th * Pf - Pg) * 3.0 / 32.0;
    }
    case 13: return sgn * 3 * w.p1 / (16 * z3) * inv_th;
    case 14: return -3 * w.p1 / (32 * z3);
    case 15: return sgn * 1 / (4 * z3) * inv_th;
    case 16:
      return -(3 * w.sm2 / (8 * z) * inv_th - 9 * z * w.sm23 / 8 * inv_th + 3 * w.p1 / (32 * z3));
    case 17:
      return 3 * w.sm2 / (8 * z) * inv_th - 9 * z * w.sm23 / 8 * inv_th - 3 * w.p1 / (32 * z3);
    case 18:
      return k.state == State::ground ? z / 2 * inv_th - 1 / (8 * z3)
                                      : -(z / 2 * inv_th + 1 / (8 * z3));
    case 19:
      if (k.part == Part::rr) return osc;
      return sgn * -((3 * w.sp / (4 * z) - 3 * w.p1 / (16 * z3)) * inv_th * cs -
                     3 * w.p1 / (8 * z2) * inv_th * sn + 3 * w.p1 / (16 * z3) * inv_th);
    case 20:
      return sgn * -((1 / (2 * z) - 1 / (4 * z3)) * inv_th * cs - sn / (2 * z2) * inv_th +
                     1 / (4 * z3) * inv_th);
    case 21: {
      ShiftBreakdown b = shift_total(State::average, atom, p, tol);
      double v = k.part == Part::tf ? b.tf : (k.part == Part::rr ? b.rr : b.total);
      return v * 3.0 / 32.0;
    }
    case 22:
      if (k.part == Part::tf) return (3 / (32 * z3) - 3 * th / (64 * z3)) * w.p1;
      if (k.part == Part::rr) return -3 * w.p1 / (32 * z3);
      return -3 * th * w.p1 / (64 * z3);
    case 23: return -th / (16 * z3);
    case 24:
      if (k.part == Part::tf)
        return -(3 * w.sm2 / (16 * z) + 3 * w.wz / (4 * pi * z2) - th * th * w.p1 / (128 * z3));
      if (k.part == Part::rr) return -3 * w.p1 / (32 * z3);
      return -(3 / (32 * z3) - th * th / (128 * z3)) * w.p1;
    case 25:
      if (k.part == Part::tf) return -(osc + (3 / (32 * z3) - th * th / (128 * z3)) * w.p1);
      if (k.part == Part::rr) return osc;
      return -(3 / (32 * z3) - th * th / (128 * z3)) * w.p1;
    case 26: {
      double t4 = std::isinf(th) ? 0.0 : 2 * std::pow(pi, 3) / (15 * std::pow(th, 4)) +
                                             16 * std::pow(pi, 5) / (63 * std::pow(th, 6));
      return sgn * -(-3 * w.wz / (4 * pi * z2) - w.sm * std::log(z) - t4 * w.sm + th6 * w.s3);
    }
    case 27: return -3 * w.p1 / (32 * z3);
    case 28: return sgn * -(osc + cp + th6 * w.s3);
    case 29: return osc;
    case 30: return sgn * -(osc + 3 * w.p1 / (16 * z3) * inv_th);
    case 31: return osc;
  }
  throw InvalidInput("unknown formula id");
}

}  // namespace

const std::vector<FormulaInfo>& formula_catalog() { return kCatalog; }

const FormulaInfo& formula_info(const FormulaKey& key) {
  for (const auto& f : kCatalog)
    if (f.key == key) return f;
  throw InvalidInput("unknown formula (id " + std::to_string(key.id) + ", " +
                     to_string(key.state) + ", " + to_string(key.part) + ")");
}

bool formula_valid(const FormulaKey& key, const AtomSpec& atom, const ReducedPoint& p,
                   double threshold) {
  const FormulaInfo& f = formula_info(key);
  if (f.isotropic_only && !atom.isotropic()) return false;
  RegimeTag t = classify(p, threshold);
  if (f.temperature != TempLimit::any && t.temperature != f.temperature) return false;
  if (f.distance != DistanceRegime::any && t.distance != f.distance) return false;
  return true;
}

AsymptoticValue asymptotic_shift(const FormulaKey& key, const AtomSpec& atom,
                                 const ReducedPoint& p, double tol) {
  formula_info(key);
  validate(atom);
  validate(p);
  AsymptoticValue v;
  v.value = 32.0 / 3.0 * t_form(key, atom, p, tol);
  v.extrapolated = !formula_valid(key, atom, p);
  return v;
}

RegimeReport validate_regime(const FormulaKey& key, const AtomSpec& atom,
                             const std::vector<ReducedPoint>& grid, double tol,
                             double kernel_tol) {
  RegimeReport rep;
  rep.key = key;
  rep.pass = !grid.empty();
  for (const auto& p : grid) {
    RegimePointReport r;
    r.point = p;
    ShiftBreakdown b = shift_total(key.state, atom, p, kernel_tol);
    r.exact = key.part == Part::tf ? b.tf : (key.part == Part::rr ? b.rr : b.total);
    AsymptoticValue a = asymptotic_shift(key, atom, p, kernel_tol);
    r.asymptotic = a.value;
    r.in_regime = !a.extrapolated;
    r.rel_deviation = std::abs(r.exact - r.asymptotic) / std::abs(r.exact);
    rep.max_rel_deviation = std::max(rep.max_rel_deviation, r.rel_deviation);
    if (!(r.rel_deviation < tol) || !r.in_regime) rep.pass = false;
    rep.points.push_back(r);
  }
  return rep;
}

}  // namespace cpwall
