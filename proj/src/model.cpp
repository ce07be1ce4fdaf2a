#include "cpwall/model.hpp"

#include <cmath>
#include <numbers>

namespace cpwall {

AtomSpec AtomSpec::isotropic_atom(double omega0, double alpha0) {
  return {omega0, alpha0 / 3, alpha0 / 3, alpha0 / 3};
}

const char* to_string(State s) {
  switch (s) {
    case State::ground: return "ground";
    case State::excited: return "excited";
    case State::average: return "average";
  }
  return "?";
}

State parse_state(const std::string& s) {
  if (s == "ground") return State::ground;
  if (s == "excited") return State::excited;
  if (s == "average" || s == "thermal_average") return State::average;
  throw InvalidInput("unknown state '" + s + "' (ground, excited, average)");
}

void validate(const AtomSpec& a) {
  if (!(std::isfinite(a.omega0) && a.omega0 > 0))
    throw InvalidInput("omega0 must be finite and > 0");
  for (double x : {a.alpha_x, a.alpha_y, a.alpha_z})
    if (!(std::isfinite(x) && x >= 0))
      throw InvalidInput("polarizabilities must be finite and >= 0");
  if (!(a.alpha0() > 0)) throw InvalidInput("polarizabilities are all zero");
}

void validate(const ReducedPoint& p) {
  if (!(std::isfinite(p.zeta) && p.zeta > 0))
    throw InvalidInput("zeta must be finite and > 0");
  if (!(p.theta > 0) || std::isnan(p.theta))
    throw InvalidInput("theta must be > 0 (inf for T = 0)");
}

ReducedPoint to_reduced(const AtomSpec& atom, const Environment& env) {
  validate(atom);
  if (!(std::isfinite(env.distance) && env.distance > 0))
    throw InvalidInput("distance must be finite and > 0");
  if (!(std::isfinite(env.temperature) && env.temperature >= 0))
    throw InvalidInput("temperature must be finite and >= 0");
  ReducedPoint p;
  p.zeta = atom.omega0 * env.distance / constants::c;
  p.theta = env.temperature == 0
                ? kInf
                : constants::hbar * atom.omega0 / (constants::k_B * env.temperature);
  return p;
}

Environment to_physical(const AtomSpec& atom, const ReducedPoint& p) {
  validate(atom);
  validate(p);
  Environment env;
  env.distance = p.zeta * constants::c / atom.omega0;
  env.temperature = std::isinf(p.theta)
                        ? 0.0
                        : constants::hbar * atom.omega0 / (constants::k_B * p.theta);
  return env;
}

double energy_unit(const AtomSpec& atom) {
  validate(atom);
  using namespace constants;
  double w = atom.omega0;
  return 3 * hbar * (w * w) * (w * w) * atom.alpha0() /
         (128 * std::numbers::pi * epsilon_0 * c * c * c);
}

double force_unit(const AtomSpec& atom) {
  return energy_unit(atom) * atom.omega0 / constants::c;
}

Weights weights(const AtomSpec& atom) {
  double a0 = atom.alpha0();
  return {(atom.alpha_x + atom.alpha_y) / a0, atom.alpha_z / a0};
}

}  // namespace cpwall
