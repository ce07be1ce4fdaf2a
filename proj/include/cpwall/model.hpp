#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace cpwall {

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// CODATA 2018, SI
namespace constants {
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double c = 299792458.0;
inline constexpr double k_B = 1.380649e-23;
inline constexpr double epsilon_0 = 8.8541878128e-12;
}  // namespace constants

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct AtomSpec {
  double omega0 = 0;  // rad/s
  double alpha_x = 0, alpha_y = 0, alpha_z = 0;

  double alpha0() const { return alpha_x + alpha_y + alpha_z; }
  bool isotropic() const { return alpha_x == alpha_y && alpha_y == alpha_z; }
  static AtomSpec isotropic_atom(double omega0, double alpha0);
};

struct Environment {
  double temperature = 0;  // K, 0 allowed
  double distance = 0;     // m
};

// zeta = omega0 z / c, theta = hbar omega0 / (k_B T); theta = inf is T = 0
struct ReducedPoint {
  double zeta = 0;
  double theta = kInf;
};

enum class State { ground, excited, average };
enum class Units { reduced, si };

const char* to_string(State s);
State parse_state(const std::string& s);

void validate(const AtomSpec& atom);
void validate(const ReducedPoint& p);

ReducedPoint to_reduced(const AtomSpec& atom, const Environment& env);
Environment to_physical(const AtomSpec& atom, const ReducedPoint& p);

// 3 hbar omega0^4 alpha0 / (128 pi eps0 c^3)
double energy_unit(const AtomSpec& atom);
// reduced force -> newtons
double force_unit(const AtomSpec& atom);

// axis weights (alpha_x + alpha_y)/alpha0 and alpha_z/alpha0
struct Weights {
  double par = 0, perp = 0;
};
Weights weights(const AtomSpec& atom);

}  // namespace cpwall
