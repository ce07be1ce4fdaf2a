#include "cpwall/cpwall.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "cpwall/asymptotics.hpp"
#include "cpwall/force.hpp"

struct cpw_atom {
  cpwall::AtomSpec spec;
};

namespace {

thread_local std::string g_last_error;

template <class F>
cpw_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return CPW_OK;
  } catch (const cpwall::InvalidInput& e) {
    g_last_error = e.what();
    return CPW_INVALID_INPUT;
  } catch (const cpwall::NonConvergence& e) {
    g_last_error = e.what();
    return CPW_NONCONVERGENCE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CPW_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CPW_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return CPW_INTERNAL_ERROR;
  }
}

template <class T>
void need(T* p, const char* what) {
  if (!p) throw cpwall::InvalidInput(std::string("null pointer: ") + what);
}

cpwall::State state_of(cpw_state s) {
  switch (s) {
    case CPW_GROUND: return cpwall::State::ground;
    case CPW_EXCITED: return cpwall::State::excited;
    case CPW_AVERAGE: return cpwall::State::average;
  }
  throw cpwall::InvalidInput("unknown state");
}

cpw_direction dir_of(cpwall::Direction d) {
  switch (d) {
    case cpwall::Direction::attractive: return CPW_ATTRACTIVE;
    case cpwall::Direction::repulsive: return CPW_REPULSIVE;
    default: return CPW_NULL_FORCE;
  }
}

void fill(cpw_shift_value* out, const cpwall::ShiftBreakdown& b) {
  out->tf = b.tf;
  out->rr = b.rr;
  out->total = b.total;
  out->tf_error = b.tf_error;
  out->rr_error = b.rr_error;
  out->error_estimate = b.error_estimate;
}

}  // namespace

extern "C" {

const char* cpw_status_string(cpw_status s) {
  switch (s) {
    case CPW_OK: return "ok";
    case CPW_INVALID_INPUT: return "invalid input";
    case CPW_NONCONVERGENCE: return "non-convergence";
    case CPW_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* cpw_last_error(void) { return g_last_error.c_str(); }

cpw_status cpw_atom_create(double omega0, double ax, double ay, double az, cpw_atom** out) {
  return guard([&] {
    need(out, "out");
    *out = nullptr;
    cpwall::AtomSpec a{omega0, ax, ay, az};
    cpwall::validate(a);
    *out = new cpw_atom{a};
  });
}

cpw_status cpw_atom_create_isotropic(double omega0, double alpha0, cpw_atom** out) {
  return guard([&] {
    need(out, "out");
    *out = nullptr;
    auto a = cpwall::AtomSpec::isotropic_atom(omega0, alpha0);
    cpwall::validate(a);
    *out = new cpw_atom{a};
  });
}

void cpw_atom_destroy(cpw_atom* atom) { delete atom; }

cpw_status cpw_atom_is_isotropic(const cpw_atom* atom, int* out) {
  return guard([&] {
    need(atom, "atom");
    need(out, "out");
    *out = atom->spec.isotropic() ? 1 : 0;
  });
}

cpw_status cpw_to_reduced(const cpw_atom* atom, double temperature, double distance,
                          double* zeta, double* theta) {
  return guard([&] {
    need(atom, "atom");
    need(zeta, "zeta");
    need(theta, "theta");
    auto p = cpwall::to_reduced(atom->spec, {temperature, distance});
    *zeta = p.zeta;
    *theta = p.theta;
  });
}

cpw_status cpw_to_physical(const cpw_atom* atom, double zeta, double theta,
                           double* temperature, double* distance) {
  return guard([&] {
    need(atom, "atom");
    need(temperature, "temperature");
    need(distance, "distance");
    auto e = cpwall::to_physical(atom->spec, {zeta, theta});
    *temperature = e.temperature;
    *distance = e.distance;
  });
}

cpw_status cpw_energy_unit(const cpw_atom* atom, double* joules) {
  return guard([&] {
    need(atom, "atom");
    need(joules, "joules");
    *joules = cpwall::energy_unit(atom->spec);
  });
}

cpw_status cpw_force_unit(const cpw_atom* atom, double* newtons) {
  return guard([&] {
    need(atom, "atom");
    need(newtons, "newtons");
    *newtons = cpwall::force_unit(atom->spec);
  });
}

cpw_status cpw_kernel(cpw_axis axis, double zeta, double theta, double tol,
                      cpw_kernel_value* out) {
  return guard([&] {
    need(out, "out");
    if (axis != CPW_PARALLEL && axis != CPW_PERPENDICULAR)
      throw cpwall::InvalidInput("unknown axis");
    auto kv = cpwall::kernel(
        axis == CPW_PARALLEL ? cpwall::Axis::parallel : cpwall::Axis::perpendicular,
        {zeta, theta}, tol);
    out->f_hat = kv.f_hat;
    out->df_dzeta = kv.df_dzeta;
    out->g_hat = kv.g_hat;
    out->dg_dzeta = kv.dg_dzeta;
    out->g_error = kv.g_error;
    out->dg_error = kv.dg_error;
    out->images = kv.images;
    out->evaluations = kv.evaluations;
  });
}

cpw_status cpw_shift(const cpw_atom* atom, cpw_state state, double zeta, double theta,
                     double tol, cpw_shift_value* out) {
  return guard([&] {
    need(atom, "atom");
    need(out, "out");
    fill(out, cpwall::shift_total(state_of(state), atom->spec, {zeta, theta}, tol));
  });
}

cpw_status cpw_shift_all(const cpw_atom* atom, double zeta, double theta, double tol,
                         cpw_shift_value out[3]) {
  return guard([&] {
    need(atom, "atom");
    need(out, "out");
    auto all = cpwall::shift_all(atom->spec, {zeta, theta}, tol);
    for (int i = 0; i < 3; ++i) fill(&out[i], all[i]);
  });
}

cpw_status cpw_shift_si(const cpw_atom* atom, cpw_state state, double temperature,
                        double distance, double tol, cpw_shift_value* out) {
  return guard([&] {
    need(atom, "atom");
    need(out, "out");
    fill(out, cpwall::shift_si(state_of(state), atom->spec, {temperature, distance}, tol));
  });
}

cpw_status cpw_force_reduced(const cpw_atom* atom, cpw_state state, double zeta,
                             double theta, double tol, cpw_force_value* out) {
  return guard([&] {
    need(atom, "atom");
    need(out, "out");
    auto f = cpwall::force(state_of(state), atom->spec, {zeta, theta}, tol);
    out->value = f.value;
    out->tf = f.tf;
    out->rr = f.rr;
    out->error_estimate = f.error_estimate;
    out->direction = dir_of(f.direction);
  });
}

cpw_status cpw_find_force_zeros(const cpw_atom* atom, cpw_state state, double theta,
                                double lo, double hi, double tol, int points_per_period,
                                cpw_force_zero* zeros, size_t cap, size_t* count) {
  return guard([&] {
    need(atom, "atom");
    need(count, "count");
    if (cap > 0) need(zeros, "zeros");
    auto z = cpwall::find_force_zeros(state_of(state), atom->spec, theta, lo, hi, tol,
                                      points_per_period);
    *count = z.size();
    for (size_t i = 0; i < z.size() && i < cap; ++i) {
      zeros[i].zeta = z[i].zeta;
      zeros[i].stable = z[i].stable ? 1 : 0;
      zeros[i].before = dir_of(z[i].before);
      zeros[i].after = dir_of(z[i].after);
    }
  });
}

cpw_status cpw_classify(double zeta, double theta, double threshold, cpw_regime* out) {
  return guard([&] {
    need(out, "out");
    auto t = cpwall::classify({zeta, theta}, threshold);
    out->temperature = static_cast<int>(t.temperature);
    out->distance = static_cast<int>(t.distance);
    out->threshold = t.threshold;
    out->zeta = t.zeta;
    out->theta = t.theta;
    out->zeta_over_theta = t.zeta_over_theta;
    std::string l = t.label();
    std::memset(out->label, 0, sizeof out->label);
    std::strncpy(out->label, l.c_str(), sizeof out->label - 1);
  });
}

cpw_status cpw_asymptotic_shift(const cpw_atom* atom, int id, cpw_state state, cpw_part part,
                                double zeta, double theta, double tol, double* value,
                                int* extrapolated) {
  return guard([&] {
    need(atom, "atom");
    need(value, "value");
    cpwall::Part p;
    switch (part) {
      case CPW_TF: p = cpwall::Part::tf; break;
      case CPW_RR: p = cpwall::Part::rr; break;
      case CPW_TOTAL: p = cpwall::Part::total; break;
      default: throw cpwall::InvalidInput("unknown part");
    }
    auto v = cpwall::asymptotic_shift({id, state_of(state), p}, atom->spec, {zeta, theta}, tol);
    *value = v.value;
    if (extrapolated) *extrapolated = v.extrapolated ? 1 : 0;
  });
}

}  // extern "C"
