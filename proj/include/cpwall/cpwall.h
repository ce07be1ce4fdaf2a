/* C interface to the atom-wall shift library. All energies are reduced
 * (units of cpw_energy_unit) unless the function name says _si. theta may
 * be INFINITY for zero temperature. Errors return a nonzero status; the
 * message is available from cpw_last_error() on the same thread. */
#ifndef CPWALL_H
#define CPWALL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CPW_API __declspec(dllexport)
#else
#define CPW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  CPW_OK = 0,
  CPW_INVALID_INPUT = 2,
  CPW_NONCONVERGENCE = 3,
  CPW_INTERNAL_ERROR = 4
} cpw_status;

typedef enum { CPW_GROUND = 0, CPW_EXCITED = 1, CPW_AVERAGE = 2 } cpw_state;
typedef enum { CPW_PARALLEL = 0, CPW_PERPENDICULAR = 1 } cpw_axis;
typedef enum { CPW_TF = 0, CPW_RR = 1, CPW_TOTAL = 2 } cpw_part;
typedef enum { CPW_ATTRACTIVE = 0, CPW_REPULSIVE = 1, CPW_NULL_FORCE = 2 } cpw_direction;

typedef struct cpw_atom cpw_atom;

typedef struct {
  double tf, rr, total;
  double tf_error, rr_error, error_estimate;
} cpw_shift_value;

typedef struct {
  double value, tf, rr, error_estimate;
  cpw_direction direction;
} cpw_force_value;

typedef struct {
  double zeta;
  int stable;
  cpw_direction before, after;
} cpw_force_zero;

typedef struct {
  double f_hat, df_dzeta;
  double g_hat, dg_dzeta;
  double g_error, dg_error;
  int64_t images, evaluations;
} cpw_kernel_value;

typedef struct {
  int temperature; /* 0 low, 1 high, 2 crossover */
  int distance;    /* 0 short, 1 intermediate, 2 long, 3 crossover */
  double threshold, zeta, theta, zeta_over_theta;
  char label[32];
} cpw_regime;

CPW_API const char* cpw_status_string(cpw_status s);
CPW_API const char* cpw_last_error(void);

CPW_API cpw_status cpw_atom_create(double omega0, double alpha_x, double alpha_y,
                                   double alpha_z, cpw_atom** out);
CPW_API cpw_status cpw_atom_create_isotropic(double omega0, double alpha0, cpw_atom** out);
CPW_API void cpw_atom_destroy(cpw_atom* atom);
CPW_API cpw_status cpw_atom_is_isotropic(const cpw_atom* atom, int* out);

CPW_API cpw_status cpw_to_reduced(const cpw_atom* atom, double temperature, double distance,
                                  double* zeta, double* theta);
CPW_API cpw_status cpw_to_physical(const cpw_atom* atom, double zeta, double theta,
                                   double* temperature, double* distance);
CPW_API cpw_status cpw_energy_unit(const cpw_atom* atom, double* joules);
CPW_API cpw_status cpw_force_unit(const cpw_atom* atom, double* newtons);

CPW_API cpw_status cpw_kernel(cpw_axis axis, double zeta, double theta, double tol,
                              cpw_kernel_value* out);

CPW_API cpw_status cpw_shift(const cpw_atom* atom, cpw_state state, double zeta,
                             double theta, double tol, cpw_shift_value* out);
/* out[0..2] = ground, excited, average from one kernel evaluation */
CPW_API cpw_status cpw_shift_all(const cpw_atom* atom, double zeta, double theta,
                                 double tol, cpw_shift_value out[3]);
CPW_API cpw_status cpw_shift_si(const cpw_atom* atom, cpw_state state, double temperature,
                                double distance, double tol, cpw_shift_value* out);

CPW_API cpw_status cpw_force_reduced(const cpw_atom* atom, cpw_state state, double zeta,
                                     double theta, double tol, cpw_force_value* out);
/* writes up to cap zeros; *count receives the number found */
CPW_API cpw_status cpw_find_force_zeros(const cpw_atom* atom, cpw_state state, double theta,
                                        double zeta_lo, double zeta_hi, double tol,
                                        int points_per_period, cpw_force_zero* zeros,
                                        size_t cap, size_t* count);

CPW_API cpw_status cpw_classify(double zeta, double theta, double threshold, cpw_regime* out);
CPW_API cpw_status cpw_asymptotic_shift(const cpw_atom* atom, int id, cpw_state state,
                                        cpw_part part, double zeta, double theta, double tol,
                                        double* value, int* extrapolated);

#ifdef __cplusplus
}
#endif

#endif
