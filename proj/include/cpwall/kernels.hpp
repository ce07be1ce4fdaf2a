#pragma once

// Reduced kernels. With zeta = omega0 z / c and theta = beta omega0 / c the
// wall kernels factor as f_j = (omega0/c)^3 f_hat_j(zeta) and
// g_j = (omega0/c)^3 g_hat_j(zeta, theta). Substituting v = omega0 u in the
// image integrals gives
//
//   g_hat_par  =  (64/pi) sum_k int_0^inf e^{-v} ((v+k theta)^2 - 4 zeta^2)
//                                               / ((v+k theta)^2 + 4 zeta^2)^3
//   g_hat_perp = -(64/pi) sum_k int_0^inf e^{-v} / ((v+k theta)^2 + 4 zeta^2)^2
//
// and the closed forms for f_hat below. Parallel means x (= y).

#include <cstdint>

#include "cpwall/model.hpp"
#include "cpwall/numerics.hpp"

namespace cpwall {

enum class Axis { parallel, perpendicular };

inline constexpr double kKernelTol = 1e-10;
inline constexpr double kMinKernelTol = 1e-12;

struct ImageOptions {
  // multiplies the starting image count (convergence checks)
  std::int64_t min_images_factor = 1;
  std::int64_t max_images = 1000000;
};

double f_hat(Axis axis, double zeta);
double df_hat_dzeta(Axis axis, double zeta);

QuadResult g_hat(Axis axis, const ReducedPoint& p, double tol = kKernelTol,
                 const ImageOptions& opt = {});
QuadResult dg_hat_dzeta(Axis axis, const ReducedPoint& p, double tol = kKernelTol,
                        const ImageOptions& opt = {});

struct KernelValue {
  Axis axis = Axis::parallel;
  ReducedPoint point;
  double f_hat = 0, df_dzeta = 0;
  double g_hat = 0, dg_dzeta = 0;
  double g_error = 0, dg_error = 0;
  std::int64_t images = 0;
  std::int64_t evaluations = 0;
};

KernelValue kernel(Axis axis, const ReducedPoint& p, double tol = kKernelTol,
                   const ImageOptions& opt = {});

}  // namespace cpwall
