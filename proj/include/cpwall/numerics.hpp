#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace cpwall {

struct QuadResult {
  double value = 0;
  double error_estimate = 0;
  std::int64_t evaluations = 0;
  bool converged = true;
  std::int64_t images = 0;  // K reached by sum_images, 0 otherwise

  QuadResult& operator+=(const QuadResult& o);
};

// Adaptive Gauss-Kronrod (G10/K21) over [breaks.front(), breaks.back()],
// each interval between consecutive breakpoints seeded as a panel.
// Bisects the worst panel until the summed error meets max(rel*|I|, abs).
QuadResult integrate_gk(const std::function<double(double)>& f,
                        const std::vector<double>& breaks, double rel_tol,
                        double abs_floor, int max_panels = 4000);

// integral_0^inf integrand(v) dv, integrand already carrying its e^{-v}
// damping. peaks are interior scale changes of width `scale`.
struct QuadSpec {
  std::function<double(double)> integrand;
  std::vector<double> peaks;
  double scale = 1;
  double rel_tol = 1e-10;
  double abs_floor = 0;
  // bound on |integrand(v)| e^{v} beyond the cutoff; default: sampled
  std::function<double(double)> tail_majorant;
  int max_panels = 4000;
};

QuadResult integrate_damped(const QuadSpec& spec);

// symmetric image sum over k in Z
struct SeriesSpec {
  std::function<QuadResult(std::int64_t)> term;
  // certified bound on sum_{|k|>K} |term(k)|; used when `tail` is empty
  std::function<double(std::int64_t)> tail_bound;
  // optional tail estimate: value approximates sum_{|k|>K} term(k),
  // error_estimate bounds its error
  std::function<QuadResult(std::int64_t)> tail;
  double rel_tol = 1e-10;
  double abs_floor = 0;
  std::int64_t min_images = 1;
  std::int64_t max_images = 1000000;
  bool single_term = false;  // theta = inf: k = 0 only
};

QuadResult sum_images(const SeriesSpec& spec);

}  // namespace cpwall
