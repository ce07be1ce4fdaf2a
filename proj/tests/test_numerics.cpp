#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstring>
#include <numbers>

#include "cpwall/model.hpp"
#include "cpwall/numerics.hpp"
#include "doctest.h"

using namespace cpwall;

namespace {

struct Damped {
  int n;
  double a, peak, value;
};

// tests/oracles/quadrature_oracle.py
const Damped kCorpus[] = {
    {1, 0.02, 0, 74.189646094762874831},
    {1, 0.02, 5, 1.1289478389088293579},
    {1, 0.3, 0, 3.4120784115354408632},
    {1, 0.3, 5, 0.13795277057880717085},
    {1, 2, 0, 0.19951049429709192345},
    {1, 2, 5, 0.056395354752479494232},
    {2, 0.02, 0, 96943.625427655611717},
    {2, 0.02, 5, 1323.2598326977463906},
    {2, 0.3, 0, 24.490250447542671546},
    {2, 0.3, 5, 0.41170757275362087534},
    {2, 2, 0, 0.043006974666803042988},
    {2, 2, 5, 0.0043319082859628832743},
    {3, 0.02, 0, 182527363.41244965857},
    {3, 0.02, 5, 2480776.8897486225132},
    {3, 0.3, 0, 214.77852136782180489},
    {3, 0.3, 5, 3.3167147244316216232},
    {3, 2, 0, 0.0096416048032414479526},
    {3, 2, 5, 0.00049904562515359149649},
    {2, 0.005, 1.5, 2803971.1754720115859},
    {1, 1e-3, 20, 0.0028042705735227730309},
};

QuadSpec lorentz(const Damped& d, double tol) {
  QuadSpec q;
  q.integrand = [d](double v) {
    double x = v - d.peak;
    return std::exp(-v) / std::pow(x * x + d.a * d.a, d.n);
  };
  q.peaks = {d.peak};
  q.scale = d.a;
  q.rel_tol = tol;
  return q;
}

}  // namespace

TEST_CASE("Kronrod and Gauss nodes interleave as assumed") {
  using K = boost::math::quadrature::gauss_kronrod<double, 21>;
  using G = boost::math::quadrature::gauss<double, 10>;
  REQUIRE(K::abscissa().size() == 11);
  REQUIRE(G::abscissa().size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(K::abscissa()[2 * i + 1] == G::abscissa()[i]);
}

TEST_CASE("integrate_damped: plain exponential") {
  QuadSpec q;
  q.integrand = [](double v) { return std::exp(-v); };
  q.rel_tol = 1e-12;
  QuadResult r = integrate_damped(q);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.error_estimate <= 1e-12);
  CHECK(r.evaluations > 0);
}

TEST_CASE("integrate_damped: corpus of damped Lorentzian powers") {
  for (const auto& d : kCorpus)
    for (double tol : {1e-6, 1e-10}) {
      QuadResult r = integrate_damped(lorentz(d, tol));
      CAPTURE(d.n);
      CAPTURE(d.a);
      CAPTURE(d.peak);
      CHECK(std::abs(r.value / d.value - 1) <= tol);
      CHECK(std::abs(r.value - d.value) <= r.error_estimate + 1e-15 * std::abs(d.value));
    }
}

TEST_CASE("integrate_damped: narrow Lorentzian anchor") {
  // int_0^inf dv/(v^2+a^2)^2 = pi/(4 a^3); the e^{-v} weight only matters at O(a)
  double a = 0.02;
  QuadSpec q;
  q.integrand = [a](double v) { return std::exp(-v) / std::pow(v * v + a * a, 2); };
  q.peaks = {0};
  q.scale = a;
  q.rel_tol = 1e-10;
  double anchor = std::numbers::pi / (4 * a * a * a);
  QuadResult r = integrate_damped(q);
  CHECK(std::abs(r.value / anchor - 1) < 0.02);
  q.rel_tol = 1e-11;  // independent tighter run as oracle
  QuadResult tight = integrate_damped(q);
  CHECK(std::abs(r.value / tight.value - 1) <= 1e-10);
}

TEST_CASE("integrate_damped: refinement is self-consistent and monotone") {
  QuadSpec q;
  q.integrand = [](double v) { return std::exp(-v) / (std::pow(v - 5, 2) + 1e-4); };
  q.peaks = {5};
  q.scale = 1e-2;
  double prev_err = INFINITY;
  QuadResult prev;
  for (double tol : {1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
    q.rel_tol = tol;
    QuadResult r = integrate_damped(q);
    CHECK(r.error_estimate <= prev_err);
    if (std::isfinite(prev_err)) CHECK(std::abs(r.value - prev.value) < prev.error_estimate);
    prev_err = r.error_estimate;
    prev = r;
  }
}

TEST_CASE("integrate_damped: determinism") {
  QuadSpec q = lorentz(kCorpus[13], 1e-10);
  QuadResult a = integrate_damped(q), b = integrate_damped(q);
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.error_estimate, &b.error_estimate, sizeof(double)) == 0);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("integrate_damped: errors") {
  QuadSpec q;
  q.integrand = [](double v) { return v > 1 && v < 2 ? NAN : std::exp(-v); };
  CHECK_THROWS_AS(integrate_damped(q), InvalidInput);
  QuadSpec bad = lorentz(kCorpus[0], 1e-10);
  bad.scale = 0;
  CHECK_THROWS_AS(integrate_damped(bad), InvalidInput);
  bad = lorentz(kCorpus[0], 2.0);
  CHECK_THROWS_AS(integrate_damped(bad), InvalidInput);
  // a tolerance the panel budget cannot reach
  QuadSpec hard = lorentz(kCorpus[12], 1e-14);
  hard.max_panels = 20;
  CHECK_THROWS_AS(integrate_damped(hard), NonConvergence);
}

TEST_CASE("sum_images: single term") {
  SeriesSpec s;
  s.term = [](std::int64_t k) {
    QuadResult r;
    r.value = k == 0 ? 0.375 : 0.0;
    return r;
  };
  s.tail_bound = [](std::int64_t) { return 0.0; };
  CHECK(sum_images(s).value == 0.375);
  s.single_term = true;
  s.tail_bound = nullptr;
  QuadResult r = sum_images(s);
  CHECK(r.value == 0.375);
  CHECK(r.images == 0);
  CHECK(r.error_estimate == 0);
}

TEST_CASE("sum_images: certified tail against brute force") {
  const double theta = 10;
  SeriesSpec s;
  s.term = [theta](std::int64_t k) {
    QuadResult r;
    double x = double(k) * theta;
    r.value = 1 / (1 + x * x * x * x);
    return r;
  };
  // sum_{|k|>K} (k theta)^-4 <= 2/(3 theta^4 K^3)
  s.tail_bound = [theta](std::int64_t K) {
    return 2 / (3 * std::pow(theta, 4) * std::pow(double(K), 3));
  };
  s.rel_tol = 1e-13;
  QuadResult r = sum_images(s);
  // brute-force partial sum over |k| <= 1e5 (tests/oracles/quadrature_oracle.py)
  CHECK(std::abs(r.value - 1.0002164445671953958) < 1e-12);
  CHECK(r.error_estimate < 1e-12);
  CHECK(r.images <= 1024);
}

TEST_CASE("sum_images: cap raises NonConvergence") {
  SeriesSpec s;
  s.term = [](std::int64_t k) {
    QuadResult r;
    r.value = 1.0 / (1.0 + double(k) * double(k));
    return r;
  };
  s.tail_bound = [](std::int64_t K) { return 2.0 / double(K); };
  s.rel_tol = 1e-12;
  s.max_images = 1000;
  CHECK_THROWS_AS(sum_images(s), NonConvergence);
}

TEST_CASE("sum_images: tail estimate mode adds the estimate") {
  // sum_k e^{-|k|} = coth(1/2); exact tail 2 e^{-(K+1)}/(1 - e^{-1})
  SeriesSpec s;
  s.term = [](std::int64_t k) {
    QuadResult r;
    r.value = std::exp(-std::abs(double(k)));
    return r;
  };
  s.tail = [](std::int64_t K) {
    QuadResult t;
    t.value = 2 * std::exp(-double(K + 1)) / (1 - std::exp(-1.0));
    t.error_estimate = 1e-16;
    return t;
  };
  QuadResult r = sum_images(s);
  CHECK(r.value == doctest::Approx(1 / std::tanh(0.5)).epsilon(1e-14));
  CHECK(r.images == 1);
}
