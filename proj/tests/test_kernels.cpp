#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "cpwall/kernels.hpp"
#include "doctest.h"
#include "profile.hpp"

using namespace cpwall;

namespace {

constexpr Axis X = Axis::parallel, Z = Axis::perpendicular;
constexpr double pi = std::numbers::pi;

// tests/oracles/kernel_oracle.py: zeta, f_par, f_perp, df_par, df_perp
struct FRow {
  double z, fx, fz, dfx, dfz;
};
const FRow kF[] = {
    {1e-5, -999999999800000.00006, -2000000000400000.0, 2.9999999997999999999e+20,
     6.0000000004e+20},
    {1e-3, -999998000.00599999778, -2000003999.9960000009, 2999997999994.0000067,
     6000004000003.9999973},
    {0.3, -32.111121391822789798, -86.23119251457033419, 342.73566417923487945,
     788.94875937595415992},
    {1.0, -3.0670353632927905518, -2.8048960342084420076, 0.2621393290843485442,
     11.743862795002465119},
    {7.5, -0.42648749056647755456, -0.042641207416879083679, -0.57706761818873870342,
     0.12510098612889510353},
    {40.0, -0.0097946387658155517065, 0.0024881712361784082105, 0.19923636058251358543,
     0.0003653233764818571748},
};

// period-folded polygamma oracle: zeta, theta, g_par, g_perp
struct GRow {
  double z, t, gx, gz;
};
const GRow kG[] = {
    {0.01, kInf, -999814.210718355569, -1974919.32007174995},
    {1, kInf, -0.695206387781872169, -0.876130893523151703},
    {20, kInf, -7.91860860713707913e-6, -7.9380712327390283e-6},
    {0.3, 0.7, -106.242624635874709, -211.792373091675849},
    {1, 5, -0.671417061067894989, -0.98570114512900855},
    {0.05, 0.2, -80101.7459822953746, -160059.103220243642},
    {2, 0.5, -0.5, -1.0},
    {0.01, 3, -1104584.56205107387, -2184544.10804266201},
    {3, 30, -0.013425800115943371, -0.0145021237661448233},
    {0.5, 0.05, -320.0, -640.0},
    {0.001, 0.05, -40008257439.6277942, -80014275051.9084069},
};

// mp.diff of the oracle: zeta, theta, dg_par, dg_perp
const GRow kDG[] = {
    {1, 5, 2.33913688852243, 3.31423641239381},
    {0.3, 0.7, 1067.5195883451, 2120.23331818367},
    {0.01, kInf, 299980333.782079, 594946706.158021},
};

}  // namespace

TEST_CASE("f_hat closed form at pi/4") {
  CHECK(f_hat(X, pi / 4) == doctest::Approx(-32 / (pi * pi)).epsilon(1e-14));
  CHECK(f_hat(Z, pi / 4) == doctest::Approx(-64 / (pi * pi)).epsilon(1e-14));
  CHECK(f_hat(X, pi / 4) == doctest::Approx(-3.242277).epsilon(1e-6));
  CHECK(f_hat(Z, pi / 4) == doctest::Approx(-6.484555).epsilon(1e-6));
}

TEST_CASE("f_hat and derivative against 40-digit values") {
  for (const auto& r : kF) {
    CAPTURE(r.z);
    CHECK(f_hat(X, r.z) == doctest::Approx(r.fx).epsilon(1e-13));
    CHECK(f_hat(Z, r.z) == doctest::Approx(r.fz).epsilon(1e-13));
    CHECK(df_hat_dzeta(X, r.z) == doctest::Approx(r.dfx).epsilon(1e-12));
    CHECK(df_hat_dzeta(Z, r.z) == doctest::Approx(r.dfz).epsilon(1e-12));
  }
  // leading terms quoted for zeta = 1e-3
  CHECK(f_hat(X, 1e-3) == doctest::Approx(-1.0e9 + 2.0e3).epsilon(1e-11));
}

TEST_CASE("small-zeta series agrees with the closed form at the switch") {
  for (Axis a : {X, Z}) {
    double below = std::nextafter(1e-4, 0.0);
    CHECK(f_hat(a, below) == doctest::Approx(f_hat(a, 1e-4)).epsilon(1e-12));
    CHECK(df_hat_dzeta(a, below) == doctest::Approx(df_hat_dzeta(a, 1e-4)).epsilon(1e-12));
  }
  // leading derivative terms
  double z = 1e-6;
  CHECK(df_hat_dzeta(X, z) * std::pow(z, 4) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(df_hat_dzeta(Z, z) * std::pow(z, 4) == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("df_hat matches finite differences") {
  double z = 1, h = 1e-5;
  for (Axis a : {X, Z}) {
    double fd = (f_hat(a, z + h) - f_hat(a, z - h)) / (2 * h);
    CHECK(df_hat_dzeta(a, z) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("df_hat vanishes at an extremum of f_hat_x") {
  // f_hat_x has a local maximum in [2.75, 3.25]; bisect on the derivative
  double lo = 2.75, hi = 3.25;
  REQUIRE(df_hat_dzeta(X, lo) * df_hat_dzeta(X, hi) < 0);
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    double m = 0.5 * (lo + hi);
    if ((df_hat_dzeta(X, m) < 0) == (df_hat_dzeta(X, lo) < 0))
      lo = m;
    else
      hi = m;
  }
  double zs = 0.5 * (lo + hi);
  CHECK(std::abs(df_hat_dzeta(X, zs)) < 1e-10);
  double h = 1e-4;
  CHECK(f_hat(X, zs + h) < f_hat(X, zs));
  CHECK(f_hat(X, zs - h) < f_hat(X, zs));
}

TEST_CASE("f_hat rejects zeta <= 0") {
  CHECK_THROWS_AS(f_hat(X, 0.0), InvalidInput);
  CHECK_THROWS_AS(df_hat_dzeta(Z, -1.0), InvalidInput);
  CHECK_THROWS_AS(f_hat(X, NAN), InvalidInput);
}

TEST_CASE("g_hat against the independent oracle") {
  for (const auto& r : kG) {
    CAPTURE(r.z);
    CAPTURE(r.t);
    QuadResult x = g_hat(X, {r.z, r.t}), z = g_hat(Z, {r.z, r.t});
    CHECK(x.value == doctest::Approx(r.gx).epsilon(1e-9));
    CHECK(z.value == doctest::Approx(r.gz).epsilon(1e-9));
    CHECK(x.error_estimate <= 1e-10 * std::abs(x.value) + 1e-300);
    CHECK(z.error_estimate <= 1e-10 * std::abs(z.value) + 1e-300);
  }
}

TEST_CASE("g_hat small-zeta anchors at zero temperature") {
  QuadResult x = g_hat(X, {0.01, kInf}), z = g_hat(Z, {0.01, kInf});
  CHECK(std::abs(x.value / -1.0e6 - 1) < 0.02);
  CHECK(std::abs(z.value / -2.0e6 - 1) < 0.02);
  CHECK(x.images == 0);
  double e = 1e-3;
  CHECK(std::abs(g_hat(X, {e, kInf}).value * e * e * e + 1) < 0.01);
  CHECK(std::abs(g_hat(Z, {e, kInf}).value * e * e * e + 2) < 0.01);
}

TEST_CASE("dg_hat against the oracle and finite differences") {
  for (const auto& r : kDG) {
    CAPTURE(r.z);
    CAPTURE(r.t);
    CHECK(dg_hat_dzeta(X, {r.z, r.t}).value == doctest::Approx(r.gx).epsilon(1e-8));
    CHECK(dg_hat_dzeta(Z, {r.z, r.t}).value == doctest::Approx(r.gz).epsilon(1e-8));
  }
  ReducedPoint p{1, 5};
  double h = 1e-4 * p.zeta;
  for (Axis a : {X, Z}) {
    double gp = g_hat(a, {p.zeta + h, p.theta}, kMinKernelTol).value;
    double gm = g_hat(a, {p.zeta - h, p.theta}, kMinKernelTol).value;
    double fd = (gp - gm) / (2 * h);
    CHECK(dg_hat_dzeta(a, p).value == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("dg_hat_perp leading small-zeta behaviour and sign") {
  double z = 1e-3;
  CHECK(std::abs(dg_hat_dzeta(Z, {z, kInf}).value * std::pow(z, 4) / 6 - 1) < 0.01);
  double prev = -INFINITY;
  for (double zz = 1e-3; zz <= 100; zz *= 1.5) {
    QuadResult g = g_hat(Z, {zz, kInf});
    CHECK(g.value < 0);
    CHECK(g.value > prev);
    CHECK(dg_hat_dzeta(Z, {zz, kInf}).value > 0);
    prev = g.value;
  }
}

TEST_CASE("parallel axis is shared by x and y") {
  // one parallel kernel serves both axes; the reduction is exact by construction
  QuadResult a = g_hat(X, {0.3, 0.7}), b = g_hat(X, {0.3, 0.7});
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
}

TEST_CASE("large theta approaches the zero-temperature branch") {
  for (double z : {1e-3, 0.1, 2.0, 30.0})
    for (Axis a : {X, Z}) {
      double g8 = g_hat(a, {z, 1e8}).value, g0 = g_hat(a, {z, kInf}).value;
      CHECK(std::abs(g8 - g0) <= 1e-10 * std::abs(g0));
    }
}

TEST_CASE("tolerance range") {
  CHECK_THROWS_AS(g_hat(X, {1, 5}, 1e-13), InvalidInput);
  CHECK_THROWS_AS(g_hat(X, {1, 5}, 1.0), InvalidInput);
  CHECK_NOTHROW(g_hat(X, {1, 5}, kMinKernelTol));
}

TEST_CASE("convergence stability under more images and tighter tolerance") {
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> u(0, 1);
  ImageOptions more;
  more.min_images_factor = 2;
  for (int i = 0; i < 12; ++i) {
    double z = std::pow(10.0, -3 + 5 * u(rng));
    double t = std::pow(10.0, -2 + 6 * u(rng));
    for (Axis a : {X, Z}) {
      double g = g_hat(a, {z, t}).value;
      double g2 = g_hat(a, {z, t}, kKernelTol / 10, more).value;
      CAPTURE(z);
      CAPTURE(t);
      CHECK(std::abs(g - g2) < 1e-8 * std::abs(g2));
    }
  }
}

TEST_CASE("kernel record") {
  KernelValue kv = kernel(Z, {1, 5});
  CHECK(kv.f_hat == f_hat(Z, 1));
  CHECK(kv.g_hat == doctest::Approx(-0.98570114512900855).epsilon(1e-9));
  CHECK(kv.images >= 2);
  CHECK(kv.evaluations > 0);
  CHECK_THROWS_AS(g_hat(X, {0.0, 1.0}), InvalidInput);
  CHECK_THROWS_AS(g_hat(X, {1.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(g_hat(X, {1.0, 1.0}, 0.0), InvalidInput);
}

TEST_CASE("lorentz tail integral branches agree") {
  using detail::lorentz_tail;
  for (int n = 1; n <= 5; ++n) {
    double a = 0.7;
    double S = 2 * a;
    double below = lorentz_tail(n, a, std::nextafter(S, 0.0));
    double above = lorentz_tail(n, a, std::nextafter(S, 10.0));
    CHECK(below == doctest::Approx(above).epsilon(1e-13));
  }
  // int_0^inf dv/(v^2+a^2)^2 = pi/(4 a^3)
  CHECK(lorentz_tail(2, 0.3, 0.0) == doctest::Approx(pi / (4 * 0.027)).epsilon(1e-14));
  CHECK(lorentz_tail(1, 2.0, 1e8) == doctest::Approx(1e-8).epsilon(1e-12));
}

TEST_CASE("rational profile derivative matches finite differences") {
  detail::RationalProfile h(0.4, {{1, 0, 2}, {-0.32, 0, 3}});
  auto d = h.derivative();
  auto d3 = d.derivative().derivative();
  for (double s : {-2.0, -0.3, 0.1, 0.9, 3.0}) {
    double e = 1e-5;
    CHECK(d(s) == doctest::Approx((h(s + e) - h(s - e)) / (2 * e)).epsilon(1e-7));
    double e3 = 1e-3;
    double fd3 = (h(s + 2 * e3) - 2 * h(s + e3) + 2 * h(s - e3) - h(s - 2 * e3)) /
                 (2 * e3 * e3 * e3);
    CHECK(d3(s) == doctest::Approx(fd3).epsilon(1e-3));
  }
}
