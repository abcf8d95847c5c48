#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "dyonosc/error.hpp"
#include "dyonosc/fields.hpp"

using namespace dyonosc;

constexpr double kPi = std::numbers::pi;

TEST_CASE("vortex potential and circulation") {
  const auto a = vortex_potential(2.0, 1.0, 0.0);
  CHECK(a[0] == doctest::Approx(0.0));
  CHECK(a[1] == doctest::Approx(-2.0));
  for (double r : {0.05, 1.0, 7.0}) {
    CHECK(circulation({FieldKind::vortex, 0.7}, Circle::planar(r)) == doctest::Approx(-2 * kPi * 0.7).epsilon(1e-10));
  }
  CHECK_THROWS_AS(vortex_potential(1.0, 0.0, 0.0), Error);
}

TEST_CASE("Dirac potential") {
  const double g = 0.5;
  const auto zero = dirac_potential(g, 1.0, 0.3, 0.0);
  for (double c : zero) CHECK(c == doctest::Approx(0.0));
  // spherical and Cartesian forms agree
  const double r = 1.7, al = 0.6, be = 1.1;
  const Vec3 x{r * std::sin(be) * std::cos(al), r * std::sin(be) * std::sin(al), r * std::cos(be)};
  const auto s = dirac_potential(g, r, al, be);
  const auto c = dirac_potential_cartesian(g, x);
  for (int k = 0; k < 3; ++k) CHECK(s[k] == doctest::Approx(c[k]));
  // A is tangent to latitude circles
  CHECK(s[0] * x[0] + s[1] * x[1] + s[2] * x[2] == doctest::Approx(0.0));
  CHECK_THROWS_AS(dirac_potential(g, 1.0, 0.0, kPi), Error);
  for (double b : {0.4, 1.5, 2.8}) {
    CHECK(circulation({FieldKind::dirac, g}, Circle::latitude(2.0, b)) ==
          doctest::Approx(-2 * kPi * g * (1 - std::cos(b))).epsilon(1e-9));
  }
}

TEST_CASE("Dirac charge quantization") {
  const Units u{1.0, 2.0, 3.0};
  CHECK(dirac_charge(kHalf, 0.5, u).g() == doctest::Approx(2.0 * 3.0 * 0.5 / 0.5));
  CHECK(dirac_charge(1.5, 1.0, u).s() == HalfInt::from_twice(3));
  CHECK_THROWS_AS(dirac_charge(0.3, 1.0, u), Error);
  CHECK_THROWS_AS(dirac_charge(kHalf, 0.0, u), Error);
  CHECK(goldhaber_term(kHalf, Units{}, 1.0) == doctest::Approx(0.125));
}

TEST_CASE("Yang potentials") {
  const auto at = yang_potentials({0, 1, 0, 0, 0});
  const Vec5 expect{0, 0, 0, 0, 1};
  for (int k = 0; k < 5; ++k) CHECK(at[0][k] == doctest::Approx(expect[k]));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int t = 0; t < 200; ++t) {
    Vec5 x{};
    for (auto& v : x) v = d(rng);
    double r = 0;
    for (double v : x) r += v * v;
    r = std::sqrt(r);
    if (r + x[0] < 1e-3) continue;
    const auto A = yang_potentials(x);
    const double norm = (r - x[0]) / (r * r * (r + x[0]));
    for (int a = 0; a < 3; ++a) {
      double ax = 0;
      for (int k = 0; k < 5; ++k) ax += A[a][k] * x[k];
      CHECK(std::abs(ax) < 1e-12);
      for (int b = 0; b < 3; ++b) {
        double ab = 0;
        for (int k = 0; k < 5; ++k) ab += A[a][k] * A[b][k];
        CHECK(ab == doctest::Approx(a == b ? norm : 0.0).epsilon(1e-12).scale(norm));
      }
    }
  }
  CHECK_THROWS_AS(yang_potentials({-1, 0, 0, 0, 0}), Error);
}

TEST_CASE("evaluate_field dispatch") {
  const auto f = evaluate_field({FieldKind::yang, 0.0}, {0, 1, 0, 0, 0});
  CHECK(f.components.size() == 3);
  CHECK(f.components[0].size() == 5);
  CHECK(evaluate_field({FieldKind::vortex, 1.0}, {1, 0}).components.size() == 1);
  CHECK_THROWS_AS(evaluate_field({FieldKind::dirac, 1.0}, {1, 0}), Error);
  CHECK_THROWS_AS(circulation({FieldKind::yang, 1.0}, Circle::planar(1.0)), Error);
}
