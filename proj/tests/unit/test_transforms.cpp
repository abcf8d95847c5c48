#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "dyonosc/error.hpp"
#include "dyonosc/transforms.hpp"
#include "support/oracles.hpp"

using namespace dyonosc;

TEST_CASE("dyon dimension follows the oscillator dimension") {
  CHECK(dyon_dim(1) == 1);
  CHECK(dyon_dim(2) == 2);
  CHECK(dyon_dim(4) == 3);
  CHECK(dyon_dim(8) == 5);
}

TEST_CASE("forward map preserves the norm relation |x| = u^2") {
  std::mt19937_64 rng(7);
  for (int D : {1, 2, 4, 8}) {
    for (int trial = 0; trial < 200; ++trial) {
      const OscPoint u(oracles::random_point(rng, D));
      const DyonPoint x = forward_map(u);
      CHECK(x.dim() == dyon_dim(D));
      const double u2 = u.norm_squared();
      CHECK(std::abs(x.radius() - u2) <= 1e-12 * u2);
      CHECK(std::abs(euler_residual(u)) <= 1e-12 * u2 * u2);
    }
  }
}

TEST_CASE("one-dimensional map squares") {
  const DyonPoint x = forward_map(OscPoint({-1.5}));
  CHECK(x[0] == doctest::Approx(2.25));
}

TEST_CASE("planar map is complex squaring") {
  const DyonPoint x = forward_map(OscPoint({1.0, 2.0}));
  CHECK(std::abs(x[0]) == doctest::Approx(3.0));
  CHECK(std::abs(x[1]) == doctest::Approx(4.0));
}

TEST_CASE("H H^T = u^2 I and the extra rows of H u vanish") {
  std::mt19937_64 rng(11);
  for (int D : {2, 4, 8}) {
    for (int trial = 0; trial < 100; ++trial) {
      const OscPoint u(oracles::random_point(rng, D));
      const HurwitzMatrix H = hurwitz_matrix(u);
      const double u2 = u.norm_squared();
      for (int a = 0; a < D; ++a) {
        for (int b = 0; b < D; ++b) {
          double dot = 0;
          for (int k = 0; k < D; ++k) dot += H(a, k) * H(b, k);
          CHECK(std::abs(dot - (a == b ? u2 : 0.0)) <= 1e-12 * u2);
        }
      }
      if (D > 2) CHECK(zero_rows_residual(u) <= 1e-12 * u2);
      const auto hu = H.apply(u.u());
      const DyonPoint x = forward_map(u);
      for (int k = 0; k < x.dim(); ++k) CHECK(hu[static_cast<std::size_t>(k)] == doctest::Approx(x[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("fibre angles invert the four-dimensional parametrization") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> a(0.1, 6.1), b(0.1, 3.0), g(0.1, 12.4), r(0.2, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const FiberAngles in{4, a(rng), b(rng), g(rng)};
    const double radius = r(rng);
    const OscPoint u = ks_point(radius, in);
    CHECK(std::sqrt(u.norm_squared()) == doctest::Approx(radius));
    const FiberAngles out = fiber_angles(u);
    CHECK(out.alpha == doctest::Approx(in.alpha).epsilon(1e-10));
    CHECK(out.beta == doctest::Approx(in.beta).epsilon(1e-10));
    CHECK(out.gamma == doctest::Approx(in.gamma).epsilon(1e-10));
    const DyonPoint x = forward_map(u);
    CHECK(x.radius() == doctest::Approx(radius * radius));
  }
}

TEST_CASE("unsupported inputs raise typed errors") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::not_converged;
  };
  CHECK(code_of([] { OscPoint({1.0, 2.0, 3.0}); }) == Errc::unsupported_dimension);
  CHECK(code_of([] { hurwitz_matrix(OscPoint({1.0})); }) == Errc::unsupported_dimension);
  CHECK(code_of([] { fiber_angles(OscPoint({1.0, 0.0, 0.0, 0.0})); }) == Errc::degenerate_fiber);
  CHECK(code_of([] { fiber_angles(OscPoint({1.0, 2.0})); }) == Errc::unsupported_dimension);
}
