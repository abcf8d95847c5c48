#include <cmath>
#include <random>

#include "doctest.h"
#include "dyonosc/error.hpp"
#include "dyonosc/spectra.hpp"
#include "support/oracles.hpp"

using namespace dyonosc;

namespace {
const HalfInt kZero;
const HalfInt kOne = HalfInt::integer(1);

PhysicalParams osc_params(double omega, Units u = {}) { return {u, regime::Oscillator{omega}}; }
PhysicalParams coupling(double e2, Units u = {}) { return {u, regime::DyonCoupling{e2}}; }
}  // namespace

TEST_CASE("oscillator energies") {
  const Units u{2.0, 0.5, 1.0};
  const auto p = osc_params(3.0, u);
  CHECK(osc_energy(1, qn::Principal{2}, p) == doctest::Approx(0.5 * 3.0 * 2.5));
  CHECK(osc_energy(2, qn::Osc2{1, -2}, p) == doctest::Approx(0.5 * 3.0 * 5.0));
  CHECK(osc_energy(4, qn::Osc4{1, kHalf, kHalf, -kHalf}, p) == doctest::Approx(0.5 * 3.0 * 5.0));
  CHECK(osc_energy(8, qn::Principal{3}, p) == doctest::Approx(0.5 * 3.0 * 7.0));
}

TEST_CASE("Coulomb energies of the dual systems") {
  const Units u{1.5, 0.7, 1.0};
  const double e2 = 0.9;
  const auto p = coupling(e2, u);
  auto ref = [&](double q) { return oracles::coulomb_level(u.mu, u.hbar, e2, q); };
  CHECK(dyon_energy(sys::Anyon1{0.25}, qn::Anyon{2}, p) == doctest::Approx(ref(2.25)));
  CHECK(dyon_energy(sys::Dyon2{kHalf}, qn::Dyon2{1, -1, kHalf}, p) == doctest::Approx(ref(2.0)));
  CHECK(dyon_energy(sys::Dyon3{kHalf}, qn::Dyon3{0, HalfInt::from_twice(3), kHalf, kHalf}, p) ==
        doctest::Approx(ref(2.5)));
  CHECK(dyon_energy(sys::Ycm5{kHalf}, qn::Ycm{1, 0, kHalf, kZero, kHalf}, p) == doctest::Approx(ref(3.5)));
}

TEST_CASE("the dual energy -mu omega^2/8 equals the Coulomb level") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(0.3, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Units u{dist(rng), dist(rng), 1.0};
    const double E = dist(rng);
    for (const SystemId& s : {SystemId{sys::Anyon1{0.75}}, SystemId{sys::Dyon2{kZero}}, SystemId{sys::Dyon3{kHalf}},
                              SystemId{sys::Ycm5{}}}) {
      for (const auto& line : quantized_frequencies(s, E, 12, u)) {
        const double eps = -u.mu * line.omega * line.omega / 8.0;
        const double ref = oracles::coulomb_level(u.mu, u.hbar, E / 4.0, principal_quantity(s, line.qn));
        CHECK(eps == doctest::Approx(ref).epsilon(1e-12));
        CHECK(std::abs(duality_identity_residual(s, line.qn, E, u)) <= 1e-12 * std::abs(ref));
      }
    }
  }
}

TEST_CASE("parameter maps") {
  const Units u{};
  const DyonSide d = to_dyon(OscillatorSide{4.0, 1.0, 0.0, std::nullopt, {}}, u);
  CHECK(*d.e2 == doctest::Approx(1.0));
  CHECK(*d.eps == doctest::Approx(-0.125));
  const DyonSide m = to_dyon(OscillatorSide{5.0, std::nullopt, 1.0, 8.0, {}}, u);
  CHECK(*m.e2 == doctest::Approx(1.0));
  CHECK(*m.eps == doctest::Approx(-2.0));
  const OscillatorSide back = to_oscillator(DyonSide{1.0, -0.125, {}}, u);
  CHECK(*back.energy == doctest::Approx(4.0));
  CHECK(*back.omega == doctest::Approx(1.0));
  try {
    to_oscillator(DyonSide{std::nullopt, 0.5, {}}, u);
    FAIL("expected no_bound_state");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_bound_state);
  }
}

TEST_CASE("degeneracies against lattice counting") {
  for (int N = 0; N <= 20; ++N) {
    CHECK(osc_degeneracy(4, N) == oracles::lattice_count(4, N));
    CHECK(osc_degeneracy(4, N) == oracles::osc4_label_count(N));
    CHECK(osc_degeneracy(8, N) == oracles::lattice_count(8, N));
  }
  for (int N = 0; N <= 12; ++N) {
    std::int64_t sum = 0;
    for (int t2 = N % 2; t2 <= N; t2 += 2) {
      const auto g = ycm_degeneracy(N, HalfInt::from_twice(t2));
      CHECK(g == oracles::ycm_label_count(N, t2));
      sum += g;
    }
    CHECK(sum == oracles::lattice_count(8, N));
  }
  CHECK(ycm_degeneracy(2, HalfInt{}) == 6);
  CHECK(binomial(9, 7) == 36);
  CHECK_THROWS_AS(ycm_degeneracy(3, HalfInt{}), Error);
}

TEST_CASE("quantum-number validation") {
  CHECK_NOTHROW(validate(sys::Dyon3{kHalf}, qn::Dyon3{0, kHalf, -kHalf, kHalf}));
  CHECK_THROWS_AS(validate(sys::Dyon3{kHalf}, qn::Dyon3{0, kZero, kZero, kHalf}), Error);
  CHECK_THROWS_AS(validate(sys::Osc{4}, qn::Osc4{0, kHalf, kOne, kHalf}), Error);
  CHECK_THROWS_AS(validate(sys::Ycm5{kHalf}, qn::Ycm{0, 0, kZero, kZero, kHalf}), Error);
  CHECK_THROWS_AS(validate(sys::Anyon1{0.25}, qn::Anyon{-1}), Error);
}

TEST_CASE("enumerated spectra") {
  const auto osc4 = enumerate_spectrum(sys::Osc{4}, osc_params(1.0), 2);
  REQUIRE(osc4.size() == 3);
  CHECK(osc4[0].energy == doctest::Approx(2.0));
  CHECK(osc4[1].energy == doctest::Approx(3.0));
  CHECK(osc4[2].energy == doctest::Approx(4.0));
  CHECK(osc4[0].degeneracy == 1);
  CHECK(osc4[1].degeneracy == 4);
  CHECK(osc4[2].degeneracy == 10);
  const auto ycm = enumerate_spectrum(sys::Ycm5{}, coupling(1.0), 1);
  REQUIRE(ycm.size() == 2);
  CHECK(ycm[0].energy == doctest::Approx(-0.125));
  CHECK(ycm[1].energy == doctest::Approx(-0.08));
  CHECK_THROWS_AS(enumerate_spectrum(sys::Osc{4}, osc_params(-1.0), 2), Error);
}
