#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dyonosc/error.hpp"
#include "dyonosc/oracle.hpp"
#include "dyonosc/wavefun.hpp"

using namespace dyonosc;

namespace {
const HalfInt kZero;

PhysicalParams osc(double omega, Units u = {}) { return {u, regime::Oscillator{omega}}; }
PhysicalParams coupling(double e2, Units u = {}) { return {u, regime::DyonCoupling{e2}}; }

template <class Jet>
void check_jet_against_differences(Jet jet, double x) {
  const double h = 1e-4;
  const auto c = jet(x), l = jet(x - h), r = jet(x + h);
  CHECK(c.d1 == doctest::Approx((r.value - l.value) / (2 * h)).epsilon(1e-6));
  CHECK(c.d2 == doctest::Approx((r.d1 - l.d1) / (2 * h)).epsilon(1e-6));
}
}  // namespace

TEST_CASE("1D oscillator ground state") {
  const Units u{2.0, 0.5, 1.0};
  const double omega = 1.5;
  for (double x : {-1.0, 0.0, 0.4}) {
    const double a = u.mu * omega / u.hbar;
    CHECK(osc1_wavefn(0, omega, u, x) == doctest::Approx(std::pow(a / std::numbers::pi, 0.25) * std::exp(-a * x * x / 2)));
  }
}

TEST_CASE("normalization of the closed forms") {
  const Units u{1.3, 0.8, 1.0};
  CHECK(normalization(sys::Anyon1{0.25}, qn::Anyon{1}, coupling(0.7, u)).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(normalization(sys::Dyon2{kHalf}, qn::Dyon2{1, -1, kHalf}, coupling(0.7, u)).value ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(normalization(sys::Dyon3{kHalf}, qn::Dyon3{1, HalfInt::from_twice(3), -kHalf, kHalf}, coupling(0.7, u)).value ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(normalization(sys::Osc{2}, qn::Osc2{2, 1}, osc(1.1, u)).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(normalization(sys::Osc{4}, qn::Osc4{1, HalfInt::integer(1), kZero, HalfInt::integer(-1)}, osc(1.1, u)).value ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(normalization(sys::Ycm5{}, qn::Ycm{}, coupling(1.0)), Error);
}

TEST_CASE("anyon continuation") {
  const Units u{};
  const double x = 0.8;
  const auto even_p = anyon_wavefn(1, 0.25, 1.0, u, x, AnyonExtension::even);
  const auto even_m = anyon_wavefn(1, 0.25, 1.0, u, -x, AnyonExtension::even);
  const auto odd_m = anyon_wavefn(1, 0.25, 1.0, u, -x, AnyonExtension::odd);
  const auto half = anyon_wavefn(1, 0.25, 1.0, u, x, AnyonExtension::half_line);
  CHECK(std::abs(even_p - even_m) < 1e-15);
  CHECK(std::abs(even_p + odd_m) < 1e-15);
  CHECK(std::abs(half) == doctest::Approx(std::abs(even_p) * std::sqrt(2.0)));
  CHECK(std::abs(anyon_wavefn(1, 0.25, 1.0, u, -x, AnyonExtension::half_line)) == 0.0);
}

TEST_CASE("anyon amplitude |C|^2 = 2(n+nu) hbar/(mu omega)") {
  const Units u{1.7, 0.6, 1.0};
  CHECK(anyon_c_squared(2, 0.75, 1.3, u) == doctest::Approx(2 * 2.75 * 0.6 / (1.7 * 1.3)));
  // mean u^2 of the 1D oscillator state N is (N + 1/2) hbar / (mu omega)
  CHECK(oscillator_second_moment(3, 1.3, u) == doctest::Approx(3.5 * 0.6 / (1.7 * 1.3)).epsilon(1e-10));
}

TEST_CASE("jets agree with differences") {
  const Units u{1.2, 0.9, 1.0};
  check_jet_against_differences([&](double x) { return anyon_jet(2, 0.75, 0.8, u, x); }, 1.7);
  check_jet_against_differences([&](double x) { return osc2_jet(1, 2, 1.3, u, x); }, 0.9);
  check_jet_against_differences([&](double x) { return dyon2_jet(1, 1, kHalf, 0.8, u, x); }, 2.3);
  check_jet_against_differences([&](double x) { return osc4_jet(2, kHalf, 1.3, u, x); }, 1.1);
  check_jet_against_differences([&](double x) { return dyon3_jet(1, HalfInt::integer(1), 0.8, u, x); }, 3.1);
  check_jet_against_differences([&](double x) { return ycm_angular_jet(2, kHalf, HalfInt::integer(1), x); }, 1.2);
  check_jet_against_differences([&](double x) { return ycm_radial_jet(1, HalfInt::from_twice(3), 0.8, u, x); }, 2.5);
}

TEST_CASE("closed forms solve their radial equations") {
  const Units u{1.2, 0.9, 1.0};
  const double e2 = 0.8;
  auto eps = [&](double q) { return -u.mu * e2 * e2 / (2 * u.hbar * u.hbar * q * q); };
  std::vector<double> xs;
  for (int i = 1; i <= 200; ++i) xs.push_back(0.05 * i);
  auto sample = [&](auto jet) {
    std::vector<RadialJet> out;
    for (double x : xs) out.push_back(jet(x));
    return out;
  };
  const auto dyon3 = oracle::ode_dyon3_radial(HalfInt::from_twice(3), kHalf, eps(1 + 1.5 + 1), e2, u);
  CHECK(oracle::analytic_residual(dyon3, xs, sample([&](double r) { return dyon3_jet(1, HalfInt::from_twice(3), e2, u, r); })) <
        1e-10);
  const auto dyon2 = oracle::ode_dyon2_radial(1, kHalf, eps(2 + 1.5 + 0.5), e2, u);
  CHECK(oracle::analytic_residual(dyon2, xs, sample([&](double r) { return dyon2_jet(2, 1, kHalf, e2, u, r); })) < 1e-10);
  const auto anyon = oracle::ode_anyon(0.25, eps(1.25), e2, u);
  CHECK(oracle::analytic_residual(anyon, xs, sample([&](double x) { return anyon_jet(1, 0.25, e2, u, x); })) < 1e-10);
  const auto ycm = oracle::ode_ycm_radial(1.5, eps(1 + 1.5 + 2), e2, u);
  CHECK(oracle::analytic_residual(ycm, xs, sample([&](double r) { return ycm_radial_jet(1, HalfInt::from_twice(3), e2, u, r); })) <
        1e-10);
  // A wrong energy leaves a visible residual.
  const auto wrong = oracle::ode_dyon3_radial(HalfInt::from_twice(3), kHalf, eps(3.0), e2, u);
  CHECK(oracle::analytic_residual(wrong, xs, sample([&](double r) { return dyon3_jet(1, HalfInt::from_twice(3), e2, u, r); })) >
        1e-3);
}

TEST_CASE("Kummer moments") {
  // int rho^a e^-rho d rho = Gamma(a+1)
  CHECK(kummer_moment(0, 2.0, 3.0) == doctest::Approx(6.0));
  // F(-1, c, rho) = 1 - rho/c
  const double c = 3.0, a = 2.0;
  const double direct = 2.0 - 2.0 * 6.0 / c + 24.0 / (c * c);
  CHECK(kummer_moment(1, c, a) == doctest::Approx(direct));
}

TEST_CASE("2D dyon states with s = 1/2 are double valued") {
  const Units u{};
  const auto a = dyon2_unreduced(0, 0, kHalf, 1.0, u, 0.7, 0.4);
  const auto b = dyon2_unreduced(0, 0, kHalf, 1.0, u, 0.7, 0.4 + 2 * std::numbers::pi);
  CHECK(std::abs(a + b) < 1e-14);
}
