#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dyonosc/error.hpp"
#include "dyonosc/specfun.hpp"
#include "support/oracles.hpp"

using namespace dyonosc;

TEST_CASE("low-order Kummer polynomials") {
  for (double z : {-1.3, 0.0, 0.7, 4.2}) {
    CHECK(kummer_terminating(0, 2.5, z) == doctest::Approx(1.0));
    CHECK(kummer_terminating(1, 2.5, z) == doctest::Approx(1.0 - z / 2.5));
    CHECK(kummer_terminating(2, 2.5, z) == doctest::Approx(1.0 - 2.0 * z / 2.5 + z * z / (2.5 * 3.5)));
  }
}

TEST_CASE("Kummer derivatives agree with central differences") {
  const double h = 1e-4;
  for (int n : {1, 3, 6}) {
    for (double z : {0.3, 2.0, 5.5}) {
      const double fd1 = (kummer_terminating(n, 1.5, z + h) - kummer_terminating(n, 1.5, z - h)) / (2 * h);
      const double fd2 = (kummer_terminating(n, 1.5, z + h) - 2 * kummer_terminating(n, 1.5, z) +
                          kummer_terminating(n, 1.5, z - h)) / (h * h);
      CHECK(kummer_terminating_derivative(n, 1.5, z, 1) == doctest::Approx(fd1).epsilon(1e-6));
      CHECK(kummer_terminating_derivative(n, 1.5, z, 2) == doctest::Approx(fd2).epsilon(1e-4));
    }
  }
}

TEST_CASE("Kummer rejects c = -n") {
  CHECK_THROWS_AS(kummer_terminating(2, -1.0, 0.5), Error);
}

TEST_CASE("Gauss series") {
  CHECK(gauss2f1_terminating(0, 3.0, 2.0, 0.4) == doctest::Approx(1.0));
  CHECK(gauss2f1_terminating(1, 3.0, 2.0, 0.4) == doctest::Approx(1.0 - 3.0 * 0.4 / 2.0));
  // F(-n, b; b; y) = (1 - y)^n
  CHECK(gauss2f1_terminating(4, 2.5, 2.5, 0.3) == doctest::Approx(std::pow(0.7, 4)));
  const double h = 1e-5;
  const double fd = (gauss2f1_terminating(3, 4.5, 2.0, 0.4 + h) - gauss2f1_terminating(3, 4.5, 2.0, 0.4 - h)) / (2 * h);
  CHECK(gauss2f1_terminating_derivative(3, 4.5, 2.0, 0.4, 1) == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("Hermite polynomials match the recurrence and the Kummer form") {
  for (int N = 0; N <= 20; ++N) {
    for (double z : {-2.1, -0.4, 0.0, 0.9, 3.3}) {
      const double h = hermite(N, z);
      const double ref = oracles::hermite_recurrence(N, z);
      CHECK(h == doctest::Approx(ref).epsilon(1e-12));
      const int n = N / 2;
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      const double ratio = std::exp(log_factorial(N) - log_factorial(n));
      const double kummer = N % 2 == 0 ? sign * ratio * kummer_terminating(n, 0.5, z * z)
                                       : sign * ratio * 2.0 * z * kummer_terminating(n, 1.5, z * z);
      CHECK(kummer == doctest::Approx(ref).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("log gamma") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)));
  CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)));
}

TEST_CASE("Wigner d for j = 1/2 and 1") {
  const double b = 0.83;
  const HalfInt h = kHalf;
  CHECK(wigner_small_d(h, h, h, b) == doctest::Approx(std::cos(b / 2)));
  CHECK(std::abs(wigner_small_d(h, h, -h, b)) == doctest::Approx(std::sin(b / 2)));
  CHECK(wigner_small_d(h, h, -h, b) == doctest::Approx(-wigner_small_d(h, -h, h, b)));
  const HalfInt one = HalfInt::integer(1), zero;
  CHECK(wigner_small_d(one, zero, zero, b) == doctest::Approx(std::cos(b)));
  CHECK(wigner_small_d(one, one, one, b) == doctest::Approx((1 + std::cos(b)) / 2));
  CHECK(wigner_small_d(one, one, -one, b) == doctest::Approx((1 - std::cos(b)) / 2));
  CHECK(wigner_small_d(HalfInt::integer(2), HalfInt::integer(1), HalfInt::integer(1), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("Clebsch-Gordan coefficients match Racah's formula") {
  for (int j1 = 0; j1 <= 4; ++j1) {
    for (int j2 = 0; j2 <= 4; ++j2) {
      for (int J = std::abs(j1 - j2); J <= j1 + j2; J += 2) {
        for (int m1 = -j1; m1 <= j1; m1 += 2) {
          for (int m2 = -j2; m2 <= j2; m2 += 2) {
            const double ref = oracles::racah_cg(j1, m1, j2, m2, J, m1 + m2);
            const double got = clebsch_gordan(HalfInt::from_twice(j1), HalfInt::from_twice(m1), HalfInt::from_twice(j2),
                                              HalfInt::from_twice(m2), HalfInt::from_twice(J), HalfInt::from_twice(m1 + m2));
            CHECK(got == doctest::Approx(ref).epsilon(1e-12).scale(1.0));
          }
        }
      }
    }
  }
  CHECK(clebsch_gordan(kHalf, kHalf, kHalf, kHalf, HalfInt{}, HalfInt{}) == 0.0);
}

TEST_CASE("half-integers") {
  CHECK(HalfInt::parse("1/2") == kHalf);
  CHECK(HalfInt::parse("-3/2").twice() == -3);
  CHECK(HalfInt::parse("0.5") == kHalf);
  CHECK(HalfInt::parse("2").twice() == 4);
  CHECK(HalfInt::from_twice(3).str() == "3/2");
  CHECK_THROWS_AS(HalfInt::from_double(0.3), Error);
}
