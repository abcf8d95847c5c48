#include "dyonosc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dyonosc/error.hpp"

namespace dyonosc {
namespace {

void check_lower_parameter(int n, double c, const char* what) {
  if (n < 0) throw Error(Errc::invalid_parameter, std::string(what) + ": negative degree");
  if (!std::isfinite(c)) throw Error(Errc::invalid_parameter, std::string(what) + ": non-finite c");
  if (c <= 0 && c == std::floor(c) && c >= -n) {
    throw Error(Errc::invalid_parameter,
                std::string(what) + ": c=" + std::to_string(c) + " is a nonpositive integer");
  }
}

// (x)_k for small k.
double pochhammer(double x, int k) {
  double p = 1;
  for (int i = 0; i < k; ++i) p *= x + i;
  return p;
}

bool valid_projection(HalfInt j, HalfInt m) {
  return m.abs() <= j && (j - m).is_integer();
}

}  // namespace

double kummer_terminating(int n, double c, double z) {
  check_lower_parameter(n, c, "kummer_terminating");
  double term = 1;
  double sum = 1;
  for (int k = 0; k < n; ++k) {
    term *= (k - n) * z / ((c + k) * (k + 1));
    sum += term;
  }
  return sum;
}

double kummer_terminating_derivative(int n, double c, double z, int order) {
  if (order < 0) throw Error(Errc::invalid_parameter, "negative derivative order");
  if (order == 0) return kummer_terminating(n, c, z);
  check_lower_parameter(n, c, "kummer_terminating_derivative");
  if (order > n) return 0.0;
  const double factor = pochhammer(-n, order) / pochhammer(c, order);
  return factor * kummer_terminating(n - order, c + order, z);
}

double gauss2f1_terminating(int n, double b, double c, double y) {
  check_lower_parameter(n, c, "gauss2f1_terminating");
  double term = 1;
  double sum = 1;
  for (int k = 0; k < n; ++k) {
    term *= (k - n) * (b + k) * y / ((c + k) * (k + 1));
    sum += term;
  }
  return sum;
}

double gauss2f1_terminating_derivative(int n, double b, double c, double y, int order) {
  if (order < 0) throw Error(Errc::invalid_parameter, "negative derivative order");
  if (order == 0) return gauss2f1_terminating(n, b, c, y);
  check_lower_parameter(n, c, "gauss2f1_terminating_derivative");
  if (order > n) return 0.0;
  const double factor = pochhammer(-n, order) * pochhammer(b, order) / pochhammer(c, order);
  return factor * gauss2f1_terminating(n - order, b + order, c + order, y);
}

double hermite(int n, double z) {
  if (n < 0) throw Error(Errc::invalid_parameter, "negative Hermite degree");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_gamma(double x) {
  if (!(x > 0) || !std::isfinite(x)) {
    throw Error(Errc::domain_error, "log_gamma needs x > 0, got " + std::to_string(x));
  }
  return std::lgamma(x);
}

double log_factorial(int n) {
  if (n < 0) throw Error(Errc::domain_error, "factorial of a negative integer");
  if (n < 2) return 0.0;
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double wigner_small_d(HalfInt j, HalfInt m, HalfInt s, double beta) {
  if (j < HalfInt{} || !valid_projection(j, m) || !valid_projection(j, s)) {
    throw Error(Errc::invalid_quantum_numbers,
                "d^j_{ms} needs |m|,|s| <= j with j-m, j-s integral (j=" + j.str() +
                    ", m=" + m.str() + ", s=" + s.str() + ")");
  }
  const int jpm = (j + m).as_int(), jmm = (j - m).as_int();
  const int jps = (j + s).as_int(), jms = (j - s).as_int();
  const int m_minus_s = (m - s).as_int();
  const int two_j = j.twice();

  const double c = std::cos(0.5 * beta);
  const double sn = std::sin(0.5 * beta);
  const double log_pref =
      0.5 * (log_factorial(jpm) + log_factorial(jmm) + log_factorial(jps) + log_factorial(jms));

  const int k_lo = std::max(0, -m_minus_s);
  const int k_hi = std::min(jps, jmm);
  double sum = 0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double log_den = log_factorial(jps - k) + log_factorial(k) + log_factorial(jmm - k) +
                           log_factorial(m_minus_s + k);
    const int cos_pow = two_j - m_minus_s - 2 * k;
    const int sin_pow = m_minus_s + 2 * k;
    const double sign = ((m_minus_s + k) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::exp(log_pref - log_den) * std::pow(c, cos_pow) * std::pow(sn, sin_pow);
  }
  return sum;
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  if (j1 < HalfInt{} || j2 < HalfInt{} || J < HalfInt{}) return 0.0;
  if (M != m1 + m2) return 0.0;
  if (!valid_projection(j1, m1) || !valid_projection(j2, m2) || !valid_projection(J, M)) return 0.0;
  if (J < (j1 - j2).abs() || J > j1 + j2 || !(j1 + j2 + J).is_integer()) return 0.0;

  const int a = (j1 + j2 - J).as_int();
  const int b = (j1 - m1).as_int();
  const int c = (j2 + m2).as_int();
  const int d = (J - j2 + m1).as_int();
  const int e = (J - j1 - m2).as_int();

  const double log_tri = log_factorial((J + j1 - j2).as_int()) + log_factorial((J - j1 + j2).as_int()) +
                         log_factorial(a) - log_factorial((j1 + j2 + J).as_int() + 1);
  const double log_proj = log_factorial((J + M).as_int()) + log_factorial((J - M).as_int()) +
                          log_factorial((j1 - m1).as_int()) + log_factorial((j1 + m1).as_int()) +
                          log_factorial((j2 - m2).as_int()) + log_factorial((j2 + m2).as_int());
  const double log_pref = 0.5 * (std::log(J.twice() + 1.0) + log_tri + log_proj);

  const int k_lo = std::max({0, -d, -e});
  const int k_hi = std::min({a, b, c});
  double sum = 0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double log_den = log_factorial(k) + log_factorial(a - k) + log_factorial(b - k) +
                           log_factorial(c - k) + log_factorial(d + k) + log_factorial(e + k);
    sum += ((k % 2 == 0) ? 1.0 : -1.0) * std::exp(log_pref - log_den);
  }
  return sum;
}

}  // namespace dyonosc
