#pragma once

// Test-side reference computations. None of these call into the library.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

namespace oracles {

/// Number of nonnegative integer D-tuples with sum N (Cartesian oscillator basis).
inline std::int64_t lattice_count(int D, int N) {
  if (D == 1) return 1;
  std::int64_t total = 0;
  for (int k = 0; k <= N; ++k) total += lattice_count(D - 1, N - k);
  return total;
}

/// Osc(4) states labelled by (n, j, m, s): N = 2n + 2j, m and s run over -j..j.
inline std::int64_t osc4_label_count(int N) {
  std::int64_t count = 0;
  for (int n = 0; 2 * n <= N; ++n) {
    const int twice_j = N - 2 * n;
    count += static_cast<std::int64_t>(twice_j + 1) * (twice_j + 1);
  }
  return count;
}

/// States with isospin 2T = t2 among the labels (n_r, n_theta, J, L), with
/// N = 2 n_r + 2 n_theta + 2J + 2L and T in |J - L|..J + L. Each label carries
/// (2J+1)(2L+1)(2T+1) states. Half-integers are passed doubled.
inline std::int64_t ycm_label_count(int N, int t2) {
  std::int64_t count = 0;
  for (int n_r = 0; 2 * n_r <= N; ++n_r) {
    for (int n_theta = 0; 2 * n_r + 2 * n_theta <= N; ++n_theta) {
      const int rest = N - 2 * n_r - 2 * n_theta;  // 2J + 2L
      for (int j2 = 0; j2 <= rest; ++j2) {
        const int l2 = rest - j2;
        if (t2 < std::abs(j2 - l2) || t2 > j2 + l2 || (j2 + l2 + t2) % 2 != 0) continue;
        count += static_cast<std::int64_t>(j2 + 1) * (l2 + 1) * (t2 + 1);
      }
    }
  }
  return count;
}

inline long double factorial(int n) {
  long double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Racah's closed formula for (j1 m1; j2 m2 | J M), arguments doubled.
inline double racah_cg(int j1, int m1, int j2, int m2, int J, int M) {
  if (m1 + m2 != M) return 0.0;
  if (J < std::abs(j1 - j2) || J > j1 + j2 || (j1 + j2 + J) % 2 != 0) return 0.0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(M) > J) return 0.0;
  auto f = [](int twice) { return factorial(twice / 2); };
  const long double pre = std::sqrt((J + 1) * f(j1 + j2 - J) * f(j1 - j2 + J) * f(-j1 + j2 + J) / f(j1 + j2 + J + 2) *
                                    f(j1 + m1) * f(j1 - m1) * f(j2 + m2) * f(j2 - m2) * f(J + M) * f(J - M));
  long double sum = 0;
  for (int k = 0; k <= 2 * (j1 + j2 + J); k += 2) {
    const int a = j1 + j2 - J - k, b = j1 - m1 - k, c = j2 + m2 - k;
    const int d = J - j2 + m1 + k, e = J - j1 - m2 + k;
    if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0) continue;
    const long double term = 1.0L / (f(k) * f(a) * f(b) * f(c) * f(d) * f(e));
    sum += (k / 2) % 2 == 0 ? term : -term;
  }
  return static_cast<double>(pre * sum);
}

/// H_N(z) by the three-term recurrence.
inline double hermite_recurrence(int n, double z) {
  double h0 = 1.0, h1 = 2.0 * z;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * z * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

/// -mu e^4 / (2 hbar^2 q^2).
inline double coulomb_level(double mu, double hbar, double e2, double q) {
  return -mu * e2 * e2 / (2.0 * hbar * hbar * q * q);
}

inline std::vector<double> random_point(std::mt19937_64& rng, int dim, double scale = 3.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  std::vector<double> v(static_cast<std::size_t>(dim));
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace oracles
