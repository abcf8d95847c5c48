#pragma once

#include "dyonosc/halfint.hpp"

namespace dyonosc {

/// Terminating Kummer series F(-n, c, z) = sum_{k<=n} (-n)_k z^k / ((c)_k k!).
/// Throws Errc::invalid_parameter when c is a nonpositive integer >= -n.
double kummer_terminating(int n, double c, double z);

/// order-th z-derivative of F(-n, c, z), obtained by shifting the series:
/// d/dz F(a, c, z) = (a / c) F(a + 1, c + 1, z).
double kummer_terminating_derivative(int n, double c, double z, int order);

/// Terminating Gauss series F(-n, b; c; y).
double gauss2f1_terminating(int n, double b, double c, double y);

/// order-th y-derivative of F(-n, b; c; y).
double gauss2f1_terminating_derivative(int n, double b, double c, double y, int order);

/// Physicists' Hermite polynomial H_N(z).
double hermite(int n, double z);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln(n!) for n >= 0.
double log_factorial(int n);

/// Wigner small-d function d^j_{ms}(beta), with d^j_{ms}(0) = delta_{ms}.
double wigner_small_d(HalfInt j, HalfInt m, HalfInt s, double beta);

/// Condon-Shortley Clebsch-Gordan coefficient (j1 m1; j2 m2 | J M).
/// Zero when a selection rule fails.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

}  // namespace dyonosc
