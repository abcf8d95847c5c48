#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dyonosc/halfint.hpp"
#include "dyonosc/units.hpp"
#include "dyonosc/wavefun.hpp"

namespace dyonosc::oracle {

/// V(r) = sum of coefficient * r^power.
struct Potential {
  enum class Kind { harmonic, coulomb, coulomb_goldhaber, modified, custom };

  Kind kind = Kind::custom;
  std::vector<std::pair<double, double>> terms;  // (power, coefficient)

  /// mu omega^2 r^2 / 2
  static Potential harmonic(double omega, const Units& units);
  /// -e^2 / r
  static Potential coulomb(double e2);
  /// -e^2 / r + hbar^2 s^2 / (2 mu r^2)
  static Potential coulomb_goldhaber(double e2, HalfInt s, const Units& units);
  /// C0 + C2 r^2 + C4 r^4 + ...
  static Potential modified(double c0, double c2, const std::vector<double>& higher);

  double operator()(double r) const;
};

std::string to_string(Potential::Kind kind);

/// R'' + (dim_eff - 1)/u R' - angular_coeff/u^2 R + (2 mu / hbar^2)(E - V) R = 0 on (0, r_max).
struct RadialProblem {
  double dim_eff = 3.0;
  double angular_coeff = 0.0;
  Potential potential;
  double r_max = 10.0;
  int grid_points = 4000;
  Units units;
  /// Zero slope at the left end instead of a zero value (even states of the
  /// one-dimensional problem).
  bool neumann_left = false;

  void validate() const;
  /// Lambda plus the (dim_eff - 1)(dim_eff - 3)/4 shift of the reduced form.
  double effective_angular() const;
};

/// Uniform grid x_i = left + i h, i = 0..points-1.
struct Grid {
  double left = 0.0;
  double h = 0.0;
  int points = 0;

  double x(int i) const { return left + i * h; }
  double right() const { return x(points - 1); }
};

struct EigenResult {
  std::vector<double> eigenvalues;  // ascending
  Grid grid;
  std::vector<double> est_error;  // |lambda(2n) - lambda(n)| / 3
};

/// k lowest eigenvalues E by Sturm-sequence bisection. Throws
/// Errc::invalid_parameter when k > grid_points / 10.
EigenResult solve_radial(const RadialProblem& problem, int k);

/// Lowest k values of lambda(lambda + 3) for the YCM theta equation.
EigenResult solve_angular_theta(HalfInt L, HalfInt J, int k, int grid_points = 4000);

/// Positive root of lambda(lambda + 3) = x.
double lambda_from_eigenvalue(double x);

/// 6 sqrt(hbar (2k + dim) / (mu omega)).
double harmonic_rmax(int k, double dim_eff, double omega, const Units& units);
/// 12 (k + root + 2)^2 hbar^2 / (mu e^2) with root(root + dim - 2) = Lambda.
double coulomb_rmax(int k, double dim_eff, double angular_coeff, double e2, const Units& units);

/// Grid size for a Coulomb problem: spacing 0.02 q0^2 Bohr radii, q0 being the
/// principal quantity of the lowest level (its size scales as q0^2). At least 4000.
int coulomb_grid_points(const RadialProblem& problem, double e2);

/// Discrete eigenvector (reduced function chi on the problem grid) for an
/// eigenvalue returned by solve_radial, by inverse iteration.
std::vector<double> eigenvector(const RadialProblem& problem, double eigenvalue);
/// The grid solve_radial uses for `problem`.
Grid problem_grid(const RadialProblem& problem);

// ---------------------------------------------------------------------------
// ODE residuals

/// f'' + p(x) f' + q(x) f = 0.
struct LinearOde {
  std::string id;
  std::function<double(double)> p;
  std::function<double(double)> q;
};

enum class OdeId { oscillator_radial, coulomb_radial, anyon, dyon2_radial, dyon3_radial, ycm_theta, ycm_radial };

std::string to_string(OdeId id);

/// Radial oscillator equation in D dimensions with global momentum L.
LinearOde ode_oscillator_radial(double D, double L, double omega, double energy, const Units& units);
/// Radial Coulomb equation in d dimensions with momentum l.
LinearOde ode_coulomb_radial(double d, double l, double eps, double e2, const Units& units);
/// Coulomb anyon: Phi'' + (2 mu/hbar^2)(eps + alpha/|x| + hbar^2 nu(1-nu)/(2 mu x^2)) Phi = 0.
LinearOde ode_anyon(double nu, double eps, double alpha, const Units& units);
/// 2D dyon radial: R'' + R'/r - (m+s)^2/r^2 R + (2 mu/hbar^2)(eps + e^2/r) R = 0.
LinearOde ode_dyon2_radial(int m, HalfInt s, double eps, double e2, const Units& units);
/// 3D dyon radial with the Goldhaber term.
LinearOde ode_dyon3_radial(HalfInt j, HalfInt s, double eps, double e2, const Units& units);
/// YCM theta equation.
LinearOde ode_ycm_theta(HalfInt J, HalfInt L, double lambda);
/// YCM radial equation.
LinearOde ode_ycm_radial(double lambda, double eps, double e2, const Units& units);
/// Reduced Schroedinger form chi'' + (2 mu/hbar^2)(E - V - hbar^2 Lambda_eff / (2 mu u^2)) chi = 0.
LinearOde ode_reduced(const RadialProblem& problem, double energy);

/// max |f'' + p f' + q f| / max(|f''| + |p f'| + |q f|) over the samples.
double analytic_residual(const LinearOde& ode, const std::vector<double>& xs, const std::vector<RadialJet>& jets);

struct FdResidual {
  double residual = 0.0;         // on the given grid
  double refined_residual = 0.0; // on the grid with h / 2 (NaN when not computed)
  double ratio = 0.0;            // residual / refined_residual; about 4 for O(h^2)
};

/// Centered-difference residual of samples on `grid`, excluding two points at
/// each end. Throws Errc::invalid_parameter with fewer than 50 interior points.
double fd_residual(const LinearOde& ode, const std::vector<double>& samples, const Grid& grid);

/// fd_residual of f sampled on `grid` and on the grid refined by 2.
FdResidual fd_residual_refined(const LinearOde& ode, const std::function<double(double)>& f, const Grid& grid);

}  // namespace dyonosc::oracle
