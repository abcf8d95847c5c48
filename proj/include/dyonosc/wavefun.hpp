#pragma once

#include <complex>

#include "dyonosc/halfint.hpp"
#include "dyonosc/spectra.hpp"
#include "dyonosc/units.hpp"

namespace dyonosc {

/// Value and first two derivatives of a one-variable factor.
struct RadialJet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// How the anyon state, built on x >= 0, is continued to x < 0.
/// even/odd carry a 1/sqrt(2) so that the full line integrates to one;
/// half_line keeps the closed-form constant and vanishes for x < 0.
enum class AnyonExtension { even, odd, half_line };

// ---------------------------------------------------------------------------
// 1D: oscillator and Coulomb anyon

/// Normalized 1D oscillator eigenfunction Psi_N(u).
double osc1_wavefn(int N, double omega, const Units& units, double u);

/// Phi_n^(nu)(x) = sqrt(mu alpha)/hbar / (n+nu) / Gamma(2nu) sqrt(Gamma(n+2nu)/n!)
///                 y^nu e^{-y/2} F(-n, 2nu, y),  y = 2 mu alpha |x| / (hbar^2 (n+nu)).
std::complex<double> anyon_wavefn(int n, double nu, double alpha, const Units& units, double x,
                                  AnyonExtension ext = AnyonExtension::even);

/// x-derivatives of the x > 0 profile (half_line normalization).
RadialJet anyon_jet(int n, double nu, double alpha, const Units& units, double x);

/// Closed-form |C|^2 = 2(n+nu) hbar / (mu omega).
double anyon_c_squared(int n, double nu, double omega, const Units& units);

/// int u^2 |Psi_N(u)|^2 du over the real line, by quadrature.
double oscillator_second_moment(int N, double omega, const Units& units);

// ---------------------------------------------------------------------------
// 2D: cyclic oscillator and charge-dyon system

/// Normalized cyclic-oscillator state Psi_{n,M}(u, varphi) with e^{-mu omega u^2 / (2 hbar)}.
std::complex<double> osc2_wavefn(int n, int M, double omega, const Units& units, double u, double varphi);
RadialJet osc2_jet(int n, int M, double omega, const Units& units, double u);

/// Reduced 2D dyon state
///   C rho^{|m+s|} e^{-rho/2} F(-n, 2|m+s|+1, rho) e^{i m phi},
///   rho = 2 mu e^2 r / (hbar^2 (n + |m+s| + 1/2)),
/// normalized by 2 pi int |.|^2 r dr = 1.
std::complex<double> dyon2_wavefn(int n, int m, HalfInt s, double e2, const Units& units, double r, double phi);
/// e^{i s phi} times the reduced state (double-valued for s = 1/2).
std::complex<double> dyon2_unreduced(int n, int m, HalfInt s, double e2, const Units& units, double r, double phi);
RadialJet dyon2_jet(int n, int m, HalfInt s, double e2, const Units& units, double r);

// ---------------------------------------------------------------------------
// 4D oscillator and 3D charge-dyon system

/// C (a u)^{2j} e^{-a^2 u^2/2} F(-n, 2j+2, a^2 u^2) d^j_{ms}(beta) e^{i m alpha} e^{i s gamma},
/// a = sqrt(mu omega / hbar), normalized over R^4.
std::complex<double> osc4_wavefn(int n, HalfInt j, HalfInt m, HalfInt s, double omega, const Units& units,
                                 double u, double alpha, double beta, double gamma);
RadialJet osc4_jet(int n, HalfInt j, double omega, const Units& units, double u);

/// C rho^j e^{-rho/2} F(-n, 2j+2, rho) d^j_{ms}(beta) e^{i(m-s) alpha},
/// rho = 2 mu e^2 r / (hbar^2 (n+j+1)), normalized over R^3.
std::complex<double> dyon3_wavefn(int n, HalfInt j, HalfInt m, HalfInt s, double e2, const Units& units,
                                  double r, double alpha, double beta);
RadialJet dyon3_jet(int n, HalfInt j, double e2, const Units& units, double r);

// ---------------------------------------------------------------------------
// 5D Yang-Coulomb monopole factors (unnormalized)

/// (1-cos t)^L (1+cos t)^J F(-n_theta, n_theta+2J+2L+3; 2L+2; (1-cos t)/2).
double ycm_angular_Z(int n_theta, HalfInt J, HalfInt L, double theta);
RadialJet ycm_angular_jet(int n_theta, HalfInt J, HalfInt L, double theta);

/// r^lambda e^{-k r} F(-n_r, 2 lambda + 4, 2 k r), k = mu e^2 / (hbar^2 (n_r + lambda + 2)).
double ycm_radial_R(int n_r, HalfInt lambda, double e2, const Units& units, double r);
RadialJet ycm_radial_jet(int n_r, HalfInt lambda, double e2, const Units& units, double r);

// ---------------------------------------------------------------------------

/// int_0^inf rho^a e^{-rho} F(-n, c, rho)^2 d rho, summed exactly from the
/// polynomial coefficients. Cached per (n, c, a); safe to call concurrently.
double kummer_moment(int n, double c, double a);

struct NormalizationResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Quadrature of |psi|^2 against the system's measure. Supported: anyon1 (even
/// extension), osc2, osc4, dyon2, dyon3. Throws Errc::not_converged when the
/// quadrature error estimate exceeds 1e-9.
NormalizationResult normalization(const SystemId& system, const QuantumNumbers& q, const PhysicalParams& params);

}  // namespace dyonosc
