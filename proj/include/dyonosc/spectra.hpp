#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dyonosc/halfint.hpp"
#include "dyonosc/units.hpp"

namespace dyonosc {

// ---------------------------------------------------------------------------
// Parameters

namespace regime {
/// omega fixed, E quantized.
struct Oscillator { double omega = 1.0; };
/// E fixed, omega quantized; the Coulomb coupling is e^2 = E/4.
struct Dyon { double energy = 1.0; };
/// Coulomb coupling e^2 given directly.
struct DyonCoupling { double e2 = 1.0; };
/// Oscillator-like potential V(u^2) = C0 + C2 u^2 + sum_{n>=2} C_{2n} u^{2n}
/// at fixed E. `higher` holds C4, C6, ...
struct Modified {
  double c0 = 0.0;
  double c2 = 1.0;
  std::vector<double> higher;
  double energy = 1.0;
};
}  // namespace regime

using Regime = std::variant<regime::Oscillator, regime::Dyon, regime::DyonCoupling, regime::Modified>;

struct PhysicalParams {
  Units units;
  Regime regime = regime::Oscillator{};

  void validate() const;
  /// Oscillator frequency; only in the oscillator regime.
  double omega() const;
  /// Coulomb coupling e^2 of the dyon side: E/4, e2, or (E - C0)/4.
  double coupling() const;
};

// ---------------------------------------------------------------------------
// Systems and quantum numbers

namespace sys {
/// Isotropic oscillator in D in {1, 2, 4, 8} dimensions.
struct Osc { int dim = 4; };
/// 1D Coulomb anyon with Calogero parameter nu (nu = 1/4 or 3/4 for the dual of Osc(1)).
struct Anyon1 { double nu = 0.25; };
/// 2D charge-dyon system, s in {0, 1/2}.
struct Dyon2 { HalfInt s; };
/// 3D charge-dyon system with half-integer s.
struct Dyon3 { HalfInt s; };
/// 5D Yang-Coulomb monopole; without an isospin all T sectors are enumerated.
struct Ycm5 { std::optional<HalfInt> isospin; };
}  // namespace sys

using SystemId = std::variant<sys::Osc, sys::Anyon1, sys::Dyon2, sys::Dyon3, sys::Ycm5>;

/// Short stable name: osc1, osc2, osc4, osc8, anyon1, dyon2, dyon3, ycm5.
std::string system_name(const SystemId& system);

namespace qn {
/// Osc(1) and Osc(8) levels.
struct Principal { int N = 0; };
struct Osc2 { int n = 0; int M = 0; };
struct Osc4 { int n = 0; HalfInt j, m, s; };
struct Anyon { int n = 0; };
struct Dyon2 { int n = 0; int m = 0; HalfInt s; };
struct Dyon3 { int n = 0; HalfInt j, m, s; };
/// YCM (and Osc(8) internal) labels; lambda = n_theta + J + L, N = 2(n_r + lambda).
struct Ycm {
  int n_r = 0;
  int n_theta = 0;
  HalfInt J, L, T;

  HalfInt lambda() const { return HalfInt::integer(n_theta) + J + L; }
  int principal() const { return 2 * n_r + (J + L).twice() + 2 * n_theta; }
};
}  // namespace qn

using QuantumNumbers =
    std::variant<qn::Principal, qn::Osc2, qn::Osc4, qn::Anyon, qn::Dyon2, qn::Dyon3, qn::Ycm>;

/// Human-readable "name=value" list, e.g. "n=0 j=1/2 m=1/2 s=-1/2".
std::string describe(const QuantumNumbers& q);

/// Throws Errc::invalid_quantum_numbers when q does not label a state of `system`.
void validate(const SystemId& system, const QuantumNumbers& q);

struct SpectrumLine {
  QuantumNumbers qn;
  double energy = 0.0;
  std::int64_t degeneracy = 0;
};

struct FrequencyLine {
  QuantumNumbers qn;
  double omega = 0.0;
};

// ---------------------------------------------------------------------------
// Duality parameter maps

/// Parameters of the oscillator side. `c2`/`higher` describe a modified potential.
struct OscillatorSide {
  std::optional<double> energy;
  std::optional<double> omega;
  double c0 = 0.0;
  std::optional<double> c2;
  std::vector<double> higher;
};

/// Parameters of the dyon side. `extra[k]` is the coefficient of r^{k+1} in
/// the residual term -W(r)/(4r) that joins (eps + e^2/r).
struct DyonSide {
  std::optional<double> e2;
  std::optional<double> eps;
  std::vector<double> extra;

  double extra_term(double r) const;
};

/// e^2 = (E - C0)/4 and eps = -mu omega^2 / 8 (or -C2/4).
DyonSide to_dyon(const OscillatorSide& osc, const Units& units);
/// Inverse of to_dyon with C0 = 0. Throws Errc::no_bound_state for eps >= 0.
OscillatorSide to_oscillator(const DyonSide& dyon, const Units& units);

// ---------------------------------------------------------------------------
// Energies

/// E of Osc(D) in the oscillator regime.
double osc_energy(int dim, const QuantumNumbers& q, const PhysicalParams& params);

/// eps = -mu e^4 / (2 hbar^2 q^2) for the anyon, 2D/3D dyon and YCM.
double dyon_energy(const SystemId& system, const QuantumNumbers& q, const PhysicalParams& params);

/// The dimensionless q above: n+nu, n+|m+s|+1/2, n+j+1 or N/2+2.
double principal_quantity(const SystemId& system, const QuantumNumbers& q);

/// P in E = hbar omega P for the oscillator partner of (system, q).
double oscillator_quantity(const SystemId& system, const QuantumNumbers& q);

/// omega = E / (hbar P) at fixed E.
double quantized_frequency(const SystemId& system, const QuantumNumbers& q, double energy,
                           const Units& units);

/// One line per level, lowest first.
std::vector<FrequencyLine> quantized_frequencies(const SystemId& system, double energy,
                                                 int max_levels, const Units& units);

/// (-mu omega^2 / 8 with the quantized omega) - (closed-form Coulomb energy
/// with e^2 = E/4). Zero up to rounding.
double duality_identity_residual(const SystemId& system, const QuantumNumbers& q, double energy,
                                 const Units& units);

// ---------------------------------------------------------------------------
// Degeneracies (exact integers)

/// (N+1)(N+2)(N+3)/6 for D = 4, (N+7)!/(7! N!) for D = 8.
std::int64_t osc_degeneracy(int dim, int N);

/// g_N^T of the Yang-Coulomb monopole.
std::int64_t ycm_degeneracy(int N, HalfInt T);

/// (sum_T g_N^T, C(N+7, 7)).
std::pair<std::int64_t, std::int64_t> ycm_degeneracy_sum_check(int N);

std::int64_t binomial(int n, int k);

/// Levels 0..max_principal of `system`, sorted by energy.
std::vector<SpectrumLine> enumerate_spectrum(const SystemId& system, const PhysicalParams& params,
                                             int max_principal);

}  // namespace dyonosc
