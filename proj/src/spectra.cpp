#include "dyonosc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dyonosc/error.hpp"

namespace dyonosc {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad_qn(const std::string& what) { throw Error(Errc::invalid_quantum_numbers, what); }

bool positive_finite(double v) { return std::isfinite(v) && v > 0; }

bool valid_projection(HalfInt j, HalfInt m) { return m.abs() <= j && (j - m).is_integer(); }

void check_osc4(const qn::Osc4& q) {
  if (q.n < 0) bad_qn("n must be nonnegative");
  if (q.j < HalfInt{} || !valid_projection(q.j, q.m) || !valid_projection(q.j, q.s)) {
    bad_qn("need |m|,|s| <= j with j-m, j-s integral");
  }
}

void check_ycm(const qn::Ycm& q, std::optional<HalfInt> isospin) {
  if (q.n_r < 0 || q.n_theta < 0) bad_qn("n_r and n_theta must be nonnegative");
  if (q.J < HalfInt{} || q.L < HalfInt{} || q.T < HalfInt{}) bad_qn("J, L, T must be nonnegative");
  if (q.T < (q.J - q.L).abs() || q.T > q.J + q.L || !(q.J + q.L + q.T).is_integer()) {
    bad_qn("J, L, T violate the coupling triangle rule");
  }
  if (isospin && *isospin != q.T) bad_qn("isospin T differs from the system's T");
}

template <class Q>
const Q& expect(const QuantumNumbers& q, const char* system) {
  const Q* p = std::get_if<Q>(&q);
  if (!p) bad_qn(std::string("quantum numbers do not label a state of ") + system);
  return *p;
}

// Oscillator partner P in E = hbar omega P.
double osc_quantity(int dim, const QuantumNumbers& q) {
  switch (dim) {
    case 1: return expect<qn::Principal>(q, "osc1").N + 0.5;
    case 2: {
      const auto& o = expect<qn::Osc2>(q, "osc2");
      return 2.0 * o.n + std::abs(o.M) + 1.0;
    }
    case 4: {
      const auto& o = expect<qn::Osc4>(q, "osc4");
      return 2.0 * o.n + o.j.twice() + 2.0;
    }
    case 8:
      if (const auto* p = std::get_if<qn::Principal>(&q)) return p->N + 4.0;
      return expect<qn::Ycm>(q, "osc8").principal() + 4.0;
    default: throw Error(Errc::unsupported_dimension, "oscillator dimension " + std::to_string(dim));
  }
}

// Representative quantum numbers of level k (k = 0 is the ground level).
QuantumNumbers level_representative(const SystemId& system, int k) {
  return std::visit(
      overloaded{
          [k](const sys::Osc& s) -> QuantumNumbers {
            switch (s.dim) {
              case 1: return qn::Principal{k};
              case 2: return qn::Osc2{0, k};
              case 4: {
                const HalfInt j = HalfInt::from_twice(k);
                return qn::Osc4{0, j, j, j};
              }
              case 8: return qn::Principal{k};
              default: throw Error(Errc::unsupported_dimension, "oscillator dimension " + std::to_string(s.dim));
            }
          },
          [k](const sys::Anyon1&) -> QuantumNumbers { return qn::Anyon{k}; },
          [k](const sys::Dyon2& s) -> QuantumNumbers { return qn::Dyon2{0, k, s.s}; },
          [k](const sys::Dyon3& s) -> QuantumNumbers {
            const HalfInt j = s.s.abs() + HalfInt::integer(k);
            return qn::Dyon3{0, j, j, s.s};
          },
          [k](const sys::Ycm5& s) -> QuantumNumbers {
            HalfInt T = s.isospin ? *s.isospin : HalfInt::from_twice(k % 2);
            const int N = s.isospin ? T.twice() + 2 * k : k;
            const int kk = (N - T.twice()) / 2;  // N/2 - T
            const HalfInt L = HalfInt::from_twice(kk);
            return qn::Ycm{0, 0, T + L, L, T};
          },
      },
      system);
}

std::int64_t level_degeneracy(const SystemId& system, int k) {
  return std::visit(
      overloaded{
          [k](const sys::Osc& s) -> std::int64_t {
            switch (s.dim) {
              case 1: return 1;
              case 2: {
                std::int64_t count = 0;
                for (int n = 0; 2 * n <= k; ++n) count += (k - 2 * n == 0) ? 1 : 2;
                return count;
              }
              default: return osc_degeneracy(s.dim, k);
            }
          },
          [](const sys::Anyon1&) -> std::int64_t { return 1; },
          [k](const sys::Dyon2& s) -> std::int64_t {
            // n + |m+s| + 1/2 = k + 1/2 + s
            const int target_twice = 2 * k + s.s.twice();
            std::int64_t count = 0;
            for (int m = -k - 1; m <= k + 1; ++m) {
              const int twice_abs = std::abs(2 * m + s.s.twice());
              const int rest = target_twice - twice_abs;
              if (rest >= 0 && rest % 2 == 0) ++count;
            }
            return count;
          },
          [k](const sys::Dyon3& s) -> std::int64_t {
            std::int64_t count = 0;
            for (int i = 0; i <= k; ++i) {
              const HalfInt j = s.s.abs() + HalfInt::integer(i);
              count += j.twice() + 1;
            }
            return count;
          },
          [k](const sys::Ycm5& s) -> std::int64_t {
            if (s.isospin) return ycm_degeneracy(s.isospin->twice() + 2 * k, *s.isospin);
            return ycm_degeneracy_sum_check(k).first;
          },
      },
      system);
}

bool is_oscillator(const SystemId& system) { return std::holds_alternative<sys::Osc>(system); }

}  // namespace

// ---------------------------------------------------------------------------

void PhysicalParams::validate() const {
  units.validate();
  std::visit(overloaded{
                 [](const regime::Oscillator& r) {
                   if (!positive_finite(r.omega)) throw Error(Errc::domain_error, "omega must be positive");
                 },
                 [](const regime::Dyon& r) {
                   if (!positive_finite(r.energy)) throw Error(Errc::domain_error, "fixed energy E must be positive");
                 },
                 [](const regime::DyonCoupling& r) {
                   if (!positive_finite(r.e2)) throw Error(Errc::domain_error, "coupling e^2 must be positive");
                 },
                 [](const regime::Modified& r) {
                   if (!positive_finite(r.energy - r.c0)) throw Error(Errc::domain_error, "need E > C0");
                   if (!positive_finite(r.c2)) throw Error(Errc::domain_error, "need C2 > 0 for bound states");
                 },
             },
             regime);
}

double PhysicalParams::omega() const {
  validate();
  const auto* r = std::get_if<regime::Oscillator>(&regime);
  if (!r) throw Error(Errc::invalid_parameter, "oscillator energies need the oscillator regime (fixed omega)");
  return r->omega;
}

double PhysicalParams::coupling() const {
  validate();
  return std::visit(overloaded{
                        [](const regime::Oscillator&) -> double {
                          throw Error(Errc::invalid_parameter, "the oscillator regime has no Coulomb coupling");
                        },
                        [](const regime::Dyon& r) { return r.energy / 4.0; },
                        [](const regime::DyonCoupling& r) { return r.e2; },
                        [](const regime::Modified& r) { return (r.energy - r.c0) / 4.0; },
                    },
                    regime);
}

std::string system_name(const SystemId& system) {
  return std::visit(overloaded{
                        [](const sys::Osc& s) { return "osc" + std::to_string(s.dim); },
                        [](const sys::Anyon1&) { return std::string("anyon1"); },
                        [](const sys::Dyon2&) { return std::string("dyon2"); },
                        [](const sys::Dyon3&) { return std::string("dyon3"); },
                        [](const sys::Ycm5&) { return std::string("ycm5"); },
                    },
                    system);
}

std::string describe(const QuantumNumbers& q) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const qn::Principal& p) { os << "N=" << p.N; },
                 [&](const qn::Osc2& p) { os << "n=" << p.n << " M=" << p.M; },
                 [&](const qn::Osc4& p) {
                   os << "n=" << p.n << " j=" << p.j.str() << " m=" << p.m.str() << " s=" << p.s.str();
                 },
                 [&](const qn::Anyon& p) { os << "n=" << p.n; },
                 [&](const qn::Dyon2& p) { os << "n=" << p.n << " m=" << p.m << " s=" << p.s.str(); },
                 [&](const qn::Dyon3& p) {
                   os << "n=" << p.n << " j=" << p.j.str() << " m=" << p.m.str() << " s=" << p.s.str();
                 },
                 [&](const qn::Ycm& p) {
                   os << "n_r=" << p.n_r << " n_theta=" << p.n_theta << " J=" << p.J.str() << " L=" << p.L.str()
                      << " T=" << p.T.str() << " lambda=" << p.lambda().str();
                 },
             },
             q);
  return os.str();
}

void validate(const SystemId& system, const QuantumNumbers& q) {
  std::visit(overloaded{
                 [&](const sys::Osc& s) {
                   switch (s.dim) {
                     case 1:
                       if (expect<qn::Principal>(q, "osc1").N < 0) bad_qn("N must be nonnegative");
                       break;
                     case 2:
                       if (expect<qn::Osc2>(q, "osc2").n < 0) bad_qn("n must be nonnegative");
                       break;
                     case 4: check_osc4(expect<qn::Osc4>(q, "osc4")); break;
                     case 8:
                       if (const auto* p = std::get_if<qn::Principal>(&q)) {
                         if (p->N < 0) bad_qn("N must be nonnegative");
                       } else {
                         check_ycm(expect<qn::Ycm>(q, "osc8"), std::nullopt);
                       }
                       break;
                     default:
                       throw Error(Errc::unsupported_dimension, "oscillator dimension " + std::to_string(s.dim));
                   }
                 },
                 [&](const sys::Anyon1& s) {
                   if (!positive_finite(s.nu)) bad_qn("anyon parameter nu must be positive");
                   if (expect<qn::Anyon>(q, "anyon1").n < 0) bad_qn("n must be nonnegative");
                 },
                 [&](const sys::Dyon2& s) {
                   if (s.s != HalfInt{} && s.s != kHalf) bad_qn("dyon2 needs s = 0 or 1/2");
                   const auto& d = expect<qn::Dyon2>(q, "dyon2");
                   if (d.n < 0) bad_qn("n must be nonnegative");
                   if (d.s != s.s) bad_qn("s differs from the system's s");
                 },
                 [&](const sys::Dyon3& s) {
                   const auto& d = expect<qn::Dyon3>(q, "dyon3");
                   if (d.s != s.s) bad_qn("s differs from the system's s");
                   check_osc4(qn::Osc4{d.n, d.j, d.m, d.s});
                 },
                 [&](const sys::Ycm5& s) {
                   if (s.isospin && *s.isospin < HalfInt{}) bad_qn("isospin must be nonnegative");
                   check_ycm(expect<qn::Ycm>(q, "ycm5"), s.isospin);
                 },
             },
             system);
}

// ---------------------------------------------------------------------------

double DyonSide::extra_term(double r) const {
  double acc = 0;
  double power = r;
  for (double coeff : extra) {
    acc += coeff * power;
    power *= r;
  }
  return acc;
}

DyonSide to_dyon(const OscillatorSide& osc, const Units& units) {
  units.validate();
  if (osc.c2 && osc.omega) {
    throw Error(Errc::invalid_parameter, "give either omega or C2, not both");
  }
  DyonSide out;
  if (osc.energy) out.e2 = (*osc.energy - osc.c0) / 4.0;
  if (osc.omega) {
    if (!positive_finite(*osc.omega)) throw Error(Errc::domain_error, "omega must be positive");
    out.eps = -units.mu * *osc.omega * *osc.omega / 8.0;
  }
  if (osc.c2) out.eps = -*osc.c2 / 4.0;
  // W(r) = sum_{n>=2} C_{2n} r^n, so -W(r)/(4r) = sum -C_{2n}/4 r^{n-1}.
  out.extra.reserve(osc.higher.size());
  for (double c : osc.higher) out.extra.push_back(-c / 4.0);
  return out;
}

OscillatorSide to_oscillator(const DyonSide& dyon, const Units& units) {
  units.validate();
  OscillatorSide out;
  if (dyon.e2) out.energy = 4.0 * *dyon.e2;
  if (dyon.eps) {
    if (!(*dyon.eps < 0)) {
      throw Error(Errc::no_bound_state, "eps >= 0 has no oscillator partner (omega would be imaginary)");
    }
    out.omega = std::sqrt(-8.0 * *dyon.eps / units.mu);
  }
  if (!dyon.extra.empty()) {
    if (dyon.eps) {
      out.c2 = -4.0 * *dyon.eps;
      out.omega.reset();
    }
    for (double a : dyon.extra) out.higher.push_back(-4.0 * a);
  }
  return out;
}

// ---------------------------------------------------------------------------

double osc_energy(int dim, const QuantumNumbers& q, const PhysicalParams& params) {
  validate(sys::Osc{dim}, q);
  return params.units.hbar * params.omega() * osc_quantity(dim, q);
}

double principal_quantity(const SystemId& system, const QuantumNumbers& q) {
  validate(system, q);
  return std::visit(
      overloaded{
          [](const sys::Osc&) -> double {
            throw Error(Errc::invalid_parameter, "oscillators have no Coulomb principal quantity");
          },
          [&](const sys::Anyon1& s) { return std::get<qn::Anyon>(q).n + s.nu; },
          [&](const sys::Dyon2&) {
            const auto& d = std::get<qn::Dyon2>(q);
            return d.n + std::abs(d.m + d.s.value()) + 0.5;
          },
          [&](const sys::Dyon3&) {
            const auto& d = std::get<qn::Dyon3>(q);
            return d.n + d.j.value() + 1.0;
          },
          [&](const sys::Ycm5&) { return std::get<qn::Ycm>(q).principal() / 2.0 + 2.0; },
      },
      system);
}

double oscillator_quantity(const SystemId& system, const QuantumNumbers& q) {
  validate(system, q);
  return std::visit(overloaded{
                        [&](const sys::Osc& s) { return osc_quantity(s.dim, q); },
                        [&](const sys::Anyon1& s) { return 2.0 * std::get<qn::Anyon>(q).n + 2.0 * s.nu; },
                        [&](const sys::Dyon2&) {
                          const auto& d = std::get<qn::Dyon2>(q);
                          return osc_quantity(2, qn::Osc2{d.n, (HalfInt::integer(d.m) + d.s).twice()});
                        },
                        [&](const sys::Dyon3&) {
                          const auto& d = std::get<qn::Dyon3>(q);
                          return osc_quantity(4, qn::Osc4{d.n, d.j, d.m, d.s});
                        },
                        [&](const sys::Ycm5&) { return osc_quantity(8, q); },
                    },
                    system);
}

double dyon_energy(const SystemId& system, const QuantumNumbers& q, const PhysicalParams& params) {
  if (is_oscillator(system)) throw Error(Errc::invalid_parameter, "dyon_energy needs a Coulomb-side system");
  const double e2 = params.coupling();
  const double p = principal_quantity(system, q);
  const auto& u = params.units;
  return -u.mu * e2 * e2 / (2.0 * u.hbar * u.hbar * p * p);
}

double quantized_frequency(const SystemId& system, const QuantumNumbers& q, double energy, const Units& units) {
  units.validate();
  if (!positive_finite(energy)) throw Error(Errc::domain_error, "fixed energy E must be positive");
  return energy / (units.hbar * oscillator_quantity(system, q));
}

std::vector<FrequencyLine> quantized_frequencies(const SystemId& system, double energy, int max_levels,
                                                 const Units& units) {
  if (max_levels < 0) throw Error(Errc::invalid_parameter, "negative level count");
  std::vector<FrequencyLine> out;
  out.reserve(static_cast<std::size_t>(max_levels));
  for (int k = 0; k < max_levels; ++k) {
    QuantumNumbers q = level_representative(system, k);
    const double w = quantized_frequency(system, q, energy, units);
    out.push_back({std::move(q), w});
  }
  return out;
}

double duality_identity_residual(const SystemId& system, const QuantumNumbers& q, double energy,
                                 const Units& units) {
  const double omega = quantized_frequency(system, q, energy, units);
  const double via_frequency = -units.mu * omega * omega / 8.0;
  const double closed_form =
      dyon_energy(system, q, PhysicalParams{units, regime::DyonCoupling{energy / 4.0}});
  return via_frequency - closed_form;
}

// ---------------------------------------------------------------------------

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 result = 1;
  for (int i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
    if (result > static_cast<__int128>(INT64_MAX)) throw Error(Errc::domain_error, "binomial overflows int64");
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t osc_degeneracy(int dim, int N) {
  if (N < 0) bad_qn("N must be nonnegative");
  switch (dim) {
    case 4: {
      const __int128 n = N;
      return static_cast<std::int64_t>((n + 1) * (n + 2) * (n + 3) / 6);
    }
    case 8: return binomial(N + 7, 7);
    default:
      throw Error(Errc::unsupported_dimension,
                  "closed-form degeneracy is provided for D=4 and D=8 only");
  }
}

std::int64_t ycm_degeneracy(int N, HalfInt T) {
  if (N < 0 || T < HalfInt{} || T.twice() > N || (N - T.twice()) % 2 != 0) {
    bad_qn("g_N^T needs 0 <= T <= N/2 with N - 2T even (N=" + std::to_string(N) + ", T=" + T.str() + ")");
  }
  const __int128 t2 = T.twice();
  const __int128 k = (N - T.twice()) / 2;  // N/2 - T
  const __int128 num = (t2 + 1) * (t2 + 1) * (k + 1) * (k + 2) * ((k + 2) * (k + 3) + t2 * (N + 5));
  if (num % 12 != 0) throw Error(Errc::domain_error, "g_N^T is not integral");
  return static_cast<std::int64_t>(num / 12);
}

std::pair<std::int64_t, std::int64_t> ycm_degeneracy_sum_check(int N) {
  if (N < 0) bad_qn("N must be nonnegative");
  std::int64_t lhs = 0;
  for (int t2 = N % 2; t2 <= N; t2 += 2) lhs += ycm_degeneracy(N, HalfInt::from_twice(t2));
  return {lhs, binomial(N + 7, 7)};
}

std::vector<SpectrumLine> enumerate_spectrum(const SystemId& system, const PhysicalParams& params,
                                             int max_principal) {
  if (max_principal < 0) throw Error(Errc::invalid_parameter, "negative max_principal");
  params.validate();
  std::vector<SpectrumLine> out;
  out.reserve(static_cast<std::size_t>(max_principal) + 1);
  for (int k = 0; k <= max_principal; ++k) {
    QuantumNumbers q = level_representative(system, k);
    const double energy = is_oscillator(system) ? osc_energy(std::get<sys::Osc>(system).dim, q, params)
                                                : dyon_energy(system, q, params);
    out.push_back({std::move(q), energy, level_degeneracy(system, k)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SpectrumLine& a, const SpectrumLine& b) { return a.energy < b.energy; });
  return out;
}

}  // namespace dyonosc
