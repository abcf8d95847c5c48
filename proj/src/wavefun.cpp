#include "dyonosc/wavefun.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "dyonosc/error.hpp"
#include "dyonosc/specfun.hpp"

namespace dyonosc {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

void check_nonneg_n(int n) { require(n >= 0, Errc::invalid_quantum_numbers, "radial number n must be >= 0"); }

void check_projection(HalfInt j, HalfInt m, const char* name) {
  require(j.twice() >= 0, Errc::invalid_quantum_numbers, "j must be >= 0");
  require(m.abs() <= j && (j - m).is_integer(), Errc::invalid_quantum_numbers,
          std::string(name) + " must satisfy |" + name + "| <= j with j - " + name + " integral");
}

double positive(double x, const char* what) {
  require(std::isfinite(x) && x > 0, Errc::domain_error, std::string(what) + " must be positive");
  return x;
}

// Beyond this the factor y^(p+n) e^{-y/2} underflows.
bool underflows(int n, double p, double y) { return !std::isfinite(y) || (y > 50.0 && (p + n) * std::log(y) - 0.5 * y < -745.0); }

// Jet in y of y^p e^{-y/2} F(-n, c, y), y > 0.
RadialJet kummer_profile(int n, double p, double c, double y) {
  if (underflows(n, p, y)) return {};
  const double f = kummer_terminating(n, c, y);
  const double f1 = kummer_terminating_derivative(n, c, y, 1);
  const double f2 = kummer_terminating_derivative(n, c, y, 2);
  const double ly = std::log(y);
  const double t0 = std::exp(p * ly - 0.5 * y);
  const double t1 = p == 0 ? 0.0 : p * std::exp((p - 1) * ly - 0.5 * y);
  const double t2 = (p == 0 || p == 1) ? 0.0 : p * (p - 1) * std::exp((p - 2) * ly - 0.5 * y);
  return {t0 * f, (t1 - 0.5 * t0) * f + t0 * f1,
          (t2 - t1 + 0.25 * t0) * f + 2.0 * (t1 - 0.5 * t0) * f1 + t0 * f2};
}

// g(y) with y = kappa x, as a jet in x, times `scale`.
RadialJet linear_chain(RadialJet g, double kappa, double scale) {
  return {scale * g.value, scale * kappa * g.d1, scale * kappa * kappa * g.d2};
}

// g(y) with y = a u^2, as a jet in u, times `scale`.
RadialJet quadratic_chain(RadialJet g, double a, double u, double scale) {
  if (g.value == 0.0 && g.d1 == 0.0 && g.d2 == 0.0) return {};
  return {scale * g.value, scale * 2.0 * a * u * g.d1, scale * (2.0 * a * g.d1 + 4.0 * a * a * u * u * g.d2)};
}

double kummer_value(int n, double p, double c, double y) {
  if (y == 0.0) return p == 0 ? 1.0 : 0.0;
  if (underflows(n, p, y)) return 0.0;
  return std::exp(p * std::log(y) - 0.5 * y) * kummer_terminating(n, c, y);
}

// ---- closed-form scales

double anyon_kappa(int n, double nu, double alpha, const Units& u) {
  return 2.0 * u.mu * alpha / (u.hbar * u.hbar * (n + nu));
}

double anyon_log_constant(int n, double nu, double alpha, const Units& u) {
  return 0.5 * std::log(u.mu * alpha) - std::log(u.hbar) - std::log(n + nu) - log_gamma(2.0 * nu) +
         0.5 * (log_gamma(n + 2.0 * nu) - log_factorial(n));
}

void check_anyon(int n, double nu, double alpha, const Units& units) {
  units.validate();
  check_nonneg_n(n);
  require(std::isfinite(nu) && nu > 0, Errc::invalid_parameter, "anyon parameter nu must be positive");
  positive(alpha, "coupling alpha");
}

double dyon2_kappa(int n, int m, HalfInt s, double e2, const Units& u) {
  const double p = std::abs(m + s.value());
  return 2.0 * u.mu * e2 / (u.hbar * u.hbar * (n + p + 0.5));
}

void check_dyon2(int n, int m, HalfInt s, double e2, const Units& units) {
  units.validate();
  check_nonneg_n(n);
  require(s.twice() == 0 || s.twice() == 1, Errc::invalid_quantum_numbers, "2D dyon needs s in {0, 1/2}");
  (void)m;
  positive(e2, "coupling e^2");
}

double dyon3_kappa(int n, HalfInt j, double e2, const Units& u) {
  return 2.0 * u.mu * e2 / (u.hbar * u.hbar * (n + j.value() + 1.0));
}

double osc_a(double omega, const Units& u) { return u.mu * positive(omega, "omega") / u.hbar; }

double ycm_k(int n_r, HalfInt lambda, double e2, const Units& u) {
  return u.mu * e2 / (u.hbar * u.hbar * (n_r + lambda.value() + 2.0));
}

// int_0^pi d^j_{ms}(beta)^2 sin(beta) d beta = 2 / (2j+1).
double wigner_norm(HalfInt j) { return 2.0 / (j.twice() + 1.0); }

// ---- cache of dimensionless moments

class MomentCache {
 public:
  double get(int n, double c, double a) {
    const auto key = std::make_tuple(n, c, a);
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    const double v = compute(n, c, a);
    std::unique_lock lock(mutex_);
    return table_.emplace(key, v).first->second;
  }

 private:
  static double compute(int n, double c, double a) {
    std::vector<long double> t(n + 1);
    t[0] = 1;
    for (int k = 0; k < n; ++k) t[k + 1] = t[k] * (k - n) / ((c + k) * (k + 1));
    long double sum = 0;
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) {
        sum += t[k] * t[l] * std::exp(static_cast<long double>(std::lgamma(a + k + l + 1.0)));
      }
    }
    return static_cast<double>(sum);
  }

  std::shared_mutex mutex_;
  std::map<std::tuple<int, double, double>, double> table_;
};

MomentCache& moment_cache() {
  static MomentCache cache;
  return cache;
}

// ---- quadrature helpers

constexpr double kQuadTol = 1e-12;
constexpr double kAcceptError = 1e-9;

// r^power * density, zero wherever the density underflows.
double weighted(double r, int power, double density) {
  return density == 0.0 ? 0.0 : std::pow(r, power) * density;
}

NormalizationResult half_line(const std::function<double(double)>& f) {
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0;
  double l1 = 0;
  const double v = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), kQuadTol, &err, &l1);
  return {v, err};
}

NormalizationResult polar_angle(const std::function<double(double)>& f) {
  double err = 0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, kPi, 15, kQuadTol, &err);
  return {v, err};
}

NormalizationResult product(NormalizationResult a, NormalizationResult b, double scale) {
  return {scale * a.value * b.value,
          std::abs(scale) * (std::abs(a.value) * b.error_estimate + std::abs(b.value) * a.error_estimate)};
}

NormalizationResult accept(NormalizationResult r) {
  if (!(std::isfinite(r.value) && r.error_estimate <= kAcceptError * std::max(1.0, std::abs(r.value)))) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "quadrature did not converge: value %.17g, error estimate %.3g", r.value,
                  r.error_estimate);
    throw Error(Errc::not_converged, buf);
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

double osc1_wavefn(int N, double omega, const Units& units, double u) {
  units.validate();
  require(N >= 0, Errc::invalid_quantum_numbers, "oscillator level N must be >= 0");
  const double a = osc_a(omega, units);
  const double z = std::sqrt(a) * u;
  const double log_c = 0.25 * std::log(a / kPi) - 0.5 * (N * std::log(2.0) + log_factorial(N));
  if (z * z > 100.0 && N * std::log(2.0 * std::abs(z)) + log_c - 0.5 * z * z < -745.0) return 0.0;
  return std::exp(log_c - 0.5 * z * z) * hermite(N, z);
}

std::complex<double> anyon_wavefn(int n, double nu, double alpha, const Units& units, double x,
                                  AnyonExtension ext) {
  check_anyon(n, nu, alpha, units);
  require(std::isfinite(x), Errc::domain_error, "x must be finite");
  if (ext == AnyonExtension::half_line && x < 0) return 0.0;
  const double y = anyon_kappa(n, nu, alpha, units) * std::abs(x);
  double v = std::exp(anyon_log_constant(n, nu, alpha, units)) * kummer_value(n, nu, 2.0 * nu, y);
  if (ext != AnyonExtension::half_line) v /= std::numbers::sqrt2;
  if (ext == AnyonExtension::odd && x < 0) v = -v;
  return v;
}

RadialJet anyon_jet(int n, double nu, double alpha, const Units& units, double x) {
  check_anyon(n, nu, alpha, units);
  require(x > 0, Errc::domain_error, "anyon jet needs x > 0");
  const double kappa = anyon_kappa(n, nu, alpha, units);
  return linear_chain(kummer_profile(n, nu, 2.0 * nu, kappa * x), kappa,
                      std::exp(anyon_log_constant(n, nu, alpha, units)));
}

double anyon_c_squared(int n, double nu, double omega, const Units& units) {
  units.validate();
  return 2.0 * (n + nu) * units.hbar / (units.mu * positive(omega, "omega"));
}

double oscillator_second_moment(int N, double omega, const Units& units) {
  auto f = [&](double u) {
    const double psi = osc1_wavefn(N, omega, units, u);
    return psi == 0.0 ? 0.0 : u * u * psi * psi;
  };
  // Even integrand: twice the half line.
  const auto r = accept(half_line(f));
  return 2.0 * r.value;
}

// ---------------------------------------------------------------------------

std::complex<double> osc2_wavefn(int n, int M, double omega, const Units& units, double u, double varphi) {
  units.validate();
  check_nonneg_n(n);
  const double a = osc_a(omega, units);
  const int am = std::abs(M);
  const double norm = std::sqrt(a / (kPi * moment_cache().get(n, am + 1.0, am)));
  const double radial = norm * kummer_value(n, 0.5 * am, am + 1.0, a * u * u);
  return std::polar(radial, M * varphi);
}

RadialJet osc2_jet(int n, int M, double omega, const Units& units, double u) {
  units.validate();
  check_nonneg_n(n);
  require(u > 0, Errc::domain_error, "radial jet needs u > 0");
  const double a = osc_a(omega, units);
  const int am = std::abs(M);
  const double norm = std::sqrt(a / (kPi * moment_cache().get(n, am + 1.0, am)));
  return quadratic_chain(kummer_profile(n, 0.5 * am, am + 1.0, a * u * u), a, u, norm);
}

namespace {
double dyon2_norm(int n, int m, HalfInt s, double e2, const Units& units) {
  const double p = std::abs(m + s.value());
  const double kappa = dyon2_kappa(n, m, s, e2, units);
  return kappa / std::sqrt(2.0 * kPi * moment_cache().get(n, 2 * p + 1, 2 * p + 1));
}
}  // namespace

std::complex<double> dyon2_wavefn(int n, int m, HalfInt s, double e2, const Units& units, double r, double phi) {
  check_dyon2(n, m, s, e2, units);
  require(r >= 0, Errc::domain_error, "r must be >= 0");
  const double p = std::abs(m + s.value());
  const double rho = dyon2_kappa(n, m, s, e2, units) * r;
  return std::polar(dyon2_norm(n, m, s, e2, units) * kummer_value(n, p, 2 * p + 1, rho), m * phi);
}

std::complex<double> dyon2_unreduced(int n, int m, HalfInt s, double e2, const Units& units, double r,
                                     double phi) {
  return std::polar(1.0, s.value() * phi) * dyon2_wavefn(n, m, s, e2, units, r, phi);
}

RadialJet dyon2_jet(int n, int m, HalfInt s, double e2, const Units& units, double r) {
  check_dyon2(n, m, s, e2, units);
  require(r > 0, Errc::domain_error, "radial jet needs r > 0");
  const double p = std::abs(m + s.value());
  const double kappa = dyon2_kappa(n, m, s, e2, units);
  return linear_chain(kummer_profile(n, p, 2 * p + 1, kappa * r), kappa, dyon2_norm(n, m, s, e2, units));
}

// ---------------------------------------------------------------------------

namespace {
double osc4_norm(int n, HalfInt j, double omega, const Units& units) {
  const double a2 = osc_a(omega, units);
  const double jj = j.value();
  // (1/8) sin(beta) d alpha d beta d gamma u^3 du; u^3 du = rho d rho / (2 a^4).
  const double angular = 0.125 * 4.0 * kPi * 2.0 * kPi * wigner_norm(j);
  const double radial = moment_cache().get(n, 2 * jj + 2, 2 * jj + 1) / (2.0 * a2 * a2);
  return 1.0 / std::sqrt(angular * radial);
}

double dyon3_norm(int n, HalfInt j, double e2, const Units& units) {
  const double kappa = dyon3_kappa(n, j, e2, units);
  const double jj = j.value();
  const double angular = 2.0 * kPi * wigner_norm(j);
  const double radial = moment_cache().get(n, 2 * jj + 2, 2 * jj + 2) / (kappa * kappa * kappa);
  return 1.0 / std::sqrt(angular * radial);
}

void check_osc4(int n, HalfInt j, HalfInt m, HalfInt s) {
  check_nonneg_n(n);
  check_projection(j, m, "m");
  check_projection(j, s, "s");
}
}  // namespace

std::complex<double> osc4_wavefn(int n, HalfInt j, HalfInt m, HalfInt s, double omega, const Units& units,
                                 double u, double alpha, double beta, double gamma) {
  units.validate();
  check_osc4(n, j, m, s);
  const double a2 = osc_a(omega, units);
  const double jj = j.value();
  const double radial = osc4_norm(n, j, omega, units) * kummer_value(n, jj, 2 * jj + 2, a2 * u * u);
  return std::polar(radial * wigner_small_d(j, m, s, beta), m.value() * alpha + s.value() * gamma);
}

RadialJet osc4_jet(int n, HalfInt j, double omega, const Units& units, double u) {
  units.validate();
  check_nonneg_n(n);
  require(j.twice() >= 0, Errc::invalid_quantum_numbers, "j must be >= 0");
  require(u > 0, Errc::domain_error, "radial jet needs u > 0");
  const double a2 = osc_a(omega, units);
  const double jj = j.value();
  return quadratic_chain(kummer_profile(n, jj, 2 * jj + 2, a2 * u * u), a2, u, osc4_norm(n, j, omega, units));
}

std::complex<double> dyon3_wavefn(int n, HalfInt j, HalfInt m, HalfInt s, double e2, const Units& units,
                                  double r, double alpha, double beta) {
  units.validate();
  check_osc4(n, j, m, s);
  positive(e2, "coupling e^2");
  require(r >= 0, Errc::domain_error, "r must be >= 0");
  const double jj = j.value();
  const double rho = dyon3_kappa(n, j, e2, units) * r;
  const double radial = dyon3_norm(n, j, e2, units) * kummer_value(n, jj, 2 * jj + 2, rho);
  return std::polar(radial * wigner_small_d(j, m, s, beta), (m - s).value() * alpha);
}

RadialJet dyon3_jet(int n, HalfInt j, double e2, const Units& units, double r) {
  units.validate();
  check_nonneg_n(n);
  require(j.twice() >= 0, Errc::invalid_quantum_numbers, "j must be >= 0");
  positive(e2, "coupling e^2");
  require(r > 0, Errc::domain_error, "radial jet needs r > 0");
  const double kappa = dyon3_kappa(n, j, e2, units);
  const double jj = j.value();
  return linear_chain(kummer_profile(n, jj, 2 * jj + 2, kappa * r), kappa, dyon3_norm(n, j, e2, units));
}

// ---------------------------------------------------------------------------

namespace {
void check_ycm_angular(int n_theta, HalfInt J, HalfInt L) {
  require(n_theta >= 0, Errc::invalid_quantum_numbers, "n_theta must be >= 0");
  require(J.twice() >= 0 && L.twice() >= 0, Errc::invalid_quantum_numbers, "J and L must be >= 0");
}
}  // namespace

double ycm_angular_Z(int n_theta, HalfInt J, HalfInt L, double theta) {
  return ycm_angular_jet(n_theta, J, L, theta).value;
}

RadialJet ycm_angular_jet(int n_theta, HalfInt J, HalfInt L, double theta) {
  check_ycm_angular(n_theta, J, L);
  require(theta >= 0 && theta <= kPi, Errc::domain_error, "theta must lie in [0, pi]");
  const double jv = J.value();
  const double lv = L.value();
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  const double y = 0.5 * (1 - c);
  const double b = n_theta + 2 * jv + 2 * lv + 3;
  const double cc = 2 * lv + 2;

  const double w0 = gauss2f1_terminating(n_theta, b, cc, y);
  const double wy1 = gauss2f1_terminating_derivative(n_theta, b, cc, y, 1);
  const double wy2 = gauss2f1_terminating_derivative(n_theta, b, cc, y, 2);
  const double w1 = 0.5 * sn * wy1;
  const double w2 = 0.25 * sn * sn * wy2 + 0.5 * c * wy1;

  // A = (1-c)^L, B = (1+c)^J; derivatives in theta.
  const double om = 1 - c;
  const double op = 1 + c;
  const double a0 = std::pow(om, lv);
  const double a1 = lv == 0 ? 0.0 : lv * std::pow(om, lv - 1) * sn;
  const double a2 = lv == 0 ? 0.0
                            : (lv == 1 ? 0.0 : lv * (lv - 1) * std::pow(om, lv - 2) * sn * sn) +
                                  lv * std::pow(om, lv - 1) * c;
  const double b0 = std::pow(op, jv);
  const double b1 = jv == 0 ? 0.0 : -jv * std::pow(op, jv - 1) * sn;
  const double b2 = jv == 0 ? 0.0
                            : (jv == 1 ? 0.0 : jv * (jv - 1) * std::pow(op, jv - 2) * sn * sn) -
                                  jv * std::pow(op, jv - 1) * c;
  RadialJet jet;
  jet.value = a0 * b0 * w0;
  jet.d1 = a1 * b0 * w0 + a0 * b1 * w0 + a0 * b0 * w1;
  jet.d2 = a2 * b0 * w0 + a0 * b2 * w0 + a0 * b0 * w2 + 2.0 * (a1 * b1 * w0 + a1 * b0 * w1 + a0 * b1 * w1);
  return jet;
}

double ycm_radial_R(int n_r, HalfInt lambda, double e2, const Units& units, double r) {
  units.validate();
  require(n_r >= 0 && lambda.twice() >= 0, Errc::invalid_quantum_numbers, "need n_r >= 0 and lambda >= 0");
  positive(e2, "coupling e^2");
  require(r >= 0, Errc::domain_error, "r must be >= 0");
  const double k = ycm_k(n_r, lambda, e2, units);
  const double lv = lambda.value();
  const double rl = (r == 0.0) ? (lv == 0 ? 1.0 : 0.0) : std::pow(r, lv);
  return rl * std::exp(-k * r) * kummer_terminating(n_r, 2 * lv + 4, 2 * k * r);
}

RadialJet ycm_radial_jet(int n_r, HalfInt lambda, double e2, const Units& units, double r) {
  units.validate();
  require(n_r >= 0 && lambda.twice() >= 0, Errc::invalid_quantum_numbers, "need n_r >= 0 and lambda >= 0");
  positive(e2, "coupling e^2");
  require(r > 0, Errc::domain_error, "radial jet needs r > 0");
  const double k = ycm_k(n_r, lambda, e2, units);
  const double lv = lambda.value();
  // r^lambda = (z / 2k)^lambda with z = 2 k r.
  return linear_chain(kummer_profile(n_r, lv, 2 * lv + 4, 2 * k * r), 2 * k, std::pow(2 * k, -lv));
}

// ---------------------------------------------------------------------------

double kummer_moment(int n, double c, double a) {
  require(n >= 0, Errc::invalid_parameter, "negative degree");
  require(a > -1, Errc::invalid_parameter, "moment exponent must exceed -1");
  require(!(c <= 0 && c == std::floor(c)), Errc::invalid_parameter, "c must not be a nonpositive integer");
  return moment_cache().get(n, c, a);
}

NormalizationResult normalization(const SystemId& system, const QuantumNumbers& q, const PhysicalParams& params) {
  validate(system, q);
  const Units& u = params.units;
  return std::visit(
      overloaded{
          [&](const sys::Anyon1& a) -> NormalizationResult {
            const int n = std::get<qn::Anyon>(q).n;
            const double alpha = params.coupling();
            auto f = [&](double x) { return std::norm(anyon_wavefn(n, a.nu, alpha, u, x)); };
            auto g = [&](double x) { return f(-x); };
            const auto right = half_line(f);
            const auto left = half_line(g);
            return accept({right.value + left.value, right.error_estimate + left.error_estimate});
          },
          [&](const sys::Osc& o) -> NormalizationResult {
            const double omega = params.omega();
            if (o.dim == 2) {
              const auto& s = std::get<qn::Osc2>(q);
              auto f = [&](double r) { return weighted(r, 1, std::norm(osc2_wavefn(s.n, s.M, omega, u, r, 0.0))); };
              return accept(product(half_line(f), {1.0, 0.0}, 2.0 * kPi));
            }
            if (o.dim == 4) {
              const auto& s = std::get<qn::Osc4>(q);
              auto rad = [&](double r) {
                const double v = osc4_jet(s.n, s.j, omega, u, r).value;
                return weighted(r, 3, v * v);
              };
              auto ang = [&](double b) {
                const double d = wigner_small_d(s.j, s.m, s.s, b);
                return d * d * std::sin(b);
              };
              return accept(product(half_line(rad), polar_angle(ang), 0.125 * 4.0 * kPi * 2.0 * kPi));
            }
            throw Error(Errc::invalid_parameter, "normalization is available for osc2 and osc4");
          },
          [&](const sys::Dyon2& d) -> NormalizationResult {
            const auto& s = std::get<qn::Dyon2>(q);
            const double e2 = params.coupling();
            auto f = [&](double r) { return weighted(r, 1, std::norm(dyon2_wavefn(s.n, s.m, d.s, e2, u, r, 0.0))); };
            return accept(product(half_line(f), {1.0, 0.0}, 2.0 * kPi));
          },
          [&](const sys::Dyon3&) -> NormalizationResult {
            const auto& s = std::get<qn::Dyon3>(q);
            const double e2 = params.coupling();
            auto rad = [&](double r) {
              const double v = dyon3_jet(s.n, s.j, e2, u, r).value;
              return weighted(r, 2, v * v);
            };
            auto ang = [&](double b) {
              const double d = wigner_small_d(s.j, s.m, s.s, b);
              return d * d * std::sin(b);
            };
            return accept(product(half_line(rad), polar_angle(ang), 2.0 * kPi));
          },
          [&](const sys::Ycm5&) -> NormalizationResult {
            throw Error(Errc::invalid_parameter, "normalization is not assembled for ycm5");
          },
      },
      system);
}

}  // namespace dyonosc
