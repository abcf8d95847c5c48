#include "dyonosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dyonosc/error.hpp"
#include "dyonosc/parallel.hpp"

namespace dyonosc::oracle {
namespace {

void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

// Symmetric tridiagonal matrix; off[i] couples rows i and i+1.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};

// Number of eigenvalues strictly below x (Sturm sequence count).
int count_below(const Tridiagonal& t, double x) {
  const double tiny = std::numeric_limits<double>::min() * 1e10;
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    q = t.diag[i] - x - (i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1] / q);
    if (q == 0.0) q = -tiny;
    if (q < 0) ++count;
  }
  return count;
}

// Eigenvalues with indices 0..k-1.
std::vector<double> lowest_eigenvalues(const Tridiagonal& t, int k) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = t.diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
  std::vector<double> out(k);
  parallel_for(static_cast<std::size_t>(k), [&](std::size_t idx) {
    double a = lo;
    double b = hi;
    int iter = 0;
    while (b - a > 2 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)) + 1e-300) {
      if (++iter > 300) throw Error(Errc::not_converged, "Sturm bisection did not converge");
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (count_below(t, mid) > static_cast<int>(idx)) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out[idx] = 0.5 * (a + b);
  });
  return out;
}

// Cell-centred grid u_i = (i + 1/2) h for the flux form, u_i = (i + 1) h
// otherwise; the Dirichlet node sits at r_max in both cases.
Grid make_grid(double r_max, int points, bool cell_centred) {
  Grid g;
  g.points = points;
  g.h = r_max / (points + (cell_centred ? 0.5 : 1.0));
  g.left = (cell_centred ? 0.5 : 1.0) * g.h;
  return g;
}

double weight(double dim_eff, double u) { return dim_eff == 1.0 ? 1.0 : std::pow(u, dim_eff - 1.0); }

// Either the flux form -(t / w)(w R')' + (t Lambda / u^2 + V) R with
// w = u^(dim-1), symmetrized by chi = sqrt(w) R, or the plain three-point
// stencil on chi with the shifted centrifugal term. The flux form is used
// when the shifted term is attractive (chi ~ u^a with a < 1), where the
// plain stencil with chi(0) = 0 converges poorly.
bool use_flux_form(const RadialProblem& p) {
  return p.neumann_left || (p.dim_eff > 1.0 && p.effective_angular() < 0.0);
}

Tridiagonal build(const RadialProblem& p, const Grid& g) {
  const double t = p.units.hbar * p.units.hbar / (2.0 * p.units.mu);
  const double h2 = g.h * g.h;
  const int n = g.points;
  Tridiagonal m;
  m.diag.resize(n);
  m.off.resize(n > 0 ? n - 1 : 0);
  if (!use_flux_form(p)) {
    const double lam = p.effective_angular();
    for (int i = 0; i < n; ++i) {
      const double u = g.x(i);
      m.diag[i] = 2.0 * t / h2 + t * lam / (u * u) + p.potential(u);
      if (i + 1 < n) m.off[i] = -t / h2;
    }
    return m;
  }
  for (int i = 0; i < n; ++i) {
    const double u = g.x(i);
    const double w = weight(p.dim_eff, u);
    const double w_right = weight(p.dim_eff, u + 0.5 * g.h);
    const double w_left = i > 0 ? weight(p.dim_eff, u - 0.5 * g.h) : 0.0;
    m.diag[i] = t * (w_left + w_right) / (w * h2) + t * p.angular_coeff / (u * u) + p.potential(u);
    if (i + 1 < n) m.off[i] = -t * w_right / (h2 * std::sqrt(w * weight(p.dim_eff, u + g.h)));
  }
  return m;
}

void check_count(int k, int points) {
  require(k >= 1, Errc::invalid_parameter, "need at least one eigenvalue");
  require(k <= points / 10, Errc::invalid_parameter,
          "k=" + std::to_string(k) + " exceeds grid_points/10 for " + std::to_string(points) + " points");
}

EigenResult richardson(const std::function<std::vector<double>(int)>& solve, const Grid& grid, int k) {
  EigenResult r;
  r.grid = grid;
  r.eigenvalues = solve(grid.points);
  const auto fine = solve(2 * grid.points + 1);
  r.est_error.resize(k);
  for (int i = 0; i < k; ++i) r.est_error[i] = std::abs(fine[i] - r.eigenvalues[i]) / 3.0;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

Potential Potential::harmonic(double omega, const Units& units) {
  return {Kind::harmonic, {{2.0, 0.5 * units.mu * omega * omega}}};
}

Potential Potential::coulomb(double e2) { return {Kind::coulomb, {{-1.0, -e2}}}; }

Potential Potential::coulomb_goldhaber(double e2, HalfInt s, const Units& units) {
  const double sv = s.value();
  return {Kind::coulomb_goldhaber,
          {{-1.0, -e2}, {-2.0, units.hbar * units.hbar * sv * sv / (2.0 * units.mu)}}};
}

Potential Potential::modified(double c0, double c2, const std::vector<double>& higher) {
  Potential p{Kind::modified, {{0.0, c0}, {2.0, c2}}};
  for (std::size_t i = 0; i < higher.size(); ++i) p.terms.emplace_back(2.0 * (i + 2), higher[i]);
  return p;
}

double Potential::operator()(double r) const {
  double v = 0;
  for (const auto& [power, coef] : terms) v += coef * std::pow(r, power);
  return v;
}

std::string to_string(Potential::Kind kind) {
  switch (kind) {
    case Potential::Kind::harmonic: return "harmonic";
    case Potential::Kind::coulomb: return "coulomb";
    case Potential::Kind::coulomb_goldhaber: return "coulomb+goldhaber";
    case Potential::Kind::modified: return "modified";
    case Potential::Kind::custom: return "custom";
  }
  return "custom";
}

void RadialProblem::validate() const {
  units.validate();
  require(std::isfinite(dim_eff) && dim_eff >= 1, Errc::invalid_parameter, "dim_eff must be >= 1");
  require(std::isfinite(angular_coeff), Errc::invalid_parameter, "angular coefficient must be finite");
  require(std::isfinite(r_max) && r_max > 0, Errc::invalid_parameter, "r_max must be positive");
  require(grid_points >= 100, Errc::invalid_parameter, "need at least 100 grid points");
  for (const auto& [power, coef] : potential.terms) {
    require(std::isfinite(power) && std::isfinite(coef), Errc::invalid_parameter, "potential terms must be finite");
  }
}

double RadialProblem::effective_angular() const {
  return angular_coeff + 0.25 * (dim_eff - 1.0) * (dim_eff - 3.0);
}

Grid problem_grid(const RadialProblem& problem) {
  problem.validate();
  return make_grid(problem.r_max, problem.grid_points, use_flux_form(problem));
}

EigenResult solve_radial(const RadialProblem& problem, int k) {
  problem.validate();
  check_count(k, problem.grid_points);
  auto solve = [&](int points) {
    return lowest_eigenvalues(build(problem, make_grid(problem.r_max, points, use_flux_form(problem))), k);
  };
  return richardson(solve, problem_grid(problem), k);
}

EigenResult solve_angular_theta(HalfInt L, HalfInt J, int k, int grid_points) {
  require(L.twice() >= 0 && J.twice() >= 0, Errc::invalid_quantum_numbers, "L and J must be >= 0");
  require(grid_points >= 100, Errc::invalid_parameter, "need at least 100 grid points");
  check_count(k, grid_points);
  const double l = L.value();
  const double j = J.value();
  auto solve = [&](int points) {
    Grid g;
    g.points = points;
    g.h = std::numbers::pi / (points + 1.0);
    g.left = g.h;
    Tridiagonal m;
    m.off.assign(points - 1, -1.0 / (g.h * g.h));
    m.diag.resize(points);
    for (int i = 0; i < points; ++i) {
      const double th = g.x(i);
      const double c = std::cos(th);
      const double cot = c / std::sin(th);
      m.diag[i] = 2.0 / (g.h * g.h) + 0.75 * cot * cot - 1.5 + 2.0 * l * (l + 1) / (1 - c) +
                  2.0 * j * (j + 1) / (1 + c);
    }
    return lowest_eigenvalues(m, k);
  };
  Grid g;
  g.points = grid_points;
  g.h = std::numbers::pi / (grid_points + 1.0);
  g.left = g.h;
  return richardson(solve, g, k);
}

double lambda_from_eigenvalue(double x) { return 0.5 * (-3.0 + std::sqrt(9.0 + 4.0 * x)); }

double harmonic_rmax(int k, double dim_eff, double omega, const Units& units) {
  return 6.0 * std::sqrt(units.hbar * (2.0 * k + dim_eff) / (units.mu * omega));
}

double coulomb_rmax(int k, double dim_eff, double angular_coeff, double e2, const Units& units) {
  const double b = dim_eff - 2.0;
  const double root = 0.5 * (-b + std::sqrt(std::max(0.0, b * b + 4.0 * angular_coeff)));
  const double w = k + root + 2.0;
  return 12.0 * w * w * units.hbar * units.hbar / (units.mu * e2);
}

int coulomb_grid_points(const RadialProblem& p, double e2) {
  const double bohr = p.units.hbar * p.units.hbar / (p.units.mu * e2);
  const double b = p.dim_eff - 2.0;
  const double root = 0.5 * (-b + std::sqrt(std::max(0.0, b * b + 4.0 * p.angular_coeff)));
  const double q0 = std::min(1.0, root + 0.5 * (p.dim_eff - 1.0));
  return std::max(4000, static_cast<int>(std::ceil(p.r_max / (0.02 * bohr * q0 * q0))));
}

std::vector<double> eigenvector(const RadialProblem& problem, double eigenvalue) {
  const Grid g = problem_grid(problem);
  const Tridiagonal m = build(problem, g);
  const int n = g.points;
  // Shift slightly off the eigenvalue so the system stays solvable.
  const double shift = eigenvalue + 1e-10 * std::max(1.0, std::abs(eigenvalue));
  std::vector<double> v(n, 1.0);
  std::vector<double> c(n), d(n);
  for (int it = 0; it < 4; ++it) {
    // Thomas algorithm for (M - shift) w = v.
    double beta = m.diag[0] - shift;
    c[0] = n > 1 ? m.off[0] / beta : 0.0;
    d[0] = v[0] / beta;
    for (int i = 1; i < n; ++i) {
      beta = m.diag[i] - shift - m.off[i - 1] * c[i - 1];
      c[i] = i + 1 < n ? m.off[i] / beta : 0.0;
      d[i] = (v[i] - m.off[i - 1] * d[i - 1]) / beta;
    }
    v[n - 1] = d[n - 1];
    for (int i = n - 2; i >= 0; --i) v[i] = d[i] - c[i] * v[i + 1];
    double norm = 0;
    for (double x : v) norm = std::max(norm, std::abs(x));
    for (double& x : v) x /= norm;
  }
  // Back from chi to R.
  const bool flux = use_flux_form(problem);
  for (int i = 0; i < n; ++i) {
    v[i] /= flux ? std::sqrt(weight(problem.dim_eff, g.x(i))) : std::pow(g.x(i), 0.5 * (problem.dim_eff - 1.0));
  }
  double norm = 0;
  for (double x : v) norm = std::max(norm, std::abs(x));
  for (double& x : v) x /= norm;
  return v;
}

// ---------------------------------------------------------------------------

std::string to_string(OdeId id) {
  switch (id) {
    case OdeId::oscillator_radial: return "oscillator-radial";
    case OdeId::coulomb_radial: return "coulomb-radial";
    case OdeId::anyon: return "anyon";
    case OdeId::dyon2_radial: return "dyon2-radial";
    case OdeId::dyon3_radial: return "dyon3-radial";
    case OdeId::ycm_theta: return "ycm-theta";
    case OdeId::ycm_radial: return "ycm-radial";
  }
  return "unknown";
}

LinearOde ode_oscillator_radial(double D, double L, double omega, double energy, const Units& units) {
  const double k = 2.0 * units.mu / (units.hbar * units.hbar);
  const double cent = L * (L + D - 2.0);
  const double w2 = 0.5 * units.mu * omega * omega;
  return {to_string(OdeId::oscillator_radial), [=](double u) { return (D - 1.0) / u; },
          [=](double u) { return -cent / (u * u) + k * (energy - w2 * u * u); }};
}

LinearOde ode_coulomb_radial(double d, double l, double eps, double e2, const Units& units) {
  const double k = 2.0 * units.mu / (units.hbar * units.hbar);
  const double cent = l * (l + d - 2.0);
  return {to_string(OdeId::coulomb_radial), [=](double r) { return (d - 1.0) / r; },
          [=](double r) { return -cent / (r * r) + k * (eps + e2 / r); }};
}

LinearOde ode_anyon(double nu, double eps, double alpha, const Units& units) {
  const double k = 2.0 * units.mu / (units.hbar * units.hbar);
  const double cs = nu * (1.0 - nu);
  return {to_string(OdeId::anyon), [](double) { return 0.0; },
          [=](double x) { return k * (eps + alpha / std::abs(x)) + cs / (x * x); }};
}

LinearOde ode_dyon2_radial(int m, HalfInt s, double eps, double e2, const Units& units) {
  const double k = 2.0 * units.mu / (units.hbar * units.hbar);
  const double ms = m + s.value();
  return {to_string(OdeId::dyon2_radial), [](double r) { return 1.0 / r; },
          [=](double r) { return -ms * ms / (r * r) + k * (eps + e2 / r); }};
}

LinearOde ode_dyon3_radial(HalfInt j, HalfInt s, double eps, double e2, const Units& units) {
  const double k = 2.0 * units.mu / (units.hbar * units.hbar);
  const double jv = j.value();
  const double sv = s.value();
  const double kinetic = jv * (jv + 1.0) - sv * sv;
  const double gold = units.hbar * units.hbar * sv * sv / (2.0 * units.mu);
  return {to_string(OdeId::dyon3_radial), [](double r) { return 2.0 / r; },
          [=](double r) { return -kinetic / (r * r) + k * (eps + e2 / r - gold / (r * r)); }};
}

LinearOde ode_ycm_theta(HalfInt J, HalfInt L, double lambda) {
  const double jv = J.value();
  const double lv = L.value();
  const double sep = lambda * (lambda + 3.0);
  return {to_string(OdeId::ycm_theta), [](double th) { return 3.0 * std::cos(th) / std::sin(th); },
          [=](double th) {
            const double c = std::cos(th);
            return -2.0 * lv * (lv + 1.0) / (1.0 - c) - 2.0 * jv * (jv + 1.0) / (1.0 + c) + sep;
          }};
}

LinearOde ode_ycm_radial(double lambda, double eps, double e2, const Units& units) {
  const double k = 2.0 * units.mu / (units.hbar * units.hbar);
  const double sep = lambda * (lambda + 3.0);
  return {to_string(OdeId::ycm_radial), [](double r) { return 4.0 / r; },
          [=](double r) { return -sep / (r * r) + k * (eps + e2 / r); }};
}

LinearOde ode_reduced(const RadialProblem& problem, double energy) {
  const double k = 2.0 * problem.units.mu / (problem.units.hbar * problem.units.hbar);
  const double lam = problem.effective_angular();
  const Potential v = problem.potential;
  return {"reduced", [](double) { return 0.0; },
          [=](double u) { return k * (energy - v(u)) - lam / (u * u); }};
}

double analytic_residual(const LinearOde& ode, const std::vector<double>& xs, const std::vector<RadialJet>& jets) {
  require(xs.size() == jets.size() && !xs.empty(), Errc::invalid_parameter, "need matching samples");
  double worst = 0;
  double scale = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double p = ode.p(xs[i]) * jets[i].d1;
    const double q = ode.q(xs[i]) * jets[i].value;
    worst = std::max(worst, std::abs(jets[i].d2 + p + q));
    scale = std::max(scale, std::abs(jets[i].d2) + std::abs(p) + std::abs(q));
  }
  return scale == 0 ? 0.0 : worst / scale;
}

double fd_residual(const LinearOde& ode, const std::vector<double>& f, const Grid& grid) {
  require(static_cast<int>(f.size()) == grid.points, Errc::invalid_parameter, "sample count differs from grid");
  require(grid.points - 4 >= 50, Errc::invalid_parameter, "grid too coarse: need 50 interior points");
  const double h = grid.h;
  double worst = 0;
  double scale = 0;
  for (int i = 2; i < grid.points - 2; ++i) {
    const double x = grid.x(i);
    const double d2 = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
    const double p = ode.p(x) * (f[i + 1] - f[i - 1]) / (2.0 * h);
    const double q = ode.q(x) * f[i];
    worst = std::max(worst, std::abs(d2 + p + q));
    scale = std::max(scale, std::abs(d2) + std::abs(p) + std::abs(q));
  }
  return scale == 0 ? 0.0 : worst / scale;
}

FdResidual fd_residual_refined(const LinearOde& ode, const std::function<double(double)>& f, const Grid& grid) {
  auto sample = [&](const Grid& g) {
    std::vector<double> s(g.points);
    for (int i = 0; i < g.points; ++i) s[i] = f(g.x(i));
    return s;
  };
  Grid fine{grid.left, 0.5 * grid.h, 2 * grid.points - 1};
  FdResidual r;
  r.residual = fd_residual(ode, sample(grid), grid);
  r.refined_residual = fd_residual(ode, sample(fine), fine);
  r.ratio = r.refined_residual == 0 ? std::numeric_limits<double>::infinity() : r.residual / r.refined_residual;
  return r;
}

}  // namespace dyonosc::oracle
