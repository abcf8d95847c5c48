#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dyonosc/error.hpp"
#include "dyonosc/fields.hpp"
#include "dyonosc/oracle.hpp"
#include "dyonosc/record.hpp"
#include "dyonosc/spectra.hpp"
#include "dyonosc/verify.hpp"
#include "dyonosc/wavefun.hpp"

namespace dyonosc::cli {
namespace {

// Bad or missing flags detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  double mu = 1.0;
  double hbar = 1.0;
  double c = 1.0;
  std::string format = "json";
  std::string out_path;

  Units units() const {
    Units u{mu, hbar, c};
    u.validate();
    return u;
  }
};

void add_common(CLI::App* app, Common& common) {
  app->add_option("--mu", common.mu, "mass");
  app->add_option("--hbar", common.hbar, "Planck constant");
  app->add_option("--c", common.c, "speed of light");
  app->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--out", common.out_path, "write to this file instead of stdout");
}

void add_units_params(OutputRecord& rec, const Common& common) {
  rec.set_param("mu", common.mu);
  rec.set_param("hbar", common.hbar);
  rec.set_param("c", common.c);
}

HalfInt parse_half(const std::string& text, const char* flag) {
  try {
    return HalfInt::parse(text);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + flag + "='" + text + "'");
  }
}

struct GridSpec {
  double a = 0;
  double b = 1;
  int count = 2;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> g.a >> c1 >> g.b >> c2 >> g.count) || c1 != ':' || c2 != ':' || g.count < 1) {
    throw UsageError("--grid must look like a:b:count, got '" + text + "'");
  }
  return g;
}

std::vector<double> grid_points(const GridSpec& g) {
  std::vector<double> xs(g.count);
  for (int i = 0; i < g.count; ++i) xs[i] = g.count == 1 ? g.a : g.a + (g.b - g.a) * i / (g.count - 1.0);
  return xs;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot parse number '" + item + "' in '" + text + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct SystemFlags {
  std::string system;
  std::optional<double> nu;
  std::optional<std::string> s;
  std::optional<std::string> T;

  SystemId resolve() const {
    if (system == "osc1") return sys::Osc{1};
    if (system == "osc2") return sys::Osc{2};
    if (system == "osc4") return sys::Osc{4};
    if (system == "osc8") return sys::Osc{8};
    if (system == "anyon1") return sys::Anyon1{nu.value_or(0.25)};
    if (system == "dyon2") return sys::Dyon2{s ? parse_half(*s, "--s") : HalfInt{}};
    if (system == "dyon3") return sys::Dyon3{s ? parse_half(*s, "--s") : HalfInt{}};
    if (system == "ycm5") {
      sys::Ycm5 y;
      if (T) y.isospin = parse_half(*T, "--T");
      return y;
    }
    throw UsageError("unknown system '" + system + "'");
  }
};

const std::vector<std::string> kSystems{"osc1", "osc2", "osc4", "osc8", "anyon1", "dyon2", "dyon3", "ycm5"};

void add_system_flags(CLI::App* app, SystemFlags& f, bool required = true) {
  auto* opt = app->add_option("--system", f.system, "osc1|osc2|osc4|osc8|anyon1|dyon2|dyon3|ycm5");
  opt->check(CLI::IsMember(kSystems));
  if (required) opt->required();
  app->add_option("--nu", f.nu, "anyon parameter (default 1/4)");
  app->add_option("--s", f.s, "monopole number s (e.g. 1/2)");
  app->add_option("--T", f.T, "YCM isospin (default: all sectors)");
}

void add_system_params(OutputRecord& rec, const SystemFlags& f) {
  rec.set_param("system", f.system);
  if (f.nu) rec.set_param("nu", *f.nu);
  if (f.s) rec.set_param("s", *f.s);
  if (f.T) rec.set_param("T", *f.T);
}

bool is_osc(const std::string& name) { return name.rfind("osc", 0) == 0; }

// ---------------------------------------------------------------------------

struct SpectrumCmd {
  Common common;
  SystemFlags sys;
  std::optional<double> omega, energy, e2;
  int levels = 5;
};

OutputRecord cmd_spectrum(const SpectrumCmd& cmd) {
  const SystemId system = cmd.sys.resolve();
  PhysicalParams params{cmd.common.units(), regime::Oscillator{}};
  OutputRecord rec;
  rec.command = "spectrum";
  add_system_params(rec, cmd.sys);
  add_units_params(rec, cmd.common);
  if (is_osc(cmd.sys.system)) {
    if (!cmd.omega) throw UsageError("oscillator spectra need --omega");
    params.regime = regime::Oscillator{*cmd.omega};
    rec.set_param("omega", *cmd.omega);
  } else if (cmd.e2) {
    params.regime = regime::DyonCoupling{*cmd.e2};
    rec.set_param("e2", *cmd.e2);
  } else if (cmd.energy) {
    params.regime = regime::Dyon{*cmd.energy};
    rec.set_param("E", *cmd.energy);
  } else {
    throw UsageError("dyon spectra need --e2 or --E");
  }
  if (cmd.levels < 1) throw UsageError("--levels must be >= 1");
  rec.set_param("levels", static_cast<std::int64_t>(cmd.levels));
  rec.columns = {"level", "quantum_numbers", "energy", "degeneracy"};
  const auto lines = enumerate_spectrum(system, params, cmd.levels - 1);
  std::int64_t level = 0;
  for (const auto& line : lines) rec.add_row({level++, describe(line.qn), line.energy, line.degeneracy});
  return rec;
}

// ---------------------------------------------------------------------------

struct MapCmd {
  Common common;
  std::string direction;
  std::optional<double> energy, omega, c0, c2, e2, eps;
  std::string higher;
  std::optional<int> levels;
  std::string system = "dyon3";
  std::optional<std::string> s;
};

OutputRecord cmd_map(const MapCmd& cmd) {
  const Units units = cmd.common.units();
  OutputRecord rec;
  rec.command = "map";
  rec.set_param("direction", cmd.direction);
  add_units_params(rec, cmd.common);
  std::vector<std::pair<std::string, double>> mapped;
  std::optional<double> energy;
  if (cmd.direction == "osc2dyon") {
    if (!cmd.energy) throw UsageError("osc2dyon needs --E");
    OscillatorSide osc;
    osc.energy = cmd.energy;
    osc.omega = cmd.omega;
    osc.c0 = cmd.c0.value_or(0.0);
    osc.c2 = cmd.c2;
    if (!cmd.higher.empty()) osc.higher = parse_list(cmd.higher);
    rec.set_param("E", *cmd.energy);
    if (cmd.omega) rec.set_param("omega", *cmd.omega);
    if (cmd.c0) rec.set_param("C0", *cmd.c0);
    if (cmd.c2) rec.set_param("C2", *cmd.c2);
    if (!cmd.higher.empty()) rec.set_param("higher", cmd.higher);
    const DyonSide d = to_dyon(osc, units);
    if (d.e2) mapped.emplace_back("e2", *d.e2);
    if (d.eps) mapped.emplace_back("eps", *d.eps);
    for (std::size_t i = 0; i < d.extra.size(); ++i) {
      mapped.emplace_back("extra_r" + std::to_string(i + 1), d.extra[i]);
    }
    energy = cmd.energy;
  } else {
    DyonSide dyon;
    dyon.e2 = cmd.e2;
    dyon.eps = cmd.eps;
    if (cmd.e2) rec.set_param("e2", *cmd.e2);
    if (cmd.eps) rec.set_param("eps", *cmd.eps);
    if (!cmd.e2 && !cmd.eps) throw UsageError("dyon2osc needs --e2 and/or --eps");
    const OscillatorSide o = to_oscillator(dyon, units);
    if (o.energy) mapped.emplace_back("E", *o.energy);
    if (o.omega) mapped.emplace_back("omega", *o.omega);
    energy = o.energy;
  }

  if (!cmd.levels) {
    rec.columns = {"quantity", "value"};
    for (const auto& [k, v] : mapped) rec.add_row({k, v});
    return rec;
  }
  for (const auto& [k, v] : mapped) rec.set_param(k, v);
  if (!energy) throw UsageError("--levels needs the energy E (or e2)");
  if (*cmd.levels < 1) throw UsageError("--levels must be >= 1");
  SystemFlags flags{cmd.system, std::nullopt, cmd.s, std::nullopt};
  const SystemId system = flags.resolve();
  if (is_osc(cmd.system)) throw UsageError("--system must name the dyon side (anyon1, dyon2, dyon3, ycm5)");
  rec.set_param("system", cmd.system);
  rec.set_param("levels", static_cast<std::int64_t>(*cmd.levels));
  rec.columns = {"level", "quantum_numbers", "omega", "eps_from_omega", "eps_closed_form"};
  const auto lines = quantized_frequencies(system, *energy, *cmd.levels, units);
  std::int64_t level = 0;
  for (const auto& line : lines) {
    const double eps_omega = -units.mu * line.omega * line.omega / 8.0;
    const double eps_closed = dyon_energy(system, line.qn, PhysicalParams{units, regime::DyonCoupling{*energy / 4.0}});
    rec.add_row({level++, describe(line.qn), line.omega, eps_omega, eps_closed});
  }
  return rec;
}

// ---------------------------------------------------------------------------

struct WavefnCmd {
  Common common;
  std::string system;
  std::string part = "radial";
  int n = 0;
  int m = 0;
  int M = 0;
  std::string j = "0", mj = "0", s = "0", J = "0", L = "0", lambda = "0";
  int n_theta = 0;
  double nu = 0.25;
  std::string extension = "even";
  std::optional<double> omega, e2, energy;
  double phi = 0, alpha = 0, beta = 0, gamma = 0;
  std::string grid;
};

OutputRecord cmd_wavefn(const WavefnCmd& cmd) {
  const Units units = cmd.common.units();
  OutputRecord rec;
  rec.command = "wavefn";
  rec.set_param("system", cmd.system);
  add_units_params(rec, cmd.common);
  const auto xs = grid_points(parse_grid(cmd.grid));
  rec.set_param("grid", cmd.grid);
  rec.columns = {"x", "re", "im", "abs2"};

  auto coupling = [&]() {
    if (cmd.e2) return *cmd.e2;
    if (cmd.energy) return *cmd.energy / 4.0;
    throw UsageError(cmd.system + " needs --e2 or --E");
  };
  auto freq = [&]() {
    if (!cmd.omega) throw UsageError(cmd.system + " needs --omega");
    return *cmd.omega;
  };
  std::function<std::complex<double>(double)> f;
  if (cmd.system == "anyon1") {
    AnyonExtension ext = AnyonExtension::even;
    if (cmd.extension == "odd") ext = AnyonExtension::odd;
    else if (cmd.extension == "half") ext = AnyonExtension::half_line;
    else if (cmd.extension != "even") throw UsageError("--extension must be even, odd or half");
    const double alpha = cmd.e2 || cmd.energy ? coupling() : 1.0;
    rec.set_param("nu", cmd.nu);
    rec.set_param("n", static_cast<std::int64_t>(cmd.n));
    rec.set_param("alpha", alpha);
    rec.set_param("extension", cmd.extension);
    f = [=](double x) { return anyon_wavefn(cmd.n, cmd.nu, alpha, units, x, ext); };
  } else if (cmd.system == "osc1") {
    const double omega = freq();
    rec.set_param("N", static_cast<std::int64_t>(cmd.n));
    rec.set_param("omega", omega);
    f = [=](double x) { return std::complex<double>(osc1_wavefn(cmd.n, omega, units, x)); };
  } else if (cmd.system == "osc2") {
    const double omega = freq();
    rec.set_param("n", static_cast<std::int64_t>(cmd.n));
    rec.set_param("M", static_cast<std::int64_t>(cmd.M));
    rec.set_param("omega", omega);
    rec.set_param("phi", cmd.phi);
    f = [=](double u) { return osc2_wavefn(cmd.n, cmd.M, omega, units, u, cmd.phi); };
  } else if (cmd.system == "dyon2") {
    const double e2 = coupling();
    const HalfInt s = parse_half(cmd.s, "--s");
    rec.set_param("n", static_cast<std::int64_t>(cmd.n));
    rec.set_param("m", static_cast<std::int64_t>(cmd.m));
    rec.set_param("s", s.str());
    rec.set_param("e2", e2);
    rec.set_param("phi", cmd.phi);
    f = [=](double r) { return dyon2_wavefn(cmd.n, cmd.m, s, e2, units, r, cmd.phi); };
  } else if (cmd.system == "osc4" || cmd.system == "dyon3") {
    const HalfInt j = parse_half(cmd.j, "--j"), m = parse_half(cmd.mj, "--mj"), s = parse_half(cmd.s, "--s");
    rec.set_param("n", static_cast<std::int64_t>(cmd.n));
    rec.set_param("j", j.str());
    rec.set_param("m", m.str());
    rec.set_param("s", s.str());
    rec.set_param("alpha", cmd.alpha);
    rec.set_param("beta", cmd.beta);
    if (cmd.system == "osc4") {
      const double omega = freq();
      rec.set_param("omega", omega);
      rec.set_param("gamma", cmd.gamma);
      f = [=](double u) { return osc4_wavefn(cmd.n, j, m, s, omega, units, u, cmd.alpha, cmd.beta, cmd.gamma); };
    } else {
      const double e2 = coupling();
      rec.set_param("e2", e2);
      f = [=](double r) { return dyon3_wavefn(cmd.n, j, m, s, e2, units, r, cmd.alpha, cmd.beta); };
    }
  } else if (cmd.system == "ycm5") {
    rec.set_param("part", cmd.part);
    if (cmd.part == "angular") {
      const HalfInt J = parse_half(cmd.J, "--J"), L = parse_half(cmd.L, "--L");
      rec.set_param("n_theta", static_cast<std::int64_t>(cmd.n_theta));
      rec.set_param("J", J.str());
      rec.set_param("L", L.str());
      f = [=](double th) { return std::complex<double>(ycm_angular_Z(cmd.n_theta, J, L, th)); };
    } else if (cmd.part == "radial") {
      const double e2 = coupling();
      const HalfInt lambda = parse_half(cmd.lambda, "--lambda");
      rec.set_param("n_r", static_cast<std::int64_t>(cmd.n));
      rec.set_param("lambda", lambda.str());
      rec.set_param("e2", e2);
      f = [=](double r) { return std::complex<double>(ycm_radial_R(cmd.n, lambda, e2, units, r)); };
    } else {
      throw UsageError("--part must be radial or angular");
    }
  } else {
    throw UsageError("wavefn supports osc1, osc2, osc4, anyon1, dyon2, dyon3, ycm5");
  }
  for (double x : xs) {
    const auto v = f(x);
    rec.add_row({x, v.real(), v.imag(), std::norm(v)});
  }
  return rec;
}

// ---------------------------------------------------------------------------

struct FieldCmd {
  Common common;
  std::string kind;
  double g = 1.0;
  std::string at;
  std::optional<double> loop_radius;
  std::string latitude;
  int panels = 10000;
  std::optional<std::string> s;
  std::optional<double> e;
};

OutputRecord cmd_field(const FieldCmd& cmd) {
  OutputRecord rec;
  rec.command = "field";
  rec.set_param("kind", cmd.kind);
  FieldSpec spec;
  spec.kind = cmd.kind == "vortex" ? FieldKind::vortex : cmd.kind == "dirac" ? FieldKind::dirac : FieldKind::yang;
  spec.g = cmd.g;
  if (cmd.s) {
    if (!cmd.e) throw UsageError("--s needs --e");
    const auto units = cmd.common.units();
    spec.g = dirac_charge(parse_half(*cmd.s, "--s"), *cmd.e, units).g();
    rec.set_param("s", *cmd.s);
    rec.set_param("e", *cmd.e);
  }
  if (spec.kind != FieldKind::yang) rec.set_param("g", spec.g);

  if (cmd.loop_radius || !cmd.latitude.empty()) {
    Circle loop;
    if (cmd.loop_radius) {
      if (spec.kind != FieldKind::vortex) throw UsageError("--loop-radius applies to the vortex");
      loop = Circle::planar(*cmd.loop_radius);
      rec.set_param("loop_radius", *cmd.loop_radius);
    } else {
      if (spec.kind != FieldKind::dirac) throw UsageError("--latitude applies to the Dirac field");
      const auto rb = parse_list(cmd.latitude);
      if (rb.size() != 2) throw UsageError("--latitude needs r,beta");
      loop = Circle::latitude(rb[0], rb[1]);
      rec.set_param("latitude", cmd.latitude);
    }
    rec.set_param("panels", static_cast<std::int64_t>(cmd.panels));
    rec.columns = {"quantity", "value"};
    rec.add_row({std::string("circulation"), circulation(spec, loop, cmd.panels)});
    return rec;
  }
  if (cmd.at.empty()) throw UsageError("field needs --at (or a loop for the circulation)");
  const auto point = parse_list(cmd.at);
  rec.set_param("at", cmd.at);
  const GaugeField field = evaluate_field(spec, point);
  const std::size_t dim = field.components.front().size();
  rec.columns = {"vector"};
  for (std::size_t k = 0; k < dim; ++k) rec.columns.push_back("c" + std::to_string(k));
  for (std::size_t a = 0; a < field.components.size(); ++a) {
    std::vector<Scalar> row{static_cast<std::int64_t>(a + 1)};
    for (double v : field.components[a]) row.emplace_back(v);
    rec.add_row(std::move(row));
  }
  return rec;
}

// ---------------------------------------------------------------------------

struct SolveCmd {
  Common common;
  SystemFlags sys;
  std::optional<double> dim, lambda_coeff, omega, e2;
  std::string potential;
  int M = 0;
  std::string j = "0";
  std::string lambda = "0";
  int k = 5;
  std::optional<double> r_max;
  std::optional<int> points;
  bool neumann = false;
};

OutputRecord cmd_solve_radial(const SolveCmd& cmd) {
  const Units units = cmd.common.units();
  OutputRecord rec;
  rec.command = "solve-radial";
  add_units_params(rec, cmd.common);
  oracle::RadialProblem p;
  p.units = units;
  std::function<double(int)> analytic;
  const double omega = cmd.omega.value_or(1.0);
  const double e2 = cmd.e2.value_or(1.0);
  auto eps = [&](double q) { return -units.mu * e2 * e2 / (2 * units.hbar * units.hbar * q * q); };
  if (!cmd.sys.system.empty()) {
    const std::string& name = cmd.sys.system;
    add_system_params(rec, cmd.sys);
    if (name == "osc2") {
      p.dim_eff = 2;
      p.angular_coeff = cmd.M * cmd.M;
      p.potential = oracle::Potential::harmonic(omega, units);
      rec.set_param("M", static_cast<std::int64_t>(cmd.M));
      const int am = std::abs(cmd.M);
      analytic = [=](int n) { return units.hbar * omega * (2 * n + am + 1); };
    } else if (name == "osc4") {
      const double j = parse_half(cmd.j, "--j").value();
      p.dim_eff = 4;
      p.angular_coeff = 4 * j * (j + 1);
      p.potential = oracle::Potential::harmonic(omega, units);
      rec.set_param("j", cmd.j);
      analytic = [=](int n) { return units.hbar * omega * (2 * n + 2 * j + 2); };
    } else if (name == "osc1") {
      p.dim_eff = 1;
      p.potential = oracle::Potential::harmonic(omega, units);
      p.neumann_left = cmd.neumann;
      const double shift = p.neumann_left ? 0.5 : 1.5;
      analytic = [=](int n) { return units.hbar * omega * (2 * n + shift); };
    } else if (name == "dyon2") {
      const double s = cmd.sys.s ? parse_half(*cmd.sys.s, "--s").value() : 0.0;
      const double ms = cmd.M + s;  // --M carries m here
      p.dim_eff = 2;
      p.angular_coeff = ms * ms;
      p.potential = oracle::Potential::coulomb(e2);
      rec.set_param("m", static_cast<std::int64_t>(cmd.M));
      analytic = [=](int n) { return eps(n + std::abs(ms) + 0.5); };
    } else if (name == "dyon3") {
      const HalfInt s = cmd.sys.s ? parse_half(*cmd.sys.s, "--s") : HalfInt{};
      HalfInt jh = parse_half(cmd.j, "--j");
      if (jh < s.abs()) jh = s.abs();
      const double j = jh.value(), sv = s.value();
      p.dim_eff = 3;
      p.angular_coeff = j * (j + 1) - sv * sv;
      p.potential = oracle::Potential::coulomb_goldhaber(e2, s, units);
      rec.set_param("j", jh.str());
      analytic = [=](int n) { return eps(n + j + 1); };
    } else if (name == "ycm5") {
      const double lam = parse_half(cmd.lambda, "--lambda").value();
      p.dim_eff = 5;
      p.angular_coeff = lam * (lam + 3);
      p.potential = oracle::Potential::coulomb(e2);
      rec.set_param("lambda", cmd.lambda);
      analytic = [=](int n) { return eps(n + lam + 2); };
    } else if (name == "anyon1") {
      const double nu = cmd.sys.nu.value_or(0.75);
      if (nu != 0.75) throw UsageError("solve-radial handles the anyon with nu=3/4 (dim_eff=5/2)");
      p.dim_eff = 2.5;
      p.potential = oracle::Potential::coulomb(e2);
      analytic = [=](int n) { return eps(n + 0.75); };
    } else {
      throw UsageError("solve-radial supports osc1, osc2, osc4, anyon1, dyon2, dyon3, ycm5");
    }
  } else {
    if (!cmd.dim || cmd.potential.empty()) throw UsageError("give --system, or --dim with --potential");
    p.dim_eff = *cmd.dim;
    p.angular_coeff = cmd.lambda_coeff.value_or(0.0);
    if (cmd.potential == "harmonic") p.potential = oracle::Potential::harmonic(omega, units);
    else if (cmd.potential == "coulomb") p.potential = oracle::Potential::coulomb(e2);
    else throw UsageError("--potential must be harmonic or coulomb");
    p.neumann_left = cmd.neumann;
    rec.set_param("dim_eff", p.dim_eff);
    rec.set_param("angular_coeff", p.angular_coeff);
  }
  const bool harmonic = p.potential.kind == oracle::Potential::Kind::harmonic;
  if (harmonic) rec.set_param("omega", omega);
  else rec.set_param("e2", e2);
  rec.set_param("potential", oracle::to_string(p.potential.kind));
  p.r_max = cmd.r_max ? *cmd.r_max
                      : harmonic ? oracle::harmonic_rmax(cmd.k, p.dim_eff, omega, units)
                                 : oracle::coulomb_rmax(cmd.k, p.dim_eff, p.angular_coeff, e2, units);
  p.grid_points = cmd.points ? *cmd.points : harmonic ? 4000 : oracle::coulomb_grid_points(p, e2);
  // the non-integer dimension converges more slowly near the origin
  if (!cmd.points && cmd.sys.system == "anyon1") p.grid_points *= 2;
  rec.set_param("k", static_cast<std::int64_t>(cmd.k));
  rec.set_param("r_max", p.r_max);
  rec.set_param("grid_points", static_cast<std::int64_t>(p.grid_points));
  const auto result = oracle::solve_radial(p, cmd.k);
  if (analytic) {
    rec.columns = {"index", "eigenvalue", "est_error", "analytic"};
  } else {
    rec.columns = {"index", "eigenvalue", "est_error"};
  }
  for (int i = 0; i < cmd.k; ++i) {
    std::vector<Scalar> row{static_cast<std::int64_t>(i), result.eigenvalues[i], result.est_error[i]};
    if (analytic) row.emplace_back(analytic(i));
    rec.add_row(std::move(row));
  }
  return rec;
}

// ---------------------------------------------------------------------------

struct VerifyCmd {
  Common common;
  std::string suite = "all";
  std::uint64_t seed = 42;
};

OutputRecord cmd_verify(const VerifyCmd& cmd, bool& all_pass) {
  OutputRecord rec;
  rec.command = "verify";
  rec.set_param("suite", cmd.suite);
  rec.set_param("seed", static_cast<std::int64_t>(cmd.seed));
  rec.columns = {"suite", "check", "pass", "measured", "tolerance", "detail"};
  all_pass = true;
  for (const auto& c : run_suite(parse_suite(cmd.suite), cmd.seed)) {
    all_pass = all_pass && c.pass;
    rec.add_row({c.suite, c.name, c.pass, c.measured, c.tolerance, c.detail});
  }
  return rec;
}

void emit(const OutputRecord& rec, const Common& common, std::ostream& out) {
  const std::string text = common.format == "csv" ? rec.to_csv() : rec.to_json();
  if (common.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) throw Error(Errc::invalid_parameter, "cannot open output file '" + common.out_path + "'");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyon-oscillator duality: spectra, maps, wavefunctions, fields and checks", "dyonosc"};
  app.require_subcommand(1);

  SpectrumCmd spectrum;
  auto* sp = app.add_subcommand("spectrum", "energy levels and degeneracies");
  add_common(sp, spectrum.common);
  add_system_flags(sp, spectrum.sys);
  sp->add_option("--omega", spectrum.omega, "oscillator frequency");
  sp->add_option("--E", spectrum.energy, "fixed oscillator energy (e^2 = E/4)");
  sp->add_option("--e2", spectrum.e2, "Coulomb coupling e^2");
  sp->add_option("--levels", spectrum.levels, "number of levels");

  MapCmd map;
  auto* mp = app.add_subcommand("map", "duality parameter maps");
  add_common(mp, map.common);
  mp->add_option("--direction", map.direction, "osc2dyon or dyon2osc")
      ->required()
      ->check(CLI::IsMember({"osc2dyon", "dyon2osc"}));
  mp->add_option("--E", map.energy, "oscillator energy");
  mp->add_option("--omega", map.omega, "oscillator frequency");
  mp->add_option("--C0", map.c0, "constant term of V(u^2)");
  mp->add_option("--C2", map.c2, "u^2 coefficient of V(u^2)");
  mp->add_option("--higher", map.higher, "C4,C6,... of V(u^2)");
  mp->add_option("--e2", map.e2, "Coulomb coupling");
  mp->add_option("--eps", map.eps, "Coulomb energy");
  mp->add_option("--levels", map.levels, "paired (omega_N, eps_N) table");
  mp->add_option("--system", map.system, "dyon side for --levels (default dyon3)");
  mp->add_option("--s", map.s, "monopole number for --levels");

  WavefnCmd wf;
  auto* wp = app.add_subcommand("wavefn", "sample a closed-form wavefunction on a grid");
  add_common(wp, wf.common);
  wp->add_option("--system", wf.system, "osc1|osc2|osc4|anyon1|dyon2|dyon3|ycm5")->required();
  wp->add_option("--grid", wf.grid, "a:b:count along x, u, r or theta")->required();
  wp->add_option("--n", wf.n, "radial quantum number (N for osc1, n_r for ycm5)");
  wp->add_option("--m", wf.m, "dyon2 azimuthal number");
  wp->add_option("--M", wf.M, "osc2 azimuthal number");
  wp->add_option("--j", wf.j, "angular momentum j");
  wp->add_option("--mj", wf.mj, "projection m for osc4/dyon3");
  wp->add_option("--s", wf.s, "monopole number s");
  wp->add_option("--nu", wf.nu, "anyon parameter");
  wp->add_option("--extension", wf.extension, "anyon continuation: even, odd or half");
  wp->add_option("--part", wf.part, "ycm5 factor: radial or angular");
  wp->add_option("--n-theta", wf.n_theta, "ycm5 n_theta");
  wp->add_option("--J", wf.J, "ycm5 J");
  wp->add_option("--L", wf.L, "ycm5 L");
  wp->add_option("--lambda", wf.lambda, "ycm5 lambda");
  wp->add_option("--omega", wf.omega, "oscillator frequency");
  wp->add_option("--e2", wf.e2, "Coulomb coupling");
  wp->add_option("--E", wf.energy, "oscillator energy (e^2 = E/4)");
  wp->add_option("--phi", wf.phi, "azimuth for osc2/dyon2");
  wp->add_option("--alpha", wf.alpha, "Euler angle alpha");
  wp->add_option("--beta", wf.beta, "Euler angle beta");
  wp->add_option("--gamma", wf.gamma, "Euler angle gamma");

  FieldCmd field;
  auto* fp = app.add_subcommand("field", "monopole vector potentials and circulations");
  add_common(fp, field.common);
  fp->add_option("--kind", field.kind, "vortex, dirac or yang")->required()->check(CLI::IsMember({"vortex", "dirac", "yang"}));
  fp->add_option("--g", field.g, "magnetic charge");
  fp->add_option("--s", field.s, "take g = hbar c s / e");
  fp->add_option("--e", field.e, "electric charge for --s");
  fp->add_option("--at", field.at, "comma-separated Cartesian point");
  fp->add_option("--loop-radius", field.loop_radius, "vortex circulation around this circle");
  fp->add_option("--latitude", field.latitude, "Dirac circulation around the latitude r,beta");
  fp->add_option("--panels", field.panels, "Simpson panels");

  SolveCmd solve;
  auto* rp = app.add_subcommand("solve-radial", "finite-difference eigenvalues of a radial equation");
  add_common(rp, solve.common);
  add_system_flags(rp, solve.sys, false);
  rp->add_option("--dim", solve.dim, "effective dimension (without --system)");
  rp->add_option("--Lambda", solve.lambda_coeff, "centrifugal coefficient (without --system)");
  rp->add_option("--potential", solve.potential, "harmonic or coulomb (without --system)");
  rp->add_option("--omega", solve.omega, "oscillator frequency (default 1)");
  rp->add_option("--e2", solve.e2, "Coulomb coupling (default 1)");
  rp->add_option("--M", solve.M, "azimuthal number for osc2/dyon2");
  rp->add_option("--j", solve.j, "j for osc4/dyon3");
  rp->add_option("--lambda", solve.lambda, "lambda for ycm5");
  rp->add_option("--k", solve.k, "number of eigenvalues");
  rp->add_option("--rmax", solve.r_max, "domain end");
  rp->add_option("--points", solve.points, "grid points (default 4000, finer for Coulomb problems)");
  rp->add_flag("--neumann", solve.neumann, "zero slope at the left end");

  VerifyCmd verify;
  auto* vp = app.add_subcommand("verify", "run identity and oracle checks");
  add_common(vp, verify.common);
  vp->add_option("--suite", verify.suite, "euler|matrices|duality|degeneracy|fields|odes|oracle|normalization|specfun|all")
      ->check(CLI::IsMember({"euler", "matrices", "duality", "degeneracy", "fields", "odes", "oracle",
                             "normalization", "specfun", "all"}));
  vp->add_option("--seed", verify.seed, "seed for randomized checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  try {
    if (sp->parsed()) {
      emit(cmd_spectrum(spectrum), spectrum.common, out);
    } else if (mp->parsed()) {
      emit(cmd_map(map), map.common, out);
    } else if (wp->parsed()) {
      emit(cmd_wavefn(wf), wf.common, out);
    } else if (fp->parsed()) {
      emit(cmd_field(field), field.common, out);
    } else if (rp->parsed()) {
      emit(cmd_solve_radial(solve), solve.common, out);
    } else if (vp->parsed()) {
      bool pass = false;
      const auto rec = cmd_verify(verify, pass);
      emit(rec, verify.common, out);
      if (!pass) {
        err << "verification failed\n";
        return 1;
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace dyonosc::cli
