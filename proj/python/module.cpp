#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "dyonosc/error.hpp"
#include "dyonosc/fields.hpp"
#include "dyonosc/oracle.hpp"
#include "dyonosc/specfun.hpp"
#include "dyonosc/spectra.hpp"
#include "dyonosc/transforms.hpp"
#include "dyonosc/verify.hpp"
#include "dyonosc/wavefun.hpp"

namespace py = pybind11;
using namespace dyonosc;

namespace {

HalfInt half(const py::object& v) {
  if (py::isinstance<py::str>(v)) return HalfInt::parse(v.cast<std::string>());
  return HalfInt::from_double(v.cast<double>());
}

SystemId system_id(const std::string& name, double nu, const py::object& s, const py::object& T) {
  if (name == "osc1") return sys::Osc{1};
  if (name == "osc2") return sys::Osc{2};
  if (name == "osc4") return sys::Osc{4};
  if (name == "osc8") return sys::Osc{8};
  if (name == "anyon1") return sys::Anyon1{nu};
  if (name == "dyon2") return sys::Dyon2{s.is_none() ? HalfInt{} : half(s)};
  if (name == "dyon3") return sys::Dyon3{s.is_none() ? HalfInt{} : half(s)};
  if (name == "ycm5") {
    sys::Ycm5 y;
    if (!T.is_none()) y.isospin = half(T);
    return y;
  }
  throw Error(Errc::invalid_parameter, "unknown system '" + name + "'");
}

py::list spectrum(const std::string& name, int levels, std::optional<double> omega, std::optional<double> e2,
                  std::optional<double> E, double nu, const py::object& s, const py::object& T, double mu, double hbar,
                  double c) {
  PhysicalParams p{Units{mu, hbar, c}, regime::Oscillator{}};
  if (name.rfind("osc", 0) == 0) {
    if (!omega) throw Error(Errc::invalid_parameter, "oscillator spectra need omega");
    p.regime = regime::Oscillator{*omega};
  } else if (e2) {
    p.regime = regime::DyonCoupling{*e2};
  } else if (E) {
    p.regime = regime::Dyon{*E};
  } else {
    throw Error(Errc::invalid_parameter, "dyon spectra need e2 or E");
  }
  py::list out;
  for (const auto& line : enumerate_spectrum(system_id(name, nu, s, T), p, levels - 1)) {
    py::dict d;
    d["quantum_numbers"] = describe(line.qn);
    d["energy"] = line.energy;
    d["degeneracy"] = line.degeneracy;
    out.append(d);
  }
  return out;
}

std::vector<double> solve_radial(double dim_eff, double angular_coeff, const std::string& potential, double omega,
                                 double e2, int k, std::optional<double> r_max, std::optional<int> points,
                                 bool neumann_left, double mu, double hbar) {
  oracle::RadialProblem p;
  p.units = Units{mu, hbar, 1.0};
  p.dim_eff = dim_eff;
  p.angular_coeff = angular_coeff;
  p.neumann_left = neumann_left;
  const bool harmonic = potential == "harmonic";
  if (harmonic) p.potential = oracle::Potential::harmonic(omega, p.units);
  else if (potential == "coulomb") p.potential = oracle::Potential::coulomb(e2);
  else throw Error(Errc::invalid_parameter, "potential must be 'harmonic' or 'coulomb'");
  p.r_max = r_max ? *r_max
                  : harmonic ? oracle::harmonic_rmax(k, dim_eff, omega, p.units)
                             : oracle::coulomb_rmax(k, dim_eff, angular_coeff, e2, p.units);
  p.grid_points = points ? *points : harmonic ? 4000 : oracle::coulomb_grid_points(p, e2);
  return oracle::solve_radial(p, k).eigenvalues;
}

py::list verify(const std::string& suite, std::uint64_t seed) {
  py::list out;
  for (const auto& r : run_suite(parse_suite(suite), seed)) {
    py::dict d;
    d["suite"] = r.suite;
    d["check"] = r.name;
    d["pass"] = r.pass;
    d["measured"] = r.measured;
    d["tolerance"] = r.tolerance;
    d["detail"] = r.detail;
    out.append(d);
  }
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dyon-oscillator duality toolkit";

  py::register_exception<Error>(m, "DyonoscError", PyExc_ValueError);

  m.def("forward_map", [](const std::vector<double>& u) {
    const DyonPoint x = forward_map(OscPoint(u));
    return std::vector<double>(x.x().begin(), x.x().end());
  }, py::arg("u"));
  m.def("euler_residual", [](const std::vector<double>& u) { return euler_residual(OscPoint(u)); }, py::arg("u"));
  m.def("hurwitz_matrix", [](const std::vector<double>& u) {
    const auto H = hurwitz_matrix(OscPoint(u));
    std::vector<std::vector<double>> rows(H.dim, std::vector<double>(H.dim));
    for (int a = 0; a < H.dim; ++a)
      for (int b = 0; b < H.dim; ++b) rows[a][b] = H(a, b);
    return rows;
  }, py::arg("u"));

  m.def("spectrum", &spectrum, py::arg("system"), py::arg("levels") = 5, py::arg("omega") = py::none(),
        py::arg("e2") = py::none(), py::arg("E") = py::none(), py::arg("nu") = 0.25, py::arg("s") = py::none(),
        py::arg("T") = py::none(), py::arg("mu") = 1.0, py::arg("hbar") = 1.0, py::arg("c") = 1.0);
  m.def("osc_degeneracy", &osc_degeneracy, py::arg("dim"), py::arg("N"));
  m.def("ycm_degeneracy", [](int N, const py::object& T) { return ycm_degeneracy(N, half(T)); }, py::arg("N"),
        py::arg("T"));

  m.def("hermite", &hermite, py::arg("n"), py::arg("z"));
  m.def("kummer", &kummer_terminating, py::arg("n"), py::arg("c"), py::arg("z"));
  m.def("wigner_d", [](const py::object& j, const py::object& mm, const py::object& s, double beta) {
    return wigner_small_d(half(j), half(mm), half(s), beta);
  }, py::arg("j"), py::arg("m"), py::arg("s"), py::arg("beta"));
  m.def("clebsch_gordan", [](const py::object& j1, const py::object& m1, const py::object& j2, const py::object& m2,
                             const py::object& J, const py::object& M) {
    return clebsch_gordan(half(j1), half(m1), half(j2), half(m2), half(J), half(M));
  });

  m.def("anyon_wavefn", [](int n, double nu, double alpha, double x) {
    return anyon_wavefn(n, nu, alpha, Units{}, x);
  }, py::arg("n"), py::arg("nu"), py::arg("alpha"), py::arg("x"));
  m.def("dyon3_wavefn", [](int n, const py::object& j, const py::object& mm, const py::object& s, double e2, double r,
                           double alpha, double beta) {
    return dyon3_wavefn(n, half(j), half(mm), half(s), e2, Units{}, r, alpha, beta);
  });

  m.def("vortex_potential", &vortex_potential, py::arg("g"), py::arg("x1"), py::arg("x2"));
  m.def("dirac_potential", &dirac_potential_cartesian, py::arg("g"), py::arg("x"));
  m.def("yang_potentials", &yang_potentials, py::arg("x"));
  m.def("vortex_circulation", [](double g, double radius) {
    return circulation({FieldKind::vortex, g}, Circle::planar(radius));
  }, py::arg("g"), py::arg("radius"));
  m.def("dirac_circulation", [](double g, double r, double beta) {
    return circulation({FieldKind::dirac, g}, Circle::latitude(r, beta));
  }, py::arg("g"), py::arg("r"), py::arg("beta"));

  m.def("solve_radial", &solve_radial, py::arg("dim_eff"), py::arg("angular_coeff"), py::arg("potential"),
        py::arg("omega") = 1.0, py::arg("e2") = 1.0, py::arg("k") = 5, py::arg("r_max") = py::none(),
        py::arg("points") = py::none(), py::arg("neumann_left") = false, py::arg("mu") = 1.0, py::arg("hbar") = 1.0);
  m.def("verify", &verify, py::arg("suite") = "all", py::arg("seed") = 42);
  m.def("run_cli", &run_cli, py::arg("args"), "Run the command-line tool; returns (exit_code, stdout, stderr).");
}
