#include "dyonosc/fields.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dyonosc/error.hpp"

namespace dyonosc {
namespace {

constexpr double kSingularTol = 1e-12;

void require_finite(std::initializer_list<double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) throw Error(Errc::domain_error, "non-finite coordinate");
  }
}

}  // namespace

MagneticCharge::MagneticCharge(HalfInt s, double e, const Units& units)
    : s_(s), e_(e), hbar_(units.hbar), c_(units.c) {
  units.validate();
  if (!std::isfinite(e) || e == 0.0) throw Error(Errc::domain_error, "electric charge e must be nonzero");
  g_ = hbar_ * c_ * s.value() / e;
}

MagneticCharge dirac_charge(double s, double e, const Units& units) {
  return MagneticCharge(HalfInt::from_double(s), e, units);
}

MagneticCharge dirac_charge(HalfInt s, double e, const Units& units) { return MagneticCharge(s, e, units); }

Vec2 vortex_potential(double g, double x1, double x2) {
  require_finite({g, x1, x2});
  const double r2 = x1 * x1 + x2 * x2;
  if (r2 == 0.0) throw Error(Errc::singular_point, "vortex potential is singular at the origin");
  return {g * x2 / r2, -g * x1 / r2};
}

Vec3 dirac_potential(double g, double r, double alpha, double beta) {
  require_finite({g, r, alpha, beta});
  if (r <= 0.0) throw Error(Errc::singular_point, "Dirac potential is singular at r = 0");
  const double cb = std::cos(beta);
  if (1.0 + cb < kSingularTol) throw Error(Errc::singular_point, "point lies on the Dirac string (beta = pi)");
  const double f = g * std::sin(beta) / (r * (1.0 + cb));
  return {f * std::sin(alpha), -f * std::cos(alpha), 0.0};
}

Vec3 dirac_potential_cartesian(double g, const Vec3& x) {
  require_finite({g, x[0], x[1], x[2]});
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (r == 0.0) throw Error(Errc::singular_point, "Dirac potential is singular at r = 0");
  if (r + x[2] < kSingularTol * r) throw Error(Errc::singular_point, "point lies on the Dirac string (beta = pi)");
  // sin(b) (sin a, -cos a) / (1 + cos b) = (x2, -x1) / (r + x3)
  const double f = g / (r * (r + x[2]));
  return {f * x[1], -f * x[0], 0.0};
}

std::array<Vec5, 3> yang_potentials(const Vec5& x) {
  require_finite({x[0], x[1], x[2], x[3], x[4]});
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] + x[4] * x[4]);
  if (r == 0.0 || r + x[0] <= kSingularTol * r) {
    throw Error(Errc::singular_point, "point lies on the singular line x0 <= 0");
  }
  const double f = 1.0 / (r * (r + x[0]));
  const double x1 = x[1], x2 = x[2], x3 = x[3], x4 = x[4];
  return {{
      {0.0, -f * x4, -f * x3, f * x2, f * x1},
      {0.0, f * x3, -f * x4, -f * x1, f * x2},
      {0.0, f * x2, -f * x1, f * x4, -f * x3},
  }};
}

double goldhaber_term(HalfInt s, const Units& units, double r) {
  units.validate();
  if (!std::isfinite(r) || r <= 0.0) throw Error(Errc::singular_point, "Goldhaber term needs r > 0");
  const double sv = s.value();
  return units.hbar * units.hbar * sv * sv / (2.0 * units.mu * r * r);
}

GaugeField evaluate_field(const FieldSpec& spec, const std::vector<double>& p) {
  GaugeField out;
  out.kind = spec.kind;
  switch (spec.kind) {
    case FieldKind::vortex: {
      if (p.size() != 2) throw Error(Errc::invalid_parameter, "vortex field needs a 2D point");
      const auto a = vortex_potential(spec.g, p[0], p[1]);
      out.components.push_back({a[0], a[1]});
      break;
    }
    case FieldKind::dirac: {
      if (p.size() != 3) throw Error(Errc::invalid_parameter, "Dirac field needs a 3D point");
      const auto a = dirac_potential_cartesian(spec.g, {p[0], p[1], p[2]});
      out.components.push_back({a[0], a[1], a[2]});
      break;
    }
    case FieldKind::yang: {
      if (p.size() != 5) throw Error(Errc::invalid_parameter, "Yang field needs a 5D point");
      for (const auto& a : yang_potentials({p[0], p[1], p[2], p[3], p[4]})) {
        out.components.emplace_back(a.begin(), a.end());
      }
      break;
    }
  }
  return out;
}

Circle Circle::planar(double radius) {
  Circle c;
  c.radius = radius;
  return c;
}

Circle Circle::latitude(double r, double beta) {
  Circle c;
  c.center = {0.0, 0.0, r * std::cos(beta)};
  c.radius = r * std::sin(beta);
  return c;
}

double circulation(const FieldSpec& spec, const Circle& loop, int panels) {
  if (spec.kind == FieldKind::yang) throw Error(Errc::invalid_parameter, "circulation supports vortex and dirac fields");
  if (panels < 2 || panels % 2 != 0) throw Error(Errc::invalid_parameter, "Simpson rule needs an even panel count");
  if (!(loop.radius > 0.0)) throw Error(Errc::invalid_parameter, "loop radius must be positive");
  const double two_pi = 2.0 * std::numbers::pi;
  auto integrand = [&](double t) {
    const double c = std::cos(t), s = std::sin(t);
    Vec3 x, dx;
    for (int i = 0; i < 3; ++i) {
      x[i] = loop.center[i] + loop.radius * (c * loop.e1[i] + s * loop.e2[i]);
      dx[i] = loop.radius * (-s * loop.e1[i] + c * loop.e2[i]);
    }
    if (spec.kind == FieldKind::vortex) {
      if (x[2] != 0.0 || dx[2] != 0.0) throw Error(Errc::invalid_parameter, "vortex loop must lie in the x1-x2 plane");
      const auto a = vortex_potential(spec.g, x[0], x[1]);
      return a[0] * dx[0] + a[1] * dx[1];
    }
    const auto a = dirac_potential_cartesian(spec.g, x);
    return a[0] * dx[0] + a[1] * dx[1] + a[2] * dx[2];
  };
  const double h = two_pi / panels;
  double sum = integrand(0.0) + integrand(two_pi);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * integrand(i * h);
  return sum * h / 3.0;
}

}  // namespace dyonosc
