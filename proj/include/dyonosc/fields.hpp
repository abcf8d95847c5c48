#pragma once

#include <array>
#include <vector>

#include "dyonosc/halfint.hpp"
#include "dyonosc/units.hpp"

namespace dyonosc {

/// Dirac pair: g = hbar c s / e.
class MagneticCharge {
 public:
  /// Throws Errc::domain_error for e == 0 or non-finite e.
  MagneticCharge(HalfInt s, double e, const Units& units);

  double g() const { return g_; }
  HalfInt s() const { return s_; }
  double e() const { return e_; }
  double hbar() const { return hbar_; }
  double c() const { return c_; }

 private:
  double g_;
  HalfInt s_;
  double e_;
  double hbar_;
  double c_;
};

/// Throws Errc::quantization_violation unless 2s is an integer.
MagneticCharge dirac_charge(double s, double e, const Units& units);
MagneticCharge dirac_charge(HalfInt s, double e, const Units& units);

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Vec5 = std::array<double, 5>;

/// (g / r^2)(x2, -x1). Throws Errc::singular_point at the origin.
Vec2 vortex_potential(double g, double x1, double x2);

/// (g sin b / (r (1 + cos b)))(sin a, -cos a, 0). Throws Errc::singular_point
/// on the string (1 + cos b < 1e-12) or at r = 0.
Vec3 dirac_potential(double g, double r, double alpha, double beta);
Vec3 dirac_potential_cartesian(double g, const Vec3& x);

/// A^1, A^2, A^3 with prefactor 1 / (r (r + x0)), x = (x0, x1, x2, x3, x4).
/// Throws Errc::singular_point when r + x0 <= 1e-12 r.
std::array<Vec5, 3> yang_potentials(const Vec5& x);

/// hbar^2 s^2 / (2 mu r^2).
double goldhaber_term(HalfInt s, const Units& units, double r);

enum class FieldKind { vortex, dirac, yang };

struct FieldSpec {
  FieldKind kind = FieldKind::vortex;
  double g = 1.0;  // unused for yang
};

/// Field values at a point: one 2-vector, one 3-vector, or three 5-vectors.
struct GaugeField {
  FieldKind kind = FieldKind::vortex;
  std::vector<std::vector<double>> components;
};

/// `point` holds 2, 3 or 5 Cartesian coordinates as the kind requires.
GaugeField evaluate_field(const FieldSpec& spec, const std::vector<double>& point);

/// center + radius (cos t e1 + sin t e2), t in [0, 2 pi).
struct Circle {
  Vec3 center{};
  Vec3 e1{1, 0, 0};
  Vec3 e2{0, 1, 0};
  double radius = 1.0;

  /// Circle about the origin in the x1-x2 plane.
  static Circle planar(double radius);
  /// Latitude circle at spherical (r, beta) about the x3 axis.
  static Circle latitude(double r, double beta);
};

/// Composite-Simpson line integral of A.dl over the circle (10^4 panels by
/// default). Vortex and Dirac fields only. Throws Errc::singular_point when the
/// loop meets a singularity.
double circulation(const FieldSpec& spec, const Circle& loop, int panels = 10000);

}  // namespace dyonosc
