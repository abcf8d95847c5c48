#include "dyonosc/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dyonosc/error.hpp"

namespace dyonosc {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double a) { return std::isfinite(a); });
}

double sum_squares(std::span<const double> v) {
  double s = 0;
  for (double a : v) s += a * a;
  return s;
}

// Reduces into [0, period); fmod can return `period` itself after the shift.
double wrap(double angle, double period) {
  double r = std::fmod(angle, period);
  if (r < 0) r += period;
  if (r >= period) r -= period;
  return r;
}

double arg0(double re, double im) { return wrap(std::atan2(im, re), kTwoPi); }

// Lifts a pair of angles known modulo 2pi to (a, b) with a = first + second
// reduced to [0, 2pi) and b = other reduced to [0, 4pi), keeping the
// half-angle combinations (b +- a)/2 consistent with the original phases.
void lift(double sum, double diff, double& a_out, double& b_out) {
  const double k = std::floor(sum / kTwoPi);
  a_out = sum - kTwoPi * k;
  b_out = wrap(diff + kTwoPi * k, kFourPi);
}

}  // namespace

OscPoint::OscPoint(std::vector<double> u) : u_(std::move(u)) {
  const int d = dim();
  if (d != 1 && d != 2 && d != 4 && d != 8) {
    throw Error(Errc::unsupported_dimension, "oscillator dimension " + std::to_string(d));
  }
  if (!all_finite(u_)) throw Error(Errc::invalid_parameter, "non-finite oscillator coordinate");
}

double OscPoint::norm_squared() const { return sum_squares(u_); }

DyonPoint::DyonPoint(std::vector<double> x) : x_(std::move(x)) {
  const int d = dim();
  if (d != 1 && d != 2 && d != 3 && d != 5) {
    throw Error(Errc::unsupported_dimension, "dyon dimension " + std::to_string(d));
  }
  if (!all_finite(x_)) throw Error(Errc::invalid_parameter, "non-finite dyon coordinate");
}

double DyonPoint::radius() const { return std::sqrt(sum_squares(x_)); }

int dyon_dim(int osc_dim) {
  switch (osc_dim) {
    case 1: return 1;
    case 2: return 2;
    case 4: return 3;
    case 8: return 5;
    default: throw Error(Errc::unsupported_dimension, "oscillator dimension " + std::to_string(osc_dim));
  }
}

std::vector<double> HurwitzMatrix::apply(std::span<const double> v) const {
  std::vector<double> out(static_cast<std::size_t>(dim), 0.0);
  for (int r = 0; r < dim; ++r) {
    double acc = 0;
    for (int c = 0; c < dim; ++c) acc += (*this)(r, c) * v[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

HurwitzMatrix hurwitz_matrix(const OscPoint& p) {
  const auto u = p.u();
  HurwitzMatrix h;
  h.dim = p.dim();
  switch (p.dim()) {
    case 2: {
      const double u1 = u[0], u2 = u[1];
      h.entries = {u1, -u2,
                   u2, u1};
      break;
    }
    case 4: {
      const double u1 = u[0], u2 = u[1], u3 = u[2], u4 = u[3];
      h.entries = {u3, -u4, u1, -u2,
                   u4, u3, u2, u1,
                   u1, u2, -u3, -u4,
                   u2, -u1, -u4, u3};
      break;
    }
    case 8: {
      const double u0 = u[0], u1 = u[1], u2 = u[2], u3 = u[3];
      const double u4 = u[4], u5 = u[5], u6 = u[6], u7 = u[7];
      h.entries = {u0, u1, u2, u3, -u4, -u5, -u6, -u7,
                   u4, u5, -u6, -u7, u0, u1, -u2, -u3,
                   u5, -u4, u7, -u6, -u1, u0, -u3, u2,
                   u6, u7, u4, u5, u2, u3, u0, u1,
                   u7, -u6, -u5, u4, u3, -u2, -u1, u0,
                   u1, -u0, u3, -u2, u5, -u4, u7, -u6,
                   u2, -u3, -u0, u1, -u6, u7, u4, -u5,
                   u3, u2, -u1, -u0, -u7, -u6, u5, u4};
      break;
    }
    default:
      throw Error(Errc::unsupported_dimension,
                  "the D=1 map x=u^2 has no matrix form");
  }
  return h;
}

DyonPoint forward_map(const OscPoint& p) {
  if (p.dim() == 1) return DyonPoint({p[0] * p[0]});
  auto full = hurwitz_matrix(p).apply(p.u());
  full.resize(static_cast<std::size_t>(dyon_dim(p.dim())));
  return DyonPoint(std::move(full));
}

double euler_residual(const OscPoint& p) {
  const double u2 = p.norm_squared();
  const DyonPoint x = forward_map(p);
  return u2 * u2 - sum_squares(x.x());
}

double zero_rows_residual(const OscPoint& p) {
  if (p.dim() != 4 && p.dim() != 8) {
    throw Error(Errc::unsupported_dimension,
                "vanishing rows exist only for D=4 and D=8");
  }
  const auto full = hurwitz_matrix(p).apply(p.u());
  double worst = 0;
  for (std::size_t k = static_cast<std::size_t>(dyon_dim(p.dim())); k < full.size(); ++k) {
    worst = std::max(worst, std::abs(full[k]));
  }
  return worst;
}

FiberAngles fiber_angles(const OscPoint& p) {
  if (p.dim() != 4 && p.dim() != 8) {
    throw Error(Errc::unsupported_dimension, "fibre angles exist only for D=4 and D=8");
  }
  // Both variants split u into two complex numbers w1 = u[0] + i u[1] and
  // w2 = u[2] + i u[3].
  const double m1 = std::hypot(p[0], p[1]);
  const double m2 = std::hypot(p[2], p[3]);
  if (m1 == 0.0 || m2 == 0.0) {
    throw Error(Errc::degenerate_fiber, "a complex coordinate pair vanishes; the fibre angles are undefined");
  }
  const double a1 = arg0(p[0], p[1]);
  const double a2 = arg0(p[2], p[3]);

  FiberAngles f;
  f.dim = p.dim();
  if (p.dim() == 4) {
    // u1 + i u2 ~ e^{i(alpha+gamma)/2}, u3 + i u4 ~ e^{i(alpha-gamma)/2}
    f.beta = 2.0 * std::atan2(m2, m1);
    lift(a1 + a2, a1 - a2, f.alpha, f.gamma);
  } else {
    // alpha_T = (i/2) ln[(w1 conj(w2)) / (conj(w1) w2)] = arg w2 - arg w1
    // gamma_T = (i/2) ln[(conj(w1) conj(w2)) / (w1 w2)] = arg w1 + arg w2
    // beta_T  = 2 arctan(|w1| / |w2|)
    f.beta = 2.0 * std::atan2(m1, m2);
    // so w1 ~ e^{i(gamma_T - alpha_T)/2} and w2 ~ e^{i(gamma_T + alpha_T)/2}.
    lift(a2 - a1, a1 + a2, f.alpha, f.gamma);
  }
  return f;
}

OscPoint ks_point(double radius, const FiberAngles& angles) {
  if (angles.dim != 4) throw Error(Errc::unsupported_dimension, "ks_point needs D=4 angles");
  const double c = radius * std::cos(0.5 * angles.beta);
  const double s = radius * std::sin(0.5 * angles.beta);
  const double p1 = 0.5 * (angles.alpha + angles.gamma);
  const double p2 = 0.5 * (angles.alpha - angles.gamma);
  return OscPoint({c * std::cos(p1), c * std::sin(p1), s * std::cos(p2), s * std::sin(p2)});
}

}  // namespace dyonosc
