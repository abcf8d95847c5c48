#pragma once

#include <span>
#include <vector>

namespace dyonosc {

/// Point u of the oscillator configuration space R^D, D in {1, 2, 4, 8}.
///
/// Components are stored in the order the bilinear maps are written in:
/// u1..uD for D <= 4 and u0..u7 for D = 8.
class OscPoint {
 public:
  explicit OscPoint(std::vector<double> u);

  int dim() const { return static_cast<int>(u_.size()); }
  std::span<const double> u() const { return u_; }
  double operator[](int i) const { return u_[static_cast<std::size_t>(i)]; }
  double norm_squared() const;

 private:
  std::vector<double> u_;
};

/// Point x of the charge-dyon configuration space R^d, d in {1, 2, 3, 5}.
class DyonPoint {
 public:
  explicit DyonPoint(std::vector<double> x);

  int dim() const { return static_cast<int>(x_.size()); }
  std::span<const double> x() const { return x_; }
  double operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
  double radius() const;

 private:
  std::vector<double> x_;
};

/// Dyon dimension paired with an oscillator dimension: 1 -> 1, else D/2 + 1.
int dyon_dim(int osc_dim);

/// D x D matrix H(u; D) with x = H u, stored row-major.
struct HurwitzMatrix {
  int dim = 0;
  std::vector<double> entries;

  double operator()(int row, int col) const {
    return entries[static_cast<std::size_t>(row * dim + col)];
  }
  std::vector<double> apply(std::span<const double> v) const;
};

/// Angles on the fibre over x. For D = 4 these are (alpha, beta, gamma) of the
/// symmetric-top parametrization; for D = 8 they are (alpha_T, beta_T, gamma_T).
/// alpha in [0, 2pi), beta in (0, pi), gamma in [0, 4pi).
struct FiberAngles {
  int dim = 4;
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
};

/// Levi-Civita (D=2), Kustaanheimo-Stiefel (D=4) and Hurwitz (D=8) matrices.
/// Throws Errc::unsupported_dimension for D = 1.
HurwitzMatrix hurwitz_matrix(const OscPoint& u);

/// x = u^2 for D = 1, otherwise the first d rows of H(u; D) u.
DyonPoint forward_map(const OscPoint& u);

/// (sum u^2)^2 - sum x^2 for x = forward_map(u).
double euler_residual(const OscPoint& u);

/// max |(H u)_k| over the rows k >= d that must vanish. D in {4, 8}.
double zero_rows_residual(const OscPoint& u);

/// Fibre angles of u. Throws Errc::degenerate_fiber if one of the two
/// complex pairs vanishes, Errc::unsupported_dimension unless D in {4, 8}.
FiberAngles fiber_angles(const OscPoint& u);

/// Inverse of the D = 4 parametrization:
///   u1 + i u2 = |u| cos(beta/2) e^{i(alpha+gamma)/2}
///   u3 + i u4 = |u| sin(beta/2) e^{i(alpha-gamma)/2}
OscPoint ks_point(double radius, const FiberAngles& angles);

}  // namespace dyonosc
