#ifndef HYLAT_GEOMETRY_HPP
#define HYLAT_GEOMETRY_HPP

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "hylat/errors.hpp"

// Hyperbolic-geometry kernel on the hyperboloid (Lorentz) model.
//
// A point of d-dimensional hyperbolic space with curvature -k < 0 is a
// (d+1)-vector x with x^T Lambda x = -1 and x_{d+1} > 0, where
// Lambda = diag(1, ..., 1, -1). All functions are pure and thread-safe.

namespace hylat {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Lorentzian inner product x^T Lambda y = sum_{i<=d} x_i y_i - x_{d+1} y_{d+1}.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar lorentz_inner(const Eigen::MatrixBase<DerivedX>& x,
                                        const Eigen::MatrixBase<DerivedY>& y) {
  if (x.size() != y.size()) {
    throw DimensionError("lorentz_inner: length mismatch (" +
                         std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()) + ")");
  }
  if (x.size() < 3) {
    throw DimensionError("lorentz_inner: vectors must have length >= 3");
  }
  const Eigen::Index d = x.size() - 1;
  return x.head(d).dot(y.head(d)) - x[d] * y[d];
}

/// The Minkowski form Lambda = diag(1, ..., 1, -1) of size (d+1) x (d+1).
template <typename Scalar = double>
MatrixX<Scalar> minkowski_form(int d) {
  if (d < 1) throw DomainError("minkowski_form: dimension must be >= 1");
  VectorX<Scalar> diag = VectorX<Scalar>::Ones(d + 1);
  diag[d] = Scalar(-1);
  return diag.asDiagonal();
}

/// Whether x lies on the upper hyperboloid sheet within `tol`.
template <typename Derived>
bool is_on_hyperboloid(const Eigen::MatrixBase<Derived>& x,
                       typename Derived::Scalar tol = 1e-9) {
  using std::abs;
  return abs(lorentz_inner(x, x) + typename Derived::Scalar(1)) <= tol &&
         x[x.size() - 1] > 0;
}

/// Geodesic distance on the hyperboloid with curvature -k:
/// acosh(-x^T Lambda y) / sqrt(k). The acosh argument is clamped to 1 from
/// below to absorb round-off for near-identical points; arguments below
/// 1 - 1e-9 indicate points off the sheet and raise ManifoldError.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar hyperboloid_distance(
    const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y,
    typename DerivedX::Scalar k) {
  using Scalar = typename DerivedX::Scalar;
  if (!(k > 0)) throw DomainError("hyperboloid_distance: curvature k must be > 0");
  const Scalar u = -lorentz_inner(x, y);
  if (u < Scalar(1) - Scalar(1e-9)) {
    throw ManifoldError(
        "hyperboloid_distance: -x^T Lambda y = " + std::to_string(u) +
        " < 1; points are off the hyperboloid sheet");
  }
  using std::acosh;
  using std::max;
  using std::sqrt;
  return acosh(max(u, Scalar(1))) / sqrt(k);
}

/// Poincare-ball distance with curvature -k:
/// acosh(1 + 2 ||x-y||^2 / ((1-||x||^2)(1-||y||^2))) / sqrt(k).
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar poincare_distance(
    const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y,
    typename DerivedX::Scalar k) {
  using Scalar = typename DerivedX::Scalar;
  if (!(k > 0)) throw DomainError("poincare_distance: curvature k must be > 0");
  if (x.size() != y.size()) {
    throw DimensionError("poincare_distance: length mismatch");
  }
  const Scalar sx = x.squaredNorm();
  const Scalar sy = y.squaredNorm();
  if (sx >= Scalar(1) || sy >= Scalar(1)) {
    throw DomainError("poincare_distance: points must lie in the open unit ball");
  }
  const Scalar q = (x - y).squaredNorm() / ((Scalar(1) - sx) * (Scalar(1) - sy));
  using std::log1p;
  using std::sqrt;
  // acosh(1 + t) = log1p(t + sqrt(t (t + 2))), stable for small t.
  const Scalar t = Scalar(2) * q;
  return log1p(t + sqrt(t * (t + Scalar(2)))) / sqrt(k);
}

/// Isometry F from the hyperboloid to the Poincare ball:
/// (x_1, ..., x_d, x_{d+1}) -> (x_1, ..., x_d) / (1 + x_{d+1}).
template <typename Derived>
VectorX<typename Derived::Scalar> to_poincare(
    const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (x.size() < 3) throw DimensionError("to_poincare: vector must have length >= 3");
  const Eigen::Index d = x.size() - 1;
  return x.head(d) / (Scalar(1) + x[d]);
}

/// Inverse isometry F^{-1} from the Poincare ball to the hyperboloid:
/// with s = ||p||^2, p -> (2 p, 1 + s) / (1 - s).
template <typename Derived>
VectorX<typename Derived::Scalar> to_hyperboloid(
    const Eigen::MatrixBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  const Scalar s = p.squaredNorm();
  if (s >= Scalar(1)) {
    throw DomainError("to_hyperboloid: point must lie in the open unit ball");
  }
  const Eigen::Index d = p.size();
  VectorX<Scalar> x(d + 1);
  x.head(d) = Scalar(2) * p;
  x[d] = Scalar(1) + s;
  x /= (Scalar(1) - s);
  return x;
}

/// Projection of an ambient vector g onto the tangent space at z:
/// proj_z(g) = g + (g^T Lambda z) z. The result r satisfies r^T Lambda z = 0.
template <typename DerivedZ, typename DerivedG>
VectorX<typename DerivedZ::Scalar> tangent_project(
    const Eigen::MatrixBase<DerivedZ>& z, const Eigen::MatrixBase<DerivedG>& g) {
  return g + lorentz_inner(g, z) * z;
}

/// Replaces the last coordinate by sqrt(1 + ||spatial part||^2), which puts
/// the point on the upper sheet exactly.
template <typename Derived>
VectorX<typename Derived::Scalar> lift_to_hyperboloid(
    const Eigen::MatrixBase<Derived>& w) {
  using Scalar = typename Derived::Scalar;
  if (w.size() < 3) {
    throw DimensionError("lift_to_hyperboloid: vector must have length >= 3");
  }
  const Eigen::Index d = w.size() - 1;
  VectorX<Scalar> x = w;
  using std::sqrt;
  x[d] = sqrt(Scalar(1) + w.head(d).squaredNorm());
  return x;
}

/// Exponential map at z applied to a tangent vector v:
/// exp_z(v) = cosh(m) z + (sinh(m)/m) v with m = sqrt(v^T Lambda v).
/// For m < 1e-12 the first-order limit z + v is used and the result is
/// re-lifted onto the sheet.
template <typename DerivedZ, typename DerivedV>
VectorX<typename DerivedZ::Scalar> exp_map(
    const Eigen::MatrixBase<DerivedZ>& z, const Eigen::MatrixBase<DerivedV>& v) {
  using Scalar = typename DerivedZ::Scalar;
  const Scalar vz = lorentz_inner(v, z);
  using std::abs;
  using std::max;
  const Scalar scale = max(Scalar(1), v.norm() * z.norm());
  if (abs(vz) > Scalar(1e-8) * scale) {
    throw ManifoldError("exp_map: v is not tangent at z (v^T Lambda z = " +
                        std::to_string(vz) + ")");
  }
  const Scalar m2 = max(lorentz_inner(v, v), Scalar(0));
  using std::cosh;
  using std::sinh;
  using std::sqrt;
  const Scalar m = sqrt(m2);
  if (m < Scalar(1e-12)) {
    return lift_to_hyperboloid((z + v).eval());
  }
  return cosh(m) * z + (sinh(m) / m) * v;
}

/// Generator of the isometry group acting on the coordinate pair (i, j),
/// 0-based, i < j <= d: a circular rotation when both coordinates are
/// spatial (j < d) and a hyperbolic rotation when j = d.
template <typename Scalar = double>
MatrixX<Scalar> rotation_generator(int i, int j, Scalar theta, int d) {
  if (d < 2) throw DomainError("rotation_generator: dimension must be >= 2");
  if (i < 0 || j <= i || j > d) {
    throw DomainError("rotation_generator: need 0 <= i < j <= d");
  }
  MatrixX<Scalar> q = MatrixX<Scalar>::Identity(d + 1, d + 1);
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  if (j == d) {
    q(i, i) = cosh(theta);
    q(i, j) = sinh(theta);
    q(j, i) = sinh(theta);
    q(j, j) = cosh(theta);
  } else {
    q(i, i) = cos(theta);
    q(i, j) = -sin(theta);
    q(j, i) = sin(theta);
    q(j, j) = cos(theta);
  }
  return q;
}

/// The three basic generators of Property-2 form, extended to dimension d:
/// kind 1 acts hyperbolically on (d-1, d), kind 2 on (0, d), and kind 3
/// rotates the first two spatial coordinates. For d = 2 these are exactly
/// the matrices Q1, Q2, Q3.
template <typename Scalar = double>
MatrixX<Scalar> hyperbolic_rotation(int kind, Scalar theta, int d) {
  switch (kind) {
    case 1:
      return rotation_generator<Scalar>(d - 1, d, theta, d);
    case 2:
      return rotation_generator<Scalar>(0, d, theta, d);
    case 3:
      return rotation_generator<Scalar>(0, 1, theta, d);
    default:
      throw DomainError("hyperbolic_rotation: kind must be 1, 2 or 3");
  }
}

/// Distance from a vertex to the midpoint of the opposite side in an
/// equilateral hyperbolic triangle with side length `side` under curvature
/// -k, from the hyperbolic law of cosines:
/// cosh(sqrt(k) s) = cosh(sqrt(k) s / 2) cosh(sqrt(k) CD).
template <typename Scalar>
Scalar equilateral_midpoint_distance(Scalar k, Scalar side) {
  if (!(k > 0)) {
    throw DomainError("equilateral_midpoint_distance: k must be > 0");
  }
  if (!(side > 0)) {
    throw DomainError("equilateral_midpoint_distance: side must be > 0");
  }
  using std::acosh;
  using std::cosh;
  using std::sqrt;
  const Scalar a = sqrt(k) * side;
  return acosh(cosh(a) / cosh(a / Scalar(2))) / sqrt(k);
}

}  // namespace hylat

#endif  // HYLAT_GEOMETRY_HPP
