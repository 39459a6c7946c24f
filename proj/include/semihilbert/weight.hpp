#pragma once
// Weight: a fixed PSD matrix A together with its cached spectral machinery
// (square root, pseudoinverses, range projection), the semi-inner product
// <x,y>_A = <Ax,y>, and the range-inclusion membership tests it induces.

#include <algorithm>
#include <memory>

#include "semihilbert/kernel.hpp"
#include "semihilbert/types.hpp"

namespace semihilbert {

template <typename Real>
struct Weight {
  Matrix<Real> a;
  Matrix<Real> sqrt_a;       // A^{1/2}
  Matrix<Real> pinv_a;       // A^+
  Matrix<Real> pinv_sqrt_a;  // (A^{1/2})^+
  Matrix<Real> proj;         // A A^+, orthogonal projection onto range(A)
  Eigen::Index rank = 0;
  Real tol = default_tol<Real>();

  // spectral cache: a = range_basis * lambda.asDiagonal() * range_basis^*
  Matrix<Real> range_basis;   // dim x rank, orthonormal
  Matrix<Real> kernel_basis;  // dim x (dim - rank), orthonormal
  RealVector<Real> lambda;    // kept eigenvalues, ascending, > 0
  RealVector<Real> sqrt_lambda;
  RealVector<Real> inv_sqrt_lambda;

  Eigen::Index dim() const { return a.rows(); }
};

template <typename Real>
using WeightPtr = std::shared_ptr<const Weight<Real>>;

template <typename Real>
Weight<Real> make_weight(const Matrix<Real>& a, Real tol = default_tol<Real>()) {
  require_square(a, "make_weight");
  require_finite(a, "make_weight");
  if (hermiticity_defect(a) > tol)
    throw NotHermitian("make_weight: weight is not Hermitian within tol");
  HermEig<Real> eig = hermitian_eig(a, tol);
  const Eigen::Index n = a.rows();
  const Real top = eig.values(n - 1);
  const Real scale = std::max(std::abs(eig.values(0)), std::abs(top));
  if (!(scale > Real(0))) throw ZeroWeight("make_weight: zero weight");
  if (eig.values(0) < -tol * scale)
    throw NotPSD("make_weight: negative eigenvalue beyond tol");
  const Real cut = default_rank_tol<Real>(n) * top;

  Weight<Real> w;
  w.tol = tol;
  w.a = (a + a.adjoint()) / Real(2);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (eig.values(i) > cut) ++r;
  if (r == 0) throw ZeroWeight("make_weight: numerically zero weight");
  w.rank = r;
  w.range_basis = eig.vectors.rightCols(r);
  w.kernel_basis = eig.vectors.leftCols(n - r);
  w.lambda = eig.values.tail(r);
  w.sqrt_lambda = w.lambda.cwiseSqrt();
  w.inv_sqrt_lambda = w.sqrt_lambda.cwiseInverse();
  w.sqrt_a = w.range_basis * w.sqrt_lambda.asDiagonal() * w.range_basis.adjoint();
  w.pinv_a = w.range_basis * w.lambda.cwiseInverse().asDiagonal() * w.range_basis.adjoint();
  w.pinv_sqrt_a = w.range_basis * w.inv_sqrt_lambda.asDiagonal() * w.range_basis.adjoint();
  w.proj = w.a * w.pinv_a;
  return w;
}

template <typename Real>
WeightPtr<Real> make_weight_ptr(const Matrix<Real>& a, Real tol = default_tol<Real>()) {
  return std::make_shared<const Weight<Real>>(make_weight(a, tol));
}

template <typename Real>
Complex<Real> semi_inner(const Weight<Real>& w, const Vector<Real>& x, const Vector<Real>& y) {
  if (x.size() != w.dim() || y.size() != w.dim())
    throw DimensionMismatch("semi_inner: vector length must match weight dimension");
  // <x,y>_A = <Ax,y> = sum_k (Ax)_k conj(y_k)
  return (y.adjoint() * (w.a * x))(0, 0);
}

template <typename Real>
Real vec_seminorm(const Weight<Real>& w, const Vector<Real>& x) {
  if (x.size() != w.dim())
    throw DimensionMismatch("vec_seminorm: vector length must match weight dimension");
  return (w.sqrt_a * x).norm();
}

struct Membership {
  bool member = false;
  double residual = 0;  // relative residual actually measured
};

// T admits an A-adjoint (range(T^* A) contained in range(A), by the
// projection residual).
template <typename Real>
Membership in_BA(const Weight<Real>& w, const Matrix<Real>& t) {
  if (t.rows() != w.dim() || t.cols() != w.dim())
    throw DimensionMismatch("in_BA: operator size must match weight dimension");
  Matrix<Real> ta = t.adjoint() * w.a;
  const Real res = (ta - w.proj * ta).norm() / std::max(Real(1), ta.norm());
  return {res <= w.tol, static_cast<double>(res)};
}

// T is A-bounded (maps the kernel of A into itself).
template <typename Real>
Membership in_BA_half(const Weight<Real>& w, const Matrix<Real>& t) {
  if (t.rows() != w.dim() || t.cols() != w.dim())
    throw DimensionMismatch("in_BA_half: operator size must match weight dimension");
  Matrix<Real> st = w.sqrt_a * t;
  const Real res = (st - st * w.proj).norm() / std::max(Real(1), st.norm());
  return {res <= w.tol, static_cast<double>(res)};
}

// Weights are shared by handle; two operators interoperate when they hold the
// same weight object or bitwise-equal weight matrices.
template <typename Real>
bool same_weight(const Weight<Real>& u, const Weight<Real>& v) {
  if (&u == &v) return true;
  return u.dim() == v.dim() && u.a == v.a;
}

}  // namespace semihilbert
