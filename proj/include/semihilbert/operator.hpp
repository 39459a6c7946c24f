#pragma once
// SemiOperator: a square matrix bound to a weight, with its membership flags,
// its A-adjoint T# = A^+ T^* A when it exists, and its compression
// A^{1/2} T (A^{1/2})^+ cached both full-size and reduced to range(A).

#include <cmath>
#include <memory>
#include <utility>

#include "semihilbert/kernel.hpp"
#include "semihilbert/types.hpp"
#include "semihilbert/weight.hpp"

namespace semihilbert {

// The reduced compression: the rank x rank block of A^{1/2} T (A^{1/2})^+ in
// the eigenbasis of range(A). The full compression is always
// range_basis * reduced * range_basis^*, so norms, numerical radii and
// spectra of the compression can be read off the reduced block.
template <typename Real>
Matrix<Real> reduced_compression(const Weight<Real>& w, const Matrix<Real>& t) {
  if (t.rows() != w.dim() || t.cols() != w.dim())
    throw DimensionMismatch("reduced_compression: operator size must match weight");
  Matrix<Real> core = w.range_basis.adjoint() * t * w.range_basis;
  return w.sqrt_lambda.asDiagonal() * core * w.inv_sqrt_lambda.asDiagonal();
}

template <typename Real>
Matrix<Real> sharp(const Weight<Real>& w, const Matrix<Real>& t) {
  Membership m = in_BA(w, t);
  if (!m.member) throw NotInBA("sharp: operator admits no A-adjoint");
  return w.pinv_a * t.adjoint() * w.a;
}

template <typename Real>
struct SemiOperator {
  WeightPtr<Real> weight;
  Matrix<Real> op;
  bool in_ba = false;       // admits an A-adjoint
  bool in_ba_half = false;  // A-bounded
  Matrix<Real> sharp;       // empty unless in_ba
  Matrix<Real> tilde;       // full-size compression
  Matrix<Real> reduced;     // rank x rank compression block

  Eigen::Index dim() const { return op.rows(); }
};

template <typename Real>
SemiOperator<Real> make_operator(WeightPtr<Real> weight, const Matrix<Real>& t) {
  if (!weight) throw InvalidConfig("make_operator: null weight");
  require_square(t, "make_operator");
  require_finite(t, "make_operator");
  if (t.rows() != weight->dim())
    throw DimensionMismatch("make_operator: operator size must match weight");
  SemiOperator<Real> s;
  s.weight = std::move(weight);
  s.op = t;
  const Weight<Real>& w = *s.weight;
  s.in_ba = in_BA(w, t).member;
  // admitting an A-adjoint implies A-boundedness; keep the flags consistent
  // even when the two residuals straddle the tolerance differently
  s.in_ba_half = in_BA_half(w, t).member || s.in_ba;
  if (s.in_ba) s.sharp = w.pinv_a * t.adjoint() * w.a;
  s.reduced = reduced_compression(w, t);
  s.tilde = w.range_basis * s.reduced * w.range_basis.adjoint();
  return s;
}

template <typename Real>
const Matrix<Real>& compression(const SemiOperator<Real>& s) {
  if (!s.in_ba_half) throw NotABounded("compression: operator is not A-bounded");
  return s.tilde;
}

// (e^{i phase} T + e^{-i phase} T#) / 2, the rotated A-real part.
template <typename Real>
Matrix<Real> re_a(const Weight<Real>& w, const Matrix<Real>& t, Real phase = Real(0)) {
  Matrix<Real> sh = sharp(w, t);
  const Complex<Real> u = std::polar(Real(1), phase);
  return (u * t + std::conj(u) * sh) / Real(2);
}

template <typename Real>
Matrix<Real> re_a(const SemiOperator<Real>& s, Real phase = Real(0)) {
  if (!s.in_ba) throw NotInBA("re_a: operator admits no A-adjoint");
  const Complex<Real> u = std::polar(Real(1), phase);
  return (u * s.op + std::conj(u) * s.sharp) / Real(2);
}

template <typename Real>
bool is_a_selfadjoint(const Weight<Real>& w, const Matrix<Real>& t) {
  if (t.rows() != w.dim() || t.cols() != w.dim())
    throw DimensionMismatch("is_a_selfadjoint: operator size must match weight");
  Matrix<Real> at = w.a * t;
  return (at - at.adjoint()).norm() <= w.tol * std::max(Real(1), at.norm());
}

template <typename Real>
bool is_a_positive(const Weight<Real>& w, const Matrix<Real>& t) {
  if (!is_a_selfadjoint(w, t)) return false;
  Matrix<Real> at = w.a * t;
  Matrix<Real> h = (at + at.adjoint()) / Real(2);
  HermEig<Real> eig = hermitian_eig(h, Real(1));  // h is Hermitian by build
  const Real top = std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
  return eig.values(0) >= -w.tol * std::max(Real(1), top);
}

template <typename Real>
bool is_a_normal(const Weight<Real>& w, const Matrix<Real>& t) {
  Membership m = in_BA(w, t);
  if (!m.member) return false;
  Matrix<Real> sh = w.pinv_a * t.adjoint() * w.a;
  Matrix<Real> lhs = sh * t;
  Matrix<Real> rhs = t * sh;
  return (lhs - rhs).norm() <= w.tol * std::max(Real(1), lhs.norm());
}

struct Predicates {
  bool in_ba = false;
  bool in_ba_half = false;
  bool a_selfadjoint = false;
  bool a_positive = false;
  bool a_normal = false;
};

template <typename Real>
Predicates predicates(const Weight<Real>& w, const Matrix<Real>& t) {
  Predicates p;
  p.in_ba = in_BA(w, t).member;
  p.in_ba_half = in_BA_half(w, t).member || p.in_ba;
  p.a_selfadjoint = is_a_selfadjoint(w, t);
  p.a_positive = p.a_selfadjoint && is_a_positive(w, t);
  p.a_normal = is_a_normal(w, t);
  return p;
}

template <typename Real>
void require_same_weight(const SemiOperator<Real>& s, const SemiOperator<Real>& t,
                         const char* what) {
  if (!same_weight(*s.weight, *t.weight))
    throw WeightMismatch(std::string(what) + ": operators carry different weights");
}

}  // namespace semihilbert
