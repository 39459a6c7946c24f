#pragma once
// 2x2 block liftings: the doubled weight diag(A, A), assembly of block
// operators over it, and the transpose structure of the lifted A-adjoint.

#include <algorithm>
#include <memory>

#include "semihilbert/operator.hpp"
#include "semihilbert/types.hpp"
#include "semihilbert/weight.hpp"

namespace semihilbert {

template <typename Real>
Weight<Real> lift_weight(const Weight<Real>& w) {
  const Eigen::Index n = w.dim();
  Matrix<Real> a2 = Matrix<Real>::Zero(2 * n, 2 * n);
  a2.topLeftCorner(n, n) = w.a;
  a2.bottomRightCorner(n, n) = w.a;
  return make_weight(a2, w.tol);
}

template <typename Real>
WeightPtr<Real> lift_weight_ptr(const Weight<Real>& w) {
  return std::make_shared<const Weight<Real>>(lift_weight(w));
}

namespace detail {

template <typename Real>
bool is_lift_of(const Weight<Real>& lifted, const Weight<Real>& base) {
  const Eigen::Index n = base.dim();
  if (lifted.dim() != 2 * n) return false;
  const Real pad = Real(1e-12) * std::max(Real(1), base.a.norm());
  return (lifted.a.topLeftCorner(n, n) - base.a).norm() <= pad &&
         (lifted.a.bottomRightCorner(n, n) - base.a).norm() <= pad &&
         lifted.a.topRightCorner(n, n).norm() <= pad &&
         lifted.a.bottomLeftCorner(n, n).norm() <= pad;
}

}  // namespace detail

// Assemble [[tl, tr], [bl, br]] as an operator over the doubled weight. Each
// block must act on the base space and admit a base A-adjoint.
template <typename Real>
SemiOperator<Real> assemble(WeightPtr<Real> lifted, const Weight<Real>& base,
                            const Matrix<Real>& tl, const Matrix<Real>& tr,
                            const Matrix<Real>& bl, const Matrix<Real>& br) {
  if (!lifted) throw InvalidConfig("assemble: null lifted weight");
  if (!detail::is_lift_of(*lifted, base))
    throw WeightMismatch("assemble: weight is not the doubled base weight");
  const Eigen::Index n = base.dim();
  for (const Matrix<Real>* b : {&tl, &tr, &bl, &br}) {
    if (b->rows() != n || b->cols() != n)
      throw DimensionMismatch("assemble: block size must match base weight");
    if (!in_BA(base, *b).member)
      throw NotInBA("assemble: block admits no A-adjoint over the base weight");
  }
  Matrix<Real> m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = tl;
  m.topRightCorner(n, n) = tr;
  m.bottomLeftCorner(n, n) = bl;
  m.bottomRightCorner(n, n) = br;
  return make_operator(std::move(lifted), m);
}

// The A-adjoint of [[tl, tr], [bl, br]] over diag(A, A) swaps the
// off-diagonal blocks and takes blockwise adjoints:
// [[tl#, bl#], [tr#, br#]]. Returns the relative defect of that identity.
template <typename Real>
Real block_sharp_check(const Weight<Real>& base, const Matrix<Real>& tl,
                       const Matrix<Real>& tr, const Matrix<Real>& bl,
                       const Matrix<Real>& br) {
  WeightPtr<Real> lifted = lift_weight_ptr(base);
  SemiOperator<Real> m = assemble(lifted, base, tl, tr, bl, br);
  if (!m.in_ba) throw NotInBA("block_sharp_check: lifted operator admits no A-adjoint");
  const Eigen::Index n = base.dim();
  Matrix<Real> arranged(2 * n, 2 * n);
  arranged.topLeftCorner(n, n) = sharp(base, tl);
  arranged.topRightCorner(n, n) = sharp(base, bl);
  arranged.bottomLeftCorner(n, n) = sharp(base, tr);
  arranged.bottomRightCorner(n, n) = sharp(base, br);
  return (m.sharp - arranged).norm() / std::max(Real(1), m.sharp.norm());
}

}  // namespace semihilbert
