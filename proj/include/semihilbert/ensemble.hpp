#pragma once
// Seeded random ensembles honoring the hypothesis classes: weights of exact
// rank, operators built blockwise in the A-adapted eigenbasis, unit A-vectors.

#include <cstdint>
#include <string>
#include <string_view>

#include "semihilbert/operator.hpp"
#include "semihilbert/rng.hpp"
#include "semihilbert/types.hpp"
#include "semihilbert/weight.hpp"

namespace semihilbert {

enum class OperandClass { GeneralInBA, ASelfadjoint, APositive, UnitAVector };

inline const char* to_string(OperandClass c) {
  switch (c) {
    case OperandClass::GeneralInBA: return "general_in_BA";
    case OperandClass::ASelfadjoint: return "a_selfadjoint";
    case OperandClass::APositive: return "a_positive";
    case OperandClass::UnitAVector: return "unit_a_vector";
  }
  return "unknown";
}

inline OperandClass operand_class_from_string(std::string_view s) {
  if (s == "general_in_BA") return OperandClass::GeneralInBA;
  if (s == "a_selfadjoint") return OperandClass::ASelfadjoint;
  if (s == "a_positive") return OperandClass::APositive;
  if (s == "unit_a_vector") return OperandClass::UnitAVector;
  throw InvalidClass("unknown operand class: " + std::string(s));
}

struct EnsembleSpec {
  int dim = 2;
  int rank = 2;
  OperandClass op_class = OperandClass::GeneralInBA;
  int trials = 1;
  std::uint64_t seed = 0;
  double scale = 1.0;
};

namespace detail {

template <typename Real>
void fill_cnormal(Matrix<Real>& m, SplitRng& rng) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex<Real>(rng.cnormal());
}

}  // namespace detail

template <typename Real = double>
Weight<Real> gen_weight(int dim, int rank, SplitRng& rng) {
  if (dim < 1) throw InvalidConfig("gen_weight: dim must be positive");
  if (rank < 1 || rank > dim) throw InvalidRank("gen_weight: need 1 <= rank <= dim");
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix<Real> g(dim, rank);
    detail::fill_cnormal(g, rng);
    Matrix<Real> a = g * g.adjoint();
    Weight<Real> w = make_weight(a);
    if (w.rank == rank) return w;
  }
  throw DegenerateDraw("gen_weight: requested rank not realized after 100 draws");
}

template <typename Real = double>
Weight<Real> gen_weight(int dim, int rank, std::uint64_t seed) {
  SplitRng rng(seed);
  return gen_weight<Real>(dim, rank, rng);
}

// Raw matrix of the requested class over w. Blocks in the eigenbasis
// [range, kernel]: the kernel-to-range block is always zero (membership),
// the range block is Gaussian / Lambda^{-1} Hermitian / Lambda^{-1} PSD.
template <typename Real = double>
Matrix<Real> gen_operator_matrix(const Weight<Real>& w, OperandClass cls, SplitRng& rng,
                                 Real scale = Real(1)) {
  if (cls == OperandClass::UnitAVector)
    throw InvalidClass("gen_operator_matrix: unit_a_vector is not an operator class");
  const Eigen::Index n = w.dim();
  const Eigen::Index r = w.rank;
  Matrix<Real> b11(r, r);
  switch (cls) {
    case OperandClass::GeneralInBA:
      detail::fill_cnormal(b11, rng);
      break;
    case OperandClass::ASelfadjoint: {
      Matrix<Real> g(r, r);
      detail::fill_cnormal(g, rng);
      Matrix<Real> h = (g + g.adjoint()) / Real(2);
      b11 = w.lambda.cwiseInverse().asDiagonal() * h;
      break;
    }
    case OperandClass::APositive: {
      Matrix<Real> l(r, r);
      detail::fill_cnormal(l, rng);
      Matrix<Real> h = l * l.adjoint();
      b11 = w.lambda.cwiseInverse().asDiagonal() * h;
      break;
    }
    default:
      throw InvalidClass("gen_operator_matrix: unknown class");
  }
  Matrix<Real> t;
  if (r == n) {
    t = w.range_basis * b11 * w.range_basis.adjoint();
  } else {
    Matrix<Real> b21(n - r, r), b22(n - r, n - r);
    detail::fill_cnormal(b21, rng);
    detail::fill_cnormal(b22, rng);
    Matrix<Real> b(n, n);
    b.topLeftCorner(r, r) = b11;
    b.topRightCorner(r, n - r).setZero();
    b.bottomLeftCorner(n - r, r) = b21;
    b.bottomRightCorner(n - r, n - r) = b22;
    Matrix<Real> u(n, n);
    u.leftCols(r) = w.range_basis;
    u.rightCols(n - r) = w.kernel_basis;
    t = u * b * u.adjoint();
  }
  return scale * t;
}

template <typename Real = double>
SemiOperator<Real> gen_operator(WeightPtr<Real> w, OperandClass cls, SplitRng& rng,
                                Real scale = Real(1)) {
  if (!w) throw InvalidConfig("gen_operator: null weight");
  Matrix<Real> t = gen_operator_matrix(*w, cls, rng, scale);
  return make_operator(std::move(w), t);
}

template <typename Real = double>
SemiOperator<Real> gen_operator(WeightPtr<Real> w, OperandClass cls, std::uint64_t seed,
                                Real scale = Real(1)) {
  SplitRng rng(seed);
  return gen_operator(std::move(w), cls, rng, scale);
}

// Gaussian vector supported on range(A), rescaled to unit A-seminorm.
template <typename Real = double>
Vector<Real> gen_unit_a_vector(const Weight<Real>& w, SplitRng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vector<Real> g(w.rank);
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = Complex<Real>(rng.cnormal());
    Vector<Real> x = w.range_basis * g;
    const Real norm = vec_seminorm(w, x);
    if (norm > Real(1e-12)) return x / norm;
  }
  throw DegenerateDraw("gen_unit_a_vector: degenerate draws 100 times in a row");
}

template <typename Real = double>
Vector<Real> gen_unit_a_vector(const Weight<Real>& w, std::uint64_t seed) {
  SplitRng rng(seed);
  return gen_unit_a_vector(w, rng);
}

}  // namespace semihilbert
