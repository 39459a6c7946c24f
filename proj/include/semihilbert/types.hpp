#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace semihilbert {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using Matrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using Vector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Matrixd = Matrix<double>;
using Vectord = Vector<double>;

// Residual-based checks all use the same relative scale: tol * max(1, scale).
template <typename Real>
constexpr Real default_tol() {
  return Real(1e-8);
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NegativeEntry : Error { using Error::Error; };
struct ZeroWeight : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotInBA : Error { using Error::Error; };
struct NotABounded : Error { using Error::Error; };
struct WeightMismatch : Error { using Error::Error; };
struct SkippedHypothesis : Error { using Error::Error; };
struct UnknownCase : Error { using Error::Error; };
struct InvalidRank : Error { using Error::Error; };
struct InvalidClass : Error { using Error::Error; };
struct DegenerateDraw : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };
struct NotFinite : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

template <typename Real>
bool all_finite(const Matrix<Real>& m) {
  return m.allFinite();
}

// Domain types validate entries once, on construction; operations assume
// finite inputs after that.
template <typename Real>
void require_finite(const Matrix<Real>& m, const char* what) {
  if (!m.allFinite()) throw NotFinite(std::string(what) + ": non-finite entry");
}

template <typename Real>
void require_square(const Matrix<Real>& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw DimensionMismatch(std::string(what) + ": square matrix required");
}

}  // namespace semihilbert
