#pragma once
// Dense complex kernel: Hermitian eigendecomposition, PSD square root,
// Moore-Penrose pseudoinverse, spectral norm, classical numerical radius and
// spectral radius, and the closed-form norm of a symmetric nonnegative 2x2
// matrix. Everything downstream reduces to these.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "semihilbert/types.hpp"

namespace semihilbert {

template <typename Real>
Real default_rank_tol(Eigen::Index n) {
  return Real(n) * std::numeric_limits<Real>::epsilon() * Real(64);
}

template <typename Real>
Real hermiticity_defect(const Matrix<Real>& m) {
  return (m - m.adjoint()).norm() / std::max(Real(1), m.norm());
}

template <typename Real>
struct HermEig {
  RealVector<Real> values;  // ascending
  Matrix<Real> vectors;     // unitary columns; m = V diag(values) V^*
};

template <typename Real>
HermEig<Real> hermitian_eig(const Matrix<Real>& m, Real tol = default_tol<Real>()) {
  require_square(m, "hermitian_eig");
  require_finite(m, "hermitian_eig");
  if (hermiticity_defect(m) > tol)
    throw NotHermitian("hermitian_eig: input is not Hermitian within tol");
  Matrix<Real> h = (m + m.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<Matrix<Real>> es(h);
  if (es.info() != Eigen::Success) throw NoConvergence("hermitian_eig: no convergence");
  return {es.eigenvalues(), es.eigenvectors()};
}

// Largest eigenvalue of a Hermitian matrix. Closed forms for n <= 2 keep the
// sweep loops cheap; the solver object is reused across calls.
template <typename Real>
Real lambda_max_herm(const Matrix<Real>& x,
                     Eigen::SelfAdjointEigenSolver<Matrix<Real>>& es) {
  const Eigen::Index n = x.rows();
  if (n == 1) return x(0, 0).real();
  if (n == 2) {
    const Real p = x(0, 0).real(), s = x(1, 1).real();
    return (p + s) / Real(2) + std::hypot((p - s) / Real(2), std::abs(x(0, 1)));
  }
  es.compute(x, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NoConvergence("lambda_max: no convergence");
  return es.eigenvalues()(n - 1);
}

template <typename Real>
Real lambda_max_herm(const Matrix<Real>& x) {
  Eigen::SelfAdjointEigenSolver<Matrix<Real>> es;
  return lambda_max_herm(x, es);
}

template <typename Real>
Real spectral_norm(const Matrix<Real>& m) {
  require_finite(m, "spectral_norm");
  if (m.rows() == 0 || m.cols() == 0)
    throw DimensionMismatch("spectral_norm: empty matrix");
  if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
  Matrix<Real> g = m.adjoint() * m;
  const Real lam = lambda_max_herm(g);
  return std::sqrt(std::max(lam, Real(0)));
}

template <typename Real>
Matrix<Real> psd_sqrt(const Matrix<Real>& m, Real tol = default_tol<Real>()) {
  HermEig<Real> eig = hermitian_eig(m, tol);
  const Eigen::Index n = m.rows();
  const Real scale = std::max(std::abs(eig.values(0)), std::abs(eig.values(n - 1)));
  if (eig.values(0) < -tol * scale)
    throw NotPSD("psd_sqrt: negative eigenvalue beyond tol");
  RealVector<Real> s = eig.values.cwiseMax(Real(0)).cwiseSqrt();
  return eig.vectors * s.asDiagonal() * eig.vectors.adjoint();
}

// Moore-Penrose pseudoinverse with singular values below rank_tol * sigma_max
// treated as zero. rank_tol < 0 selects the default n*eps*64.
template <typename Real>
Matrix<Real> pinv(const Matrix<Real>& m, Real rank_tol = Real(-1)) {
  require_finite(m, "pinv");
  if (m.rows() == 0 || m.cols() == 0) throw DimensionMismatch("pinv: empty matrix");
  if (rank_tol < 0) rank_tol = default_rank_tol<Real>(std::max(m.rows(), m.cols()));
  Eigen::JacobiSVD<Matrix<Real>> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const Real cut = rank_tol * (sv.size() > 0 ? sv(0) : Real(0));
  RealVector<Real> inv = RealVector<Real>::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut && sv(i) > Real(0)) inv(i) = Real(1) / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

template <typename Real>
Real spectral_radius(const Matrix<Real>& m) {
  require_square(m, "spectral_radius");
  require_finite(m, "spectral_radius");
  if (m.rows() == 1) return std::abs(m(0, 0));
  Eigen::ComplexEigenSolver<Matrix<Real>> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw NoConvergence("spectral_radius: no convergence");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Norm of [[a, g], [g, b]] for nonnegative a, b, g.
template <typename Real>
Real sym2x2_nonneg_norm(Real a, Real b, Real g) {
  if (a < 0 || b < 0 || g < 0)
    throw NegativeEntry("sym2x2_nonneg_norm: entries must be nonnegative");
  return ((a + b) + std::hypot(a - b, 2 * g)) / Real(2);
}

template <typename Real>
struct SweepResult {
  Real value;
  Real error_halfwidth;  // certified bound on sup f - value
  Real arg;              // theta attaining value
};

namespace detail {

// Classic bounded Brent minimizer; xtol is absolute in x.
template <typename Real, typename F>
std::pair<Real, Real> brent_min(F&& f, Real a, Real b, Real xtol, int max_iter = 100) {
  const Real gold = (Real(3) - std::sqrt(Real(5))) / Real(2);
  Real x = a + gold * (b - a), w = x, v = x;
  Real fx = f(x), fw = fx, fv = fx;
  Real d = 0, e = 0;
  for (int it = 0; it < max_iter; ++it) {
    const Real m = (a + b) / Real(2);
    const Real tol1 = xtol, tol2 = 2 * tol1;
    if (std::abs(x - m) <= tol2 - (b - a) / Real(2)) break;
    Real p = 0, q = 0, r = 0;
    bool parabolic = false;
    if (std::abs(e) > tol1) {
      r = (x - w) * (fx - fv);
      q = (x - v) * (fx - fw);
      p = (x - v) * q - (x - w) * r;
      q = Real(2) * (q - r);
      if (q > 0) p = -p; else q = -q;
      if (std::abs(p) < std::abs(q * e / Real(2)) && p > q * (a - x) && p < q * (b - x)) {
        e = d;
        d = p / q;
        parabolic = true;
      }
    }
    if (!parabolic) {
      e = (x < m) ? b - x : a - x;
      d = gold * e;
    }
    const Real u = (std::abs(d) >= tol1) ? x + d : x + (d > 0 ? tol1 : -tol1);
    const Real fu = f(u);
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return {fx, x};
}

// Local maximum on [a, b]: coarse presample picks the best sub-bracket (the
// 2h seed brackets need not be unimodal), then Brent polishes.
template <typename Real, typename F>
std::pair<Real, Real> bracket_max(F&& f, Real a, Real b, Real xtol) {
  constexpr int presamples = 7;
  Real best = -std::numeric_limits<Real>::infinity(), barg = a;
  const Real step = (b - a) / (presamples + 1);
  for (int i = 1; i <= presamples; ++i) {
    const Real t = a + step * i;
    const Real v = f(t);
    if (v > best) { best = v; barg = t; }
  }
  auto neg = [&f](Real t) { return -f(t); };
  auto [nv, x] = brent_min(neg, std::max(a, barg - step), std::min(b, barg + step), xtol);
  if (-nv > best) { best = -nv; barg = x; }
  return {best, barg};
}

}  // namespace detail

// Supremum of a 2*pi-periodic function from a uniform seed grid plus local
// refinement. `lipschitz` must bound |f'|. Every grid-local maximum whose
// value reaches within lipschitz*step of the grid top is polished, so
// near-tied peaks all get refined before the max is taken; the half-width is
// the first-order hat bound over the seed segments and certifies that no
// unexamined peak can exceed value + error_halfwidth.
template <typename Real, typename F>
SweepResult<Real> periodic_sup(F&& f, Real lipschitz, int grid, Real refine_tol) {
  grid = std::max(grid, 8);
  const Real two_pi = Real(2) * Real(M_PI);
  const Real h = two_pi / grid;
  std::vector<Real> fv(static_cast<size_t>(grid));
  for (int i = 0; i < grid; ++i) fv[static_cast<size_t>(i)] = f(h * i);
  int top = 0;
  for (int i = 1; i < grid; ++i)
    if (fv[static_cast<size_t>(i)] > fv[static_cast<size_t>(top)]) top = i;
  Real best = fv[static_cast<size_t>(top)];
  Real best_arg = h * top;
  if (!(lipschitz > 0)) return {best, Real(0), best_arg};

  const Real thresh = best - lipschitz * h;
  for (int i = 0; i < grid; ++i) {
    const Real fi = fv[static_cast<size_t>(i)];
    const Real fp = fv[static_cast<size_t>((i + grid - 1) % grid)];
    const Real fn = fv[static_cast<size_t>((i + 1) % grid)];
    if (fi < thresh || fi < fp || fi < fn) continue;
    auto [v, arg] = detail::bracket_max(f, h * (i - 1), h * (i + 1), refine_tol);
    if (v > best) { best = v; best_arg = arg; }
  }
  Real ub = best;
  for (int i = 0; i < grid; ++i) {
    const Real hat =
        (fv[static_cast<size_t>(i)] + fv[static_cast<size_t>((i + 1) % grid)]) / Real(2) +
        lipschitz * h / Real(2);
    ub = std::max(ub, hat);
  }
  if (best_arg < 0) best_arg += two_pi;
  return {best, ub - best, best_arg};
}

namespace detail {

// f(theta) = lambda_max(cos(theta) H + sin(theta) K) with H, K the Hermitian
// and skew parts of a fixed matrix; reuses one solver and one workspace.
template <typename Real>
struct RotatedHermPart {
  Matrix<Real> h, k;
  mutable Matrix<Real> x;
  mutable Eigen::SelfAdjointEigenSolver<Matrix<Real>> es;

  explicit RotatedHermPart(const Matrix<Real>& m)
      : h((m + m.adjoint()) / Real(2)),
        k((m - m.adjoint()) * Complex<Real>(Real(0), Real(0.5))),
        x(m.rows(), m.cols()) {}

  Real operator()(Real t) const {
    x = std::cos(t) * h + std::sin(t) * k;
    return lambda_max_herm(x, es);
  }
};

}  // namespace detail

// Classical numerical radius w(m) = sup_theta lambda_max(Re(e^{i theta} m)),
// evaluated on a uniform grid of `grid` points with local refinement to
// theta-resolution refine_tol. The half-width certifies the supremum over
// unexamined angles through the Lipschitz bound |f'| <= ||m||.
template <typename Real>
SweepResult<Real> numerical_radius(const Matrix<Real>& m, int grid = 512,
                                   Real refine_tol = Real(1e-12)) {
  require_square(m, "numerical_radius");
  require_finite(m, "numerical_radius");
  const Eigen::Index n = m.rows();
  if (n == 1) {
    const Real v = std::abs(m(0, 0));
    return {v, Real(0), v > 0 ? -std::arg(m(0, 0)) : Real(0)};
  }
  const Real lip = spectral_norm(m);
  if (!(lip > 0)) return {Real(0), Real(0), Real(0)};
  detail::RotatedHermPart<Real> f(m);
  SweepResult<Real> r = periodic_sup([&f](Real t) { return f(t); }, lip, grid, refine_tol);
  r.error_halfwidth += Real(64) * std::numeric_limits<Real>::epsilon() * lip;
  return r;
}

}  // namespace semihilbert
