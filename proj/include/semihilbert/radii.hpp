#pragma once
// Seminorm, numerical radius and spectral radius induced by a weight.
// Everything is evaluated on the reduced compression (rank x rank), which
// carries the full compression up to a unitary and a zero block.

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "semihilbert/kernel.hpp"
#include "semihilbert/operator.hpp"
#include "semihilbert/types.hpp"
#include "semihilbert/weight.hpp"

namespace semihilbert {

enum class RadiusMethod { Compression, ThetaSweep, Eigenvalues, LimitFormula };

inline const char* to_string(RadiusMethod m) {
  switch (m) {
    case RadiusMethod::Compression: return "compression";
    case RadiusMethod::ThetaSweep: return "theta_sweep";
    case RadiusMethod::Eigenvalues: return "eigen";
    case RadiusMethod::LimitFormula: return "limit";
  }
  return "unknown";
}

inline RadiusMethod radius_method_from_string(std::string_view s) {
  if (s == "compression") return RadiusMethod::Compression;
  if (s == "theta_sweep") return RadiusMethod::ThetaSweep;
  if (s == "eigen") return RadiusMethod::Eigenvalues;
  if (s == "limit") return RadiusMethod::LimitFormula;
  throw InvalidConfig("unknown radius method: " + std::string(s));
}

template <typename Real>
struct RadiusResult {
  Real value = Real(0);
  RadiusMethod method = RadiusMethod::Compression;
  Real error_halfwidth = Real(0);
};

template <typename Real>
struct SweepOptions {
  int grid = 512;                 // seed grid for the periodic sweeps
  Real refine_tol = Real(1e-12);  // local refinement tolerance
};

// ---- raw evaluations on matrices already known to be A-bounded ----
// These skip membership checks; use them for derived expressions (products,
// sums, rotated parts) whose membership follows from closure of the class.

template <typename Real>
Real op_seminorm(const Weight<Real>& w, const Matrix<Real>& m) {
  return spectral_norm(reduced_compression(w, m));
}

template <typename Real>
SweepResult<Real> a_numerical_radius(const Weight<Real>& w, const Matrix<Real>& m,
                                     const SweepOptions<Real>& opt = {}) {
  return numerical_radius(reduced_compression(w, m), opt.grid, opt.refine_tol);
}

template <typename Real>
Real a_spectral_radius(const Weight<Real>& w, const Matrix<Real>& m) {
  return spectral_radius(reduced_compression(w, m));
}

// ---- operator-level evaluations with membership enforcement ----

template <typename Real>
Real op_seminorm(const SemiOperator<Real>& s) {
  if (!s.in_ba_half) throw NotABounded("op_seminorm: operator is not A-bounded");
  return spectral_norm(s.reduced);
}

namespace detail {

// sup over theta of || (e^{i theta} R + e^{-i theta} Rs) / 2 ||_2, the rotated
// A-real part pushed through the reduced compression.
template <typename Real>
SweepResult<Real> rotated_part_sup(const Matrix<Real>& r, const Matrix<Real>& rs,
                                   Real lipschitz, const SweepOptions<Real>& opt) {
  Matrix<Real> work;
  auto f = [&](Real theta) {
    const Complex<Real> u = std::polar(Real(1), theta);
    work = (u * r + std::conj(u) * rs) / Real(2);
    return spectral_norm(work);
  };
  SweepResult<Real> out = periodic_sup<Real>(f, lipschitz, opt.grid, opt.refine_tol);
  out.error_halfwidth += Real(64) * std::numeric_limits<Real>::epsilon() * lipschitz;
  return out;
}

}  // namespace detail

template <typename Real>
RadiusResult<Real> a_numerical_radius(const SemiOperator<Real>& s,
                                      RadiusMethod method = RadiusMethod::Compression,
                                      const SweepOptions<Real>& opt = {}) {
  RadiusResult<Real> out;
  out.method = method;
  switch (method) {
    case RadiusMethod::Compression: {
      if (!s.in_ba_half) throw NotABounded("a_numerical_radius: operator is not A-bounded");
      SweepResult<Real> sw = numerical_radius(s.reduced, opt.grid, opt.refine_tol);
      out.value = sw.value;
      out.error_halfwidth = sw.error_halfwidth;
      return out;
    }
    case RadiusMethod::ThetaSweep: {
      if (!s.in_ba) throw NotInBA("a_numerical_radius: theta sweep needs an A-adjoint");
      const Weight<Real>& w = *s.weight;
      Matrix<Real> rs = reduced_compression(w, s.sharp);
      const Real lip = spectral_norm(s.reduced);
      if (lip == Real(0)) return out;
      SweepResult<Real> sw = detail::rotated_part_sup(s.reduced, rs, lip, opt);
      out.value = sw.value;
      out.error_halfwidth = sw.error_halfwidth;
      return out;
    }
    default:
      throw InvalidConfig("a_numerical_radius: method must be compression or theta_sweep");
  }
}

namespace detail {

// min over n in {1,2,4,8,16,32,64} of ||M^n||^{1/n}, M normalized first so the
// repeated squaring stays in range. The half-width is the last-step delta, a
// convergence estimate rather than a certified bound.
template <typename Real>
RadiusResult<Real> spectral_radius_by_powers(const Matrix<Real>& m) {
  RadiusResult<Real> out;
  out.method = RadiusMethod::LimitFormula;
  const Real scale = spectral_norm(m);
  if (scale == Real(0)) return out;
  Matrix<Real> p = m / scale;
  Real best = std::numeric_limits<Real>::infinity();
  Real prev = Real(0), last = Real(0);
  int n = 1;
  for (int step = 0; step < 7; ++step) {
    const Real val = scale * std::pow(spectral_norm(p), Real(1) / Real(n));
    best = std::min(best, val);
    prev = last;
    last = val;
    if (step + 1 < 7) {
      p = (p * p).eval();
      n *= 2;
    }
  }
  out.value = best;
  out.error_halfwidth = std::abs(last - prev);
  return out;
}

}  // namespace detail

template <typename Real>
RadiusResult<Real> a_spectral_radius(const SemiOperator<Real>& s,
                                     RadiusMethod method = RadiusMethod::Eigenvalues,
                                     const SweepOptions<Real>& = {}) {
  if (!s.in_ba_half) throw NotABounded("a_spectral_radius: operator is not A-bounded");
  RadiusResult<Real> out;
  out.method = method;
  switch (method) {
    case RadiusMethod::Eigenvalues:
      out.value = spectral_radius(s.reduced);
      // nominal floating-point figure, not a certified bound
      out.error_halfwidth =
          Real(64) * std::numeric_limits<Real>::epsilon() * std::max(Real(1), s.reduced.norm());
      return out;
    case RadiusMethod::LimitFormula:
      return detail::spectral_radius_by_powers(s.reduced);
    default:
      throw InvalidConfig("a_spectral_radius: method must be eigen or limit");
  }
}

// sup over theta of the seminorm of re_a(T, theta) * re_a(S, theta).
template <typename Real>
SweepResult<Real> theta_sup_product(const SemiOperator<Real>& t, const SemiOperator<Real>& s,
                                    const SweepOptions<Real>& opt = {}) {
  if (!t.in_ba || !s.in_ba) throw NotInBA("theta_sup_product: both operators need A-adjoints");
  require_same_weight(t, s, "theta_sup_product");
  const Weight<Real>& w = *t.weight;
  Matrix<Real> rt = t.reduced;
  Matrix<Real> rts = reduced_compression(w, t.sharp);
  Matrix<Real> rs = s.reduced;
  Matrix<Real> rss = reduced_compression(w, s.sharp);
  const Real nt = spectral_norm(rt);
  const Real ns = spectral_norm(rs);
  if (nt == Real(0) || ns == Real(0)) return {Real(0), Real(0), Real(0)};
  const Real lip = Real(2) * nt * ns;
  Matrix<Real> left, right, prod;
  auto f = [&](Real theta) {
    const Complex<Real> u = std::polar(Real(1), theta);
    left = (u * rt + std::conj(u) * rts) / Real(2);
    right = (u * rs + std::conj(u) * rss) / Real(2);
    prod = left * right;
    return spectral_norm(prod);
  };
  SweepResult<Real> out = periodic_sup<Real>(f, lip, opt.grid, opt.refine_tol);
  out.error_halfwidth += Real(64) * std::numeric_limits<Real>::epsilon() * lip;
  return out;
}

}  // namespace semihilbert
