#pragma once
// The case catalog: every seminorm/radius inequality and identity the library
// certifies, keyed C01..C29. evaluate() maps operands to lhs/rhs links with
// certified-interval comparison; tightness() compares bounds against named
// baselines.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "semihilbert/block2.hpp"
#include "semihilbert/ensemble.hpp"
#include "semihilbert/radii.hpp"
#include "semihilbert/types.hpp"

namespace semihilbert {

enum class CaseId : int {
  C01 = 1, C02, C03, C04, C05, C06, C07, C08, C09, C10,
  C11, C12, C13, C14, C15, C16, C17, C18, C19, C20,
  C21, C22, C23, C24, C25, C26, C27, C28, C29
};

inline std::string to_string(CaseId id) {
  const int n = static_cast<int>(id);
  return (n < 10 ? "C0" : "C") + std::to_string(n);
}

inline CaseId case_from_string(std::string_view s) {
  if (s.size() == 3 && s[0] == 'C' && s[1] >= '0' && s[1] <= '9' && s[2] >= '0' && s[2] <= '9') {
    const int n = (s[1] - '0') * 10 + (s[2] - '0');
    if (n >= 1 && n <= 29) return static_cast<CaseId>(n);
  }
  throw UnknownCase("unknown case id: " + std::string(s));
}

struct CaseInfo {
  CaseId id;
  std::string name;
  std::string statement;
  bool equality = false;           // every link is an equality
  bool block = false;              // evaluated over the doubled weight
  bool variable_operands = false;  // operator count k in {1,2,3}
  bool uses_power = false;         // exponent parameter n in {1,2}
  bool normalize_operands = false; // harness rescales draws to seminorm <= 2
  int num_operators = 0;
  int num_vectors = 0;
  bool unit_vector = false;        // last vector must have unit A-seminorm
  std::vector<OperandClass> operator_classes;
};

inline const std::vector<CaseInfo>& list_cases() {
  static const std::vector<CaseInfo> cases = [] {
    using OC = OperandClass;
    std::vector<CaseInfo> v;
    auto add = [&](CaseId id, std::string name, std::string statement, CaseInfo patch) {
      patch.id = id;
      patch.name = std::move(name);
      patch.statement = std::move(statement);
      v.push_back(std::move(patch));
    };
    CaseInfo d;  // defaults

    {
      CaseInfo c = d; c.num_operators = 1; c.operator_classes = {OC::GeneralInBA};
      add(CaseId::C01, "radius-seminorm-sandwich",
          "(1/2)||T||_A <= w_A(T) <= ||T||_A", c);
    }
    {
      CaseInfo c = d; c.equality = true; c.num_operators = 1;
      c.operator_classes = {OC::GeneralInBA};
      add(CaseId::C02, "adjoint-product-norm-identities",
          "||T#T||_A = ||TT#||_A = ||T||_A^2 = ||T#||_A^2", c);
    }
    {
      CaseInfo c = d; c.equality = true; c.num_operators = 1;
      c.operator_classes = {OC::ASelfadjoint};
      add(CaseId::C03, "selfadjoint-radius-collapse",
          "A-selfadjoint T: ||T||_A = w_A(T) = r_A(T)", c);
    }
    {
      CaseInfo c = d; c.num_operators = 2; c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C04, "product-bound-commutator-split",
          "w_A(TS) <= ||T||_A w_A(S) + (1/2) w_A(TS +/- ST#)", c);
    }
    {
      CaseInfo c = d; c.num_operators = 2; c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C05, "commutator-split-dominance",
          "w_A(TS +/- ST#) <= 2 ||T||_A w_A(S)", c);
    }
    {
      CaseInfo c = d; c.num_operators = 2; c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C06, "product-swap-mean-bound",
          "w_A(TS) <= (1/2) w_A(ST) + (1/4)(||T||_A ||S||_A + ||TS||_A)", c);
    }
    {
      CaseInfo c = d; c.num_operators = 2; c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C07, "product-swap-gram-bound",
          "w_A(TS) <= (1/2) w_A(ST) + (1/4) ||SS# + T#T||_A", c);
    }
    {
      CaseInfo c = d; c.num_operators = 2; c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C08, "product-swap-norm-mean-bound",
          "w_A(TS) <= (1/2)(w_A(ST) + ||T||_A ||S||_A)", c);
    }
    {
      CaseInfo c = d; c.num_operators = 2; c.operator_classes = {OC::APositive, OC::GeneralInBA};
      add(CaseId::C09, "positive-factor-product-bound",
          "A-positive T: w_A(TS) <= ||T||_A w_A(S) and w_A(ST) <= ||T||_A w_A(S)", c);
    }
    {
      CaseInfo c = d; c.equality = true; c.num_operators = 1; c.operator_classes = {OC::APositive};
      add(CaseId::C10, "positive-shift-seminorm-line",
          "A-positive T, alpha in [0,1]: ||T - alpha ||T||_A I||_A = (1 - alpha) ||T||_A", c);
    }
    {
      CaseInfo c = d; c.num_vectors = 3;
      add(CaseId::C11, "two-target-projection-bound",
          "|<x,y>_A|^2 + |<x,z>_A|^2 <= ||x||_A^2 (max(||y||_A^2, ||z||_A^2) + |<y,z>_A|)", c);
    }
    {
      CaseInfo c = d; c.num_operators = 2; c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C12, "sum-radius-gram-split-bound",
          "w_A(T+S) <= sqrt((1/2)(||TT# + SS#||_A + ||TT# - SS#||_A) + w_A(ST#) + 2 w_A(T) w_A(S))", c);
    }
    {
      CaseInfo c = d; c.num_operators = 4;
      c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA, OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C13, "paired-product-spectral-bound",
          "r_A(T1 S1 + T2 S2) <= sym2x2(||S1 T1||_A, ||S2 T2||_A, sqrt(||S1 T2||_A ||S2 T1||_A))", c);
    }
    {
      CaseInfo c = d; c.num_operators = 2; c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C14, "sum-radius-interpolation-chain",
          "w_A(T+S) <= (1/2)[w_A(T)+w_A(S) + sqrt((w_A(T)-w_A(S))^2 + 4 sup_t ||Re_A(e^{it}T) Re_A(e^{it}S)||_A)] <= w_A(T)+w_A(S)", c);
    }
    {
      CaseInfo c = d; c.num_vectors = 3; c.unit_vector = true;
      add(CaseId::C15, "unit-vector-polarization-bound",
          "||e||_A = 1: |<x,e>_A <e,y>_A| <= (1/2)(|<x,y>_A| + ||x||_A ||y||_A)", c);
    }
    {
      CaseInfo c = d; c.num_operators = 2; c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C16, "sum-radius-cross-gram-bound",
          "w_A(T+S) <= sqrt(w_A(T)^2 + w_A(S)^2 + (1/2)||T#T + SS#||_A + w_A(ST))", c);
    }
    {
      CaseInfo c = d; c.num_operators = 1; c.operator_classes = {OC::GeneralInBA};
      add(CaseId::C17, "radius-square-root-chain",
          "w_A(T) <= (1/2) sqrt(||TT# + T#T||_A + 2 w_A(T^2)) <= (sqrt(2)/2) sqrt(||T#T + TT#||_A)", c);
    }
    {
      CaseInfo c = d; c.num_operators = 2; c.operator_classes = {OC::ASelfadjoint, OC::ASelfadjoint};
      add(CaseId::C18, "selfadjoint-sum-chain",
          "A-selfadjoint T, S: w_A(T+S) <= sqrt(w_A(T+iS)^2 + w_A(ST) + ||T||_A ||S||_A) <= w_A(T)+w_A(S)", c);
    }
    {
      CaseInfo c = d; c.variable_operands = true; c.uses_power = true; c.normalize_operands = true;
      c.num_operators = 3;
      c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C19, "power-mean-radius-bound",
          "w_A(sum S_i)^{4n} <= (k^{4n-1}/4)[||sum((S_i#S_i)^{2n} + (S_iS_i#)^{2n})||_A + 2 sum w_A((S_i#S_i)^n (S_iS_i#)^n)]", c);
    }
    {
      CaseInfo c = d; c.num_operators = 1; c.operator_classes = {OC::GeneralInBA};
      add(CaseId::C20, "fourth-power-radius-bound",
          "w_A(S)^4 <= (1/4)||(S#S)^2 + (SS#)^2||_A + (1/2) w_A(S# S^2 S#)", c);
    }
    {
      CaseInfo c = d; c.variable_operands = true; c.uses_power = true; c.normalize_operands = true;
      c.num_operators = 3;
      c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C21, "even-power-norm-bound",
          "w_A(sum S_i)^{2n} <= (k^{2n-1}/2) ||sum((S_i#S_i)^n + (S_iS_i#)^n)||_A", c);
    }
    {
      CaseInfo c = d; c.variable_operands = true; c.uses_power = true; c.normalize_operands = true;
      c.num_operators = 3;
      c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C22, "rotated-gram-power-bound",
          "w_A(sum S_i)^{2n} <= (k^{2n-1}/sqrt(2)) sum w_A((S_i#S_i)^n + i (S_iS_i#)^n)", c);
    }
    {
      CaseInfo c = d; c.num_operators = 1; c.operator_classes = {OC::GeneralInBA};
      add(CaseId::C23, "rotated-gram-square-bound",
          "w_A(S)^2 <= (1/sqrt(2)) w_A(S#S + i SS#)", c);
    }
    {
      CaseInfo c = d; c.equality = true; c.block = true; c.num_operators = 2;
      c.operator_classes = {OC::APositive, OC::APositive};
      add(CaseId::C24, "antidiagonal-positive-radius",
          "A-positive T, S: w_AA([[0,T],[S,0]]) = (1/2)||T + S||_A over the doubled weight", c);
    }
    {
      CaseInfo c = d; c.equality = true; c.block = true; c.num_operators = 2;
      c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C25, "diagonal-radius-max",
          "w_AA(diag(T,S)) = max(w_A(T), w_A(S)); w_AA(diag(T,T#)) = w_A(T)", c);
    }
    {
      CaseInfo c = d; c.equality = true; c.block = true; c.num_operators = 2;
      c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C26, "block-arrangement-norm-max",
          "||[[0,T],[S,0]]||_AA = ||diag(T,S)||_AA = max(||T||_A, ||S||_A)", c);
    }
    {
      CaseInfo c = d; c.equality = true; c.block = true; c.num_operators = 4;
      c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA, OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C27, "block-adjoint-transpose",
          "[[T,S],[X,Y]]# over diag(A,A) equals [[T#,X#],[S#,Y#]] blockwise", c);
    }
    {
      CaseInfo c = d; c.equality = true; c.num_operators = 1; c.operator_classes = {OC::GeneralInBA};
      add(CaseId::C28, "radius-route-agreement",
          "w_A(T) = sup_t ||Re_A(e^{it}T)||_A (compression route vs rotation sweep)", c);
    }
    {
      CaseInfo c = d; c.num_operators = 2; c.operator_classes = {OC::GeneralInBA, OC::GeneralInBA};
      add(CaseId::C29, "product-swap-spectra",
          "r_A(TS) = r_A(ST) and r_A(T) <= w_A(T)", c);
    }
    return v;
  }();
  return cases;
}

inline const CaseInfo& case_info(CaseId id) {
  const auto& cases = list_cases();
  const int idx = static_cast<int>(id) - 1;
  if (idx < 0 || idx >= static_cast<int>(cases.size()))
    throw UnknownCase("case_info: unknown case");
  return cases[static_cast<std::size_t>(idx)];
}

template <typename Real>
struct Operands {
  WeightPtr<Real> weight;
  std::vector<Matrix<Real>> operators;
  std::vector<Vector<Real>> vectors;
  int power = 1;  // exponent n for the power cases
};

template <typename Real>
struct CatalogOptions {
  Real eq_tol = Real(1e-7);       // relative equality budget
  int grid = 512;                 // theta sweep seed grid
  Real refine_tol = Real(1e-12);  // theta sweep polish tolerance
};

template <typename Real>
struct Link {
  std::string label;
  Real lhs = 0, rhs = 0;
  Real lhs_err = 0, rhs_err = 0;
  bool equality = false;
  bool certified = false;
  Real margin = 0;  // relative certification margin (negative = violated)
};

template <typename Real>
struct BoundReport {
  CaseId id = CaseId::C01;
  Real lhs = 0, rhs = 0;
  Real slack = 0, rel_slack = 0;
  bool certified = true;
  std::string operand_digest;
  std::vector<Link<Real>> links;
  int binding = -1;  // index of the tightest link
};

namespace detail {

inline std::uint64_t fnv64(std::uint64_t h, const void* data, std::size_t bytes) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < bytes; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ull;
  }
  return h;
}

template <typename Real>
std::uint64_t digest_matrix(std::uint64_t h, const Matrix<Real>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double re = static_cast<double>(m(i, j).real());
      const double im = static_cast<double>(m(i, j).imag());
      h = fnv64(h, &re, sizeof re);
      h = fnv64(h, &im, sizeof im);
    }
  return h;
}

template <typename Real>
std::string content_digest(const Operands<Real>& ops) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  h = digest_matrix(h, ops.weight->a);
  for (const auto& m : ops.operators) h = digest_matrix(h, m);
  for (const auto& v : ops.vectors) h = digest_matrix<Real>(h, v);
  h = fnv64(h, &ops.power, sizeof ops.power);
  char buf[64];
  std::snprintf(buf, sizeof buf, "dim=%d rank=%d fnv=%016llx", static_cast<int>(ops.weight->dim()),
                static_cast<int>(ops.weight->rank), static_cast<unsigned long long>(h));
  return buf;
}

template <typename Real>
Matrix<Real> mat_pow(const Matrix<Real>& m, int p) {
  Matrix<Real> acc = Matrix<Real>::Identity(m.rows(), m.cols());
  Matrix<Real> base = m;
  while (p > 0) {
    if (p & 1) acc = (acc * base).eval();
    p >>= 1;
    if (p) base = (base * base).eval();
  }
  return acc;
}

// evaluation context: raw radii over one weight plus link assembly
template <typename Real>
struct CaseEval {
  const Weight<Real>& w;
  const CatalogOptions<Real>& opt;
  std::vector<Link<Real>> links;

  SweepOptions<Real> sweep() const { return {opt.grid, opt.refine_tol}; }

  Real sem(const Matrix<Real>& m) const { return op_seminorm(w, m); }
  SweepResult<Real> rad(const Matrix<Real>& m) const {
    return a_numerical_radius(w, m, sweep());
  }
  Real spec(const Matrix<Real>& m) const { return a_spectral_radius(w, m); }
  Matrix<Real> sh(const Matrix<Real>& m) const { return sharp(w, m); }

  void ineq(std::string label, Real lhs, Real lhs_err, Real rhs, Real rhs_err) {
    Link<Real> l;
    l.label = std::move(label);
    l.lhs = lhs; l.rhs = rhs; l.lhs_err = lhs_err; l.rhs_err = rhs_err;
    const Real scale = std::max({Real(1), std::abs(lhs), std::abs(rhs)});
    const Real pad = Real(1e-12) * scale;
    l.certified = (lhs - lhs_err) <= (rhs + rhs_err) + pad;
    l.margin = ((rhs + rhs_err + pad) - (lhs - lhs_err)) / std::max(Real(1), std::abs(rhs));
    links.push_back(std::move(l));
  }

  void eq(std::string label, Real lhs, Real lhs_err, Real rhs, Real rhs_err) {
    Link<Real> l;
    l.label = std::move(label);
    l.lhs = lhs; l.rhs = rhs; l.lhs_err = lhs_err; l.rhs_err = rhs_err;
    l.equality = true;
    const Real budget = opt.eq_tol * std::max(Real(1), std::abs(rhs));
    l.certified = std::abs(lhs - rhs) <= budget;
    l.margin = (budget - std::abs(lhs - rhs)) / std::max(Real(1), std::abs(rhs));
    links.push_back(std::move(l));
  }
};

template <typename Real>
void check_hypotheses(const CaseInfo& info, const Operands<Real>& ops) {
  const Weight<Real>& w = *ops.weight;
  const std::size_t k = ops.operators.size();
  if (info.variable_operands) {
    if (k < 1 || k > 3)
      throw InvalidConfig(to_string(info.id) + ": operator count must be 1..3");
  } else if (static_cast<int>(k) != info.num_operators) {
    throw InvalidConfig(to_string(info.id) + ": wrong operator count");
  }
  if (static_cast<int>(ops.vectors.size()) != info.num_vectors)
    throw InvalidConfig(to_string(info.id) + ": wrong vector count");
  if (info.uses_power && (ops.power < 1 || ops.power > 2))
    throw InvalidConfig(to_string(info.id) + ": power must be 1 or 2");
  for (std::size_t i = 0; i < k; ++i) {
    const Matrix<Real>& t = ops.operators[i];
    if (t.rows() != w.dim() || t.cols() != w.dim())
      throw DimensionMismatch(to_string(info.id) + ": operand size must match weight");
    if (!in_BA(w, t).member)
      throw SkippedHypothesis(to_string(info.id) + ": operand " + std::to_string(i) +
                              " admits no A-adjoint");
    const OperandClass cls =
        info.variable_operands ? OperandClass::GeneralInBA : info.operator_classes[i];
    if (cls == OperandClass::ASelfadjoint && !is_a_selfadjoint(w, t))
      throw SkippedHypothesis(to_string(info.id) + ": operand " + std::to_string(i) +
                              " is not A-selfadjoint");
    if (cls == OperandClass::APositive && !is_a_positive(w, t))
      throw SkippedHypothesis(to_string(info.id) + ": operand " + std::to_string(i) +
                              " is not A-positive");
  }
  for (const auto& v : ops.vectors)
    if (v.size() != w.dim())
      throw DimensionMismatch(to_string(info.id) + ": vector size must match weight");
  if (info.unit_vector) {
    const Real n = vec_seminorm(w, ops.vectors.back());
    if (std::abs(n - Real(1)) > Real(1e-6))
      throw SkippedHypothesis(to_string(info.id) + ": last vector is not A-unit");
  }
}

}  // namespace detail

template <typename Real>
BoundReport<Real> evaluate(CaseId id, const Operands<Real>& ops,
                           const CatalogOptions<Real>& opt = {}) {
  if (!ops.weight) throw InvalidConfig("evaluate: null weight");
  const CaseInfo& info = case_info(id);
  detail::check_hypotheses(info, ops);
  const Weight<Real>& w = *ops.weight;
  detail::CaseEval<Real> ev{w, opt, {}};
  const auto& O = ops.operators;
  const Real rt2 = std::sqrt(Real(2));

  switch (id) {
    case CaseId::C01: {
      const Matrix<Real>& t = O[0];
      const Real nm = ev.sem(t);
      SweepResult<Real> wa = ev.rad(t);
      ev.ineq("upper", wa.value, wa.error_halfwidth, nm, Real(0));
      ev.ineq("lower", nm / Real(2), Real(0), wa.value, wa.error_halfwidth);
      break;
    }
    case CaseId::C02: {
      const Matrix<Real>& t = O[0];
      Matrix<Real> ts = ev.sh(t);
      const Real n2 = ev.sem(t) * ev.sem(t);
      ev.eq("sharp-left", ev.sem(ts * t), Real(0), n2, Real(0));
      ev.eq("sharp-right", ev.sem(t * ts), Real(0), n2, Real(0));
      ev.eq("sharp-norm", ev.sem(ts) * ev.sem(ts), Real(0), n2, Real(0));
      break;
    }
    case CaseId::C03: {
      const Matrix<Real>& t = O[0];
      const Real nm = ev.sem(t);
      SweepResult<Real> wa = ev.rad(t);
      ev.eq("norm-radius", nm, Real(0), wa.value, wa.error_halfwidth);
      ev.eq("radius-spectral", wa.value, wa.error_halfwidth, ev.spec(t), Real(0));
      break;
    }
    case CaseId::C04: {
      const Matrix<Real>&t = O[0], &s = O[1];
      Matrix<Real> ts = ev.sh(t);
      Matrix<Real> prod = t * s, swap = s * ts;
      SweepResult<Real> lhs = ev.rad(prod);
      const Real nt = ev.sem(t);
      SweepResult<Real> ws = ev.rad(s);
      SweepResult<Real> plus = ev.rad(prod + swap);
      SweepResult<Real> minus = ev.rad(prod - swap);
      ev.ineq("plus", lhs.value, lhs.error_halfwidth, nt * ws.value + plus.value / Real(2),
              nt * ws.error_halfwidth + plus.error_halfwidth / Real(2));
      ev.ineq("minus", lhs.value, lhs.error_halfwidth, nt * ws.value + minus.value / Real(2),
              nt * ws.error_halfwidth + minus.error_halfwidth / Real(2));
      break;
    }
    case CaseId::C05: {
      const Matrix<Real>&t = O[0], &s = O[1];
      Matrix<Real> ts = ev.sh(t);
      Matrix<Real> prod = t * s, swap = s * ts;
      const Real nt = ev.sem(t);
      SweepResult<Real> ws = ev.rad(s);
      SweepResult<Real> plus = ev.rad(prod + swap);
      SweepResult<Real> minus = ev.rad(prod - swap);
      const Real rhs = Real(2) * nt * ws.value;
      const Real rerr = Real(2) * nt * ws.error_halfwidth;
      ev.ineq("plus", plus.value, plus.error_halfwidth, rhs, rerr);
      ev.ineq("minus", minus.value, minus.error_halfwidth, rhs, rerr);
      break;
    }
    case CaseId::C06: {
      const Matrix<Real>&t = O[0], &s = O[1];
      Matrix<Real> prod = t * s;
      SweepResult<Real> lhs = ev.rad(prod);
      SweepResult<Real> swap = ev.rad(s * t);
      const Real rhs =
          swap.value / Real(2) + (ev.sem(t) * ev.sem(s) + ev.sem(prod)) / Real(4);
      ev.ineq("bound", lhs.value, lhs.error_halfwidth, rhs, swap.error_halfwidth / Real(2));
      break;
    }
    case CaseId::C07: {
      const Matrix<Real>&t = O[0], &s = O[1];
      Matrix<Real> tsh = ev.sh(t), ssh = ev.sh(s);
      SweepResult<Real> lhs = ev.rad(t * s);
      SweepResult<Real> swap = ev.rad(s * t);
      const Real gram = ev.sem(s * ssh + tsh * t);
      ev.ineq("bound", lhs.value, lhs.error_halfwidth, swap.value / Real(2) + gram / Real(4),
              swap.error_halfwidth / Real(2));
      break;
    }
    case CaseId::C08: {
      const Matrix<Real>&t = O[0], &s = O[1];
      SweepResult<Real> lhs = ev.rad(t * s);
      SweepResult<Real> swap = ev.rad(s * t);
      ev.ineq("bound", lhs.value, lhs.error_halfwidth,
              (swap.value + ev.sem(t) * ev.sem(s)) / Real(2), swap.error_halfwidth / Real(2));
      break;
    }
    case CaseId::C09: {
      const Matrix<Real>&t = O[0], &s = O[1];
      const Real nt = ev.sem(t);
      SweepResult<Real> ws = ev.rad(s);
      const Real rhs = nt * ws.value;
      const Real rerr = nt * ws.error_halfwidth;
      SweepResult<Real> lts = ev.rad(t * s);
      SweepResult<Real> lst = ev.rad(s * t);
      ev.ineq("ts", lts.value, lts.error_halfwidth, rhs, rerr);
      ev.ineq("st", lst.value, lst.error_halfwidth, rhs, rerr);
      break;
    }
    case CaseId::C10: {
      const Matrix<Real>& t = O[0];
      const Real m = ev.sem(t);
      Matrix<Real> eye = Matrix<Real>::Identity(w.dim(), w.dim());
      for (const Real alpha : {Real(0), Real(0.25), Real(0.5), Real(1)}) {
        char label[24];
        std::snprintf(label, sizeof label, "alpha=%.2f", static_cast<double>(alpha));
        ev.eq(label, ev.sem(t - alpha * m * eye), Real(0), (Real(1) - alpha) * m, Real(0));
      }
      break;
    }
    case CaseId::C11: {
      const Vector<Real>&x = ops.vectors[0], &y = ops.vectors[1], &z = ops.vectors[2];
      const Real xy = std::abs(semi_inner(w, x, y));
      const Real xz = std::abs(semi_inner(w, x, z));
      const Real nx = vec_seminorm(w, x), ny = vec_seminorm(w, y), nz = vec_seminorm(w, z);
      const Real lhs = xy * xy + xz * xz;
      const Real rhs =
          nx * nx * (std::max(ny * ny, nz * nz) + std::abs(semi_inner(w, y, z)));
      ev.ineq("bound", lhs, Real(0), rhs, Real(0));
      break;
    }
    case CaseId::C12: {
      const Matrix<Real>&t = O[0], &s = O[1];
      Matrix<Real> tsh = ev.sh(t), ssh = ev.sh(s);
      Matrix<Real> gt = t * tsh, gs = s * ssh;
      SweepResult<Real> lhs = ev.rad(t + s);
      SweepResult<Real> cross = ev.rad(s * tsh);
      SweepResult<Real> wt = ev.rad(t), ws2 = ev.rad(s);
      const Real inner = (ev.sem(gt + gs) + ev.sem(gt - gs)) / Real(2) + cross.value +
                         Real(2) * wt.value * ws2.value;
      const Real inner_err = cross.error_halfwidth +
                             Real(2) * (wt.error_halfwidth * ws2.value +
                                        wt.value * ws2.error_halfwidth);
      const Real rhs = std::sqrt(std::max(Real(0), inner));
      const Real rerr = inner_err / (Real(2) * std::max(rhs, Real(1e-30)));
      ev.ineq("bound", lhs.value, lhs.error_halfwidth, rhs, rerr);
      break;
    }
    case CaseId::C13: {
      const Matrix<Real>&t1 = O[0], &s1 = O[1], &t2 = O[2], &s2 = O[3];
      const Real lhs = ev.spec(t1 * s1 + t2 * s2);
      const Real rhs = sym2x2_nonneg_norm(
          ev.sem(s1 * t1), ev.sem(s2 * t2),
          std::sqrt(ev.sem(s1 * t2) * ev.sem(s2 * t1)));
      ev.ineq("bound", lhs, Real(0), rhs, Real(0));
      break;
    }
    case CaseId::C14: {
      const Matrix<Real>&t = O[0], &s = O[1];
      SweepResult<Real> lhs = ev.rad(t + s);
      SweepResult<Real> wt = ev.rad(t), ws2 = ev.rad(s);
      SemiOperator<Real> ot = make_operator(ops.weight, t);
      SemiOperator<Real> os = make_operator(ops.weight, s);
      SweepResult<Real> sup = theta_sup_product(ot, os, ev.sweep());
      const Real disc =
          std::sqrt(std::max(Real(0), (wt.value - ws2.value) * (wt.value - ws2.value) +
                                          Real(4) * sup.value));
      const Real mid = (wt.value + ws2.value + disc) / Real(2);
      const Real mid_err = wt.error_halfwidth + ws2.error_halfwidth +
                           sup.error_halfwidth / std::max(disc, Real(1e-30));
      ev.ineq("inner", lhs.value, lhs.error_halfwidth, mid, mid_err);
      ev.ineq("outer", mid, mid_err, wt.value + ws2.value,
              wt.error_halfwidth + ws2.error_halfwidth);
      break;
    }
    case CaseId::C15: {
      const Vector<Real>&x = ops.vectors[0], &y = ops.vectors[1], &e = ops.vectors[2];
      const Real lhs = std::abs(semi_inner(w, x, e) * semi_inner(w, e, y));
      const Real rhs = (std::abs(semi_inner(w, x, y)) +
                        vec_seminorm(w, x) * vec_seminorm(w, y)) /
                       Real(2);
      ev.ineq("bound", lhs, Real(0), rhs, Real(0));
      break;
    }
    case CaseId::C16: {
      const Matrix<Real>&t = O[0], &s = O[1];
      Matrix<Real> tsh = ev.sh(t), ssh = ev.sh(s);
      SweepResult<Real> lhs = ev.rad(t + s);
      SweepResult<Real> wt = ev.rad(t), ws2 = ev.rad(s);
      SweepResult<Real> cross = ev.rad(s * t);
      const Real inner = wt.value * wt.value + ws2.value * ws2.value +
                         ev.sem(tsh * t + s * ssh) / Real(2) + cross.value;
      const Real inner_err = Real(2) * wt.value * wt.error_halfwidth +
                             Real(2) * ws2.value * ws2.error_halfwidth +
                             cross.error_halfwidth;
      const Real rhs = std::sqrt(std::max(Real(0), inner));
      const Real rerr = inner_err / (Real(2) * std::max(rhs, Real(1e-30)));
      ev.ineq("bound", lhs.value, lhs.error_halfwidth, rhs, rerr);
      break;
    }
    case CaseId::C17: {
      const Matrix<Real>& t = O[0];
      Matrix<Real> tsh = ev.sh(t);
      const Real gram = ev.sem(t * tsh + tsh * t);
      SweepResult<Real> wt = ev.rad(t);
      SweepResult<Real> wsq = ev.rad(t * t);
      const Real mid = std::sqrt(std::max(Real(0), gram + Real(2) * wsq.value)) / Real(2);
      const Real mid_err =
          wsq.error_halfwidth / (Real(2) * std::max(Real(2) * mid, Real(1e-30)));
      const Real outer = rt2 / Real(2) * std::sqrt(gram);
      ev.ineq("inner", wt.value, wt.error_halfwidth, mid, mid_err);
      ev.ineq("outer", mid, mid_err, outer, Real(0));
      break;
    }
    case CaseId::C18: {
      const Matrix<Real>&t = O[0], &s = O[1];
      const Complex<Real> iu(0, 1);
      SweepResult<Real> lhs = ev.rad(t + s);
      SweepResult<Real> mix = ev.rad(t + iu * s);
      SweepResult<Real> cross = ev.rad(s * t);
      SweepResult<Real> wt = ev.rad(t), ws2 = ev.rad(s);
      const Real inner =
          mix.value * mix.value + cross.value + ev.sem(t) * ev.sem(s);
      const Real inner_err =
          Real(2) * mix.value * mix.error_halfwidth + cross.error_halfwidth;
      const Real mid = std::sqrt(std::max(Real(0), inner));
      const Real mid_err = inner_err / (Real(2) * std::max(mid, Real(1e-30)));
      ev.ineq("inner", lhs.value, lhs.error_halfwidth, mid, mid_err);
      ev.ineq("outer", mid, mid_err, wt.value + ws2.value,
              wt.error_halfwidth + ws2.error_halfwidth);
      break;
    }
    case CaseId::C19: {
      const int k = static_cast<int>(O.size());
      const int n = ops.power;
      Matrix<Real> tot = Matrix<Real>::Zero(w.dim(), w.dim());
      Matrix<Real> msum = Matrix<Real>::Zero(w.dim(), w.dim());
      Real wterm = 0, wterm_err = 0;
      for (const auto& s : O) {
        tot += s;
        Matrix<Real> ssh = ev.sh(s);
        Matrix<Real> left = detail::mat_pow<Real>(ssh * s, n);
        Matrix<Real> right = detail::mat_pow<Real>(s * ssh, n);
        msum += left * left + right * right;  // the 2n-th powers
        SweepResult<Real> ws2 = ev.rad(left * right);
        wterm += ws2.value;
        wterm_err += ws2.error_halfwidth;
      }
      SweepResult<Real> wtot = ev.rad(tot);
      const Real p = Real(4) * n;
      const Real lhs = std::pow(wtot.value, p);
      const Real lhs_err =
          p * std::pow(std::max(wtot.value, Real(1e-30)), p - 1) * wtot.error_halfwidth;
      const Real coeff = std::pow(Real(k), p - 1) / Real(4);
      const Real rhs = coeff * (ev.sem(msum) + Real(2) * wterm);
      const Real rerr = coeff * Real(2) * wterm_err;
      ev.ineq("bound", lhs, lhs_err, rhs, rerr);
      break;
    }
    case CaseId::C20: {
      const Matrix<Real>& s = O[0];
      Matrix<Real> ssh = ev.sh(s);
      Matrix<Real> left = ssh * s, right = s * ssh;
      SweepResult<Real> ws2 = ev.rad(s);
      SweepResult<Real> inner = ev.rad(ssh * s * s * ssh);
      const Real lhs = std::pow(ws2.value, Real(4));
      const Real lhs_err =
          Real(4) * std::pow(std::max(ws2.value, Real(1e-30)), Real(3)) * ws2.error_halfwidth;
      const Real rhs = ev.sem(left * left + right * right) / Real(4) + inner.value / Real(2);
      ev.ineq("bound", lhs, lhs_err, rhs, inner.error_halfwidth / Real(2));
      break;
    }
    case CaseId::C21: {
      const int k = static_cast<int>(O.size());
      const int n = ops.power;
      Matrix<Real> tot = Matrix<Real>::Zero(w.dim(), w.dim());
      Matrix<Real> msum = Matrix<Real>::Zero(w.dim(), w.dim());
      for (const auto& s : O) {
        tot += s;
        Matrix<Real> ssh = ev.sh(s);
        msum += detail::mat_pow<Real>(ssh * s, n) + detail::mat_pow<Real>(s * ssh, n);
      }
      SweepResult<Real> wtot = ev.rad(tot);
      const Real p = Real(2) * n;
      const Real lhs = std::pow(wtot.value, p);
      const Real lhs_err =
          p * std::pow(std::max(wtot.value, Real(1e-30)), p - 1) * wtot.error_halfwidth;
      const Real rhs = std::pow(Real(k), p - 1) / Real(2) * ev.sem(msum);
      ev.ineq("bound", lhs, lhs_err, rhs, Real(0));
      break;
    }
    case CaseId::C22: {
      const int k = static_cast<int>(O.size());
      const int n = ops.power;
      const Complex<Real> iu(0, 1);
      Matrix<Real> tot = Matrix<Real>::Zero(w.dim(), w.dim());
      Real sum = 0, sum_err = 0;
      for (const auto& s : O) {
        tot += s;
        Matrix<Real> ssh = ev.sh(s);
        SweepResult<Real> term =
            ev.rad(detail::mat_pow<Real>(ssh * s, n) + iu * detail::mat_pow<Real>(s * ssh, n));
        sum += term.value;
        sum_err += term.error_halfwidth;
      }
      SweepResult<Real> wtot = ev.rad(tot);
      const Real p = Real(2) * n;
      const Real lhs = std::pow(wtot.value, p);
      const Real lhs_err =
          p * std::pow(std::max(wtot.value, Real(1e-30)), p - 1) * wtot.error_halfwidth;
      const Real coeff = std::pow(Real(k), p - 1) / rt2;
      ev.ineq("bound", lhs, lhs_err, coeff * sum, coeff * sum_err);
      break;
    }
    case CaseId::C23: {
      const Matrix<Real>& s = O[0];
      Matrix<Real> ssh = ev.sh(s);
      const Complex<Real> iu(0, 1);
      SweepResult<Real> ws2 = ev.rad(s);
      SweepResult<Real> rot = ev.rad(ssh * s + iu * (s * ssh));
      ev.ineq("bound", ws2.value * ws2.value,
              Real(2) * ws2.value * ws2.error_halfwidth, rot.value / rt2,
              rot.error_halfwidth / rt2);
      break;
    }
    case CaseId::C24: {
      const Matrix<Real>&t = O[0], &s = O[1];
      WeightPtr<Real> lifted = lift_weight_ptr(w);
      Matrix<Real> zero = Matrix<Real>::Zero(w.dim(), w.dim());
      SemiOperator<Real> anti = assemble(lifted, w, zero, t, s, zero);
      RadiusResult<Real> lhs = a_numerical_radius(anti, RadiusMethod::Compression, ev.sweep());
      ev.eq("half-sum", lhs.value, lhs.error_halfwidth, ev.sem(t + s) / Real(2), Real(0));
      break;
    }
    case CaseId::C25: {
      const Matrix<Real>&t = O[0], &s = O[1];
      WeightPtr<Real> lifted = lift_weight_ptr(w);
      Matrix<Real> zero = Matrix<Real>::Zero(w.dim(), w.dim());
      SemiOperator<Real> diag = assemble(lifted, w, t, zero, zero, s);
      RadiusResult<Real> wd = a_numerical_radius(diag, RadiusMethod::Compression, ev.sweep());
      SweepResult<Real> wt = ev.rad(t), ws2 = ev.rad(s);
      ev.eq("max", wd.value, wd.error_halfwidth, std::max(wt.value, ws2.value),
            std::max(wt.error_halfwidth, ws2.error_halfwidth));
      SemiOperator<Real> pair = assemble(lifted, w, t, zero, zero, ev.sh(t));
      RadiusResult<Real> wp = a_numerical_radius(pair, RadiusMethod::Compression, ev.sweep());
      ev.eq("adjoint-pair", wp.value, wp.error_halfwidth, wt.value, wt.error_halfwidth);
      break;
    }
    case CaseId::C26: {
      const Matrix<Real>&t = O[0], &s = O[1];
      WeightPtr<Real> lifted = lift_weight_ptr(w);
      Matrix<Real> zero = Matrix<Real>::Zero(w.dim(), w.dim());
      SemiOperator<Real> anti = assemble(lifted, w, zero, t, s, zero);
      SemiOperator<Real> diag = assemble(lifted, w, t, zero, zero, s);
      const Real mx = std::max(ev.sem(t), ev.sem(s));
      ev.eq("antidiagonal", op_seminorm(anti), Real(0), mx, Real(0));
      ev.eq("diagonal", op_seminorm(diag), Real(0), mx, Real(0));
      break;
    }
    case CaseId::C27: {
      const Real res = block_sharp_check(w, O[0], O[1], O[2], O[3]);
      ev.eq("blockwise", res, Real(0), Real(0), Real(0));
      break;
    }
    case CaseId::C28: {
      SemiOperator<Real> t = make_operator(ops.weight, O[0]);
      RadiusResult<Real> comp = a_numerical_radius(t, RadiusMethod::Compression, ev.sweep());
      RadiusResult<Real> rot = a_numerical_radius(t, RadiusMethod::ThetaSweep, ev.sweep());
      ev.eq("routes", comp.value, comp.error_halfwidth, rot.value, rot.error_halfwidth);
      break;
    }
    case CaseId::C29: {
      const Matrix<Real>&t = O[0], &s = O[1];
      ev.eq("swap", ev.spec(t * s), Real(0), ev.spec(s * t), Real(0));
      SweepResult<Real> wt = ev.rad(t);
      ev.ineq("below-radius", ev.spec(t), Real(0), wt.value, wt.error_halfwidth);
      break;
    }
  }

  BoundReport<Real> rep;
  rep.id = id;
  rep.links = std::move(ev.links);
  rep.operand_digest = detail::content_digest(ops);
  rep.certified = true;
  Real worst = std::numeric_limits<Real>::infinity();
  for (std::size_t i = 0; i < rep.links.size(); ++i) {
    const auto& l = rep.links[i];
    rep.certified = rep.certified && l.certified;
    if (l.margin < worst) {
      worst = l.margin;
      rep.binding = static_cast<int>(i);
    }
  }
  if (rep.binding >= 0) {
    const auto& b = rep.links[static_cast<std::size_t>(rep.binding)];
    rep.lhs = b.lhs;
    rep.rhs = b.rhs;
    rep.slack = b.rhs - b.lhs;
    rep.rel_slack = rep.slack / std::max(Real(1), std::abs(b.rhs));
  }
  return rep;
}

// Ratio of this case's bound to a named baseline bound on the same operands.
// Baselines: "classic2" = 2 ||T||_A w_A(S) against C04's right-hand side
// (worst sign); "three_halves" = (3/2) ||T||_A w_A(S) against C09's bound.
template <typename Real>
Real tightness(CaseId id, std::string_view baseline, const Operands<Real>& ops,
               const CatalogOptions<Real>& opt = {}) {
  if (!ops.weight) throw InvalidConfig("tightness: null weight");
  const CaseInfo& info = case_info(id);
  detail::check_hypotheses(info, ops);
  const Weight<Real>& w = *ops.weight;
  detail::CaseEval<Real> ev{w, opt, {}};
  if (id == CaseId::C04 && baseline == "classic2") {
    const Matrix<Real>&t = ops.operators[0], &s = ops.operators[1];
    Matrix<Real> prod = t * ops.operators[1], swap = s * ev.sh(t);
    const Real nt = ev.sem(t);
    const Real ws = ev.rad(s).value;
    const Real base = Real(2) * nt * ws;
    if (base <= Real(1e-12))
      throw SkippedHypothesis("tightness: degenerate baseline (2||T|| w(S) ~ 0)");
    const Real rhs = nt * ws + std::max(ev.rad(prod + swap).value,
                                        ev.rad(prod - swap).value) / Real(2);
    return rhs / base;
  }
  if (id == CaseId::C09 && baseline == "three_halves") {
    const Matrix<Real>&t = ops.operators[0], &s = ops.operators[1];
    const Real bound = ev.sem(t) * ev.rad(s).value;
    if (bound <= Real(1e-12))
      throw SkippedHypothesis("tightness: degenerate baseline (||T|| w(S) ~ 0)");
    return bound / (Real(1.5) * bound);
  }
  throw InvalidConfig("tightness: unsupported (case, baseline) pair");
}

}  // namespace semihilbert
