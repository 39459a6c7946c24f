#pragma once
// Random-restart hill climb over operand space, maximizing the lhs/rhs ratio
// of one link of a catalog case. Each step perturbs entries with a Gaussian
// of adaptive size, then re-projects onto the case's hypothesis class.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "semihilbert/catalog.hpp"
#include "semihilbert/suite.hpp"
#include "semihilbert/types.hpp"

namespace semihilbert {

template <typename Real>
struct SearchResult {
  CaseId id = CaseId::C01;
  std::string link;
  Real best_ratio = Real(0);
  Operands<Real> witness;
  long iterations = 0;
  long restarts = 0;
};

namespace detail {

template <typename Real>
Matrix<Real> project_class(const Weight<Real>& w, OperandClass cls, Matrix<Real> m) {
  const Eigen::Index r = w.rank;
  if (r < w.dim())
    m -= w.range_basis * (w.range_basis.adjoint() * m * w.kernel_basis) *
         w.kernel_basis.adjoint();
  if (cls == OperandClass::ASelfadjoint || cls == OperandClass::APositive) {
    Matrix<Real> b11 = w.range_basis.adjoint() * m * w.range_basis;
    Matrix<Real> lb = w.lambda.asDiagonal() * b11;
    Matrix<Real> h = (lb + lb.adjoint()) / Real(2);
    if (cls == OperandClass::APositive) {
      HermEig<Real> eig = hermitian_eig(h, Real(1));
      RealVector<Real> clamped = eig.values.cwiseMax(Real(0));
      h = eig.vectors * clamped.asDiagonal() * eig.vectors.adjoint();
    }
    Matrix<Real> nb11 = w.lambda.cwiseInverse().asDiagonal() * h;
    m += w.range_basis * (nb11 - b11) * w.range_basis.adjoint();
  }
  return m;
}

template <typename Real>
void perturb_operands(const CaseInfo& info, Operands<Real>& ops, SplitRng& rng, Real sigma) {
  const Weight<Real>& w = *ops.weight;
  for (std::size_t i = 0; i < ops.operators.size(); ++i) {
    const OperandClass cls =
        info.variable_operands ? OperandClass::GeneralInBA : info.operator_classes[i];
    Matrix<Real> g(w.dim(), w.dim());
    fill_cnormal(g, rng);
    Matrix<Real> stepped = ops.operators[i] + sigma * g;
    Matrix<Real> m = project_class(w, cls, std::move(stepped));
    const Real nrm = m.norm();
    if (nrm > Real(1e3)) m /= nrm;
    if (info.normalize_operands) {
      const Real s = op_seminorm(w, m);
      if (s > Real(2)) m *= Real(2) / s;
    }
    ops.operators[i] = std::move(m);
  }
  for (std::size_t j = 0; j < ops.vectors.size(); ++j) {
    Vector<Real> g(w.dim());
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = Complex<Real>(rng.cnormal());
    Vector<Real> v = ops.vectors[j] + sigma * g;
    if (info.unit_vector && static_cast<int>(j) == info.num_vectors - 1) {
      v = w.proj * v;
      const Real n = vec_seminorm(w, v);
      if (n < Real(1e-9)) continue;  // keep previous unit vector
      v /= n;
    } else if (v.norm() > Real(1e3)) {
      v /= v.norm();
    }
    ops.vectors[j] = std::move(v);
  }
}

}  // namespace detail

// Maximize lhs/rhs of the selected link (by label; default: the case's first
// link). Returns the best ratio with the operands that realized it.
template <typename Real = double>
SearchResult<Real> search_extremal(CaseId id, const EnsembleSpec& spec, int iters,
                                   std::string_view link_label = {},
                                   const CatalogOptions<Real>& opt = {}) {
  if (iters < 1) throw InvalidConfig("search_extremal: iters must be >= 1");
  const CaseInfo& info = case_info(id);
  SplitRng rng(spec.seed);

  auto fresh = [&](SplitRng& r) {
    WeightPtr<Real> w = std::make_shared<const Weight<Real>>(
        gen_weight<Real>(spec.dim, spec.rank, r));
    return draw_operands(info, w, r, /*trial=*/0);
  };

  int link_index = -1;
  auto ratio_of = [&](const Operands<Real>& ops) -> Real {
    BoundReport<Real> br = evaluate(id, ops, opt);
    if (link_index < 0) {
      if (link_label.empty()) {
        link_index = 0;
      } else {
        for (std::size_t i = 0; i < br.links.size(); ++i)
          if (br.links[i].label == link_label) link_index = static_cast<int>(i);
        if (link_index < 0)
          throw InvalidConfig("search_extremal: case " + to_string(id) + " has no link '" +
                              std::string(link_label) + "'");
      }
    }
    const auto& l = br.links[static_cast<std::size_t>(link_index)];
    if (!(std::abs(l.rhs) > Real(1e-12))) return -std::numeric_limits<Real>::infinity();
    return l.lhs / l.rhs;
  };

  SearchResult<Real> out;
  out.id = id;

  Operands<Real> cur = fresh(rng);
  Real cur_ratio = ratio_of(cur);
  out.best_ratio = cur_ratio;
  out.witness = cur;
  Real sigma = Real(0.5);
  int stall = 0;
  const int stall_limit = std::max(50, iters / 5);

  for (int it = 0; it < iters; ++it) {
    ++out.iterations;
    SplitRng step = rng.split(static_cast<std::uint64_t>(it) + 1);
    Operands<Real> cand = cur;
    detail::perturb_operands(info, cand, step, sigma);
    Real r;
    try {
      r = ratio_of(cand);
    } catch (const SkippedHypothesis&) {
      r = -std::numeric_limits<Real>::infinity();
    }
    if (r > cur_ratio) {
      cur = std::move(cand);
      cur_ratio = r;
      sigma = std::min(sigma * Real(1.4), Real(2));
      stall = 0;
      if (r > out.best_ratio) {
        out.best_ratio = r;
        out.witness = cur;
      }
    } else {
      sigma *= Real(0.98);
      ++stall;
    }
    if (sigma < Real(1e-6) || stall > stall_limit) {
      SplitRng rs = rng.split(0x5EED0000ull + static_cast<std::uint64_t>(it));
      cur = fresh(rs);
      try {
        cur_ratio = ratio_of(cur);
      } catch (const SkippedHypothesis&) {
        cur_ratio = -std::numeric_limits<Real>::infinity();
      }
      if (cur_ratio > out.best_ratio) {
        out.best_ratio = cur_ratio;
        out.witness = cur;
      }
      sigma = Real(0.5);
      stall = 0;
      ++out.restarts;
    }
  }
  const auto& links = evaluate(id, out.witness, opt).links;
  out.link = links[static_cast<std::size_t>(std::max(link_index, 0))].label;
  return out;
}

}  // namespace semihilbert
