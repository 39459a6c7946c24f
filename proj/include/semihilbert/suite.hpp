#pragma once
// Property-suite runner: executes the catalog over a (dim, rank) grid of
// seeded ensembles, aggregates per-case and per-link statistics, archives
// violating operands, and runs the structural experiments (generator
// soundness, double/triple adjoint behavior, membership sanity).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "semihilbert/catalog.hpp"
#include "semihilbert/ensemble.hpp"
#include "semihilbert/types.hpp"

namespace semihilbert {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct SuiteConfig {
  std::vector<int> dims = {2, 3, 4, 5, 6};
  std::vector<int> ranks;  // empty = every rank 1..dim
  int trials = 200;
  std::uint64_t seed = kDefaultSeed;
  std::vector<CaseId> cases;  // must be nonempty; "all" is resolved by the caller
  double eq_tol = 1e-7;
  int grid = 128;
  double refine_tol = 1e-12;
  int max_archived_violations = 50;
};

inline std::vector<CaseId> all_cases() {
  std::vector<CaseId> v;
  for (const auto& c : list_cases()) v.push_back(c.id);
  return v;
}

struct LinkStat {
  std::string label;
  long trials = 0;
  long violations = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  double max_eq_residual = 0;
};

struct CaseAggregate {
  CaseId id = CaseId::C01;
  std::string name;
  long trials = 0;
  long skipped = 0;
  long violations = 0;        // uncertified reports
  long value_violations = 0;  // inequality links failing on bare values
  long near_tight = 0;        // rel_slack < 1e-3
  double min_rel_slack = std::numeric_limits<double>::infinity();
  double median_rel_slack = 0;
  double max_eq_residual = 0;
  std::vector<LinkStat> links;
};

template <typename Real>
struct ViolationRecord {
  CaseId id = CaseId::C01;
  std::string link;
  double lhs = 0, rhs = 0, lhs_err = 0, rhs_err = 0;
  int dim = 0, rank = 0, trial = 0;
  std::string digest;
  Operands<Real> operands;
};

struct StructureStats {
  long soundness_total = 0;
  long soundness_pass = 0;
  long raw_membership_total = 0;
  long raw_membership_accepted = 0;  // unstructured draws passing in_BA at rank < dim
  double double_sharp_max_residual = 0;
  double triple_sharp_vs_sharp_max = 0;  // ||((T#)#)# - T#|| / scale, max
  double triple_sharp_vs_op_min = std::numeric_limits<double>::infinity();
  std::string triple_sharp_outcome;
};

template <typename Real>
struct SuiteReport {
  SuiteConfig config;
  std::vector<CaseAggregate> cases;
  std::vector<ViolationRecord<Real>> violations;
  long violations_total = 0;
  bool violations_truncated = false;
  StructureStats structure;
  long total_trials = 0;
  long total_skipped = 0;
  long total_violations = 0;
  double wall_seconds = 0;
};

// Draw one operand set for a case over an existing weight. The trial index
// cycles the operator count k in {1,2,3} and exponent n in {1,2} for the
// power-parameterized cases.
template <typename Real>
Operands<Real> draw_operands(const CaseInfo& info, WeightPtr<Real> w, SplitRng& rng,
                             int trial = 0) {
  Operands<Real> ops;
  ops.weight = w;
  int k = info.num_operators;
  if (info.variable_operands) {
    k = 1 + trial % 3;
    ops.power = 1 + (trial / 3) % 2;
  }
  for (int i = 0; i < k; ++i) {
    const OperandClass cls =
        info.variable_operands ? OperandClass::GeneralInBA : info.operator_classes[i];
    Matrix<Real> m = gen_operator_matrix(*w, cls, rng);
    if (info.normalize_operands) {
      const Real s = op_seminorm(*w, m);
      if (s > Real(2)) m *= Real(2) / s;
    }
    ops.operators.push_back(std::move(m));
  }
  for (int j = 0; j < info.num_vectors; ++j) {
    if (info.unit_vector && j == info.num_vectors - 1) {
      ops.vectors.push_back(gen_unit_a_vector(*w, rng));
    } else {
      Vector<Real> v(w->dim());
      for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex<Real>(rng.cnormal());
      ops.vectors.push_back(std::move(v));
    }
  }
  return ops;
}

namespace detail {

template <typename Real>
StructureStats run_structure_experiments(const SuiteConfig& cfg) {
  StructureStats st;
  SplitRng base = SplitRng(cfg.seed).split(0xE0);
  const std::array<OperandClass, 3> classes = {
      OperandClass::GeneralInBA, OperandClass::ASelfadjoint, OperandClass::APositive};
  int tag = 0;
  for (int dim = 2; dim <= 6; ++dim) {
    for (int rank = 1; rank <= dim; ++rank) {
      SplitRng rng = base.split(static_cast<std::uint64_t>(tag++));
      Weight<Real> w = gen_weight<Real>(dim, rank, rng);
      for (OperandClass cls : classes) {
        Matrix<Real> t = gen_operator_matrix(w, cls, rng);
        Predicates p = predicates(w, t);
        bool ok = p.in_ba;
        if (cls == OperandClass::ASelfadjoint) ok = ok && p.a_selfadjoint;
        if (cls == OperandClass::APositive) ok = ok && p.a_positive;
        ++st.soundness_total;
        if (ok) ++st.soundness_pass;
      }
      if (rank < dim) {
        // unstructured Gaussian should essentially never admit an A-adjoint
        Matrix<Real> raw(dim, dim);
        detail::fill_cnormal(raw, rng);
        ++st.raw_membership_total;
        if (in_BA(w, raw).member) ++st.raw_membership_accepted;
      }
      // adjoint iteration behavior
      Matrix<Real> t = gen_operator_matrix(w, OperandClass::GeneralInBA, rng);
      Matrix<Real> s1 = sharp(w, t);
      Matrix<Real> s2 = sharp(w, s1);
      Matrix<Real> s3 = sharp(w, s2);
      Matrix<Real> ptp = w.proj * t * w.proj;
      const double d2 = static_cast<double>((s2 - ptp).norm() /
                                            std::max(Real(1), ptp.norm()));
      st.double_sharp_max_residual = std::max(st.double_sharp_max_residual, d2);
      const double dvs = static_cast<double>((s3 - s1).norm() /
                                             std::max(Real(1), s1.norm()));
      st.triple_sharp_vs_sharp_max = std::max(st.triple_sharp_vs_sharp_max, dvs);
      const double dvt = static_cast<double>((s3 - t).norm() /
                                             std::max(Real(1), t.norm()));
      st.triple_sharp_vs_op_min = std::min(st.triple_sharp_vs_op_min, dvt);
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "adjoint iteration stabilizes after one step: the third adjoint equals "
                "the first in every draw (max defect %.2e), while it differs from the "
                "operator itself in every generic draw (closest %.2e)",
                st.triple_sharp_vs_sharp_max, st.triple_sharp_vs_op_min);
  st.triple_sharp_outcome = buf;
  return st;
}

}  // namespace detail

template <typename Real = double>
SuiteReport<Real> run_suite(const SuiteConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.dims.empty()) throw InvalidConfig("run_suite: no dimensions");
  for (int d : cfg.dims)
    if (d < 1) throw InvalidConfig("run_suite: dimensions must be positive");
  for (int r : cfg.ranks)
    if (r < 1) throw InvalidConfig("run_suite: ranks must be positive");
  if (cfg.trials < 1) throw InvalidConfig("run_suite: trials must be >= 1");
  if (cfg.cases.empty()) throw InvalidConfig("run_suite: empty case subset");

  std::vector<CaseId> cases = cfg.cases;
  std::sort(cases.begin(), cases.end());
  cases.erase(std::unique(cases.begin(), cases.end()), cases.end());

  std::vector<std::pair<int, int>> pairs;
  for (int d : cfg.dims) {
    if (cfg.ranks.empty()) {
      for (int r = 1; r <= d; ++r) pairs.emplace_back(d, r);
    } else {
      for (int r : cfg.ranks)
        if (r <= d) pairs.emplace_back(d, r);
    }
  }
  if (pairs.empty()) throw InvalidConfig("run_suite: empty (dim, rank) grid");

  CatalogOptions<Real> copt;
  copt.eq_tol = static_cast<Real>(cfg.eq_tol);
  copt.grid = cfg.grid;
  copt.refine_tol = static_cast<Real>(cfg.refine_tol);

  SuiteReport<Real> rep;
  rep.config = cfg;
  rep.config.cases = cases;

  for (CaseId id : cases) {
    const CaseInfo& info = case_info(id);
    CaseAggregate agg;
    agg.id = id;
    agg.name = info.name;
    std::vector<double> rel_slacks;
    for (const auto& [dim, rank] : pairs) {
      for (int trial = 0; trial < cfg.trials; ++trial) {
        SplitRng rng = SplitRng(cfg.seed)
                           .split(static_cast<std::uint64_t>(id))
                           .split(static_cast<std::uint64_t>(dim * 64 + rank))
                           .split(static_cast<std::uint64_t>(trial));
        WeightPtr<Real> w =
            std::make_shared<const Weight<Real>>(gen_weight<Real>(dim, rank, rng));
        Operands<Real> ops = draw_operands(info, w, rng, trial);
        BoundReport<Real> br;
        try {
          br = evaluate(id, ops, copt);
        } catch (const SkippedHypothesis&) {
          ++agg.skipped;
          continue;
        }
        ++agg.trials;
        rel_slacks.push_back(static_cast<double>(br.rel_slack));
        agg.min_rel_slack = std::min(agg.min_rel_slack, static_cast<double>(br.rel_slack));
        if (br.rel_slack < Real(1e-3)) ++agg.near_tight;
        for (const auto& l : br.links) {
          auto it = std::find_if(agg.links.begin(), agg.links.end(),
                                 [&](const LinkStat& s) { return s.label == l.label; });
          if (it == agg.links.end()) {
            agg.links.push_back(LinkStat{l.label, 0, 0,
                                         std::numeric_limits<double>::infinity(), 0});
            it = std::prev(agg.links.end());
          }
          ++it->trials;
          if (!l.certified) ++it->violations;
          it->min_margin = std::min(it->min_margin, static_cast<double>(l.margin));
          if (l.equality) {
            const double res = std::abs(static_cast<double>(l.lhs - l.rhs)) /
                               std::max(1.0, std::abs(static_cast<double>(l.rhs)));
            it->max_eq_residual = std::max(it->max_eq_residual, res);
            agg.max_eq_residual = std::max(agg.max_eq_residual, res);
          } else {
            const double pad =
                1e-9 * std::max({1.0, std::abs(static_cast<double>(l.lhs)),
                                 std::abs(static_cast<double>(l.rhs))});
            if (static_cast<double>(l.lhs) > static_cast<double>(l.rhs) + pad)
              ++agg.value_violations;
          }
        }
        if (!br.certified) {
          ++agg.violations;
          ++rep.violations_total;
          if (static_cast<int>(rep.violations.size()) < cfg.max_archived_violations) {
            const Link<Real>* worst = nullptr;
            for (const auto& l : br.links)
              if (!l.certified && (!worst || l.margin < worst->margin)) worst = &l;
            ViolationRecord<Real> v;
            v.id = id;
            v.link = worst ? worst->label : "";
            v.lhs = worst ? static_cast<double>(worst->lhs) : 0;
            v.rhs = worst ? static_cast<double>(worst->rhs) : 0;
            v.lhs_err = worst ? static_cast<double>(worst->lhs_err) : 0;
            v.rhs_err = worst ? static_cast<double>(worst->rhs_err) : 0;
            v.dim = dim;
            v.rank = rank;
            v.trial = trial;
            v.digest = to_string(id) + " dim=" + std::to_string(dim) +
                       " rank=" + std::to_string(rank) + " trial=" + std::to_string(trial) +
                       " seed=" + std::to_string(cfg.seed) + " " + br.operand_digest;
            v.operands = std::move(ops);
            rep.violations.push_back(std::move(v));
          } else {
            rep.violations_truncated = true;
          }
        }
      }
    }
    if (!rel_slacks.empty()) {
      std::sort(rel_slacks.begin(), rel_slacks.end());
      const std::size_t n = rel_slacks.size();
      agg.median_rel_slack =
          (n % 2) ? rel_slacks[n / 2] : (rel_slacks[n / 2 - 1] + rel_slacks[n / 2]) / 2;
    } else {
      agg.min_rel_slack = 0;
    }
    rep.total_trials += agg.trials;
    rep.total_skipped += agg.skipped;
    rep.total_violations += agg.violations;
    rep.cases.push_back(std::move(agg));
  }

  rep.structure = detail::run_structure_experiments<Real>(cfg);
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace semihilbert
