#include <doctest.h>

#include <cmath>
#include <set>

#include <semihilbert/catalog.hpp>
#include <semihilbert/suite.hpp>

using namespace semihilbert;
using M = Matrix<double>;
using V = Vector<double>;
using C = Complex<double>;

namespace {

WeightPtr<double> identity_weight(int n) {
  return make_weight_ptr(M(M::Identity(n, n)));
}

Operands<double> two_ops(WeightPtr<double> w, const M& t, const M& s) {
  Operands<double> ops;
  ops.weight = w;
  ops.operators = {t, s};
  return ops;
}

const Link<double>& link_by_label(const BoundReport<double>& rep, const std::string& label) {
  for (const auto& l : rep.links)
    if (l.label == label) return l;
  REQUIRE_MESSAGE(false, "missing link " << label);
  return rep.links.front();
}

CatalogOptions<double> fast_opts() {
  CatalogOptions<double> opt;
  opt.grid = 128;
  return opt;
}

}  // namespace

TEST_CASE("case registry is complete, unique and self-consistent") {
  const auto& cases = list_cases();
  CHECK(cases.size() == 29);
  std::set<int> ids;
  std::set<std::string> names;
  for (const auto& c : cases) {
    ids.insert(static_cast<int>(c.id));
    names.insert(c.name);
    if (!c.variable_operands)
      CHECK(static_cast<int>(c.operator_classes.size()) == c.num_operators);
    CHECK(to_string(c.id) == to_string(case_info(c.id).id));
    CHECK(case_from_string(to_string(c.id)) == c.id);
  }
  CHECK(ids.size() == 29);
  CHECK(names.size() == 29);
  CHECK_THROWS_AS(case_from_string("C30"), UnknownCase);
  CHECK_THROWS_AS(case_from_string("nope"), UnknownCase);
}

TEST_CASE("radius sandwich case on the nilpotent extremal") {
  auto w = identity_weight(2);
  M t(2, 2);
  t << C(0, 0), C(1, 0), C(0, 0), C(0, 0);
  Operands<double> ops;
  ops.weight = w;
  ops.operators = {t};
  auto rep = evaluate(CaseId::C01, ops, fast_opts());
  CHECK(rep.certified);
  const auto& lower = link_by_label(rep, "lower");
  CHECK(lower.lhs == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(lower.rhs == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(std::abs(rep.rel_slack) <= 1e-8);  // the lower bound binds exactly
}

TEST_CASE("adjoint norm identities on a singular diagonal weight") {
  M a = M::Zero(2, 2);
  a(0, 0) = 1.0;
  auto w = make_weight_ptr(a);
  M t(2, 2);
  t << C(2, 0), C(0, 0), C(3, 0), C(5, 0);
  Operands<double> ops;
  ops.weight = w;
  ops.operators = {t};
  auto rep = evaluate(CaseId::C02, ops, fast_opts());
  CHECK(rep.certified);
  CHECK(link_by_label(rep, "sharp-left").rhs == doctest::Approx(4.0).epsilon(1e-10));
  for (const auto& l : rep.links) {
    CHECK(l.equality);
    CHECK(std::abs(l.lhs - l.rhs) <= 1e-7 * std::max(1.0, std::abs(l.rhs)));
  }
}

TEST_CASE("product radius bound worked example") {
  auto w = identity_weight(2);
  M t(2, 2);
  t << C(0, 0), C(1, 0), C(0, 0), C(0, 0);
  auto rep = evaluate(CaseId::C06, two_ops(w, t, t), fast_opts());
  CHECK(rep.certified);
  const auto& l = rep.links.front();
  CHECK(l.lhs == doctest::Approx(0.0));
  CHECK(l.rhs == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("antidiagonal block radius equality on the identity pair") {
  auto w = identity_weight(2);
  M eye = M::Identity(2, 2);
  auto rep = evaluate(CaseId::C24, two_ops(w, eye, eye), fast_opts());
  CHECK(rep.certified);
  const auto& l = rep.links.front();
  CHECK(l.lhs == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(l.rhs == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("shifted seminorm line fails at the far endpoint") {
  // positive operator whose smallest reduced eigenvalue is not extremal:
  // the alpha = 1 equality claim breaks while alpha <= 1/2 certifies.
  auto w = identity_weight(2);
  M t = M::Zero(2, 2);
  t(0, 0) = 1.0;
  Operands<double> ops;
  ops.weight = w;
  ops.operators = {t};
  auto rep = evaluate(CaseId::C10, ops, fast_opts());
  CHECK_FALSE(rep.certified);
  CHECK(link_by_label(rep, "alpha=0.00").certified);
  CHECK(link_by_label(rep, "alpha=0.25").certified);
  CHECK(link_by_label(rep, "alpha=0.50").certified);
  const auto& far = link_by_label(rep, "alpha=1.00");
  CHECK_FALSE(far.certified);
  CHECK(far.lhs == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(far.rhs == doctest::Approx(0.0));
}

TEST_CASE("positive-factor product bound archived counterexample, ts side") {
  auto w = identity_weight(2);
  M t(2, 2), s(2, 2);
  t << C(0.49707174, 0), C(0.26423417, -0.40368943),
       C(0.26423417, 0.40368943), C(0.53714104, 0);
  t += 1e-6 * M::Identity(2, 2);
  s << C(1.00583878, 0.12140615), C(0.71001011, 0.79453211),
       C(-0.63002518, 0.8145801), C(-1.12955415, 0.02141418);
  auto rep = evaluate(CaseId::C09, two_ops(w, t, s));
  CHECK_FALSE(rep.certified);
  const auto& l = link_by_label(rep, "ts");
  CHECK_FALSE(l.certified);
  CHECK(l.lhs / l.rhs > 1.2);
  CHECK(l.lhs / l.rhs < 1.3);
}

TEST_CASE("positive-factor product bound archived counterexample, st side") {
  auto w = identity_weight(2);
  M t(2, 2), s(2, 2);
  t << C(0.26395624, 0), C(-0.73523363, 0.3362923),
       C(-0.73523363, -0.3362923), C(2.47639927, 0);
  t += 1e-6 * M::Identity(2, 2);
  s << C(-0.37244517, 0.1248045), C(-1.59140011, 0.01798909),
       C(0.07817548, -0.0576354), C(0.37272123, -0.12488956);
  auto rep = evaluate(CaseId::C09, two_ops(w, t, s));
  CHECK_FALSE(rep.certified);
  const auto& l = link_by_label(rep, "st");
  CHECK_FALSE(l.certified);
  CHECK(l.lhs / l.rhs > 1.28);
}

TEST_CASE("chained bounds keep their middle terms consistent") {
  SplitRng rng(808);
  for (CaseId id : {CaseId::C14, CaseId::C17, CaseId::C18}) {
    const CaseInfo& info = case_info(id);
    for (int trial = 0; trial < 4; ++trial) {
      auto w = std::make_shared<const Weight<double>>(
          gen_weight<double>(2 + trial, 1 + trial % (2 + trial), rng));
      Operands<double> ops = draw_operands<double>(info, w, rng, trial);
      auto rep = evaluate(id, ops, fast_opts());
      CHECK(rep.certified);
      CHECK(link_by_label(rep, "inner").rhs == doctest::Approx(link_by_label(rep, "outer").lhs));
    }
  }
}

TEST_CASE("power-parameterized cases certify for every k and exponent") {
  SplitRng rng(909);
  for (CaseId id : {CaseId::C19, CaseId::C21, CaseId::C22}) {
    const CaseInfo& info = case_info(id);
    REQUIRE(info.variable_operands);
    for (int trial = 0; trial < 6; ++trial) {  // trials 0..5 sweep k in 1..3, n in 1..2
      auto w = std::make_shared<const Weight<double>>(gen_weight<double>(3, 2, rng));
      Operands<double> ops = draw_operands<double>(info, w, rng, trial);
      CHECK(static_cast<int>(ops.operators.size()) == 1 + trial % 3);
      CHECK(ops.power == 1 + (trial / 3) % 2);
      auto rep = evaluate(id, ops, fast_opts());
      CHECK(rep.certified);
    }
  }
}

TEST_CASE("every case certifies on one well-posed random draw") {
  SplitRng rng(1111);
  for (const auto& info : list_cases()) {
    if (info.id == CaseId::C10) continue;  // known failing endpoint, covered above
    auto w = std::make_shared<const Weight<double>>(gen_weight<double>(3, 2, rng));
    Operands<double> ops = draw_operands<double>(info, w, rng, 1);
    auto rep = evaluate(info.id, ops, fast_opts());
    CHECK_MESSAGE(rep.certified, "case " << to_string(info.id));
    CHECK(rep.links.size() >= 1);
    CHECK(rep.binding >= 0);
    for (const auto& l : rep.links) {
      CHECK(std::isfinite(l.lhs));
      CHECK(std::isfinite(l.rhs));
    }
    // digests are a pure function of the operands
    auto rep2 = evaluate(info.id, ops, fast_opts());
    CHECK(rep.operand_digest == rep2.operand_digest);
  }
}

TEST_CASE("hypothesis violations are skipped, not counted as violations") {
  auto w = identity_weight(2);
  M notpos(2, 2);
  notpos << C(0, 0), C(1, 0), C(0, 0), C(0, 0);
  CHECK_THROWS_AS(evaluate(CaseId::C09, two_ops(w, notpos, notpos)), SkippedHypothesis);

  Operands<double> wrong_count;
  wrong_count.weight = w;
  wrong_count.operators = {M::Identity(2, 2)};
  CHECK_THROWS_AS(evaluate(CaseId::C04, wrong_count), InvalidConfig);

  Operands<double> wrong_dim;
  wrong_dim.weight = w;
  wrong_dim.operators = {M::Identity(3, 3), M::Identity(3, 3)};
  CHECK_THROWS_AS(evaluate(CaseId::C04, wrong_dim), DimensionMismatch);

  Operands<double> no_weight;
  no_weight.operators = {M::Identity(2, 2)};
  CHECK_THROWS_AS(evaluate(CaseId::C01, no_weight), InvalidConfig);

  // unit-vector case with a non-unit probe vector
  Operands<double> bad_unit;
  bad_unit.weight = w;
  V x(2), y(2), e(2);
  x << C(1, 0), C(0, 0);
  y << C(0, 0), C(1, 0);
  e << C(3, 0), C(0, 0);
  bad_unit.vectors = {x, y, e};
  CHECK_THROWS_AS(evaluate(CaseId::C15, bad_unit), SkippedHypothesis);
  e << C(1, 0), C(0, 0);
  bad_unit.vectors = {x, y, e};
  CHECK(evaluate(CaseId::C15, bad_unit).certified);
}

TEST_CASE("tightness ratios against the classical baselines") {
  auto w = identity_weight(2);
  M eye = M::Identity(2, 2);
  CHECK(tightness(CaseId::C04, "classic2", two_ops(w, eye, eye)) ==
        doctest::Approx(1.0).epsilon(1e-9));

  SplitRng rng(1212);
  auto wr = std::make_shared<const Weight<double>>(gen_weight<double>(3, 3, rng));
  Operands<double> ops = draw_operands<double>(case_info(CaseId::C09), wr, rng, 0);
  CHECK(tightness(CaseId::C09, "three_halves", ops) == doctest::Approx(2.0 / 3.0));

  CHECK_THROWS_AS(tightness(CaseId::C01, "classic2", two_ops(w, eye, eye)), InvalidConfig);
  M zero = M::Zero(2, 2);
  CHECK_THROWS_AS(tightness(CaseId::C04, "classic2", two_ops(w, zero, zero)),
                  SkippedHypothesis);
}

TEST_CASE("equality certification tracks values, not interval slop") {
  SplitRng rng(1313);
  for (int trial = 0; trial < 6; ++trial) {
    const int dim = 2 + trial % 4;
    auto w = std::make_shared<const Weight<double>>(
        gen_weight<double>(dim, 1 + trial % dim, rng));
    Operands<double> ops = draw_operands<double>(case_info(CaseId::C03), w, rng, trial);
    auto rep = evaluate(CaseId::C03, ops, fast_opts());
    CHECK(rep.certified);
    for (const auto& l : rep.links)
      CHECK(std::abs(l.lhs - l.rhs) <= 1e-7 * std::max(1.0, std::abs(l.rhs)));
  }
}
