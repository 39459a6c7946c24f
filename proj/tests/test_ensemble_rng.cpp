#include <doctest.h>

#include <cmath>
#include <set>

#include <semihilbert/ensemble.hpp>
#include <semihilbert/rng.hpp>

using namespace semihilbert;
using M = Matrix<double>;
using C = Complex<double>;

TEST_CASE("rng is deterministic and splits into independent streams") {
  SplitRng a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());

  SplitRng base(7);
  SplitRng s1 = base.split(1);
  SplitRng s2 = base.split(2);
  // children do not collide with each other or the parent on a short window
  std::set<std::uint64_t> seen;
  SplitRng parent(7);
  for (int i = 0; i < 50; ++i) {
    seen.insert(parent());
    seen.insert(s1());
    seen.insert(s2());
  }
  CHECK(seen.size() == 150);

  // splitting is independent of how much the parent has been consumed
  SplitRng c1(99), c2(99);
  c2();
  c2();
  CHECK(c1.split(5)() == c2.split(5)());
}

TEST_CASE("uniform and normal draws are in range and finite") {
  SplitRng rng(2025);
  double sum = 0, sumsq = 0;
  for (int i = 0; i < 4000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double g = rng.normal();
    CHECK(std::isfinite(g));
    sum += g;
    sumsq += g * g;
  }
  CHECK(std::abs(sum / 4000) < 0.1);          // loose moment sanity
  CHECK(std::abs(sumsq / 4000 - 1.0) < 0.1);  // variance near one
  const C z = rng.cnormal();
  CHECK(std::isfinite(z.real()));
  CHECK(std::isfinite(z.imag()));
}

TEST_CASE("weight generator hits the requested rank exactly") {
  for (int dim = 1; dim <= 6; ++dim)
    for (int rank = 1; rank <= dim; ++rank) {
      Weight<double> w = gen_weight<double>(dim, rank, 1000u + dim * 8 + rank);
      CHECK(w.dim() == dim);
      CHECK(w.rank == rank);
    }
  SplitRng rng(5);
  CHECK_THROWS_AS(gen_weight<double>(0, 0, rng), InvalidConfig);
  CHECK_THROWS_AS(gen_weight<double>(3, 0, rng), InvalidRank);
  CHECK_THROWS_AS(gen_weight<double>(3, 4, rng), InvalidRank);
}

TEST_CASE("generated operators are reproducible from the seed") {
  SplitRng r1(77), r2(77);
  Weight<double> w1 = gen_weight<double>(4, 2, r1);
  Weight<double> w2 = gen_weight<double>(4, 2, r2);
  CHECK((w1.a - w2.a).norm() == 0.0);
  M m1 = gen_operator_matrix(w1, OperandClass::GeneralInBA, r1);
  M m2 = gen_operator_matrix(w2, OperandClass::GeneralInBA, r2);
  CHECK((m1 - m2).norm() == 0.0);
}

TEST_CASE("generated classes pass their own predicates across the grid") {
  SplitRng rng(303);
  for (int dim = 2; dim <= 6; ++dim)
    for (int rank = 1; rank <= dim; ++rank) {
      Weight<double> w = gen_weight<double>(dim, rank, rng);
      CHECK(in_BA(w, gen_operator_matrix(w, OperandClass::GeneralInBA, rng)).member);
      CHECK(is_a_selfadjoint(w, gen_operator_matrix(w, OperandClass::ASelfadjoint, rng)));
      CHECK(is_a_positive(w, gen_operator_matrix(w, OperandClass::APositive, rng)));
    }
}

TEST_CASE("raw dense draws are never adjointable under a singular weight") {
  SplitRng rng(404);
  int accepted = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 2 + trial % 5;
    const int rank = 1 + trial % (dim - 1);  // strictly singular
    Weight<double> w = gen_weight<double>(dim, rank, rng);
    M raw(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) raw(i, j) = rng.cnormal();
    if (in_BA(w, raw).member) ++accepted;
  }
  CHECK(accepted == 0);
}

TEST_CASE("unit vectors have unit seminorm and respect the kernel split") {
  M a = M::Zero(2, 2);
  a(0, 0) = 4.0;
  Weight<double> w = make_weight(a);
  SplitRng rng(505);
  for (int i = 0; i < 10; ++i) {
    Vector<double> e = gen_unit_a_vector(w, rng);
    CHECK(vec_seminorm(w, e) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(e(0)) == doctest::Approx(0.5).epsilon(1e-12));
  }
  SplitRng rng2(606);
  for (int trial = 0; trial < 10; ++trial) {
    Weight<double> wr = gen_weight<double>(5, 2, rng2);
    Vector<double> e = gen_unit_a_vector(wr, rng2);
    CHECK(vec_seminorm(wr, e) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("unit vector requests fail cleanly on vector class mismatch") {
  SplitRng rng(707);
  Weight<double> w = gen_weight<double>(3, 2, rng);
  CHECK_THROWS_AS(gen_operator_matrix(w, OperandClass::UnitAVector, rng), InvalidClass);
  CHECK_THROWS_AS(operand_class_from_string("bogus"), InvalidClass);
  CHECK(operand_class_from_string("a_positive") == OperandClass::APositive);
  CHECK(std::string(to_string(OperandClass::ASelfadjoint)) == "a_selfadjoint");
}
