#include <gtest/gtest.h>

#include "support.hpp"

using namespace ado;
using namespace ado::test;

namespace {

Subspace span_units(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<Vector> v;
  for (auto i : idx) v.push_back(unit_vector(n, i));
  return Subspace::span(n, v);
}

}  // namespace

TEST(Validate, Heisenberg) { EXPECT_TRUE(validate(*example("heisenberg3")).ok()); }

TEST(Validate, Abelian) { EXPECT_TRUE(validate(LieAlgebra::abelian(2)).ok()); }

TEST(Validate, BrokenJacobiReportsTriple) {
  LieAlgebra broken(3, {{0, 1, {{2, Rational(1)}}}, {1, 2, {{0, Rational(1)}}}, {0, 2, {{0, Rational(1)}}}});
  ValidationReport r = validate(broken);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].i, 0u);
  EXPECT_EQ(r.violations[0].j, 1u);
  EXPECT_EQ(r.violations[0].k, 2u);
  // [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1] = [e2,e2] + [e0,e0] + [-e0,e1] = -e2
  EXPECT_EQ(r.violations[0].residual, vec({0, 0, -1}));
}

TEST(Construction, RejectsBadPairs) {
  EXPECT_EQ(error_of([] { LieAlgebra(3, {{1, 0, {{2, Rational(1)}}}}); }), ErrorKind::ParseError);
  EXPECT_EQ(error_of([] { LieAlgebra(3, {{0, 1, {}}, {0, 1, {}}}); }), ErrorKind::ParseError);
}

TEST(Bracket, Heisenberg) {
  AlgebraPtr h3 = example("heisenberg3");
  EXPECT_EQ(bracket(*h3, vec({1, 0, 0}), vec({0, 1, 0})), vec({0, 0, 1}));
  EXPECT_EQ(bracket(*h3, vec({0, 1, 0}), vec({1, 0, 0})), vec({0, 0, -1}));
  EXPECT_EQ(bracket(*h3, vec({0, 0, 1}), vec({1, 0, 0})), vec({0, 0, 0}));
  EXPECT_EQ(bracket(*h3, vec({3, 2, 1}), vec({3, 2, 1})), vec({0, 0, 0}));
  // [e0 + 2e1, 3e0 - e1] = -[e0,e1] + 6[e1,e0] = -7e2
  EXPECT_EQ(bracket(*h3, vec({1, 2, 0}), vec({3, -1, 0})), vec({0, 0, -7}));
}

TEST(Center, Examples) {
  EXPECT_EQ(center(*example("heisenberg3")), span_units(3, {2}));
  EXPECT_TRUE(center(LieAlgebra::abelian(4)).is_full());
  EXPECT_EQ(center(*example("filiform4")), span_units(4, {3}));
  EXPECT_EQ(center(*example("heisenberg5")), span_units(5, {4}));
  EXPECT_TRUE(center(*example("solvable2")).is_zero());
}

TEST(LowerCentralSeries, Examples) {
  auto h3 = lower_central_series(*example("heisenberg3"));
  ASSERT_EQ(h3.size(), 3u);
  EXPECT_TRUE(h3[0].is_full());
  EXPECT_EQ(h3[1], span_units(3, {2}));
  EXPECT_TRUE(h3[2].is_zero());

  auto ab = lower_central_series(LieAlgebra::abelian(3));
  ASSERT_EQ(ab.size(), 2u);
  EXPECT_TRUE(ab[1].is_zero());

  auto f4 = lower_central_series(*example("filiform4"));
  ASSERT_EQ(f4.size(), 4u);
  EXPECT_EQ(f4[1], span_units(4, {2, 3}));
  EXPECT_EQ(f4[2], span_units(4, {3}));
  EXPECT_TRUE(f4[3].is_zero());
}

TEST(NilpotencyClass, Examples) {
  EXPECT_EQ(nilpotency_class(*example("heisenberg3")), 2u);
  EXPECT_EQ(nilpotency_class(*example("filiform4")), 3u);
  EXPECT_EQ(nilpotency_class(LieAlgebra::abelian(1)), 1u);
  EXPECT_EQ(error_of([] { nilpotency_class(*example("solvable2")); }), ErrorKind::NotNilpotent);
  EXPECT_FALSE(is_nilpotent(*example("solvable2")));
}

TEST(Quotient, ByZeroIsIdentity) {
  AlgebraPtr h3 = example("heisenberg3");
  Quotient q = quotient(h3, Subspace(3));
  EXPECT_TRUE(q.algebra->same_structure(*h3));
  EXPECT_EQ(q.projection.matrix(), RationalMatrix::identity(3));
}

TEST(Quotient, HeisenbergModCenterIsAbelian) {
  Quotient q = quotient(example("heisenberg3"), span_units(3, {2}));
  EXPECT_TRUE(q.algebra->same_structure(LieAlgebra::abelian(2)));
  EXPECT_EQ(q.complement, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(q.projection.is_surjective());
  EXPECT_EQ(q.projection.kernel(), span_units(3, {2}));
}

TEST(Quotient, NonIdealRejected) {
  EXPECT_EQ(error_of([] { quotient(example("heisenberg3"), span_units(3, {0})); }), ErrorKind::NotAnIdeal);
}

TEST(Quotient, FiliformModCenterIsHeisenberg) {
  Quotient q = quotient(example("filiform4"), span_units(4, {3}));
  EXPECT_TRUE(q.algebra->same_structure(*example("heisenberg3")));
}

TEST(LieHom, RejectsNonHomomorphism) {
  AlgebraPtr h3 = example("heisenberg3");
  RationalMatrix scaling = RationalMatrix::diagonal(vec({2, 3, 6}));
  EXPECT_NO_THROW(LieHom(h3, h3, scaling));
  EXPECT_EQ(error_of([&] { LieHom(h3, h3, RationalMatrix::diagonal(vec({1, 1, 3}))); }),
            ErrorKind::NotAHomomorphism);
}

TEST(CentralFlag, Abelian) {
  IdealChain c = central_flag(share(LieAlgebra::abelian(2)));
  ASSERT_EQ(c.ideals.size(), 3u);
  EXPECT_TRUE(c.ideals[0].is_zero());
  EXPECT_EQ(c.ideals[1], span_units(2, {0}));
  EXPECT_TRUE(c.ideals[2].is_full());
}

TEST(CentralFlag, HeisenbergAndFiliform) {
  IdealChain h = central_flag(example("heisenberg3"));
  ASSERT_EQ(h.ideals.size(), 4u);
  EXPECT_EQ(h.ideals[1], span_units(3, {2}));
  EXPECT_TRUE(is_central_chain(h));

  IdealChain f = central_flag(example("filiform4"));
  ASSERT_EQ(f.ideals.size(), 5u);
  EXPECT_EQ(f.ideals[1], span_units(4, {3}));
  EXPECT_EQ(f.ideals[2], span_units(4, {2, 3}));
  EXPECT_TRUE(is_central_chain(f));
}

TEST(CentralFlag, BrokenChainDetected) {
  AlgebraPtr h3 = example("heisenberg3");
  IdealChain bad{h3, {Subspace(3), span_units(3, {0, 2}), Subspace::full(3)}};
  EXPECT_FALSE(is_central_chain(bad));
}

TEST(Codim1Refinement, Examples) {
  EXPECT_TRUE(codim1_refinement(example("heisenberg3"), span_units(3, {2})).is_zero());
  EXPECT_EQ(codim1_refinement(example("filiform4"), span_units(4, {2, 3})), span_units(4, {3}));
  EXPECT_EQ(error_of([] { codim1_refinement(example("heisenberg3"), Subspace(3)); }), ErrorKind::ZeroIdeal);
}

TEST(Grading, Examples) {
  AlgebraPtr h3 = example("heisenberg3");
  EXPECT_TRUE(verify_grading(*h3, Grading{{1, 1, 2}}));
  EXPECT_FALSE(verify_grading(*h3, Grading{{1, 1, 1}}));
  EXPECT_TRUE(verify_grading(LieAlgebra::abelian(3), Grading{{5, 1, 7}}));
  EXPECT_FALSE(verify_grading(LieAlgebra::abelian(2), Grading{{0, 1}}));
}

TEST(IsIdeal, Examples) {
  AlgebraPtr f4 = example("filiform4");
  EXPECT_TRUE(is_ideal(*f4, span_units(4, {2, 3})));
  EXPECT_TRUE(is_ideal(*f4, span_units(4, {1, 2, 3})));
  EXPECT_FALSE(is_ideal(*f4, span_units(4, {2})));
}
