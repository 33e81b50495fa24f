#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace ado;
using namespace ado::test;

TEST(CurrentAlgebra, AbelianLine) {
  CurrentAlgebra c = current_algebra(share(LieAlgebra::abelian(1)), 2);
  EXPECT_TRUE(c.product->same_structure(LieAlgebra::abelian(1)));
}

TEST(CurrentAlgebra, HeisenbergTruncatedAtThree) {
  CurrentAlgebra c = current_algebra(example("heisenberg3"), 3);
  ASSERT_EQ(c.product->dim(), 6u);
  // Basis: e0t e1t e2t e0t² e1t² e2t².
  EXPECT_EQ(c.product->basis_bracket(0, 1), (SparseVector{{5, Rational(1)}}));
  EXPECT_TRUE(c.product->basis_bracket(0, 4).empty());
  EXPECT_TRUE(c.product->basis_bracket(3, 4).empty());
  EXPECT_EQ(c.product->basis_bracket(1, 0), (SparseVector{{5, Rational(-1)}}));
  EXPECT_TRUE(validate(*c.product).ok());
  EXPECT_EQ(c.product->label(5), "e2*t^2");
}

TEST(CurrentAlgebra, HeisenbergTruncatedAtTwoIsAbelian) {
  CurrentAlgebra c = current_algebra(example("heisenberg3"), 2);
  EXPECT_TRUE(c.product->same_structure(LieAlgebra::abelian(3)));
}

TEST(GradedEmbedding, AbelianLine) {
  GradedEmbedding g = graded_embedding(share(LieAlgebra::abelian(1)));
  EXPECT_EQ(g.current.truncation, 2u);
  EXPECT_EQ(g.embedding.matrix(), RationalMatrix::identity(1));
}

TEST(GradedEmbedding, Heisenberg) {
  GradedEmbedding g = graded_embedding(example("heisenberg3"));
  EXPECT_EQ(g.current.truncation, 3u);
  EXPECT_EQ(g.embedding.matrix(),
            RationalMatrix::from_triplets(6, 3, {{0, 0, Rational(1)}, {1, 1, Rational(1)}, {5, 2, Rational(1)}}));
  EXPECT_TRUE(g.embedding.is_injective());
}

TEST(GradedEmbedding, Filiform) {
  GradedEmbedding g = graded_embedding(example("filiform4"));
  EXPECT_EQ(g.current.truncation, 4u);
  EXPECT_EQ(g.current.product->dim(), 12u);
  EXPECT_TRUE(g.embedding.is_injective());
}

TEST(GradedEmbedding, RequiresValidGrading) {
  EXPECT_EQ(error_of([] { graded_embedding(example("solvable2")); }), ErrorKind::InvalidGrading);
  AlgebraPtr wrong = share(example_algebra("heisenberg3").with_grading(Grading{{1, 1, 1}}));
  EXPECT_EQ(error_of([&] { graded_embedding(wrong); }), ErrorKind::InvalidGrading);
}

TEST(EulerDerivation, Examples) {
  Cocycle line = euler_derivation(current_algebra(share(LieAlgebra::abelian(1)), 2));
  EXPECT_EQ(line.map, RationalMatrix::identity(1));

  Cocycle h = euler_derivation(current_algebra(example("heisenberg3"), 3));
  EXPECT_EQ(h.map, RationalMatrix::diagonal(vec({1, 1, 1, 2, 2, 2})));
  EXPECT_TRUE(is_cocycle(h.rep, h.map));
  EXPECT_TRUE(kernel_basis(h.map).is_zero());
}

TEST(CocycleSpace, TrivialModules) {
  AlgebraPtr a1 = share(LieAlgebra::abelian(1));
  EXPECT_EQ(cocycle_space(Representation::zero(a1, 1)).dim(), 1u);
  AlgebraPtr h3 = example("heisenberg3");
  CocycleSpace z = cocycle_space(Representation::zero(h3, 1));
  EXPECT_EQ(z.dim(), 2u);
  for (const auto& psi : z.basis) EXPECT_TRUE(psi.column(2).empty());
}

TEST(CocycleSpace, AdjointMatchesDerivationOracle) {
  for (const char* name : {"heisenberg3", "filiform4", "heisenberg5", "abelian2", "free2_3"}) {
    AlgebraPtr L = example(name);
    CocycleSpace z = cocycle_space(adjoint(L));
    EXPECT_EQ(z.dim(), oracle::derivation_dim(*L)) << name;
    for (const auto& psi : z.basis) EXPECT_TRUE(is_cocycle(z.rep, psi));
  }
  EXPECT_EQ(cocycle_space(adjoint(example("heisenberg3"))).dim(), 6u);
}

TEST(CocycleExtension, RejectsBadInput) {
  AlgebraPtr h3 = example("heisenberg3");
  Representation ad = adjoint(h3);
  EXPECT_EQ(error_of([&] { cocycle_extension_rep(Cocycle{ad, RationalMatrix(3, 3)}); }),
            ErrorKind::DegenerateCocycle);
  // The identity is not a derivation of h3: [e0,e1] = e2 would need D e2 = 2 e2.
  EXPECT_EQ(error_of([&] { cocycle_extension_rep(Cocycle{ad, RationalMatrix::identity(3)}); }),
            ErrorKind::NotACocycle);
  EXPECT_EQ(error_of([&] { cocycle_extension_rep(Cocycle{ad, RationalMatrix::diagonal(vec({1, 1, 2}))}, 5); }),
            ErrorKind::BudgetExceeded);
}

TEST(CocycleExtension, HeisenbergCurrentAlgebra) {
  CurrentAlgebra c = current_algebra(example("heisenberg3"), 3);
  Cocycle phi = euler_derivation(c);
  ExtensionRep ext = cocycle_extension_rep(phi);
  EXPECT_EQ(ext.rep.space_dim(), 6 + cocycle_space(adjoint(c.product)).dim());
  EXPECT_TRUE(ext.faithful);
  EXPECT_TRUE(ext.nilpotent);
  EXPECT_TRUE(is_homomorphism(ext.rep));
}

TEST(GradedFaithfulRep, Examples) {
  Representation line = graded_faithful_rep(share(LieAlgebra::abelian(1)));
  EXPECT_EQ(line.space_dim(), 2u);
  for (const char* name : {"heisenberg3", "filiform4", "heisenberg5"}) {
    Representation rho = graded_faithful_rep(example(name));
    EXPECT_TRUE(is_homomorphism(rho)) << name;
    EXPECT_TRUE(rep_kernel(rho).is_zero()) << name;
    EXPECT_TRUE(is_nilpotent_rep(rho)) << name;
  }
}

TEST(GradedPipeline, HeisenbergDimensions) {
  GradedResult g = graded_pipeline(example("heisenberg3"));
  EXPECT_EQ(g.truncation, 3u);
  EXPECT_EQ(g.current_dim, 6u);
  EXPECT_EQ(g.extension_dim, 6 + g.cocycle_dim);
  EXPECT_EQ(g.rep.space_dim(), g.extension_dim);
  EXPECT_TRUE(g.euler_kernel_zero && g.embedding_injective && g.extension_faithful && g.extension_nilpotent);
}

TEST(FreeNilpotentFaithfulRep, Examples) {
  EXPECT_EQ(free_nilpotent_faithful_rep(share(free_nilpotent(1, 1))).space_dim(), 2u);
  for (auto [r, c] : {std::pair{2, 2}, {2, 3}}) {
    AlgebraPtr f = share(free_nilpotent(r, c));
    Representation rho = free_nilpotent_faithful_rep(f);
    EXPECT_TRUE(rep_kernel(rho).is_zero());
    EXPECT_TRUE(is_nilpotent_rep(rho));
    EXPECT_TRUE(is_homomorphism(rho));
  }
}

TEST(GradedPipeline, EmptyAlgebra) {
  GradedResult g = graded_pipeline(share(LieAlgebra::abelian(0)));
  EXPECT_EQ(g.rep.space_dim(), 0u);
}
