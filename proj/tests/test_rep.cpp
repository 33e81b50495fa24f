#include <gtest/gtest.h>

#include "support.hpp"

using namespace ado;
using namespace ado::test;

namespace {

/// h3 → h3/<e2> ≅ abelian2 acting by e0 ↦ E12 on Q^2.
Representation h3_two_dim(const AlgebraPtr& h3) {
  return Representation(h3, 2, {unit_matrix(2, 1, 2), RationalMatrix(2, 2), RationalMatrix(2, 2)});
}

}  // namespace

TEST(Adjoint, AbelianIsZero) {
  Representation ad = adjoint(share(LieAlgebra::abelian(3)));
  for (const auto& m : ad.matrices()) EXPECT_TRUE(m.is_zero());
}

TEST(Adjoint, Heisenberg) {
  AlgebraPtr h3 = example("heisenberg3");
  Representation ad = adjoint(h3);
  EXPECT_EQ(ad.action(0), RationalMatrix::from_triplets(3, 3, {{2, 1, Rational(1)}}));
  EXPECT_EQ(ad.action(1), RationalMatrix::from_triplets(3, 3, {{2, 0, Rational(-1)}}));
  EXPECT_TRUE(ad.action(2).is_zero());
  EXPECT_EQ(rep_kernel(ad), center(*h3));
  EXPECT_TRUE(is_homomorphism(ad));
}

TEST(DirectSum, Dimensions) {
  AlgebraPtr h3 = example("heisenberg3");
  Representation s = direct_sum(h3_standard(h3), h3_two_dim(h3));
  EXPECT_EQ(s.space_dim(), 5u);
  EXPECT_TRUE(is_homomorphism(s));
  EXPECT_EQ(s.action(0), block_diagonal(unit_matrix(3, 1, 2), unit_matrix(2, 1, 2)));
}

TEST(DirectSum, KernelIsIntersection) {
  AlgebraPtr h3 = example("heisenberg3");
  Representation ad = adjoint(h3);
  EXPECT_EQ(rep_kernel(direct_sum(ad, Representation::zero(h3, 2))), rep_kernel(ad));
  EXPECT_TRUE(rep_kernel(direct_sum(ad, h3_standard(h3))).is_zero());
  EXPECT_EQ(rep_kernel(direct_sum(ad, h3_two_dim(h3))), intersect(rep_kernel(ad), rep_kernel(h3_two_dim(h3))));
}

TEST(DirectSum, AlgebraMismatch) {
  AlgebraPtr h3 = example("heisenberg3");
  AlgebraPtr a3 = share(LieAlgebra::abelian(3));
  EXPECT_EQ(error_of([&] { direct_sum(adjoint(h3), adjoint(a3)); }), ErrorKind::AlgebraMismatch);
}

TEST(TensorProduct, WithTrivialLineIsIdentity) {
  AlgebraPtr h3 = example("heisenberg3");
  Representation rho = h3_standard(h3);
  EXPECT_EQ(tensor_product(rho, Representation::zero(h3, 1)), rho);
}

TEST(TensorProduct, HomomorphismAndBinomialIndex) {
  AlgebraPtr h3 = example("heisenberg3");
  Representation rho = h3_standard(h3);
  Representation sq = tensor_product(rho, rho);
  EXPECT_EQ(sq.space_dim(), 9u);
  EXPECT_TRUE(is_homomorphism(sq));
  EXPECT_TRUE(is_nilpotent_rep(sq));
  EXPECT_EQ(nilpotency_index(rho.action(0)), 2u);
  EXPECT_EQ(nilpotency_index(sq.action(0)), 3u);
  // ρ(e0 + e1) = E12 + E23 has index 3, so the square has index 5.
  Vector x = vec({1, 1, 0});
  EXPECT_EQ(nilpotency_index(element_action(rho, x)), 3u);
  EXPECT_EQ(nilpotency_index(element_action(sq, x)), 5u);
}

TEST(RestrictAlong, IdentityAndZero) {
  AlgebraPtr h3 = example("heisenberg3");
  Representation rho = h3_standard(h3);
  EXPECT_EQ(restrict_along(rho, LieHom(h3, h3, RationalMatrix::identity(3))), rho);

  AlgebraPtr a2 = share(LieAlgebra::abelian(2));
  Representation pulled = restrict_along(rho, LieHom(a2, h3, RationalMatrix(3, 2)));
  EXPECT_EQ(pulled.space_dim(), 3u);
  for (const auto& m : pulled.matrices()) EXPECT_TRUE(m.is_zero());
}

TEST(RepKernel, Examples) {
  AlgebraPtr h3 = example("heisenberg3");
  EXPECT_TRUE(rep_kernel(Representation::zero(h3, 4)).is_full());
  EXPECT_TRUE(rep_kernel(h3_standard(h3)).is_zero());
}

TEST(IsHomomorphism, DetectsWrongScale) {
  AlgebraPtr h3 = example("heisenberg3");
  EXPECT_TRUE(is_homomorphism(h3_standard(h3)));
  Representation bad(h3, 3, {unit_matrix(3, 1, 2), unit_matrix(3, 2, 3), Rational(2) * unit_matrix(3, 1, 3)});
  EXPECT_FALSE(is_homomorphism(bad));
}

TEST(IsNilpotentRep, Examples) {
  AlgebraPtr h3 = example("heisenberg3");
  EXPECT_TRUE(is_nilpotent_rep(Representation::zero(h3, 3)));
  EXPECT_TRUE(is_nilpotent_rep(h3_standard(h3)));
  AlgebraPtr a1 = share(LieAlgebra::abelian(1));
  EXPECT_FALSE(is_nilpotent_rep(Representation(a1, 1, {RationalMatrix::identity(1)})));
}

TEST(IsNilpotentRep, NeedsProductsNotJustGenerators) {
  // Each matrix is nilpotent, but E12·E21 = E11 is not.
  AlgebraPtr a2 = share(LieAlgebra::abelian(2));
  Representation r(a2, 2, {unit_matrix(2, 1, 2), unit_matrix(2, 2, 1)});
  EXPECT_FALSE(is_nilpotent_rep(r));
}

TEST(ElementAction, Examples) {
  AlgebraPtr h3 = example("heisenberg3");
  Representation rho = h3_standard(h3);
  EXPECT_EQ(element_action(rho, vec({0, 1, 0})), rho.action(1));
  EXPECT_TRUE(element_action(rho, vec({0, 0, 0})).is_zero());
  EXPECT_EQ(element_action(rho, vec({1, 1, 0})), unit_matrix(3, 1, 2) + unit_matrix(3, 2, 3));
}

TEST(KernelSubmodule, CentralActingTrivially) {
  AlgebraPtr h3 = example("heisenberg3");
  KernelSubmodule k = kernel_submodule(h3_two_dim(h3), vec({0, 0, 1}));
  EXPECT_TRUE(k.carrier.is_full());
  EXPECT_EQ(k.induced.space_dim(), 2u);
  EXPECT_EQ(k.induced.action(0), unit_matrix(2, 1, 2));
  EXPECT_TRUE(k.induced.action(1).is_zero());
}

TEST(KernelSubmodule, StandardHeisenberg) {
  AlgebraPtr h3 = example("heisenberg3");
  KernelSubmodule k = kernel_submodule(h3_standard(h3), vec({0, 0, 1}));
  EXPECT_EQ(k.carrier, Subspace::span(3, std::vector<Vector>{vec({1, 0, 0}), vec({0, 1, 0})}));
  EXPECT_TRUE(k.quotient.algebra->same_structure(LieAlgebra::abelian(2)));
  EXPECT_EQ(k.induced.space_dim(), 2u);
  EXPECT_EQ(k.induced.action(0), unit_matrix(2, 1, 2));
  EXPECT_TRUE(k.induced.action(1).is_zero());
  EXPECT_TRUE(is_homomorphism(k.induced));
}

TEST(KernelSubmodule, NonCentralRejected) {
  AlgebraPtr h3 = example("heisenberg3");
  EXPECT_EQ(error_of([&] { kernel_submodule(h3_standard(h3), vec({1, 0, 0})); }), ErrorKind::NotCentral);
}

TEST(CyclicSubmodule, Examples) {
  AlgebraPtr h3 = example("heisenberg3");
  Representation rho = h3_standard(h3);
  EXPECT_EQ(cyclic_submodule(rho, {}).rep.space_dim(), 0u);

  CyclicSubmodule b1 = cyclic_submodule(rho, {{0, Rational(1)}});
  EXPECT_EQ(b1.rep.space_dim(), 1u);
  for (const auto& m : b1.rep.matrices()) EXPECT_TRUE(m.is_zero());

  CyclicSubmodule b3 = cyclic_submodule(rho, {{2, Rational(1)}});
  EXPECT_TRUE(b3.span.is_full());
  EXPECT_EQ(b3.rep.space_dim(), 3u);
  EXPECT_TRUE(is_homomorphism(b3.rep));
}

TEST(RestrictToInvariant, RejectsNonInvariant) {
  AlgebraPtr h3 = example("heisenberg3");
  Subspace b3 = Subspace::span(3, std::vector<Vector>{vec({0, 0, 1})});
  EXPECT_EQ(error_of([&] { restrict_to_invariant(h3_standard(h3), b3); }), ErrorKind::NotCentral);
}
