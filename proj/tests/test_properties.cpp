// Randomized invariants with a fixed seed; every case is checked exactly.

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace ado;
using namespace ado::test;

namespace {

constexpr unsigned kSeed = 20240611;

/// Entries mostly zero, otherwise small fractions; rank deficiency is common.
RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), zero(0, 2);
  std::vector<MatrixEntry> entries;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (zero(rng) != 0) entries.push_back({r, c, Rational(num(rng), den(rng))});
  for (auto& e : entries) e.value.canonicalize();
  return RationalMatrix::from_triplets(rows, cols, std::move(entries));
}

oracle::Dense dense(const RationalMatrix& m) { return m.to_dense(); }

}  // namespace

TEST(Properties, RrefInvariants) {
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    RationalMatrix m = random_matrix(rng, size(rng), size(rng));
    RowEchelon r = rref(m);
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
    EXPECT_EQ(r.rank, oracle::dense_rank(dense(m)));
    EXPECT_EQ(Subspace::span(m.cols(), m.row_vectors()), Subspace::span(m.cols(), r.reduced.row_vectors()));
    Subspace k = kernel_basis(m);
    EXPECT_EQ(k.dim() + r.rank, m.cols());
    for (const auto& v : k.vectors()) EXPECT_TRUE(ado::apply(m, v).empty());
  }
}

TEST(Properties, SolveAndInverse) {
  std::mt19937 rng(kSeed + 1);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    RationalMatrix a = random_matrix(rng, size(rng), size(rng));
    Vector x0 = to_dense(ado::apply(random_matrix(rng, a.cols(), 1).transpose(), {{0, Rational(1)}}), a.cols());
    Vector b = a * x0;
    auto x = solve(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a * *x, b);
    if (a.is_square() && rank(a) == a.rows()) EXPECT_EQ(a * inverse(a), RationalMatrix::identity(a.rows()));
  }
}

TEST(Properties, SubspaceLattice) {
  std::mt19937 rng(kSeed + 2);
  for (int trial = 0; trial < 100; ++trial) {
    Subspace a = Subspace::column_span(random_matrix(rng, 6, 3));
    Subspace b = Subspace::column_span(random_matrix(rng, 6, 3));
    Subspace meet = intersect(a, b);
    EXPECT_EQ(a.dim() + b.dim(), (a + b).dim() + meet.dim());
    EXPECT_TRUE(a.contains(meet));
    EXPECT_TRUE(b.contains(meet));
    EXPECT_TRUE((a + b).contains(a));
  }
}

TEST(Properties, RandomNilpotentQuotients) {
  std::mt19937 rng(kSeed + 3);
  for (int trial = 0; trial < 12; ++trial) {
    auto [r, c] = trial % 2 ? std::pair{2u, 3u} : std::pair{3u, 2u};
    AlgebraPtr L = random_nilpotent(rng, r, c);
    SCOPED_TRACE("trial " + std::to_string(trial) + " dim " + std::to_string(L->dim()));
    EXPECT_TRUE(validate(*L).ok());
    EXPECT_TRUE(is_nilpotent(*L));
    EXPECT_EQ(center(*L).dim(), oracle::center_dim(*L));
    EXPECT_EQ(center(*L), rep_kernel(adjoint(L)));
    EXPECT_EQ(cocycle_space(adjoint(L)).dim(), oracle::derivation_dim(*L));
    EXPECT_TRUE(is_central_chain(central_flag(L)));

    Presentation p = present(L);
    EXPECT_EQ(p.free->dim() - p.ideal.dim(), L->dim());
    EXPECT_TRUE(is_ideal(*p.free, p.ideal));

    EngineConfig cfg;
    cfg.method = Method::Induction;
    Construction out = construct_faithful_nilpotent(L, cfg);
    EXPECT_TRUE(verify_output(*L, out.rep).accepted());
    EXPECT_EQ(replay(L, out.certificate), out.rep);
  }
}

TEST(Properties, RepresentationCombinators) {
  std::mt19937 rng(kSeed + 4);
  for (int trial = 0; trial < 6; ++trial) {
    AlgebraPtr L = random_nilpotent(rng, 2, 3);
    Representation ad = adjoint(L);
    Representation rho = construct_faithful_nilpotent(L).rep;
    Representation sum = direct_sum(ad, rho);
    EXPECT_EQ(rep_kernel(sum), intersect(rep_kernel(ad), rep_kernel(rho)));
    Representation sq = tensor_product(ad, ad);
    EXPECT_TRUE(is_homomorphism(sq));
    EXPECT_TRUE(is_nilpotent_rep(sq));
    for (std::size_t i = 0; i < L->dim(); ++i)
      EXPECT_EQ(nilpotency_index(sq.action(i)), 2 * nilpotency_index(ad.action(i)) - 1);
  }
}

TEST(Properties, JsonRoundTrip) {
  std::mt19937 rng(kSeed + 5);
  for (int trial = 0; trial < 50; ++trial) {
    RationalMatrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
    EXPECT_EQ(matrix_from_json(parse_json(dump_json(matrix_to_json(m)))), m);
  }
  for (int trial = 0; trial < 5; ++trial) {
    AlgebraPtr L = random_nilpotent(rng, 2, 3);
    LieAlgebra back = algebra_from_json(parse_json(dump_json(algebra_to_json(*L))));
    EXPECT_TRUE(back.same_structure(*L));
    Representation rho = adjoint(L);
    EXPECT_EQ(representation_from_json(parse_json(dump_json(representation_to_json(rho))), L), rho);
  }
}
