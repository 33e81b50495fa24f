#pragma once

#include <random>
#include <string>
#include <vector>

#include "ado/engine.hpp"
#include "ado/error.hpp"
#include "ado/examples.hpp"
#include "ado/json_io.hpp"

namespace ado::test {

inline Rational q(const char* text) { return parse_rational(text); }

/// Dense integer matrix literal.
inline RationalMatrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> dense;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (long v : r) row.emplace_back(v);
    dense.push_back(std::move(row));
  }
  return RationalMatrix::from_dense(dense);
}

inline Vector vec(const std::vector<long>& values) {
  Vector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

/// Single-entry n×n matrix with a 1 at (r, c), 1-based as in E_rc.
inline RationalMatrix unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
  return RationalMatrix::from_triplets(n, n, {{r - 1, c - 1, Rational(1)}});
}

inline AlgebraPtr example(const std::string& name) { return share(example_algebra(name)); }

/// e0 ↦ E12, e1 ↦ E23, e2 ↦ E13.
inline Representation h3_standard(const AlgebraPtr& h3) {
  return Representation(h3, 3, {unit_matrix(3, 1, 2), unit_matrix(3, 2, 3), unit_matrix(3, 1, 3)});
}

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names{"abelian1",  "abelian2",  "abelian3", "heisenberg3",
                                              "heisenberg5", "filiform4", "free2_2", "free2_3"};
  return names;
}

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected an ado::Error");
}

/// Smallest ideal containing the given vectors.
inline Subspace ideal_closure(const LieAlgebra& L, std::vector<SparseVector> seeds) {
  Subspace ideal = Subspace::span(L.dim(), std::move(seeds));
  for (;;) {
    std::vector<SparseVector> grown = ideal.vectors();
    for (const auto& v : ideal.vectors())
      for (std::size_t i = 0; i < L.dim(); ++i) grown.push_back(bracket(L, {{i, Rational(1)}}, v));
    Subspace next = Subspace::span(L.dim(), std::move(grown));
    if (next == ideal) return ideal;
    ideal = std::move(next);
  }
}

/// Random combination of the given basis indices with coefficients in [-2, 2].
inline SparseVector random_combination(std::mt19937& rng, std::size_t dim, const std::vector<std::size_t>& support) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  Vector v(dim);
  for (std::size_t i : support) v[i] = coeff(rng);
  return to_sparse(v);
}

/// Nonzero ideal generated by 1-2 random elements of `support`.
inline Subspace random_ideal(std::mt19937& rng, const LieAlgebra& L, const std::vector<std::size_t>& support) {
  for (;;) {
    std::vector<SparseVector> seeds{random_combination(rng, L.dim(), support)};
    if (rng() % 2) seeds.push_back(random_combination(rng, L.dim(), support));
    Subspace ideal = ideal_closure(L, std::move(seeds));
    if (!ideal.is_zero()) return ideal;
  }
}

/// Indices of basis elements of degree >= 2, i.e. a basis of [F,F] for a free algebra.
inline std::vector<std::size_t> commutator_indices(const LieAlgebra& F) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < F.dim(); ++i)
    if (F.grading()->degree[i] >= 2) out.push_back(i);
  return out;
}

/// F(r,c) modulo a random proper ideal inside [F,F], renamed so its
/// representations serialize inline.
inline AlgebraPtr random_nilpotent(std::mt19937& rng, std::size_t r, std::size_t c) {
  AlgebraPtr F = share(free_nilpotent(r, c));
  Subspace ideal = random_ideal(rng, *F, commutator_indices(*F));
  return share(quotient(F, ideal).algebra->with_name("").with_grading(std::nullopt));
}

}  // namespace ado::test
