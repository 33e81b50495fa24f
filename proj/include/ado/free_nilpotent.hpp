#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ado/lie_algebra.hpp"

namespace ado {

/// A basic bracket of the Hall family used here. Generators are g1 < g2 < ...;
/// longer words are [u, v] with u > v and, when u = [a, b], b <= v. Words are
/// ordered by degree, then lexicographically by (left index, right index).
struct HallWord {
  std::size_t index = 0;
  std::size_t degree = 1;
  std::optional<std::size_t> generator;  // 0-based, set for degree-1 words
  std::size_t left = 0;                  // indices of the subwords for degree >= 2
  std::size_t right = 0;
  std::string label;
};

std::vector<HallWord> hall_basis(std::size_t rank, std::size_t nilpotency_class);

/// Dimension of the degree-d component of the free Lie algebra on r
/// generators: (1/d) * sum over e | d of mu(e) r^(d/e).
std::uint64_t witt_dimension(std::size_t rank, std::size_t degree);

inline constexpr std::size_t kDefaultFreeBudget = 200;

/// Free nilpotent Lie algebra of the given rank and class on its Hall basis,
/// graded by word degree. Throws BudgetExceeded when its dimension exceeds
/// `budget`.
LieAlgebra free_nilpotent(std::size_t rank, std::size_t nilpotency_class,
                          std::size_t budget = kDefaultFreeBudget);

/// L = F/I with F free nilpotent on a minimal generating set of L.
struct Presentation {
  AlgebraPtr free;
  AlgebraPtr algebra;
  LieHom projection;  // F -> L, surjective
  Subspace ideal;     // Ker projection
  std::size_t rank = 0;
  std::size_t nilpotency_class = 0;
  /// Basis indices of L used as generator images, in generator order.
  std::vector<std::size_t> generator_images;
};

/// Throws NotNilpotent, BudgetExceeded.
Presentation present(const AlgebraPtr& algebra, std::size_t budget = kDefaultFreeBudget);

}  // namespace ado
