#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "ado/representation.hpp"

namespace ado {

/// L ⊗ tQ[t]/(t^n) with [x⊗t^a, y⊗t^b] = [x,y]⊗t^(a+b), zero once a+b >= n.
/// Basis order: by t-degree, then base index.
struct CurrentAlgebra {
  AlgebraPtr base;
  std::size_t truncation = 2;
  AlgebraPtr product;

  /// Index of e_i ⊗ t^a in the product basis, 1 <= a < truncation.
  std::size_t index(std::size_t base_index, std::size_t t_degree) const {
    return (t_degree - 1) * base->dim() + base_index;
  }
  std::size_t t_degree(std::size_t product_index) const {
    return product_index / base->dim() + 1;
  }
};

/// Requires truncation >= 2.
CurrentAlgebra current_algebra(const AlgebraPtr& base, std::size_t truncation);

struct GradedEmbedding {
  CurrentAlgebra current;
  LieHom embedding;  // e_i ↦ e_i ⊗ t^deg(i)
};

/// Uses the smallest truncation 1 + max degree. Throws InvalidGrading when the
/// algebra carries no grading or the grading is not additive.
GradedEmbedding graded_embedding(const AlgebraPtr& algebra);

/// A linear map phi: L -> V (column i = phi(e_i)) that is a 1-cocycle for rep:
/// phi([x,y]) - rho(x)phi(y) + rho(y)phi(x) = 0.
struct Cocycle {
  Representation rep;
  RationalMatrix map;
};

bool is_cocycle(const Representation& rho, const RationalMatrix& map);

/// The degree derivation x⊗t^a ↦ a·x⊗t^a, a cocycle with values in the
/// adjoint module. Its kernel is zero because every a is a nonzero rational.
Cocycle euler_derivation(const CurrentAlgebra& current);

/// Z^1(L, V) with a canonical echelon basis.
struct CocycleSpace {
  Representation rep;
  std::vector<RationalMatrix> basis;

  std::size_t dim() const { return basis.size(); }
};

CocycleSpace cocycle_space(const Representation& rho);

struct ExtensionRep {
  Representation rep;  // on V ⊕ Z^1(L, V)
  std::size_t cocycle_dim = 0;
  bool faithful = false;
  bool nilpotent = false;
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// x acts on V ⊕ Z^1(L,V) by (v, psi) ↦ (rho(x)v + psi(x), 0). Faithfulness,
/// and nilpotency when rho is nilpotent, are verified on every call.
/// Throws NotACocycle, DegenerateCocycle, BudgetExceeded, VerificationFailed.
ExtensionRep cocycle_extension_rep(const Cocycle& phi, std::size_t space_budget = kUnlimited);

struct GradedResult {
  Representation rep;
  std::size_t truncation = 0;
  std::size_t current_dim = 0;
  std::size_t cocycle_dim = 0;
  std::size_t extension_dim = 0;
  bool extension_faithful = false;
  bool extension_nilpotent = false;
  bool euler_kernel_zero = false;
  bool embedding_injective = false;
};

/// Embed into the current algebra, take the Euler derivation, build the
/// cocycle extension of the current algebra and restrict it back.
/// Throws InvalidGrading, BudgetExceeded, VerificationFailed.
GradedResult graded_pipeline(const AlgebraPtr& algebra, std::size_t space_budget = kUnlimited);

Representation graded_faithful_rep(const AlgebraPtr& algebra);

/// The graded pipeline applied to a free nilpotent algebra with its Hall
/// degree grading.
Representation free_nilpotent_faithful_rep(const AlgebraPtr& free);

}  // namespace ado
