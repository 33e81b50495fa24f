#pragma once

#include <cstddef>
#include <vector>

#include "ado/lie_algebra.hpp"

namespace ado {

/// A linear action of an algebra on Q^space_dim, one matrix per basis element.
/// Construction only checks shapes; see is_homomorphism().
class Representation {
 public:
  Representation(AlgebraPtr algebra, std::size_t space_dim, std::vector<RationalMatrix> matrices);

  static Representation zero(AlgebraPtr algebra, std::size_t space_dim);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t space_dim() const { return space_dim_; }
  const std::vector<RationalMatrix>& matrices() const { return matrices_; }
  const RationalMatrix& action(std::size_t basis_index) const { return matrices_.at(basis_index); }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.space_dim_ == b.space_dim_ && a.matrices_ == b.matrices_ &&
           a.algebra_->same_structure(*b.algebra_);
  }

 private:
  AlgebraPtr algebra_;
  std::size_t space_dim_ = 0;
  std::vector<RationalMatrix> matrices_;
};

Representation adjoint(const AlgebraPtr& algebra);

/// Block-diagonal sum. Throws AlgebraMismatch.
Representation direct_sum(const Representation& a, const Representation& b);

/// x acts by a(x) ⊗ 1 + 1 ⊗ b(x). Throws AlgebraMismatch.
Representation tensor_product(const Representation& a, const Representation& b);

/// x ↦ rho(phi(x)). Throws AlgebraMismatch when phi does not land in rho's algebra.
Representation restrict_along(const Representation& rho, const LieHom& phi);

/// sum_i x_i rho(e_i)
RationalMatrix element_action(const Representation& rho, const Vector& x);

/// {x : rho(x) = 0}
Subspace rep_kernel(const Representation& rho);

/// rho([e_i, e_j]) == [rho(e_i), rho(e_j)] exactly, for all basis pairs.
bool is_homomorphism(const Representation& rho);

/// True iff every product of space_dim generators vanishes, decided by the
/// descending chain V ⊇ rho(L)V ⊇ rho(L)^2 V ⊇ ... (equivalently the
/// associative span chain W_k = span of k-fold products dies).
bool is_nilpotent_rep(const Representation& rho);

/// The action on an invariant subspace, in the coordinates of its canonical
/// basis. Throws NotCentral when some rho(e_i) does not stabilize it.
Representation restrict_to_invariant(const Representation& rho, const Subspace& invariant);

struct KernelSubmodule {
  Subspace carrier;             // Ker rho(z) in V
  Quotient quotient;            // S -> S/<z>
  Representation induced;       // action of S/<z> on the carrier
};

/// Ker rho(z) for central z, as a module over S/<z>. Throws NotCentral when z
/// is not central in S, rho(z) fails to commute with some rho(e_i), or the
/// kernel is not invariant.
KernelSubmodule kernel_submodule(const Representation& rho, const Vector& z);

struct CyclicSubmodule {
  Subspace span;  // smallest invariant subspace containing the generator
  Representation rep;
};

CyclicSubmodule cyclic_submodule(const Representation& rho, const SparseVector& generator);

}  // namespace ado
