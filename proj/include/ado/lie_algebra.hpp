#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ado/linalg.hpp"

namespace ado {

/// Positive degree of each basis element of an N-graded algebra.
struct Grading {
  std::vector<unsigned> degree;

  unsigned max_degree() const;
  friend bool operator==(const Grading&, const Grading&) = default;
};

/// One stored structure constant: [e_left, e_right] = result, left < right.
struct Bracket {
  std::size_t left;
  std::size_t right;
  SparseVector result;

  friend bool operator==(const Bracket&, const Bracket&) = default;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
///
/// Only brackets [e_i, e_j] with i < j are stored; [e_j, e_i] = -[e_i, e_j]
/// and [e_i, e_i] = 0 hold by construction. The Jacobi identity is not
/// enforced here, see validate().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Throws DimensionMismatch on out-of-range indices, ParseError when a pair
  /// is not ordered left < right or appears twice.
  LieAlgebra(std::size_t dim, const std::vector<Bracket>& brackets,
             std::vector<std::string> labels = {}, std::optional<Grading> grading = std::nullopt,
             std::string name = {});

  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::optional<Grading>& grading() const { return grading_; }

  /// [e_i, e_j] for any i, j.
  SparseVector basis_bracket(std::size_t i, std::size_t j) const;
  /// Nonzero stored brackets, ordered by (left, right).
  std::vector<Bracket> brackets() const;

  LieAlgebra with_grading(std::optional<Grading> grading) const;
  LieAlgebra with_name(std::string name) const;

  /// Structural equality: dimension and structure constants. Names, labels
  /// and gradings are presentation details and are not compared.
  bool same_structure(const LieAlgebra& other) const;

 private:
  std::size_t dim_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::optional<Grading> grading_;
  std::vector<SparseVector> table_;  // row-major dim x dim, only i < j filled
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

inline AlgebraPtr share(LieAlgebra algebra) {
  return std::make_shared<const LieAlgebra>(std::move(algebra));
}

/// Bilinear extension of the structure constants.
SparseVector bracket(const LieAlgebra& algebra, const SparseVector& u, const SparseVector& v);
Vector bracket(const LieAlgebra& algebra, const Vector& u, const Vector& v);

struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;
};

struct ValidationReport {
  std::vector<JacobiViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks Jacobi on every basis triple i < j < k; other triples follow from
/// antisymmetry.
ValidationReport validate(const LieAlgebra& algebra);

bool verify_grading(const LieAlgebra& algebra, const Grading& grading);

/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b);

/// {x : [x, L] = 0}, solved from the stacked structure-constant system.
Subspace center(const LieAlgebra& algebra);

/// L, [L,L], [L,[L,L]], ... up to the first zero term, or up to the first
/// term that repeats (listed once).
std::vector<Subspace> lower_central_series(const LieAlgebra& algebra);

/// Throws NotNilpotent when the series stabilizes above zero.
std::size_t nilpotency_class(const LieAlgebra& algebra);
bool is_nilpotent(const LieAlgebra& algebra);

bool is_ideal(const LieAlgebra& algebra, const Subspace& ideal);

/// Linear map between two algebras that preserves brackets. The property is
/// checked exactly on all basis pairs when the value is built.
class LieHom {
 public:
  /// matrix is target.dim x source.dim. Throws NotAHomomorphism.
  LieHom(AlgebraPtr source, AlgebraPtr target, RationalMatrix matrix);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const RationalMatrix& matrix() const { return matrix_; }

  bool is_injective() const;
  bool is_surjective() const;
  Subspace kernel() const { return kernel_basis(matrix_); }

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  RationalMatrix matrix_;
};

bool preserves_brackets(const LieAlgebra& source, const LieAlgebra& target,
                        const RationalMatrix& matrix);

struct Quotient {
  AlgebraPtr algebra;
  LieHom projection;
  /// Basis element a of the quotient is the image of e_{complement[a]}.
  std::vector<std::size_t> complement;
};

/// L/I on the basis given by the non-pivot coordinates of I. Throws NotAnIdeal.
Quotient quotient(const AlgebraPtr& algebra, const Subspace& ideal);

/// 0 = I_0 ⊂ I_1 ⊂ ... ⊂ I_n = L with dim I_k/I_{k-1} = 1 and [L, I_k] ⊆ I_{k-1}.
struct IdealChain {
  AlgebraPtr algebra;
  std::vector<Subspace> ideals;
};

/// Refines the lower central series by adding the canonical basis vectors of
/// each term one at a time, smallest term first. Throws NotNilpotent.
IdealChain central_flag(const AlgebraPtr& algebra);

/// True iff every member is an ideal, consecutive codimensions are 1 and
/// [L, I_k] ⊆ I_{k-1}.
bool is_central_chain(const IdealChain& chain);

/// An ideal J ⊂ I of codimension 1 with [L, I] ⊆ J: J = I ∩ I_{k-1} for the
/// smallest k with I ⊆ I_k in central_flag(L).
/// Throws ZeroIdeal, NotAnIdeal, NotNilpotent.
Subspace codim1_refinement(const AlgebraPtr& algebra, const Subspace& ideal);

}  // namespace ado
