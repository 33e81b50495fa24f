#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ado/matrix.hpp"

namespace ado {

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Zero rows are placed last.
RowEchelon rref(const RationalMatrix& m);

/// Fully reduced echelon rows of the span of `rows` (pivot = first index,
/// leading 1, zero in every other pivot column), sorted by pivot.
/// When `stop_at_full_rank` is set the reduction stops once rank = cols.
std::vector<SparseVector> reduced_echelon_rows(std::vector<SparseVector> rows, std::size_t cols,
                                               bool stop_at_full_rank = false);

std::size_t rank(const RationalMatrix& m);

/// A linear subspace of Q^n in canonical form: the basis vectors are the rows
/// of the reduced echelon form of any spanning set (equivalently the columns
/// of the column-reduced echelon basis matrix). Equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of Q^n.
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, std::vector<SparseVector> vectors);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace column_span(const RationalMatrix& m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  bool is_zero() const { return vectors_.empty(); }
  bool is_full() const { return vectors_.size() == ambient_dim_; }

  const std::vector<SparseVector>& vectors() const { return vectors_; }
  Vector basis_vector(std::size_t i) const { return to_dense(vectors_.at(i), ambient_dim_); }
  /// ambient_dim x dim, columns are the canonical basis vectors.
  RationalMatrix basis() const;
  std::vector<std::size_t> pivots() const;
  /// Coordinates not used as pivots, ascending. The matching unit vectors span
  /// a complement.
  std::vector<std::size_t> complement_indices() const;

  /// v minus its component along the basis, i.e. zero at every pivot coordinate.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  bool contains(const Vector& v) const { return contains(to_sparse(v)); }
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to the canonical basis; v must lie in the
  /// subspace (they are read off at the pivots).
  Vector coordinates(const SparseVector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<SparseVector> vectors_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Null space of m, as a subspace of Q^cols.
Subspace kernel_basis(const RationalMatrix& m);
/// Null space of the matrix whose (sparse) rows are `equations`, in Q^cols.
Subspace kernel_of_rows(std::vector<SparseVector> equations, std::size_t cols);

/// Some x with a*x = b, free variables set to zero; empty when inconsistent.
std::optional<Vector> solve(const RationalMatrix& a, const Vector& b);

RationalMatrix inverse(const RationalMatrix& m);

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// Returns h with h*f = g, given Ker f ⊆ Ker g. h is zero on the complement
/// of Im f spanned by the unit vectors at the non-pivot coordinates of Im f.
/// Throws KernelNotContained when the inclusion fails.
RationalMatrix factor_through(const RationalMatrix& f, const RationalMatrix& g);

/// Smallest n >= 1 with m^n = 0. Throws NotNilpotent.
std::size_t nilpotency_index(const RationalMatrix& m);

}  // namespace ado
