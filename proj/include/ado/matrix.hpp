#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ado/rational.hpp"

namespace ado {

/// Dense coefficient vector. Used for algebra elements, whose dimension is small.
using Vector = std::vector<Rational>;

/// Sorted (index, value) list with no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t dim);
Vector unit_vector(std::size_t dim, std::size_t index);
bool is_zero(const Vector& v);

/// y + a*x, both sorted.
SparseVector axpy(const SparseVector& y, const Rational& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Rational& a);
/// Value at index, zero when absent.
Rational sparse_at(const SparseVector& v, std::size_t index);

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  Rational value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Sparse exact-rational matrix in canonical coordinate form: entries sorted
/// row-major, at most one per position, none zero. Two matrices are equal iff
/// their shapes and entry lists are identical.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static RationalMatrix identity(std::size_t n);
  /// Sums duplicates and drops zeros.
  static RationalMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<MatrixEntry> entries);
  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_rows(std::size_t cols, const std::vector<SparseVector>& rows);
  static RationalMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& cols);
  static RationalMatrix diagonal(const Vector& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nonzeros() const { return entries_.size(); }
  const std::vector<MatrixEntry>& entries() const { return entries_; }

  Rational at(std::size_t row, std::size_t col) const;

  std::vector<SparseVector> row_vectors() const;
  std::vector<SparseVector> column_vectors() const;
  SparseVector column(std::size_t col) const;
  std::vector<std::vector<Rational>> to_dense() const;

  RationalMatrix transpose() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
Vector operator*(const RationalMatrix& a, const Vector& v);
SparseVector apply(const RationalMatrix& a, const SparseVector& v);

/// ab - ba
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);
/// Sum of coeffs[i] * terms[i]; all terms share one shape.
RationalMatrix linear_combination(const Vector& coeffs, const std::vector<RationalMatrix>& terms,
                                  std::size_t rows, std::size_t cols);

}  // namespace ado
