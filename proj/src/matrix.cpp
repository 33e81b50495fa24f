#include "ado/matrix.hpp"

#include <algorithm>
#include <map>

#include "ado/error.hpp"

namespace ado {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
  Vector out(dim);
  for (const auto& [i, value] : v) out.at(i) = value;
  return out;
}

Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v.at(index) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

SparseVector axpy(const SparseVector& y, const Rational& a, const SparseVector& x) {
  if (sgn(a) == 0 || x.empty()) return y;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(*iy++);
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Rational s = iy->second + a * ix->second;
      if (sgn(s) != 0) out.emplace_back(iy->first, std::move(s));
      ++ix;
      ++iy;
    }
  }
  return out;
}

SparseVector scaled(const SparseVector& x, const Rational& a) {
  if (sgn(a) == 0) return {};
  SparseVector out = x;
  for (auto& entry : out) entry.second *= a;
  return out;
}

Rational sparse_at(const SparseVector& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  if (it != v.end() && it->first == index) return it->second;
  return 0;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  m.entries_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.entries_.push_back({i, i, 1});
  return m;
}

RationalMatrix RationalMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                             std::vector<MatrixEntry> entries) {
  for (const auto& e : entries)
    if (e.row >= rows || e.col >= cols)
      throw Error(ErrorKind::DimensionMismatch, "matrix entry out of range");
  std::stable_sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  RationalMatrix m(rows, cols);
  for (auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
      m.entries_.back().value += e.value;
    } else {
      m.entries_.push_back(std::move(e));
    }
  }
  std::erase_if(m.entries_, [](const MatrixEntry& e) { return sgn(e.value) == 0; });
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(rows[r][c]) != 0) m.entries_.push_back({r, c, rows[r][c]});
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::size_t cols, const std::vector<SparseVector>& rows) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, value] : rows[r]) {
      if (c >= cols) throw Error(ErrorKind::DimensionMismatch, "row entry out of range");
      m.entries_.push_back({r, c, value});
    }
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows,
                                            const std::vector<SparseVector>& cols) {
  std::vector<MatrixEntry> entries;
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, value] : cols[c]) entries.push_back({r, c, value});
  return from_triplets(rows, cols.size(), std::move(entries));
}

RationalMatrix RationalMatrix::diagonal(const Vector& diag) {
  RationalMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (sgn(diag[i]) != 0) m.entries_.push_back({i, i, diag[i]});
  return m;
}

Rational RationalMatrix::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(row, col),
                             [](const MatrixEntry& e, const std::pair<std::size_t, std::size_t>& k) {
                               return e.row != k.first ? e.row < k.first : e.col < k.second;
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

std::vector<SparseVector> RationalMatrix::row_vectors() const {
  std::vector<SparseVector> out(rows_);
  for (const auto& e : entries_) out[e.row].emplace_back(e.col, e.value);
  return out;
}

std::vector<SparseVector> RationalMatrix::column_vectors() const {
  std::vector<SparseVector> out(cols_);
  for (const auto& e : entries_) out[e.col].emplace_back(e.row, e.value);
  return out;
}

SparseVector RationalMatrix::column(std::size_t col) const {
  SparseVector out;
  for (const auto& e : entries_)
    if (e.col == col) out.emplace_back(e.row, e.value);
  return out;
}

std::vector<std::vector<Rational>> RationalMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (const auto& e : entries_) out[e.row][e.col] = e.value;
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return from_triplets(cols_, rows_, std::move(t));
}

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
}

RationalMatrix combine(const RationalMatrix& a, const RationalMatrix& b, const Rational& sign) {
  require_same_shape(a, b);
  std::vector<MatrixEntry> entries = a.entries();
  entries.reserve(a.nonzeros() + b.nonzeros());
  for (const auto& e : b.entries()) entries.push_back({e.row, e.col, sign * e.value});
  return RationalMatrix::from_triplets(a.rows(), a.cols(), std::move(entries));
}

}  // namespace

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) { return combine(a, b, 1); }
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) { return combine(a, b, -1); }
RationalMatrix operator-(const RationalMatrix& a) { return Rational(-1) * a; }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  std::vector<SparseVector> b_rows = b.row_vectors();
  std::vector<MatrixEntry> out;
  std::map<std::size_t, Rational> acc;
  const auto& ea = a.entries();
  for (std::size_t start = 0; start < ea.size();) {
    std::size_t row = ea[start].row;
    acc.clear();
    std::size_t k = start;
    for (; k < ea.size() && ea[k].row == row; ++k)
      for (const auto& [col, value] : b_rows[ea[k].col]) acc[col] += ea[k].value * value;
    for (auto& [col, value] : acc)
      if (sgn(value) != 0) out.push_back({row, col, std::move(value)});
    start = k;
  }
  return RationalMatrix::from_triplets(a.rows(), b.cols(), std::move(out));
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  if (sgn(s) == 0) return RationalMatrix(a.rows(), a.cols());
  std::vector<MatrixEntry> entries = a.entries();
  for (auto& e : entries) e.value *= s;
  return RationalMatrix::from_triplets(a.rows(), a.cols(), std::move(entries));
}

Vector operator*(const RationalMatrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes");
  Vector out(a.rows());
  for (const auto& e : a.entries()) out[e.row] += e.value * v[e.col];
  return out;
}

SparseVector apply(const RationalMatrix& a, const SparseVector& v) {
  if (v.empty()) return {};
  if (v.back().first >= a.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes");
  std::map<std::size_t, Rational> acc;
  for (const auto& e : a.entries()) {
    Rational x = sparse_at(v, e.col);
    if (sgn(x) != 0) acc[e.row] += e.value * x;
  }
  SparseVector out;
  for (auto& [i, value] : acc)
    if (sgn(value) != 0) out.emplace_back(i, std::move(value));
  return out;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
  std::vector<MatrixEntry> entries = a.entries();
  for (const auto& e : b.entries()) entries.push_back({e.row + a.rows(), e.col + a.cols(), e.value});
  return RationalMatrix::from_triplets(a.rows() + b.rows(), a.cols() + b.cols(), std::move(entries));
}

RationalMatrix linear_combination(const Vector& coeffs, const std::vector<RationalMatrix>& terms,
                                  std::size_t rows, std::size_t cols) {
  if (coeffs.size() != terms.size())
    throw Error(ErrorKind::DimensionMismatch, "coefficient count differs from term count");
  std::vector<MatrixEntry> entries;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    if (terms[i].rows() != rows || terms[i].cols() != cols)
      throw Error(ErrorKind::DimensionMismatch, "term shape");
    for (const auto& e : terms[i].entries()) entries.push_back({e.row, e.col, coeffs[i] * e.value});
  }
  return RationalMatrix::from_triplets(rows, cols, std::move(entries));
}

}  // namespace ado
