#include "ado/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "ado/error.hpp"

namespace ado {

namespace {

constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);

// Echelon form by inserting rows one at a time; only leading entries are
// cleared here. Pivot rows are normalized to a leading 1.
std::vector<SparseVector> echelon_insert(std::vector<SparseVector> rows, std::size_t cols,
                                         bool stop_at_full_rank,
                                         std::vector<std::size_t>& slot_of_col) {
  slot_of_col.assign(cols, kNoPivot);
  std::vector<SparseVector> echelon;
  for (auto& incoming : rows) {
    SparseVector r = std::move(incoming);
    while (!r.empty()) {
      std::size_t lead = r.front().first;
      if (lead >= cols) throw Error(ErrorKind::DimensionMismatch, "row entry out of range");
      std::size_t slot = slot_of_col[lead];
      if (slot == kNoPivot) break;
      Rational factor = -r.front().second;
      r = axpy(r, factor, echelon[slot]);
    }
    if (r.empty()) continue;
    Rational inv = 1 / r.front().second;
    if (inv != 1) r = scaled(r, inv);
    slot_of_col[r.front().first] = echelon.size();
    echelon.push_back(std::move(r));
    if (stop_at_full_rank && echelon.size() == cols) break;
  }
  return echelon;
}

}  // namespace

std::vector<SparseVector> reduced_echelon_rows(std::vector<SparseVector> rows, std::size_t cols,
                                               bool stop_at_full_rank) {
  std::vector<std::size_t> slot_of_col;
  std::vector<SparseVector> echelon =
      echelon_insert(std::move(rows), cols, stop_at_full_rank, slot_of_col);
  std::sort(echelon.begin(), echelon.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.front().first < b.front().first; });
  for (std::size_t i = 0; i < echelon.size(); ++i) slot_of_col[echelon[i].front().first] = i;

  // Back-substitution from the last pivot up; rows below are already reduced
  // and vanish at every other pivot column, so one pass per row suffices.
  for (std::size_t i = echelon.size(); i-- > 0;) {
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (std::size_t k = 1; k < echelon[i].size(); ++k) {
      std::size_t slot = slot_of_col[echelon[i][k].first];
      if (slot != kNoPivot) hits.emplace_back(slot, echelon[i][k].second);
    }
    for (const auto& [slot, value] : hits) echelon[i] = axpy(echelon[i], -value, echelon[slot]);
  }
  return echelon;
}

RowEchelon rref(const RationalMatrix& m) {
  std::vector<SparseVector> rows = reduced_echelon_rows(m.row_vectors(), m.cols());
  RowEchelon out;
  out.rank = rows.size();
  for (const auto& r : rows) out.pivot_cols.push_back(r.front().first);
  rows.resize(m.rows());
  out.reduced = RationalMatrix::from_rows(m.cols(), rows);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  return reduced_echelon_rows(m.row_vectors(), m.cols(), true).size();
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.vectors_.push_back({{i, Rational(1)}});
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, std::vector<SparseVector> vectors) {
  Subspace s(ambient_dim);
  s.vectors_ = reduced_echelon_rows(std::move(vectors), ambient_dim, true);
  if (s.vectors_.size() == ambient_dim) return full(ambient_dim);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  std::vector<SparseVector> sparse;
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw Error(ErrorKind::DimensionMismatch, "vector length");
    sparse.push_back(to_sparse(v));
  }
  return span(ambient_dim, std::move(sparse));
}

Subspace Subspace::column_span(const RationalMatrix& m) { return span(m.rows(), m.column_vectors()); }

RationalMatrix Subspace::basis() const { return RationalMatrix::from_columns(ambient_dim_, vectors_); }

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(vectors_.size());
  for (const auto& v : vectors_) out.push_back(v.front().first);
  return out;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> piv = pivots();
  std::vector<std::size_t> out;
  for (std::size_t i = 0, k = 0; i < ambient_dim_; ++i) {
    if (k < piv.size() && piv[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  if (!v.empty() && v.back().first >= ambient_dim_)
    throw Error(ErrorKind::DimensionMismatch, "vector outside ambient space");
  SparseVector r = v;
  std::size_t k = 0;
  for (const auto& [index, value] : v) {
    while (k < vectors_.size() && vectors_[k].front().first < index) ++k;
    if (k == vectors_.size()) break;
    if (vectors_[k].front().first == index) r = axpy(r, -value, vectors_[k]);
  }
  return r;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  return std::all_of(other.vectors_.begin(), other.vectors_.end(),
                     [&](const SparseVector& v) { return contains(v); });
}

Vector Subspace::coordinates(const SparseVector& v) const {
  Vector out(vectors_.size());
  for (std::size_t i = 0; i < vectors_.size(); ++i) out[i] = sparse_at(v, vectors_[i].front().first);
  return out;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace sum");
  std::vector<SparseVector> all = a.vectors();
  all.insert(all.end(), b.vectors().begin(), b.vectors().end());
  return Subspace::span(a.ambient_dim(), std::move(all));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "subspace intersection");
  // u = sum c_i a_i lies in b iff sum c_i reduce_b(a_i) = 0.
  std::vector<SparseVector> residues;
  for (const auto& v : a.vectors()) residues.push_back(b.reduce(v));
  Subspace relations = kernel_basis(RationalMatrix::from_columns(a.ambient_dim(), residues));
  std::vector<SparseVector> common;
  for (const auto& c : relations.vectors()) {
    SparseVector u;
    for (const auto& [i, coeff] : c) u = axpy(u, coeff, a.vectors()[i]);
    common.push_back(std::move(u));
  }
  return Subspace::span(a.ambient_dim(), std::move(common));
}

Subspace kernel_basis(const RationalMatrix& m) { return kernel_of_rows(m.row_vectors(), m.cols()); }

Subspace kernel_of_rows(std::vector<SparseVector> equations, std::size_t n) {
  std::vector<SparseVector> rows = reduced_echelon_rows(std::move(equations), n, true);
  std::vector<bool> is_pivot(n, false);
  for (const auto& r : rows) is_pivot[r.front().first] = true;
  std::vector<SparseVector> free_vectors(n);
  for (const auto& r : rows) {
    std::size_t p = r.front().first;
    for (std::size_t k = 1; k < r.size(); ++k) free_vectors[r[k].first].emplace_back(p, -r[k].second);
  }
  std::vector<SparseVector> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    free_vectors[f].emplace_back(f, Rational(1));
    kernel.push_back(std::move(free_vectors[f]));
  }
  return Subspace::span(n, std::move(kernel));
}

std::optional<Vector> solve(const RationalMatrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::DimensionMismatch, "solve: rows(A) != len(b)");
  const std::size_t n = a.cols();
  std::vector<SparseVector> rows = a.row_vectors();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (sgn(b[i]) != 0) rows[i].emplace_back(n, b[i]);
  std::vector<SparseVector> reduced = reduced_echelon_rows(std::move(rows), n + 1);
  Vector x(n);
  for (const auto& r : reduced) {
    std::size_t p = r.front().first;
    if (p == n) return std::nullopt;
    if (r.back().first == n) x[p] = r.back().second;
  }
  return x;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<SparseVector> rows = m.row_vectors();
  for (std::size_t i = 0; i < n; ++i) rows[i].emplace_back(n + i, Rational(1));
  std::vector<SparseVector> reduced = reduced_echelon_rows(std::move(rows), 2 * n);
  if (reduced.size() < n || (n > 0 && reduced.back().front().first != n - 1))
    throw Error(ErrorKind::Singular, "matrix is singular");
  std::vector<MatrixEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [c, value] : reduced[i])
      if (c >= n) entries.push_back({i, c - n, value});
  return RationalMatrix::from_triplets(n, n, std::move(entries));
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  std::vector<MatrixEntry> entries;
  entries.reserve(a.nonzeros() * b.nonzeros());
  for (const auto& ea : a.entries())
    for (const auto& eb : b.entries())
      entries.push_back({ea.row * b.rows() + eb.row, ea.col * b.cols() + eb.col, ea.value * eb.value});
  return RationalMatrix::from_triplets(a.rows() * b.rows(), a.cols() * b.cols(), std::move(entries));
}

RationalMatrix factor_through(const RationalMatrix& f, const RationalMatrix& g) {
  if (!f.is_square() || f.rows() != g.rows() || f.cols() != g.cols())
    throw Error(ErrorKind::DimensionMismatch, "factor_through needs square maps of equal size");
  const std::size_t n = f.rows();
  const Subspace kernel = kernel_basis(f);
  for (const auto& k : kernel.vectors())
    if (!ado::apply(g, k).empty())
      throw Error(ErrorKind::KernelNotContained, "Ker f is not contained in Ker g");

  // h is fixed on the basis f(e_p), p a pivot column of f, together with the
  // unit vectors completing it; it sends f(e_p) to g(e_p) and the completion to 0.
  std::vector<std::size_t> pivots = rref(f).pivot_cols;
  std::vector<SparseVector> f_cols = f.column_vectors();
  std::vector<SparseVector> g_cols = g.column_vectors();
  std::vector<SparseVector> domain;
  std::vector<SparseVector> images;
  for (std::size_t p : pivots) {
    domain.push_back(f_cols[p]);
    images.push_back(g_cols[p]);
  }
  for (std::size_t c : Subspace::column_span(f).complement_indices()) {
    domain.push_back({{c, Rational(1)}});
    images.emplace_back();
  }
  return RationalMatrix::from_columns(n, images) * inverse(RationalMatrix::from_columns(n, domain));
}

std::size_t nilpotency_index(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "nilpotency_index of non-square matrix");
  RationalMatrix power = m;
  for (std::size_t n = 1;; ++n) {
    if (power.is_zero()) return n;
    if (n >= m.rows()) throw Error(ErrorKind::NotNilpotent, "matrix is not nilpotent");
    power = power * m;
  }
}

}  // namespace ado
