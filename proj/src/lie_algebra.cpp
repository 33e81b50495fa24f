#include "ado/lie_algebra.hpp"

#include <algorithm>
#include <map>

#include "ado/error.hpp"

namespace ado {

unsigned Grading::max_degree() const {
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<Bracket>& brackets,
                       std::vector<std::string> labels, std::optional<Grading> grading,
                       std::string name)
    : dim_(dim),
      name_(std::move(name)),
      labels_(std::move(labels)),
      grading_(std::move(grading)),
      table_(dim * dim) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
  } else if (labels_.size() != dim) {
    throw Error(ErrorKind::DimensionMismatch, "label count differs from dimension");
  }
  if (grading_ && grading_->degree.size() != dim)
    throw Error(ErrorKind::InvalidGrading, "grading length differs from dimension");
  std::vector<bool> seen(dim * dim, false);
  for (const auto& b : brackets) {
    if (b.left >= dim || b.right >= dim)
      throw Error(ErrorKind::DimensionMismatch, "bracket index out of range");
    if (b.left >= b.right)
      throw Error(ErrorKind::ParseError, "brackets must be given with left < right");
    if (seen[b.left * dim + b.right])
      throw Error(ErrorKind::ParseError, "duplicate bracket pair");
    seen[b.left * dim + b.right] = true;
    SparseVector result;
    for (const auto& [k, value] : b.result) {
      if (k >= dim) throw Error(ErrorKind::DimensionMismatch, "bracket result index out of range");
      result = axpy(result, value, {{k, Rational(1)}});
    }
    table_[b.left * dim + b.right] = std::move(result);
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  return LieAlgebra(dim, {}, {}, Grading{std::vector<unsigned>(dim, 1)}, "abelian" + std::to_string(dim));
}

SparseVector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
  if (i < j) return table_[i * dim_ + j];
  if (i > j) return scaled(table_[j * dim_ + i], -1);
  return {};
}

std::vector<Bracket> LieAlgebra::brackets() const {
  std::vector<Bracket> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!table_[i * dim_ + j].empty()) out.push_back({i, j, table_[i * dim_ + j]});
  return out;
}

LieAlgebra LieAlgebra::with_grading(std::optional<Grading> grading) const {
  LieAlgebra copy = *this;
  if (grading && grading->degree.size() != dim_)
    throw Error(ErrorKind::InvalidGrading, "grading length differs from dimension");
  copy.grading_ = std::move(grading);
  return copy;
}

LieAlgebra LieAlgebra::with_name(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
  return dim_ == other.dim_ && table_ == other.table_;
}

SparseVector bracket(const LieAlgebra& algebra, const SparseVector& u, const SparseVector& v) {
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) {
      if (i == j) continue;
      Rational ab = a * b;
      for (const auto& [k, c] : algebra.basis_bracket(i, j)) acc[k] += ab * c;
    }
  SparseVector out;
  for (auto& [k, value] : acc)
    if (sgn(value) != 0) out.emplace_back(k, std::move(value));
  return out;
}

Vector bracket(const LieAlgebra& algebra, const Vector& u, const Vector& v) {
  if (u.size() != algebra.dim() || v.size() != algebra.dim())
    throw Error(ErrorKind::DimensionMismatch, "bracket operand length");
  return to_dense(bracket(algebra, to_sparse(u), to_sparse(v)), algebra.dim());
}

ValidationReport validate(const LieAlgebra& algebra) {
  ValidationReport report;
  const std::size_t n = algebra.dim();
  auto e = [](std::size_t i) { return SparseVector{{i, Rational(1)}}; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVector r = bracket(algebra, algebra.basis_bracket(i, j), e(k));
        r = axpy(r, 1, bracket(algebra, algebra.basis_bracket(j, k), e(i)));
        r = axpy(r, 1, bracket(algebra, algebra.basis_bracket(k, i), e(j)));
        if (!r.empty()) report.violations.push_back({i, j, k, to_dense(r, n)});
      }
  return report;
}

bool verify_grading(const LieAlgebra& algebra, const Grading& grading) {
  if (grading.degree.size() != algebra.dim()) return false;
  if (std::any_of(grading.degree.begin(), grading.degree.end(), [](unsigned d) { return d == 0; }))
    return false;
  for (const auto& b : algebra.brackets()) {
    unsigned target = grading.degree[b.left] + grading.degree[b.right];
    for (const auto& [k, value] : b.result)
      if (grading.degree[k] != target) return false;
  }
  return true;
}

Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b) {
  std::vector<SparseVector> products;
  for (const auto& u : a.vectors())
    for (const auto& v : b.vectors()) {
      SparseVector w = bracket(algebra, u, v);
      if (!w.empty()) products.push_back(std::move(w));
    }
  return Subspace::span(algebra.dim(), std::move(products));
}

Subspace center(const LieAlgebra& algebra) {
  // Row (j, k) of the system: coefficient of e_k in [x, e_j] = sum_i x_i [e_i, e_j].
  const std::size_t n = algebra.dim();
  std::vector<MatrixEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, value] : algebra.basis_bracket(i, j)) entries.push_back({j * n + k, i, value});
  return kernel_basis(RationalMatrix::from_triplets(n * n, n, std::move(entries)));
}

std::vector<Subspace> lower_central_series(const LieAlgebra& algebra) {
  const Subspace whole = Subspace::full(algebra.dim());
  std::vector<Subspace> series{whole};
  while (!series.back().is_zero()) {
    Subspace next = bracket_span(algebra, whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::size_t nilpotency_class(const LieAlgebra& algebra) {
  std::vector<Subspace> series = lower_central_series(algebra);
  if (!series.back().is_zero())
    throw Error(ErrorKind::NotNilpotent,
                "lower central series stabilizes at dimension " + std::to_string(series.back().dim()));
  return series.size() - 1;
}

bool is_nilpotent(const LieAlgebra& algebra) { return lower_central_series(algebra).back().is_zero(); }

bool is_ideal(const LieAlgebra& algebra, const Subspace& ideal) {
  if (ideal.ambient_dim() != algebra.dim()) return false;
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (const auto& v : ideal.vectors())
      if (!ideal.contains(bracket(algebra, SparseVector{{i, Rational(1)}}, v))) return false;
  return true;
}

bool preserves_brackets(const LieAlgebra& source, const LieAlgebra& target,
                        const RationalMatrix& matrix) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
  std::vector<SparseVector> images = matrix.column_vectors();
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = i + 1; j < source.dim(); ++j)
      if (ado::apply(matrix, source.basis_bracket(i, j)) != bracket(target, images[i], images[j]))
        return false;
  return true;
}

LieHom::LieHom(AlgebraPtr source, AlgebraPtr target, RationalMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_->dim() || matrix_.cols() != source_->dim())
    throw Error(ErrorKind::DimensionMismatch, "homomorphism matrix shape");
  if (!preserves_brackets(*source_, *target_, matrix_))
    throw Error(ErrorKind::NotAHomomorphism, "linear map does not preserve brackets");
}

bool LieHom::is_injective() const { return rank(matrix_) == source_->dim(); }
bool LieHom::is_surjective() const { return rank(matrix_) == target_->dim(); }

Quotient quotient(const AlgebraPtr& algebra, const Subspace& ideal) {
  if (!is_ideal(*algebra, ideal)) throw Error(ErrorKind::NotAnIdeal, "quotient by a non-ideal");
  const std::size_t n = algebra->dim();
  std::vector<std::size_t> complement = ideal.complement_indices();
  std::vector<std::size_t> position(n, 0);
  for (std::size_t a = 0; a < complement.size(); ++a) position[complement[a]] = a;

  // Column j: e_j reduced modulo I, which lives on the complement coordinates.
  auto project = [&](const SparseVector& v) {
    SparseVector out;
    for (const auto& [k, value] : ideal.reduce(v)) out.emplace_back(position[k], value);
    return out;
  };
  std::vector<SparseVector> columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(project({{j, Rational(1)}}));
  RationalMatrix projection = RationalMatrix::from_columns(complement.size(), columns);

  std::vector<Bracket> brackets;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < complement.size(); ++a) {
    labels.push_back(algebra->label(complement[a]));
    for (std::size_t b = a + 1; b < complement.size(); ++b) {
      SparseVector r = project(algebra->basis_bracket(complement[a], complement[b]));
      if (!r.empty()) brackets.push_back({a, b, std::move(r)});
    }
  }
  AlgebraPtr q = share(LieAlgebra(complement.size(), brackets, std::move(labels), std::nullopt,
                                  algebra->name().empty() ? "" : algebra->name() + "/I"));
  return Quotient{q, LieHom(algebra, q, std::move(projection)), std::move(complement)};
}

IdealChain central_flag(const AlgebraPtr& algebra) {
  nilpotency_class(*algebra);
  std::vector<Subspace> series = lower_central_series(*algebra);
  IdealChain chain{algebra, {Subspace(algebra->dim())}};
  for (std::size_t t = series.size(); t-- > 0;) {
    for (const auto& v : series[t].vectors()) {
      if (chain.ideals.back().contains(v)) continue;
      chain.ideals.push_back(chain.ideals.back() + Subspace::span(algebra->dim(), std::vector<SparseVector>{v}));
    }
  }
  return chain;
}

bool is_central_chain(const IdealChain& chain) {
  const LieAlgebra& L = *chain.algebra;
  if (chain.ideals.empty() || !chain.ideals.front().is_zero() || !chain.ideals.back().is_full())
    return false;
  const Subspace whole = Subspace::full(L.dim());
  for (std::size_t k = 0; k < chain.ideals.size(); ++k) {
    if (!is_ideal(L, chain.ideals[k])) return false;
    if (k == 0) continue;
    if (chain.ideals[k].dim() != chain.ideals[k - 1].dim() + 1) return false;
    if (!chain.ideals[k].contains(chain.ideals[k - 1])) return false;
    if (!chain.ideals[k - 1].contains(bracket_span(L, whole, chain.ideals[k]))) return false;
  }
  return true;
}

Subspace codim1_refinement(const AlgebraPtr& algebra, const Subspace& ideal) {
  if (ideal.ambient_dim() != algebra->dim())
    throw Error(ErrorKind::DimensionMismatch, "ideal lives in a different space");
  if (ideal.is_zero()) throw Error(ErrorKind::ZeroIdeal, "codim1_refinement of the zero ideal");
  if (!is_ideal(*algebra, ideal)) throw Error(ErrorKind::NotAnIdeal, "subspace is not an ideal");
  IdealChain flag = central_flag(algebra);
  std::size_t k = 1;
  while (!flag.ideals[k].contains(ideal)) ++k;
  Subspace j = intersect(ideal, flag.ideals[k - 1]);
  if (j.dim() + 1 != ideal.dim() ||
      !j.contains(bracket_span(*algebra, Subspace::full(algebra->dim()), ideal)))
    throw Error(ErrorKind::VerificationFailed, "codimension-one refinement failed its own check");
  return j;
}

}  // namespace ado
