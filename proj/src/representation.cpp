#include "ado/representation.hpp"

#include <algorithm>

#include "ado/error.hpp"

namespace ado {

Representation::Representation(AlgebraPtr algebra, std::size_t space_dim,
                               std::vector<RationalMatrix> matrices)
    : algebra_(std::move(algebra)), space_dim_(space_dim), matrices_(std::move(matrices)) {
  if (matrices_.size() != algebra_->dim())
    throw Error(ErrorKind::DimensionMismatch, "one matrix per basis element is required");
  for (const auto& m : matrices_)
    if (m.rows() != space_dim_ || m.cols() != space_dim_)
      throw Error(ErrorKind::DimensionMismatch, "representation matrix shape");
}

Representation Representation::zero(AlgebraPtr algebra, std::size_t space_dim) {
  std::vector<RationalMatrix> matrices(algebra->dim(), RationalMatrix(space_dim, space_dim));
  return Representation(std::move(algebra), space_dim, std::move(matrices));
}

namespace {

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b && !a->same_structure(*b))
    throw Error(ErrorKind::AlgebraMismatch, "representations of different algebras");
}

}  // namespace

Representation adjoint(const AlgebraPtr& algebra) {
  const std::size_t n = algebra->dim();
  std::vector<RationalMatrix> matrices;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SparseVector> columns;
    for (std::size_t j = 0; j < n; ++j) columns.push_back(algebra->basis_bracket(i, j));
    matrices.push_back(RationalMatrix::from_columns(n, columns));
  }
  return Representation(algebra, n, std::move(matrices));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_algebra(a.algebra(), b.algebra());
  std::vector<RationalMatrix> matrices;
  for (std::size_t i = 0; i < a.matrices().size(); ++i)
    matrices.push_back(block_diagonal(a.action(i), b.action(i)));
  return Representation(a.algebra(), a.space_dim() + b.space_dim(), std::move(matrices));
}

Representation tensor_product(const Representation& a, const Representation& b) {
  require_same_algebra(a.algebra(), b.algebra());
  const RationalMatrix id_a = RationalMatrix::identity(a.space_dim());
  const RationalMatrix id_b = RationalMatrix::identity(b.space_dim());
  std::vector<RationalMatrix> matrices;
  for (std::size_t i = 0; i < a.matrices().size(); ++i)
    matrices.push_back(kronecker(a.action(i), id_b) + kronecker(id_a, b.action(i)));
  return Representation(a.algebra(), a.space_dim() * b.space_dim(), std::move(matrices));
}

Representation restrict_along(const Representation& rho, const LieHom& phi) {
  require_same_algebra(phi.target(), rho.algebra());
  std::vector<RationalMatrix> matrices;
  for (const auto& column : phi.matrix().column_vectors())
    matrices.push_back(element_action(rho, to_dense(column, rho.algebra()->dim())));
  return Representation(phi.source(), rho.space_dim(), std::move(matrices));
}

RationalMatrix element_action(const Representation& rho, const Vector& x) {
  if (x.size() != rho.algebra()->dim())
    throw Error(ErrorKind::DimensionMismatch, "element length differs from algebra dimension");
  return linear_combination(x, rho.matrices(), rho.space_dim(), rho.space_dim());
}

Subspace rep_kernel(const Representation& rho) {
  // Unknowns are the coefficients x_i; one equation per matrix position that
  // any rho(e_i) touches. Positions untouched by every matrix give no rows.
  std::vector<MatrixEntry> stacked;
  const std::size_t v = rho.space_dim();
  for (std::size_t i = 0; i < rho.matrices().size(); ++i)
    for (const auto& e : rho.action(i).entries()) stacked.push_back({e.row * v + e.col, i, e.value});
  std::sort(stacked.begin(), stacked.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<SparseVector> rows;
  for (std::size_t k = 0; k < stacked.size(); ++k) {
    if (k == 0 || stacked[k].row != stacked[k - 1].row) rows.emplace_back();
    rows.back().emplace_back(stacked[k].col, stacked[k].value);
  }
  return kernel_of_rows(std::move(rows), rho.algebra()->dim());
}

bool is_homomorphism(const Representation& rho) {
  const LieAlgebra& L = *rho.algebra();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      RationalMatrix lhs = element_action(rho, to_dense(L.basis_bracket(i, j), L.dim()));
      if (lhs != commutator(rho.action(i), rho.action(j))) return false;
    }
  return true;
}

bool is_nilpotent_rep(const Representation& rho) {
  Subspace current = Subspace::full(rho.space_dim());
  while (!current.is_zero()) {
    const RationalMatrix basis = current.basis();
    std::vector<SparseVector> images;
    for (const auto& m : rho.matrices()) {
      std::vector<SparseVector> cols = (m * basis).column_vectors();
      for (auto& c : cols)
        if (!c.empty()) images.push_back(std::move(c));
    }
    Subspace next = Subspace::span(rho.space_dim(), std::move(images));
    if (next == current) return false;
    current = std::move(next);
  }
  return true;
}

Representation restrict_to_invariant(const Representation& rho, const Subspace& invariant) {
  const RationalMatrix basis = invariant.basis();
  std::vector<RationalMatrix> matrices;
  for (const auto& m : rho.matrices()) {
    std::vector<SparseVector> coords;
    for (const auto& image : (m * basis).column_vectors()) {
      if (!invariant.contains(image))
        throw Error(ErrorKind::NotCentral, "subspace is not invariant under the action");
      coords.push_back(to_sparse(invariant.coordinates(image)));
    }
    matrices.push_back(RationalMatrix::from_columns(invariant.dim(), coords));
  }
  return Representation(rho.algebra(), invariant.dim(), std::move(matrices));
}

KernelSubmodule kernel_submodule(const Representation& rho, const Vector& z) {
  const AlgebraPtr& S = rho.algebra();
  if (z.size() != S->dim()) throw Error(ErrorKind::DimensionMismatch, "element length");
  const SparseVector zs = to_sparse(z);
  for (std::size_t i = 0; i < S->dim(); ++i)
    if (!bracket(*S, SparseVector{{i, Rational(1)}}, zs).empty())
      throw Error(ErrorKind::NotCentral, "element is not central in the algebra");
  const RationalMatrix action = element_action(rho, z);
  for (const auto& m : rho.matrices())
    if (!commutator(m, action).is_zero())
      throw Error(ErrorKind::NotCentral, "rho(z) does not commute with the action");

  Subspace carrier = kernel_basis(action);
  Representation on_carrier = restrict_to_invariant(rho, carrier);
  Quotient q = quotient(S, Subspace::span(S->dim(), std::vector<SparseVector>{zs}));
  std::vector<RationalMatrix> matrices;
  for (std::size_t index : q.complement) matrices.push_back(on_carrier.action(index));
  Representation induced(q.algebra, carrier.dim(), std::move(matrices));
  return KernelSubmodule{std::move(carrier), std::move(q), std::move(induced)};
}

CyclicSubmodule cyclic_submodule(const Representation& rho, const SparseVector& generator) {
  const std::size_t n = rho.space_dim();
  Subspace span = Subspace::span(n, std::vector<SparseVector>{generator});
  std::vector<SparseVector> frontier;
  if (!generator.empty()) frontier.push_back(generator);
  while (!frontier.empty()) {
    std::vector<SparseVector> fresh;
    for (const auto& m : rho.matrices())
      for (const auto& w : frontier) {
        SparseVector image = ado::apply(m, w);
        if (span.contains(image)) continue;
        span = span + Subspace::span(n, std::vector<SparseVector>{image});
        fresh.push_back(std::move(image));
      }
    frontier = std::move(fresh);
  }
  Representation rep = restrict_to_invariant(rho, span);
  return CyclicSubmodule{std::move(span), std::move(rep)};
}

}  // namespace ado
