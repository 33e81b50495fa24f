#include "ado/graded.hpp"

#include <map>

#include "ado/error.hpp"

namespace ado {

CurrentAlgebra current_algebra(const AlgebraPtr& base, std::size_t truncation) {
  if (truncation < 2) throw Error(ErrorKind::DimensionMismatch, "truncation must be at least 2");
  const std::size_t d = base->dim();
  CurrentAlgebra c{base, truncation, nullptr};
  std::vector<Bracket> brackets;
  std::vector<std::string> labels;
  Grading grading;
  for (std::size_t a = 1; a < truncation; ++a)
    for (std::size_t i = 0; i < d; ++i) {
      labels.push_back(base->label(i) + "*t^" + std::to_string(a));
      grading.degree.push_back(static_cast<unsigned>(a));
    }
  for (const auto& b : base->brackets()) {
    for (std::size_t a = 1; a < truncation; ++a)
      for (std::size_t s = 1; a + s < truncation; ++s) {
        SparseVector result;
        for (const auto& [k, value] : b.result) result.emplace_back(c.index(k, a + s), value);
        std::size_t left = c.index(b.left, a);
        std::size_t right = c.index(b.right, s);
        if (left > right) {
          std::swap(left, right);
          result = scaled(result, -1);
        }
        brackets.push_back({left, right, std::move(result)});
      }
  }
  std::string name = base->name().empty() ? "" : base->name() + "(x)tQ[t]/t^" + std::to_string(truncation);
  c.product = share(LieAlgebra(d * (truncation - 1), brackets, std::move(labels), std::move(grading),
                               std::move(name)));
  return c;
}

GradedEmbedding graded_embedding(const AlgebraPtr& algebra) {
  const auto& grading = algebra->grading();
  if (!grading) throw Error(ErrorKind::InvalidGrading, "algebra carries no grading");
  if (!verify_grading(*algebra, *grading))
    throw Error(ErrorKind::InvalidGrading, "grading is not additive on brackets");
  CurrentAlgebra c = current_algebra(algebra, grading->max_degree() + 1);
  std::vector<MatrixEntry> entries;
  for (std::size_t i = 0; i < algebra->dim(); ++i)
    entries.push_back({c.index(i, grading->degree[i]), i, 1});
  RationalMatrix m = RationalMatrix::from_triplets(c.product->dim(), algebra->dim(), std::move(entries));
  LieHom embedding(algebra, c.product, std::move(m));
  return GradedEmbedding{std::move(c), std::move(embedding)};
}

bool is_cocycle(const Representation& rho, const RationalMatrix& map) {
  const LieAlgebra& L = *rho.algebra();
  if (map.rows() != rho.space_dim() || map.cols() != L.dim()) return false;
  std::vector<SparseVector> values = map.column_vectors();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      SparseVector r = ado::apply(map, L.basis_bracket(i, j));
      r = axpy(r, -1, ado::apply(rho.action(i), values[j]));
      r = axpy(r, 1, ado::apply(rho.action(j), values[i]));
      if (!r.empty()) return false;
    }
  return true;
}

Cocycle euler_derivation(const CurrentAlgebra& current) {
  Vector diag(current.product->dim());
  for (std::size_t k = 0; k < diag.size(); ++k) diag[k] = static_cast<unsigned long>(current.t_degree(k));
  return Cocycle{adjoint(current.product), RationalMatrix::diagonal(diag)};
}

CocycleSpace cocycle_space(const Representation& rho) {
  const LieAlgebra& L = *rho.algebra();
  const std::size_t v = rho.space_dim();
  const std::size_t d = L.dim();
  auto unknown = [v](std::size_t row, std::size_t basis_index) { return basis_index * v + row; };

  std::vector<std::vector<SparseVector>> action_rows;
  for (const auto& m : rho.matrices()) action_rows.push_back(m.row_vectors());

  std::vector<SparseVector> equations;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const SparseVector structure = L.basis_bracket(i, j);
      for (std::size_t r = 0; r < v; ++r) {
        std::map<std::size_t, Rational> eq;
        for (const auto& [k, c] : structure) eq[unknown(r, k)] += c;
        for (const auto& [s, a] : action_rows[i][r]) eq[unknown(s, j)] -= a;
        for (const auto& [s, a] : action_rows[j][r]) eq[unknown(s, i)] += a;
        SparseVector row;
        for (auto& [index, value] : eq)
          if (sgn(value) != 0) row.emplace_back(index, std::move(value));
        if (!row.empty()) equations.push_back(std::move(row));
      }
    }
  Subspace solutions = kernel_of_rows(std::move(equations), v * d);
  CocycleSpace space{rho, {}};
  for (const auto& s : solutions.vectors()) {
    std::vector<MatrixEntry> entries;
    for (const auto& [index, value] : s) entries.push_back({index % v, index / v, value});
    space.basis.push_back(RationalMatrix::from_triplets(v, d, std::move(entries)));
  }
  return space;
}

ExtensionRep cocycle_extension_rep(const Cocycle& phi, std::size_t space_budget) {
  const Representation& rho = phi.rep;
  const AlgebraPtr& L = rho.algebra();
  if (!is_cocycle(rho, phi.map)) throw Error(ErrorKind::NotACocycle, "map violates the cocycle identity");
  if (!kernel_basis(phi.map).is_zero())
    throw Error(ErrorKind::DegenerateCocycle, "cocycle has a nonzero kernel");

  CocycleSpace z1 = cocycle_space(rho);
  const std::size_t v = rho.space_dim();
  const std::size_t total = v + z1.dim();
  if (total > space_budget)
    throw Error(ErrorKind::BudgetExceeded, "extension space of dimension " + std::to_string(total) +
                                               " exceeds the budget " + std::to_string(space_budget));

  std::vector<std::vector<SparseVector>> psi_columns;
  for (const auto& psi : z1.basis) psi_columns.push_back(psi.column_vectors());
  std::vector<RationalMatrix> matrices;
  for (std::size_t i = 0; i < L->dim(); ++i) {
    std::vector<MatrixEntry> entries = rho.action(i).entries();
    for (std::size_t j = 0; j < z1.dim(); ++j)
      for (const auto& [r, value] : psi_columns[j][i]) entries.push_back({r, v + j, value});
    matrices.push_back(RationalMatrix::from_triplets(total, total, std::move(entries)));
  }
  ExtensionRep out{Representation(L, total, std::move(matrices)), z1.dim(), false, false};
  if (!is_homomorphism(out.rep))
    throw Error(ErrorKind::VerificationFailed, "cocycle extension is not a homomorphism");
  out.faithful = rep_kernel(out.rep).is_zero();
  if (!out.faithful) throw Error(ErrorKind::VerificationFailed, "cocycle extension is not faithful");
  out.nilpotent = is_nilpotent_rep(out.rep);
  if (!out.nilpotent && is_nilpotent_rep(rho))
    throw Error(ErrorKind::VerificationFailed, "cocycle extension of a nilpotent module is not nilpotent");
  return out;
}

GradedResult graded_pipeline(const AlgebraPtr& algebra, std::size_t space_budget) {
  if (algebra->dim() == 0) {
    GradedResult empty{Representation::zero(algebra, 0)};
    empty.extension_faithful = empty.extension_nilpotent = true;
    empty.euler_kernel_zero = empty.embedding_injective = true;
    return empty;
  }
  GradedEmbedding emb = graded_embedding(algebra);
  Cocycle euler = euler_derivation(emb.current);
  ExtensionRep ext = cocycle_extension_rep(euler, space_budget);
  Representation rep = restrict_along(ext.rep, emb.embedding);
  if (!is_homomorphism(rep) || !rep_kernel(rep).is_zero() || !is_nilpotent_rep(rep))
    throw Error(ErrorKind::VerificationFailed, "restricted representation failed verification");

  GradedResult out{std::move(rep)};
  out.truncation = emb.current.truncation;
  out.current_dim = emb.current.product->dim();
  out.cocycle_dim = ext.cocycle_dim;
  out.extension_dim = ext.rep.space_dim();
  out.extension_faithful = ext.faithful;
  out.extension_nilpotent = ext.nilpotent;
  out.euler_kernel_zero = kernel_basis(euler.map).is_zero();
  out.embedding_injective = emb.embedding.is_injective();
  return out;
}

Representation graded_faithful_rep(const AlgebraPtr& algebra) { return graded_pipeline(algebra).rep; }

Representation free_nilpotent_faithful_rep(const AlgebraPtr& free) { return graded_faithful_rep(free); }

}  // namespace ado
