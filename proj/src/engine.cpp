#include "ado/engine.hpp"

#include <algorithm>
#include <deque>

#include "ado/error.hpp"

namespace ado {

std::string method_name(Method method) {
  switch (method) {
    case Method::Auto: return "auto";
    case Method::Graded: return "graded";
    case Method::Induction: return "induction";
  }
  return "auto";
}

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "graded") return Method::Graded;
  if (name == "induction") return Method::Induction;
  throw Error(ErrorKind::ParseError, "unknown method '" + name + "'");
}

std::string step_kind(const CertificateStep& s) {
  struct Visitor {
    std::string operator()(const step::Presented&) const { return "presented"; }
    std::string operator()(const step::GradedPipeline&) const { return "graded_pipeline"; }
    std::string operator()(const step::FlagStep&) const { return "flag_step"; }
    std::string operator()(const step::KernelSearch&) const { return "kernel_search"; }
    std::string operator()(const step::KernelSubmodule&) const { return "kernel_submodule"; }
    std::string operator()(const step::Glue&) const { return "glue"; }
    std::string operator()(const step::Verified&) const { return "verified"; }
  };
  return std::visit(Visitor{}, s);
}

Distinction distinguish_by_kernels(const Representation& base, const Vector& central,
                                   const Vector& element, const EngineConfig& config,
                                   std::optional<std::size_t> forced_power) {
  const std::size_t n = base.algebra()->dim();
  if (central.size() != n || element.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "element length differs from algebra dimension");
  if (Subspace::span(n, std::vector<Vector>{central, element}).dim() != 2)
    throw Error(ErrorKind::NotLinearlyIndependent, "central element and target are dependent");

  const std::size_t limit = forced_power ? *forced_power : config.max_tensor_power;
  Representation power = base;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (k > 1) {
      if (power.space_dim() * base.space_dim() > config.space_budget)
        throw Error(ErrorKind::TensorBudgetExceeded,
                    "tensor power " + std::to_string(k) + " has dimension " +
                        std::to_string(power.space_dim() * base.space_dim()) + " over budget " +
                        std::to_string(config.space_budget));
      power = tensor_product(power, base);
    }
    if (forced_power && k != *forced_power) continue;
    Subspace kernel = kernel_basis(element_action(power, central));
    if (kernel.is_zero()) continue;
    RationalMatrix images = element_action(power, element) * kernel.basis();
    std::vector<SparseVector> columns = images.column_vectors();
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (!columns[c].empty()) return Distinction{std::move(power), k, kernel.vectors()[c]};
  }
  if (forced_power)
    throw Error(ErrorKind::ReplayMismatch,
                "recorded tensor power " + std::to_string(*forced_power) + " does not separate");
  throw Error(ErrorKind::TensorBudgetExceeded,
              "no tensor power up to " + std::to_string(config.max_tensor_power) + " separates");
}

GlueResult glue_local(const AlgebraPtr& algebra, const Separator& separator) {
  const std::size_t n = algebra->dim();
  GlueResult out{Representation::zero(algebra, 0), {}, {}};
  Subspace kernel = Subspace::full(n);
  bool first = true;
  while (!kernel.is_zero()) {
    if (out.summand_dims.size() >= n)
      throw Error(ErrorKind::VerificationFailed, "gluing did not terminate within dim L steps");
    Vector x = kernel.basis_vector(0);
    Representation summand = separator(x);
    if (element_action(summand, x).is_zero())
      throw Error(ErrorKind::SeparatorFailed, "separator acts trivially on the chosen element");
    out.summand_dims.push_back(summand.space_dim());
    out.rep = first ? std::move(summand) : direct_sum(out.rep, summand);
    first = false;
    Subspace next = rep_kernel(out.rep);
    if (next.dim() >= kernel.dim())
      throw Error(ErrorKind::VerificationFailed, "kernel failed to shrink while gluing");
    kernel = std::move(next);
    out.kernel_dims.push_back(kernel.dim());
  }
  return out;
}

VerifyReport verify_output(const LieAlgebra& algebra, const Representation& rho) {
  if (!algebra.same_structure(*rho.algebra()))
    throw Error(ErrorKind::AlgebraMismatch, "representation belongs to a different algebra");
  VerifyReport report;
  report.homomorphism = is_homomorphism(rho);
  report.faithful = rep_kernel(rho).is_zero();
  report.nilpotent = is_nilpotent_rep(rho);
  return report;
}

namespace {

class Builder {
 public:
  Builder(const AlgebraPtr& algebra, const EngineConfig& config, std::deque<std::size_t> forced)
      : algebra_(algebra), config_(config), forced_(std::move(forced)) {}

  Construction run() {
    Certificate cert;
    cert.algebra_name = algebra_->name();
    cert.algebra_dim = algebra_->dim();
    cert.config = config_;
    steps_ = &cert.steps;

    if (algebra_->dim() == 0) {
      cert.method_used = config_.method == Method::Induction ? Method::Induction : Method::Graded;
      Representation rep = Representation::zero(algebra_, 0);
      finish(rep);
      return Construction{std::move(rep), std::move(cert)};
    }
    nilpotency_class(*algebra_);

    const auto& grading = algebra_->grading();
    const bool graded = grading && verify_grading(*algebra_, *grading);
    switch (config_.method) {
      case Method::Auto: cert.method_used = graded ? Method::Graded : Method::Induction; break;
      case Method::Graded:
        if (!graded) throw Error(ErrorKind::InvalidGrading, "method graded needs a valid grading");
        cert.method_used = Method::Graded;
        break;
      case Method::Induction: cert.method_used = Method::Induction; break;
    }

    Representation rep = cert.method_used == Method::Graded ? graded_path() : induction_path();
    finish(rep);
    return Construction{std::move(rep), std::move(cert)};
  }

 private:
  void record(CertificateStep s) { steps_->push_back(std::move(s)); }

  void check_budget(std::size_t dim) const {
    if (dim > config_.space_budget)
      throw Error(ErrorKind::BudgetExceeded, "representation space of dimension " + std::to_string(dim) +
                                                 " exceeds the budget " +
                                                 std::to_string(config_.space_budget));
  }

  Representation pipeline(const AlgebraPtr& algebra, const std::string& target) {
    GradedResult g = graded_pipeline(algebra, config_.space_budget);
    record(step::GradedPipeline{target, algebra->dim(), g.current_dim, g.cocycle_dim, g.extension_dim,
                                g.rep.space_dim(), g.embedding_injective, g.euler_kernel_zero,
                                g.extension_faithful, g.extension_nilpotent});
    return std::move(g.rep);
  }

  Representation graded_path() { return pipeline(algebra_, "input"); }

  Representation induction_path() {
    Presentation p = present(algebra_, config_.free_budget);
    record(step::Presented{p.rank, p.nilpotency_class, p.free->dim(), p.ideal.dim()});
    Representation rho = pipeline(p.free, "free");

    // J_m = I ⊃ J_{m-1} ⊃ ... ⊃ J_0 = 0, each of codimension 1 and central mod the next.
    std::vector<Subspace> flag{p.ideal};
    while (!flag.back().is_zero()) flag.push_back(codim1_refinement(p.free, flag.back()));
    std::reverse(flag.begin(), flag.end());

    AlgebraPtr current = p.free;
    RationalMatrix to_current = RationalMatrix::identity(p.free->dim());  // F -> S_k
    for (std::size_t k = 0; k + 1 < flag.size(); ++k) {
      const SparseVector* lift = nullptr;
      for (const auto& v : flag[k + 1].vectors())
        if (!flag[k].contains(v)) {
          lift = &v;
          break;
        }
      if (lift == nullptr) throw Error(ErrorKind::VerificationFailed, "flag step has no new vector");
      Vector z = to_current * to_dense(*lift, p.free->dim());
      record(step::FlagStep{k, current->dim(), z});

      Quotient q = quotient(current, Subspace::span(current->dim(), std::vector<Vector>{z}));
      rho = lift_step(k, rho, z, q);
      to_current = q.projection.matrix() * to_current;
      current = q.algebra;
    }

    // S_m = F/I ≅ L through π̄; pull back along its inverse.
    std::vector<SparseVector> columns;
    for (std::size_t a = 0; a < current->dim(); ++a) {
      std::optional<Vector> pre = solve(to_current, unit_vector(current->dim(), a));
      if (!pre) throw Error(ErrorKind::VerificationFailed, "quotient map is not surjective");
      columns.push_back(ado::apply(p.projection.matrix(), to_sparse(*pre)));
    }
    RationalMatrix bar = RationalMatrix::from_columns(algebra_->dim(), columns);
    LieHom back(algebra_, current, inverse(bar));
    return restrict_along(rho, back);
  }

  Representation lift_step(std::size_t k, const Representation& rho, const Vector& z, const Quotient& q) {
    const AlgebraPtr& next = q.algebra;
    const Subspace next_center = center(*next);
    const Representation next_adjoint = adjoint(next);

    Separator separator = [&](const Vector& x) -> Representation {
      if (!next_center.contains(x)) return next_adjoint;
      Vector lifted(z.size());
      for (std::size_t a = 0; a < x.size(); ++a) lifted[q.complement[a]] = x[a];
      std::optional<std::size_t> forced;
      if (!forced_.empty()) {
        forced = forced_.front();
        forced_.pop_front();
      }
      Distinction d = distinguish_by_kernels(rho, z, lifted, config_, forced);
      record(step::KernelSearch{k, z, lifted, d.tensor_power, d.rep.space_dim()});

      KernelSubmodule ks = kernel_submodule(d.rep, z);
      Representation module(next, ks.induced.space_dim(), ks.induced.matrices());
      if (config_.compress) {
        Vector coords = ks.carrier.coordinates(d.witness);
        CyclicSubmodule cyc = cyclic_submodule(module, to_sparse(coords));
        module = Representation(next, cyc.rep.space_dim(), cyc.rep.matrices());
      }
      record(step::KernelSubmodule{k, ks.carrier.dim(), module.space_dim()});
      return module;
    };

    GlueResult glued = glue_local(next, separator);
    record(step::Glue{k + 1, glued.summand_dims, glued.kernel_dims});
    check_budget(glued.rep.space_dim());
    if (!is_homomorphism(glued.rep) || !rep_kernel(glued.rep).is_zero() || !is_nilpotent_rep(glued.rep))
      throw Error(ErrorKind::VerificationFailed,
                  "representation of quotient level " + std::to_string(k + 1) + " failed verification");
    return std::move(glued.rep);
  }

  void finish(const Representation& rep) {
    VerifyReport v = verify_output(*algebra_, rep);
    record(step::Verified{rep.space_dim(), v.homomorphism, v.faithful, v.nilpotent});
    if (!v.accepted()) throw Error(ErrorKind::VerificationFailed, "final representation failed verification");
  }

  AlgebraPtr algebra_;
  EngineConfig config_;
  std::deque<std::size_t> forced_;
  std::vector<CertificateStep>* steps_ = nullptr;
};

}  // namespace

Construction construct_faithful_nilpotent(const AlgebraPtr& algebra, const EngineConfig& config) {
  return Builder(algebra, config, {}).run();
}

Representation replay(const AlgebraPtr& algebra, const Certificate& certificate) {
  if (certificate.algebra_dim != algebra->dim())
    throw Error(ErrorKind::ReplayMismatch, "certificate was issued for a different dimension");
  std::deque<std::size_t> forced;
  for (const auto& s : certificate.steps)
    if (const auto* search = std::get_if<step::KernelSearch>(&s)) forced.push_back(search->tensor_power);

  EngineConfig config = certificate.config;
  config.method = certificate.method_used;
  Construction again = Builder(algebra, config, std::move(forced)).run();
  if (again.certificate.steps.size() != certificate.steps.size())
    throw Error(ErrorKind::ReplayMismatch, "replay produced a different number of steps");
  for (std::size_t i = 0; i < certificate.steps.size(); ++i)
    if (!(again.certificate.steps[i] == certificate.steps[i]))
      throw Error(ErrorKind::ReplayMismatch,
                  "step " + std::to_string(i) + " (" + step_kind(certificate.steps[i]) + ") differs");
  return std::move(again.rep);
}

}  // namespace ado
