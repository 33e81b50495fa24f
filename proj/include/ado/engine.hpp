#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ado/free_nilpotent.hpp"
#include "ado/graded.hpp"

namespace ado {

enum class Method { Auto, Graded, Induction };

std::string method_name(Method method);
Method parse_method(const std::string& name);

struct EngineConfig {
  std::size_t max_tensor_power = 6;
  std::size_t free_budget = kDefaultFreeBudget;
  std::size_t space_budget = 20000;
  bool compress = true;
  Method method = Method::Auto;

  friend bool operator==(const EngineConfig&, const EngineConfig&) = default;
};

/// Certificate records. `level` k refers to S_k = F/J_k along the flag of the
/// relation ideal; element coordinates are in the basis of S_k.
namespace step {

struct Presented {
  std::size_t free_rank, free_class, free_dim, ideal_dim;
  friend bool operator==(const Presented&, const Presented&) = default;
};

struct GradedPipeline {
  std::string target;  // "input" or "free"
  std::size_t algebra_dim, current_dim, cocycle_dim, extension_dim, rep_dim;
  bool embedding_injective, euler_kernel_zero, extension_faithful, extension_nilpotent;
  friend bool operator==(const GradedPipeline&, const GradedPipeline&) = default;
};

struct FlagStep {
  std::size_t level, algebra_dim;
  Vector central;
  friend bool operator==(const FlagStep&, const FlagStep&) = default;
};

struct KernelSearch {
  std::size_t level;
  Vector central, element;
  std::size_t tensor_power, rep_dim;
  friend bool operator==(const KernelSearch&, const KernelSearch&) = default;
};

struct KernelSubmodule {
  std::size_t level, carrier_dim, module_dim;
  friend bool operator==(const KernelSubmodule&, const KernelSubmodule&) = default;
};

struct Glue {
  std::size_t level;
  std::vector<std::size_t> summand_dims, kernel_dims;
  friend bool operator==(const Glue&, const Glue&) = default;
};

struct Verified {
  std::size_t rep_dim;
  bool homomorphism, faithful, nilpotent;
  friend bool operator==(const Verified&, const Verified&) = default;
};

}  // namespace step

using CertificateStep = std::variant<step::Presented, step::GradedPipeline, step::FlagStep,
                                     step::KernelSearch, step::KernelSubmodule, step::Glue,
                                     step::Verified>;

std::string step_kind(const CertificateStep& s);

struct Certificate {
  std::string algebra_name;
  std::size_t algebra_dim = 0;
  EngineConfig config;
  Method method_used = Method::Graded;
  std::vector<CertificateStep> steps;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Construction {
  Representation rep;
  Certificate certificate;
};

/// A faithful nilpotent representation of a nilpotent algebra, with the audit
/// trail of how it was assembled. Throws NotNilpotent, InvalidGrading,
/// BudgetExceeded, TensorBudgetExceeded, VerificationFailed.
Construction construct_faithful_nilpotent(const AlgebraPtr& algebra, const EngineConfig& config = {});

/// Reruns the construction recorded in the certificate, using the recorded
/// tensor powers instead of searching, and checks every step matches.
/// Throws ReplayMismatch.
Representation replay(const AlgebraPtr& algebra, const Certificate& certificate);

struct Distinction {
  Representation rep;          // base^{⊗k}
  std::size_t tensor_power = 0;
  SparseVector witness;        // in Ker rep(central), not killed by rep(element)
};

/// Searches k = 1, 2, ... for a tensor power of `base` in which
/// Ker rho(central) ⊄ Ker rho(element). `forced_power` skips the search and
/// tests only that power. Throws NotLinearlyIndependent, TensorBudgetExceeded.
Distinction distinguish_by_kernels(const Representation& base, const Vector& central,
                                   const Vector& element, const EngineConfig& config,
                                   std::optional<std::size_t> forced_power = std::nullopt);

/// Produces a nilpotent representation acting nontrivially on the given
/// nonzero element.
using Separator = std::function<Representation(const Vector&)>;

struct GlueResult {
  Representation rep;
  std::vector<std::size_t> summand_dims;
  std::vector<std::size_t> kernel_dims;  // kernel dimension after each summand
};

/// Direct sum of separators, each chosen for the first canonical basis vector
/// of the current kernel, until the kernel vanishes. Throws SeparatorFailed.
GlueResult glue_local(const AlgebraPtr& algebra, const Separator& separator);

struct VerifyReport {
  bool homomorphism = false;
  bool faithful = false;
  bool nilpotent = false;

  bool accepted() const { return homomorphism && faithful && nilpotent; }
};

/// Throws AlgebraMismatch when rho is not a representation of `algebra`.
VerifyReport verify_output(const LieAlgebra& algebra, const Representation& rho);

}  // namespace ado
