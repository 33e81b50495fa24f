#include "ado/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ado/error.hpp"
#include "ado/examples.hpp"
#include "ado/json_io.hpp"

namespace ado {

namespace {

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t hash = 0xcbf29ce484222325ULL) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex(std::uint64_t value) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << value;
  return s.str();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownExample: return kExitParse;
    case ErrorKind::NotNilpotent: return kExitNotNilpotent;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::TensorBudgetExceeded: return kExitBudget;
    default: return kExitFailed;
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& body, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  file << body;
}

/// Collects the run report; every invocation emits exactly one.
class Session {
 public:
  Session(std::string command, std::ostream& err) : command_(std::move(command)), err_(err) {
    report_["command"] = command_;
  }

  std::string load(const std::string& path) {
    std::string body = read_text(path);
    digest_ = fnv1a(body, digest_);
    report_["input_digest"] = hex(digest_);
    return body;
  }

  template <class F>
  auto timed(const char* phase, F&& f) -> decltype(f()) {
    auto start = std::chrono::steady_clock::now();
    struct Stop {
      Session& s;
      const char* phase;
      std::chrono::steady_clock::time_point start;
      ~Stop() {
        std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        s.report_["timings_ms"][phase] = ms.count();
      }
    } stop{*this, phase, start};
    return f();
  }

  Json& report() { return report_; }

  int finish(int code, const std::string& outcome, const std::string& message = {}) {
    report_["outcome"] = outcome;
    report_["exit_code"] = code;
    if (!message.empty()) report_["message"] = message;
    err_ << report_.dump() << "\n";
    return code;
  }

 private:
  std::string command_;
  std::ostream& err_;
  Json report_;
  std::uint64_t digest_ = 0xcbf29ce484222325ULL;
};

AlgebraPtr load_algebra(Session& s, const std::string& path) {
  std::string body = s.load(path);
  return s.timed("parse", [&] { return share(algebra_from_json(parse_json(body))); });
}

Json violations_json(const ValidationReport& report) {
  Json list = Json::array();
  for (const auto& v : report.violations) list.push_back(Json::array({v.i, v.j, v.k}));
  return list;
}

/// Exit code when the algebra fails Jacobi, nullopt when it passes.
std::optional<int> reject_invalid(Session& s, const LieAlgebra& algebra) {
  ValidationReport report = s.timed("validate", [&] { return validate(algebra); });
  if (report.ok()) return std::nullopt;
  s.report()["violations"] = violations_json(report);
  return s.finish(kExitFailed, "ValidationFailed",
                  std::to_string(report.violations.size()) + " Jacobi violation(s)");
}

int cmd_validate(Session& s, const std::string& path, std::ostream& out) {
  AlgebraPtr algebra = load_algebra(s, path);
  ValidationReport report = s.timed("validate", [&] { return validate(*algebra); });
  Json result;
  result["jacobi"] = report.ok();
  result["violations"] = violations_json(report);
  bool grading_ok = true;
  if (algebra->grading()) {
    grading_ok = verify_grading(*algebra, *algebra->grading());
    result["grading"] = grading_ok ? "valid" : "invalid";
  } else {
    result["grading"] = "absent";
  }
  out << dump_json(result);
  s.report()["violations"] = result["violations"];
  s.report()["dimensions"] = {{"algebra", algebra->dim()}};
  if (!report.ok())
    return s.finish(kExitFailed, "ValidationFailed",
                    std::to_string(report.violations.size()) + " Jacobi violation(s)");
  if (!grading_ok) return s.finish(kExitFailed, "InvalidGrading", "grading is not additive on brackets");
  return s.finish(kExitOk, "ok");
}

int cmd_info(Session& s, const std::string& path, std::ostream& out) {
  AlgebraPtr algebra = load_algebra(s, path);
  if (auto code = reject_invalid(s, *algebra)) return *code;
  Json info;
  info["name"] = algebra->name();
  info["dim"] = algebra->dim();
  s.timed("analyze", [&] {
    const bool nilpotent = is_nilpotent(*algebra);
    info["nilpotent"] = nilpotent;
    if (nilpotent) {
      info["nilpotency_class"] = nilpotency_class(*algebra);
    } else {
      info["nilpotency_class"] = "not nilpotent";
    }
    info["center_dim"] = center(*algebra).dim();
    // For nilpotent algebras, generators lift a basis of L/[L,L].
    if (nilpotent) {
      info["generators"] = algebra->dim() - lower_central_series(*algebra).at(1).dim();
    } else {
      info["generators"] = nullptr;
    }
    if (algebra->grading()) {
      info["grading"] = algebra->grading()->degree;
      info["grading_valid"] = verify_grading(*algebra, *algebra->grading());
    } else {
      info["grading"] = nullptr;
    }
  });
  out << dump_json(info);
  s.report()["dimensions"] = {{"algebra", algebra->dim()}};
  return s.finish(kExitOk, "ok");
}

struct ConstructOptions {
  std::string path;
  std::string method = "auto";
  std::size_t max_tensor_power = 6;
  bool compress = true;
  std::string out;
  std::string certificate;
};

int cmd_construct(Session& s, const ConstructOptions& opt, std::ostream& out) {
  EngineConfig config;
  config.method = parse_method(opt.method);
  config.max_tensor_power = opt.max_tensor_power;
  config.compress = opt.compress;
  if (const char* budget = std::getenv("ADO_FORGE_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(budget, &end, 10);
    if (end == budget || *end != '\0' || value == 0)
      throw Error(ErrorKind::ParseError, "ADO_FORGE_BUDGET must be a positive integer");
    config.space_budget = value;
  }
  if (config.max_tensor_power == 0) throw Error(ErrorKind::ParseError, "--max-tensor-power must be positive");

  AlgebraPtr algebra = load_algebra(s, opt.path);
  if (auto code = reject_invalid(s, *algebra)) return *code;
  Construction c = s.timed("construct", [&] { return construct_faithful_nilpotent(algebra, config); });
  VerifyReport v = s.timed("verify", [&] { return verify_output(*algebra, c.rep); });

  s.report()["method"] = method_name(c.certificate.method_used);
  s.report()["dimensions"] = {{"algebra", algebra->dim()}, {"representation", c.rep.space_dim()}};
  s.report()["verification"] = {
      {"homomorphism", v.homomorphism}, {"faithful", v.faithful}, {"nilpotent", v.nilpotent}};
  if (!v.accepted()) return s.finish(kExitFailed, "VerificationFailed", "output failed verification");

  write_text(opt.out, dump_json(representation_to_json(c.rep)), out);
  if (!opt.certificate.empty()) write_text(opt.certificate, dump_json(certificate_to_json(c.certificate)), out);
  return s.finish(kExitOk, "ok");
}

int cmd_verify(Session& s, const std::string& algebra_path, const std::string& rep_path,
               std::ostream& out) {
  AlgebraPtr algebra = load_algebra(s, algebra_path);
  std::string body = s.load(rep_path);
  Representation rho =
      s.timed("parse", [&] { return representation_from_json(parse_json(body), algebra); });
  VerifyReport v = s.timed("verify", [&] { return verify_output(*algebra, rho); });

  Json failures = Json::array();
  if (!v.homomorphism) failures.push_back("not a homomorphism");
  if (!v.faithful) failures.push_back("not faithful");
  if (!v.nilpotent) failures.push_back("not nilpotent");
  Json result{{"homomorphism", v.homomorphism},
              {"faithful", v.faithful},
              {"nilpotent", v.nilpotent},
              {"failures", failures}};
  out << dump_json(result);
  s.report()["dimensions"] = {{"algebra", algebra->dim()}, {"representation", rho.space_dim()}};
  s.report()["verification"] = {
      {"homomorphism", v.homomorphism}, {"faithful", v.faithful}, {"nilpotent", v.nilpotent}};
  if (!v.accepted()) {
    std::string message;
    for (const auto& f : failures) message += (message.empty() ? "" : ", ") + f.get<std::string>();
    return s.finish(kExitFailed, "VerificationFailed", message);
  }
  return s.finish(kExitOk, "ok");
}

int cmd_examples(Session& s, const std::string& name, bool list, std::ostream& out) {
  if (list) {
    for (const auto& n : example_names()) out << n << "\n";
    return s.finish(kExitOk, "ok");
  }
  if (name.empty()) throw Error(ErrorKind::UnknownExample, "give an example name or --list");
  LieAlgebra algebra = s.timed("generate", [&] { return example_algebra(name); });
  out << dump_json(algebra_to_json(algebra));
  s.report()["dimensions"] = {{"algebra", algebra.dim()}};
  return s.finish(kExitOk, "ok");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Faithful nilpotent representations of nilpotent Lie algebras over Q", "ado-forge"};
  app.require_subcommand(1);

  std::string path;
  auto* validate_cmd = app.add_subcommand("validate", "Check the Jacobi identity and grading");
  validate_cmd->add_option("algebra", path, "Algebra JSON file")->required();

  auto* info_cmd = app.add_subcommand("info", "Print structural invariants");
  info_cmd->add_option("algebra", path, "Algebra JSON file")->required();

  ConstructOptions construct_opt;
  auto* construct_cmd = app.add_subcommand("construct", "Build and verify a faithful nilpotent representation");
  construct_cmd->add_option("algebra", construct_opt.path, "Algebra JSON file")->required();
  construct_cmd->add_option("--method", construct_opt.method, "auto | graded | induction")
      ->check(CLI::IsMember({"auto", "graded", "induction"}));
  construct_cmd->add_option("--max-tensor-power", construct_opt.max_tensor_power,
                            "Largest tensor power tried when separating central elements");
  construct_cmd->add_flag("--compress,!--no-compress", construct_opt.compress,
                          "Keep only the cyclic submodule around each witness");
  construct_cmd->add_option("--out", construct_opt.out, "Representation JSON output (default stdout)");
  construct_cmd->add_option("--certificate", construct_opt.certificate, "Certificate JSON output");

  std::string rep_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check homomorphism, faithfulness and nilpotency");
  verify_cmd->add_option("algebra", path, "Algebra JSON file")->required();
  verify_cmd->add_option("representation", rep_path, "Representation JSON file")->required();

  std::string example;
  bool list = false;
  auto* examples_cmd = app.add_subcommand("examples", "Print a built-in algebra as JSON");
  examples_cmd->add_option("name", example, "abelian{n}, heisenberg3, heisenberg5, filiform4, free{r}_{c}, solvable2");
  examples_cmd->add_flag("--list", list, "List the example names");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    Session s("usage", err);
    return s.finish(kExitParse, "ParseError", e.what());
  }

  CLI::App* chosen = app.get_subcommands().front();
  Session s(chosen->get_name(), err);
  try {
    if (chosen == validate_cmd) return cmd_validate(s, path, out);
    if (chosen == info_cmd) return cmd_info(s, path, out);
    if (chosen == construct_cmd) return cmd_construct(s, construct_opt, out);
    if (chosen == verify_cmd) return cmd_verify(s, path, rep_path, out);
    return cmd_examples(s, example, list, out);
  } catch (const Error& e) {
    return s.finish(exit_code_for(e.kind()), std::string(error_kind_name(e.kind())), e.what());
  }
}

}  // namespace ado
