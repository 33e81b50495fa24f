#include "ado/json_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "ado/error.hpp"

namespace ado {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::ParseError, message); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

bool flag(const Json& j, const char* what) {
  if (!j.is_boolean()) fail(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational rational(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (!j.is_string()) fail("rationals must be strings \"p/q\"");
  return parse_rational(j.get<std::string>());
}

Json dims_to_json(const std::vector<std::size_t>& v) { return Json(v); }

std::vector<std::size_t> dims_from_json(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) out.push_back(count(e, what));
  return out;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

}  // namespace

Json parse_json(const std::string& body) {
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json matrix_to_json(const RationalMatrix& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(Json::array({e.row, e.col, to_string(e.value)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RationalMatrix matrix_from_json(const Json& j) {
  return guarded([&] {
    const std::size_t rows = count(field(j, "rows"), "rows");
    const std::size_t cols = count(field(j, "cols"), "cols");
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) fail("entries must be an array");
    std::vector<MatrixEntry> triplets;
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 3) fail("matrix entries are [row, col, \"p/q\"]");
      const std::size_t r = count(e[0], "row");
      const std::size_t c = count(e[1], "col");
      if (r >= rows || c >= cols) fail("matrix entry out of range");
      triplets.push_back({r, c, rational(e[2])});
    }
    return RationalMatrix::from_triplets(rows, cols, std::move(triplets));
  });
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) fail("vectors are arrays of rationals");
  Vector out;
  for (const auto& x : j) out.push_back(rational(x));
  return out;
}

Json algebra_to_json(const LieAlgebra& algebra) {
  Json out;
  out["name"] = algebra.name();
  out["dim"] = algebra.dim();
  out["basis"] = algebra.labels();
  if (algebra.grading()) out["grading"] = algebra.grading()->degree;
  Json brackets = Json::array();
  for (const auto& b : algebra.brackets()) {
    Json result = Json::object();
    for (const auto& [k, value] : b.result) result[std::to_string(k)] = to_string(value);
    brackets.push_back(Json{{"left", b.left}, {"right", b.right}, {"result", std::move(result)}});
  }
  out["brackets"] = std::move(brackets);
  return out;
}

LieAlgebra algebra_from_json(const Json& j) {
  return guarded([&] {
    const std::string name = text(field(j, "name"), "name");
    const std::size_t dim = count(field(j, "dim"), "dim");

    std::vector<std::string> labels;
    if (auto it = j.find("basis"); it != j.end()) {
      if (!it->is_array() || it->size() != dim) fail("basis must list dim names");
      for (const auto& l : *it) labels.push_back(text(l, "basis name"));
    }
    std::optional<Grading> grading;
    if (auto it = j.find("grading"); it != j.end() && !it->is_null()) {
      if (!it->is_array() || it->size() != dim) fail("grading must list dim degrees");
      Grading g;
      for (const auto& d : *it) g.degree.push_back(static_cast<unsigned>(count(d, "degree")));
      grading = std::move(g);
    }

    const Json& list = field(j, "brackets");
    if (!list.is_array()) fail("brackets must be an array");
    std::vector<Bracket> brackets;
    for (const auto& b : list) {
      Bracket br{count(field(b, "left"), "left"), count(field(b, "right"), "right"), {}};
      if (br.left >= dim || br.right >= dim) fail("bracket index out of range");
      if (br.left >= br.right) fail("bracket pairs must satisfy left < right");
      const Json& result = field(b, "result");
      if (!result.is_object()) fail("bracket result must be an object");
      std::map<std::size_t, Rational> coeffs;
      for (const auto& [key, value] : result.items()) {
        std::size_t k = 0;
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
        if (ec != std::errc() || ptr != key.data() + key.size()) fail("result keys are basis indices");
        if (k >= dim) fail("bracket result index out of range");
        coeffs[k] += rational(value);
      }
      for (auto& [k, c] : coeffs)
        if (sgn(c) != 0) br.result.emplace_back(k, std::move(c));
      brackets.push_back(std::move(br));
    }
    return LieAlgebra(dim, brackets, std::move(labels), std::move(grading), name);
  });
}

Json representation_to_json(const Representation& rho) {
  Json out;
  if (rho.algebra()->name().empty()) {
    out["algebra"] = algebra_to_json(*rho.algebra());
  } else {
    out["algebra"] = rho.algebra()->name();
  }
  out["space_dim"] = rho.space_dim();
  Json matrices = Json::array();
  for (const auto& m : rho.matrices()) matrices.push_back(matrix_to_json(m));
  out["matrices"] = std::move(matrices);
  return out;
}

Representation representation_from_json(const Json& j, const AlgebraPtr& algebra) {
  return guarded([&] {
    if (auto it = j.find("algebra"); it != j.end() && it->is_object())
      if (!algebra_from_json(*it).same_structure(*algebra))
        throw Error(ErrorKind::AlgebraMismatch, "inline algebra differs from the given algebra");
    const std::size_t space = count(field(j, "space_dim"), "space_dim");
    const Json& list = field(j, "matrices");
    if (!list.is_array()) fail("matrices must be an array");
    if (list.size() != algebra->dim()) fail("one matrix per basis element is required");
    std::vector<RationalMatrix> matrices;
    for (const auto& m : list) {
      RationalMatrix r = matrix_from_json(m);
      if (r.rows() != space || r.cols() != space) fail("matrix shape differs from space_dim");
      matrices.push_back(std::move(r));
    }
    return Representation(algebra, space, std::move(matrices));
  });
}

namespace {

struct StepWriter {
  Json operator()(const step::Presented& s) const {
    return {{"kind", "presented"}, {"free_rank", s.free_rank}, {"free_class", s.free_class},
            {"free_dim", s.free_dim}, {"ideal_dim", s.ideal_dim}};
  }
  Json operator()(const step::GradedPipeline& s) const {
    return {{"kind", "graded_pipeline"},
            {"target", s.target},
            {"algebra_dim", s.algebra_dim},
            {"current_dim", s.current_dim},
            {"cocycle_dim", s.cocycle_dim},
            {"extension_dim", s.extension_dim},
            {"rep_dim", s.rep_dim},
            {"embedding_injective", s.embedding_injective},
            {"euler_kernel_zero", s.euler_kernel_zero},
            {"extension_faithful", s.extension_faithful},
            {"extension_nilpotent", s.extension_nilpotent}};
  }
  Json operator()(const step::FlagStep& s) const {
    return {{"kind", "flag_step"}, {"level", s.level}, {"algebra_dim", s.algebra_dim},
            {"central", vector_to_json(s.central)}};
  }
  Json operator()(const step::KernelSearch& s) const {
    return {{"kind", "kernel_search"},        {"level", s.level},
            {"central", vector_to_json(s.central)}, {"element", vector_to_json(s.element)},
            {"tensor_power", s.tensor_power}, {"rep_dim", s.rep_dim}};
  }
  Json operator()(const step::KernelSubmodule& s) const {
    return {{"kind", "kernel_submodule"}, {"level", s.level}, {"carrier_dim", s.carrier_dim},
            {"module_dim", s.module_dim}};
  }
  Json operator()(const step::Glue& s) const {
    return {{"kind", "glue"}, {"level", s.level}, {"summand_dims", dims_to_json(s.summand_dims)},
            {"kernel_dims", dims_to_json(s.kernel_dims)}};
  }
  Json operator()(const step::Verified& s) const {
    return {{"kind", "verified"}, {"rep_dim", s.rep_dim}, {"homomorphism", s.homomorphism},
            {"faithful", s.faithful}, {"nilpotent", s.nilpotent}};
  }
};

CertificateStep step_from_json(const Json& j) {
  const std::string kind = text(field(j, "kind"), "kind");
  auto n = [&](const char* key) { return count(field(j, key), key); };
  auto b = [&](const char* key) { return flag(field(j, key), key); };
  if (kind == "presented") return step::Presented{n("free_rank"), n("free_class"), n("free_dim"), n("ideal_dim")};
  if (kind == "graded_pipeline")
    return step::GradedPipeline{text(field(j, "target"), "target"),
                                n("algebra_dim"),
                                n("current_dim"),
                                n("cocycle_dim"),
                                n("extension_dim"),
                                n("rep_dim"),
                                b("embedding_injective"),
                                b("euler_kernel_zero"),
                                b("extension_faithful"),
                                b("extension_nilpotent")};
  if (kind == "flag_step")
    return step::FlagStep{n("level"), n("algebra_dim"), vector_from_json(field(j, "central"))};
  if (kind == "kernel_search")
    return step::KernelSearch{n("level"), vector_from_json(field(j, "central")),
                              vector_from_json(field(j, "element")), n("tensor_power"), n("rep_dim")};
  if (kind == "kernel_submodule") return step::KernelSubmodule{n("level"), n("carrier_dim"), n("module_dim")};
  if (kind == "glue")
    return step::Glue{n("level"), dims_from_json(field(j, "summand_dims"), "summand_dims"),
                      dims_from_json(field(j, "kernel_dims"), "kernel_dims")};
  if (kind == "verified") return step::Verified{n("rep_dim"), b("homomorphism"), b("faithful"), b("nilpotent")};
  fail("unknown certificate step '" + kind + "'");
}

}  // namespace

Json certificate_to_json(const Certificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps) steps.push_back(std::visit(StepWriter{}, s));
  return Json{{"algebra", cert.algebra_name},
              {"dim", cert.algebra_dim},
              {"method", method_name(cert.method_used)},
              {"config",
               {{"max_tensor_power", cert.config.max_tensor_power},
                {"free_budget", cert.config.free_budget},
                {"space_budget", cert.config.space_budget},
                {"compress", cert.config.compress},
                {"method", method_name(cert.config.method)}}},
              {"steps", std::move(steps)}};
}

Certificate certificate_from_json(const Json& j) {
  return guarded([&] {
    Certificate cert;
    cert.algebra_name = text(field(j, "algebra"), "algebra");
    cert.algebra_dim = count(field(j, "dim"), "dim");
    cert.method_used = parse_method(text(field(j, "method"), "method"));
    const Json& c = field(j, "config");
    cert.config.max_tensor_power = count(field(c, "max_tensor_power"), "max_tensor_power");
    cert.config.free_budget = count(field(c, "free_budget"), "free_budget");
    cert.config.space_budget = count(field(c, "space_budget"), "space_budget");
    cert.config.compress = flag(field(c, "compress"), "compress");
    cert.config.method = parse_method(text(field(c, "method"), "method"));
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) fail("steps must be an array");
    for (const auto& s : steps) cert.steps.push_back(step_from_json(s));
    return cert;
  });
}

}  // namespace ado
