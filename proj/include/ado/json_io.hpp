#pragma once

#include <string>

#include <json.hpp>

#include "ado/engine.hpp"

namespace ado {

using Json = nlohmann::ordered_json;

/// Parse failures of any kind surface as Error(ParseError).
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
/// Two-space indentation and a trailing newline.
std::string dump_json(const Json& j);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

Json algebra_to_json(const LieAlgebra& algebra);
LieAlgebra algebra_from_json(const Json& j);

/// "algebra" holds the algebra's name when it has one, otherwise the inline
/// algebra object.
Json representation_to_json(const Representation& rho);
/// An inline "algebra" must match `algebra` structurally (AlgebraMismatch).
Representation representation_from_json(const Json& j, const AlgebraPtr& algebra);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

}  // namespace ado
