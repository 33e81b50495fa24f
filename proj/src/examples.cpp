#include "ado/examples.hpp"

#include <regex>

#include "ado/error.hpp"
#include "ado/free_nilpotent.hpp"

namespace ado {

namespace {

Bracket unit(std::size_t left, std::size_t right, std::size_t result) {
  return {left, right, {{result, Rational(1)}}};
}

std::size_t small_count(const std::string& digits) {
  if (digits.size() > 4) throw Error(ErrorKind::UnknownExample, "parameter too large: " + digits);
  return std::stoul(digits);
}

}  // namespace

std::vector<std::string> example_names() {
  return {"abelian{n}", "heisenberg3", "heisenberg5", "filiform4", "free{r}_{c}", "solvable2"};
}

LieAlgebra example_algebra(const std::string& name) {
  if (name == "heisenberg3")
    return LieAlgebra(3, {unit(0, 1, 2)}, {}, Grading{{1, 1, 2}}, name);
  if (name == "heisenberg5")
    return LieAlgebra(5, {unit(0, 1, 4), unit(2, 3, 4)}, {}, Grading{{1, 1, 1, 1, 2}}, name);
  if (name == "filiform4")
    return LieAlgebra(4, {unit(0, 1, 2), unit(0, 2, 3)}, {}, Grading{{1, 1, 2, 3}}, name);
  if (name == "solvable2") return LieAlgebra(2, {unit(0, 1, 1)}, {}, std::nullopt, name);

  std::smatch m;
  static const std::regex abelian(R"(abelian(\d+))");
  static const std::regex free(R"(free(\d+)_(\d+))");
  if (std::regex_match(name, m, abelian)) return LieAlgebra::abelian(small_count(m[1]));
  if (std::regex_match(name, m, free)) {
    std::size_t r = small_count(m[1]);
    std::size_t c = small_count(m[2]);
    if (r == 0 || c == 0) throw Error(ErrorKind::UnknownExample, "free algebras need r, c >= 1");
    return free_nilpotent(r, c);
  }
  throw Error(ErrorKind::UnknownExample, "no built-in example named '" + name + "'");
}

}  // namespace ado
