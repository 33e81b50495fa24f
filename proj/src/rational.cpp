#include "ado/rational.hpp"

#include <cctype>

#include "ado/error.hpp"

namespace ado {

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  if (!digits_ok(num, true)) throw bad();
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!digits_ok(den, false)) throw bad();
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace ado
