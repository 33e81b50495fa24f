#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ado {

/// Exact rational scalar. mpq_class values produced by arithmetic are always
/// canonical (reduced, positive denominator).
using Rational = mpq_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

/// Accepts "p", "p/q", "-p/q". Throws Error(ParseError) on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace ado
