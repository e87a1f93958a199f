#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hcyl {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p" and "p/q"; throws Error(syntax) otherwise.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace hcyl
