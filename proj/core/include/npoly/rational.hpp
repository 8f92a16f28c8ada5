#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace npoly {

// Exact scalars. GMP keeps mpq values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Parses "p" or "p/q" (optional leading '-', decimal digits only, q != 0).
/// Throws Error(ErrorKind::Parse) on anything else.
Rational parse_rational(std::string_view text);

} // namespace npoly
