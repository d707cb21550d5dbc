#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace planeval {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "p/q" form, lowest terms, q > 0.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// Accepts "p", "p/q", "-p/q". Throws Error(ParseError) on malformed text or zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Rational make_rational(const Integer& num, const Integer& den);

Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);
Rational abs(const Rational& a);

}  // namespace planeval
