#pragma once

#include <gmpxx.h>

#include <string>

namespace gpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_string(const Integer& x);
/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& x);

Rational parse_rational(const std::string& text);

}  // namespace gpoly
