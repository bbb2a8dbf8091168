#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bona {

// Exact arbitrary-precision scalars. Everything in this library computes
// over these; no floating point is used anywhere.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline int sign(const BigInt& x) { return x.sign(); }
inline int sign(const BigRat& x) { return x.sign(); }

// Decimal rendering. Rationals print as "p/q" in lowest terms, with the
// "/q" dropped when the denominator is 1.
std::string to_decimal(const BigInt& x);
std::string to_decimal(const BigRat& x);

// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or a
// zero denominator.
BigRat parse_rational(const std::string& text);

// Exact quotient with a remainder check; throws ExactnessError if the
// division is not exact. Used for formulas whose integrality is a theorem.
BigInt divide_exact(const BigInt& numerator, const BigInt& divisor);

// Rational-to-integer conversion; throws ExactnessError if the value is
// not an integer.
BigInt rational_to_integer(const BigRat& x);

}  // namespace bona
