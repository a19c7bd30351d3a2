#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace enhadhm {

// Exact arithmetic throughout: every linear-algebra statement in this
// library is an exact rank statement, so floating point is never used.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/* Strict parser for the serialized form "p/q" (or "p" when q = 1).
 * Rejects zero denominators and any other garbage with
 * Errc::malformed_rational. The result is canonical (gcd reduced, q > 0). */
Rational parse_rational(const std::string& text);

/* Inverse of parse_rational: "p/q", or "p" when the denominator is 1. */
std::string format_rational(const Rational& value);

/* Bit size of numerator plus denominator; used as the pivot-selection
 * weight in Gaussian elimination to limit coefficient growth. */
std::size_t rational_bit_length(const Rational& value);

} // namespace enhadhm
