#ifndef QRELIAB_NUMERIC_HH
#define QRELIAB_NUMERIC_HH

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qreliab {

/// Arbitrary-precision non-negative integer (model counts, gadget counts).
using Count = mpz_class;
/// Exact rational, always kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Count pow2(unsigned long exponent);

/// Exponent of 2 in the factorization of a nonzero integer.
unsigned long two_adic_valuation(const Count & n);

/// `num/den` in lowest terms, also for integers (`3/1`, `0/1`).
std::string format_rational(const Rational & q);

/// Accepts `p/q` or a plain integer `p`, with optional surrounding blanks.
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational & q);

/// Numerator of `q` when `q` is integral; throws NonIntegralError otherwise.
Count to_integer(const Rational & q, std::string_view what);

} // namespace qreliab

#endif // QRELIAB_NUMERIC_HH
