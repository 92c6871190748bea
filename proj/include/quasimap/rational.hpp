#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quasimap {

/// Exact rational number. mpq_class keeps numerator/denominator coprime with a
/// positive denominator after canonicalize(); every constructor here does so.
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// Inverse of to_string. Throws std::invalid_argument on malformed input or a
/// zero denominator.
Rat parse_rat(std::string_view text);

bool is_integer(const Rat& r);

Int factorial(unsigned long n);
Int double_factorial(long n);  // n!! with (-1)!! = 1
Int binomial(unsigned long n, unsigned long k);

}  // namespace quasimap
