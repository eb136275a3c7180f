#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mgp {

// Exact arithmetic scalars. mpq_class keeps every value in lowest terms
// with a positive denominator, which is exactly the canonical form the
// rest of the library relies on for equality tests.
using Int = mpz_class;
using Rat = mpq_class;

// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rat make_rat(Int num, Int den);

// Parses "p" or "p/q" with optional sign, exact. Throws std::invalid_argument
// on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

// base^e with the convention 0^0 = 1.
Rat rat_pow(const Rat& base, unsigned long e);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& value);

}  // namespace mgp
