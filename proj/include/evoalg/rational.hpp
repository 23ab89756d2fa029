#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace evoalg {

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator (gmp canonical form); arithmetic never rounds.
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
Rat rat(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (decimal digits only). Throws
/// std::invalid_argument on anything else, including a zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical text form, "p" or "p/q" with q > 1.
std::string to_string(const Rat& value);

}  // namespace evoalg
