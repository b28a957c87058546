#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace gmak {

using Rat = mpq_class;
using Int = mpz_class;

inline int sgn(const Rat& q) { return ::sgn(q); }

/// Parse "p" or "p/q" (q > 0) into an exact rational. Returns nullopt on
/// malformed input or zero denominator.
std::optional<Rat> parse_rational(const std::string& s);

/// Canonical text form: "p" or "p/q" with q > 1.
std::string rat_to_string(const Rat& q);

} // namespace gmak
