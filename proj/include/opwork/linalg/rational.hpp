#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace opwork {

/// Exact rational number; GMP keeps it in lowest terms with positive denominator.
using Rational = mpq_class;

/// Canonical text form "num/den", denominator always written (e.g. "0/1", "-3/2").
std::string to_string(const Rational& q);

/// Strict inverse of to_string: requires "num/den" in lowest terms with den > 0.
/// Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace opwork
