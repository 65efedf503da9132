#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace apx {

/// Exact rational number. Every probability and bound comparison in the
/// toolkit goes through this type; floating point is reserved for spectral
/// diagnostics.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Canonical "p/q" text form. Integers are written with an explicit
/// denominator ("1/1") so rational-typed fields are recognizable.
std::string to_string(const Rational& r);

/// Accepts "p/q", "p", or a finite decimal such as "0.56" (converted exactly).
/// Throws InvalidArgument on malformed input.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

/// Largest integer <= r.
std::int64_t floor_to_int(const Rational& r);

/// r - floor(r), in [0, 1).
Rational fractional_part(const Rational& r);

}  // namespace apx
