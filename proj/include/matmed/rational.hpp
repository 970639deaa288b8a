// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MATMED_RATIONAL_HPP_
#define MATMED_RATIONAL_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matmed {

using Rational = mpq_class;

// Parses "p/q" or an integer literal "p". Throws ParseError on anything else,
// including a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers keep the "/1" suffix.
std::string to_string(const Rational& value);

// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& value, int digits);

// True if every canonical denominator is one of `allowed`.
bool denominators_within(const std::vector<Rational>& values,
                         const std::vector<long>& allowed);

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// A distance that may be absent (a forbidden pair).
using Distance = std::optional<Rational>;

}  // namespace matmed

#endif  // MATMED_RATIONAL_HPP_
