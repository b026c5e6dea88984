/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropext {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_perfect_square(const Rational& q);
/// Non-negative square root of a rational perfect square.
Rational exact_sqrt(const Rational& q);

}  // namespace tropext
