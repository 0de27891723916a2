/*
 * Copyright 2026 The rankprop Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RANKPROP_RATIONAL_HPP_
#define RANKPROP_RATIONAL_HPP_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rankprop {

// Exact rationals backed by GMP. Values are always kept canonical.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// num/den in canonical form. The two-argument mpq_class constructor does not
// canonicalize, so always build fractions through this helper.
Rational ratio(long num, long den);

// Parses "a", "a/b", or a decimal such as "-0.4375" or "1.5e-3". Decimals
// are converted to their exact fractional value. Throws ParseError.
Rational parse_rational(std::string_view text);

// Exact conversion of a finite double (every double is a dyadic rational).
Rational rational_from_double(double value);

// "a/b", or "a" when the denominator is one.
std::string to_string(const Rational& value);

// Decimal rendering rounded to `digits` significant digits.
std::string to_decimal(const Rational& value, int digits = 17);

double to_double(const Rational& value);

RationalVector rationals_from_doubles(std::span<const double> values);

// base^exponent for a non-negative integer exponent.
Rational pow(const Rational& base, unsigned long exponent);

// n choose k as an exact integer-valued rational.
Rational binomial(unsigned long n, unsigned long k);

}  // namespace rankprop

#endif  // RANKPROP_RATIONAL_HPP_
