// Copyright 2026 The normnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NORMNET_RATIONAL_HPP_
#define NORMNET_RATIONAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace normnet {

// All costs, powers, utilities and objective values are exact rationals.
// Floating point never enters feasibility or objective comparisons.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-2", "+4", "0.5", ".5", "5." and "3/7". Plain decimals become
// exact tenths/hundredths/...; returns nullopt on any other shape.
std::optional<Rational> parse_rational(const std::string& text);

// "3/5", or just "7" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

// Plain decimal rendering (no exponent) with at most `significant` significant
// digits, round half away from zero, trailing zeros stripped.
std::string to_decimal_string(const Rational& r, int significant = 12);

// Least common multiple of all denominators; scaling by it makes every input
// integral. Returns 1 for an empty list.
BigInt common_denominator(const std::vector<Rational>& values);

// r * scale, which must be integral (scale a multiple of r's denominator).
BigInt scaled_to_int(const Rational& r, const BigInt& scale);

}  // namespace normnet

#endif  // NORMNET_RATIONAL_HPP_
