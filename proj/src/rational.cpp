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

#include "normnet/rational.hpp"

#include <algorithm>
#include <cctype>
#include <string_view>

namespace normnet {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

BigInt digits_to_int(std::string_view s) {
  // Strip leading zeros: the BigInt string constructor would read them as an
  // octal prefix.
  const std::size_t nonzero = s.find_first_not_of('0');
  if (nonzero == std::string_view::npos) return BigInt(0);
  return BigInt(std::string(s.substr(nonzero)));
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;

  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigInt d = digits_to_int(den);
    if (d == 0) return std::nullopt;
    out = Rational(digits_to_int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ipart = s.substr(0, dot);
    std::string_view fpart = s.substr(dot + 1);
    if (ipart.empty() && fpart.empty()) return std::nullopt;
    if (!ipart.empty() && !all_digits(ipart)) return std::nullopt;
    if (!fpart.empty() && !all_digits(fpart)) return std::nullopt;
    BigInt scale = 1;
    for (std::size_t i = 0; i < fpart.size(); ++i) scale *= 10;
    out = Rational(digits_to_int(ipart) * scale + digits_to_int(fpart), scale);
  } else {
    if (!all_digits(s)) return std::nullopt;
    out = Rational(digits_to_int(s));
  }
  if (negative) out = -out;
  return out;
}

std::string to_fraction_string(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& r, int significant) {
  if (r == 0) return "0";
  const bool negative = r < 0;
  BigInt num = boost::multiprecision::abs(numerator(r));
  const BigInt den = denominator(r);
  BigInt quot = num / den;
  BigInt rem = num % den;
  std::string int_part = quot.str();
  const int int_digits = (quot == 0) ? 0 : static_cast<int>(int_part.size());

  std::string frac;
  if (rem != 0 && int_digits < significant) {
    const int want = significant - int_digits;
    bool counting = int_digits > 0;
    int counted = 0;
    while (counted < want && rem != 0) {
      rem *= 10;
      BigInt digit = rem / den;
      rem %= den;
      frac.push_back(static_cast<char>('0' + digit.convert_to<int>()));
      if (!counting && digit != 0) counting = true;
      if (counting) ++counted;
    }
    // Round half away from zero on the dropped tail.
    if (rem != 0 && rem * 2 >= den) {
      int i = static_cast<int>(frac.size()) - 1;
      while (i >= 0 && frac[i] == '9') frac[i--] = '0';
      if (i >= 0) {
        ++frac[i];
      } else {
        quot += 1;
        int_part = quot.str();
      }
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  }

  std::string out;
  if (negative) out.push_back('-');
  out += (quot == 0) ? "0" : int_part;
  if (!frac.empty()) {
    out.push_back('.');
    out += frac;
  }
  if (out == "-0") out = "0";
  return out;
}

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt result = 1;
  for (const Rational& v : values) {
    result = boost::multiprecision::lcm(result, denominator(v));
  }
  return result;
}

BigInt scaled_to_int(const Rational& r, const BigInt& scale) {
  return numerator(r) * (scale / denominator(r));
}

}  // namespace normnet
