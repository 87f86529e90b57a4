// Copyright 2026 The privlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVLEARN_RATIONAL_HPP_
#define PRIVLEARN_RATIONAL_HPP_

#include <boost/rational.hpp>

#include <cctype>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace privlearn {

// Exact arithmetic for empirical errors, disagreement fractions, and
// probability masses over the finite domain. int64 components are plenty for
// the dataset and domain sizes this toolkit targets.
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "3", "-2/5", and plain decimals such as "0.125" (parsed exactly).
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto bad = [&] {
    return std::invalid_argument("malformed rational literal: " + text);
  };
  const auto parse_int = [&](const std::string& s) -> long long {
    if (s.empty()) throw bad();
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw bad();
    }
    if (pos != s.size()) throw bad();
    return value;
  };

  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const long long num = parse_int(text.substr(0, slash));
    const long long den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  }

  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_int(text));

  const bool negative = !text.empty() && text[0] == '-';
  std::string whole = text.substr(0, dot);
  if (whole == "-" || whole.empty()) whole += "0";
  const std::string frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 17) throw bad();
  for (char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
  }
  long long den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const long long whole_part = parse_int(whole);
  const long long frac_part = parse_int(frac);
  const long long magnitude =
      std::abs(whole_part) * den + frac_part;
  return Rational(negative ? -magnitude : magnitude, den);
}

}  // namespace privlearn

#endif  // PRIVLEARN_RATIONAL_HPP_
