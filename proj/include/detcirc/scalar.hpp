// Copyright 2026 The detcirc Authors.
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

#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace detcirc {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Absolute tolerance for every floating-point comparison in the library.
inline constexpr double kComplexTolerance = 1e-9;

struct WireLabel {
  std::uint32_t id = 0;

  friend auto operator<=>(const WireLabel&, const WireLabel&) = default;
};

using LabelList = std::vector<WireLabel>;

inline LabelList labels(std::initializer_list<std::uint32_t> ids) {
  LabelList out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(WireLabel{id});
  return out;
}

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static constexpr const char* kName = "rational";

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(v); }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static bool approx_equal(const Rational& a, const Rational& b) {
    return a == b;
  }
  static double magnitude(const Rational& v) { return std::abs(v.get_d()); }

  // `p/q` in lowest terms, integers without a denominator.
  static std::string format(const Rational& v);
  // Accepts `p`, `-p`, `p/q`. Throws std::invalid_argument.
  static Rational parse(std::string_view text);
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool kExact = false;
  static constexpr const char* kName = "complex";

  static Complex zero() { return Complex(0.0, 0.0); }
  static Complex one() { return Complex(1.0, 0.0); }
  static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
  static bool is_zero(const Complex& v) { return v == zero(); }
  static bool approx_equal(const Complex& a, const Complex& b) {
    return std::abs(a - b) <= kComplexTolerance;
  }
  static double magnitude(const Complex& v) { return std::abs(v); }

  // `a+bi` with 12 significant digits per component.
  static std::string format(const Complex& v);
  // Accepts `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`; components may be `p/q`.
  static Complex parse(std::string_view text);
};

template <typename S>
bool approx_equal(const S& a, const S& b) {
  return ScalarTraits<S>::approx_equal(a, b);
}

template <typename S>
std::string format_scalar(const S& v) {
  return ScalarTraits<S>::format(v);
}

}  // namespace detcirc
