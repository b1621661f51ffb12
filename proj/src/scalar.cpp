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

#include "detcirc/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "detcirc/error.hpp"

namespace detcirc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kLabelMismatch: return "LabelMismatch";
    case ErrorKind::kLabelCollision: return "LabelCollision";
    case ErrorKind::kNotEndomorphism: return "NotEndomorphism";
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kNotSkew: return "NotSkew";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kDanglingWire: return "DanglingWire";
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kSizeMismatch: return "SizeMismatch";
    case ErrorKind::kNotBipartite: return "NotBipartite";
    case ErrorKind::kEdgeMultiplicity: return "EdgeMultiplicity";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error(ErrorKind::kParse,
            line == 0 ? reason : "line " + std::to_string(line) + ": " + reason),
      line_(line) {}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

double parse_real(std::string_view text) {
  if (text.find('/') != std::string_view::npos) {
    return ScalarTraits<Rational>::parse(text).get_d();
  }
  std::string buf(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(buf, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + buf + "'");
  }
  if (used != buf.size()) throw std::invalid_argument("not a number: '" + buf + "'");
  return v;
}

std::string format_component(double v) {
  if (v == 0.0) v = 0.0;  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string ScalarTraits<Rational>::format(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational ScalarTraits<Rational>::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(mpz_class(n), d);
  r.canonicalize();
  return r;
}

std::string ScalarTraits<Complex>::format(const Complex& v) {
  double im = v.imag() == 0.0 ? 0.0 : v.imag();
  std::string out = format_component(v.real());
  if (std::signbit(im)) {
    out += "-" + format_component(-im);
  } else {
    out += "+" + format_component(im);
  }
  return out + "i";
}

Complex ScalarTraits<Complex>::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty complex literal");
  if (text.back() != 'i') return Complex(parse_real(text), 0.0);

  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string_view re_text = split == std::string_view::npos ? std::string_view() : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

  double im = 0.0;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else {
    im = parse_real(im_text[0] == '+' ? im_text.substr(1) : im_text);
  }
  double re = re_text.empty() ? 0.0 : parse_real(re_text);
  return Complex(re, im);
}

}  // namespace detcirc
