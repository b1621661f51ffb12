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

#include <doctest.h>

#include "detcirc/error.hpp"
#include "detcirc/labeled_matrix.hpp"
#include "detcirc/tensor.hpp"
#include "support/support.hpp"

using namespace detcirc;
using namespace detcirc::testing;

namespace {

LabeledMatrix<Rational> rat(LabelList rows, LabelList cols, std::vector<long> v) {
  std::vector<Rational> e(v.begin(), v.end());
  return LabeledMatrix<Rational>(std::move(rows), std::move(cols), std::move(e));
}

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kInvalidArgument;
}

}  // namespace

TEST_CASE("scalars format and parse") {
  CHECK(ScalarTraits<Rational>::format(Rational(6, 4)) == "3/2");
  CHECK(ScalarTraits<Rational>::format(Rational(-4, 2)) == "-2");
  CHECK(ScalarTraits<Rational>::parse("-6/4") == Rational(-3, 2));
  CHECK(ScalarTraits<Rational>::parse("+7") == Rational(7));
  CHECK_THROWS_AS(ScalarTraits<Rational>::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ScalarTraits<Rational>::parse("1.5"), std::invalid_argument);
  CHECK(ScalarTraits<Complex>::format(Complex(1.5, -2)) == "1.5-2i");
  CHECK(ScalarTraits<Complex>::format(Complex(-0.0, 0.0)) == "0+0i");
  CHECK(ScalarTraits<Complex>::parse("-i") == Complex(0, -1));
  CHECK(ScalarTraits<Complex>::parse("1/2+1/4i") == Complex(0.5, 0.25));
  CHECK(ScalarTraits<Complex>::parse("1e-3-2e+1i") == Complex(1e-3, -20));
  CHECK(ScalarTraits<Complex>::parse("3") == Complex(3, 0));
}

TEST_CASE("labeled matrices reject bad shapes and labels") {
  CHECK(kind_of([] { rat(labels({1, 2}), labels({3}), {1}); }) == ErrorKind::kSizeMismatch);
  CHECK(kind_of([] { rat(labels({1, 1}), labels({3}), {1, 2}); }) == ErrorKind::kDuplicateLabel);
  LabeledMatrix<Rational> zero(labels({1}), labels({2, 3}));
  CHECK(zero(0, 1) == 0);
}

TEST_CASE("compose") {
  auto m = rat(labels({1, 2}), labels({5, 6}), {1, 2, 3, 4});
  CHECK(compose(LabeledMatrix<Rational>::identity(labels({1, 2})), m) == m);
  CHECK(compose(rat(labels({1}), labels({2}), {3}), rat(labels({2}), labels({3}), {5})) ==
        rat(labels({1}), labels({3}), {15}));
  // The right factor's rows are matched to the left factor's column order.
  auto n = rat(labels({0}), labels({5, 6}), {1, 10});
  auto p = rat(labels({6, 5}), labels({9}), {2, 3});
  CHECK(compose(n, p) == rat(labels({0}), labels({9}), {23}));
  CHECK(kind_of([&] { compose(n, m); }) == ErrorKind::kLabelMismatch);

  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    auto x = random_matrix<Rational>(rng, labels({1, 2}), labels({3, 4, 5}));
    auto y = random_matrix<Rational>(rng, labels({5, 3, 4}), labels({6}));
    auto z = random_matrix<Rational>(rng, labels({6}), labels({7, 8}));
    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    CHECK(dagger(compose(x, y)) == compose(dagger(y), dagger(x)));
  }
}

TEST_CASE("direct sum, dagger, braiding") {
  auto a = rat(labels({1}), labels({2}), {1});
  auto b = rat(labels({3}), labels({4}), {2});
  CHECK(direct_sum(a, LabeledMatrix<Rational>()) == a);
  CHECK(direct_sum(a, b) == rat(labels({1, 3}), labels({2, 4}), {1, 0, 0, 2}));
  CHECK(kind_of([&] { direct_sum(a, a); }) == ErrorKind::kLabelCollision);

  auto m = rat(labels({1, 2}), labels({3, 4}), {1, 2, 3, 4});
  CHECK(dagger(m) == rat(labels({3, 4}), labels({1, 2}), {1, 3, 2, 4}));
  CHECK(dagger(dagger(m)) == m);
  CHECK(dagger(LabeledMatrix<Rational>::identity(labels({4, 5}))) ==
        LabeledMatrix<Rational>::identity(labels({4, 5})));

  CHECK(braiding<Rational>(labels({1}), labels({2})) == rat(labels({2, 1}), labels({1, 2}), {0, 1, 1, 0}));
  CHECK(braiding<Rational>({}, labels({1})) == LabeledMatrix<Rational>::identity(labels({1})));
  auto there = braiding<Rational>(labels({1, 2}), labels({3}));
  auto back = braiding<Rational>(labels({3}), labels({1, 2}));
  CHECK(compose(back, there) == LabeledMatrix<Rational>::identity(labels({1, 2, 3})));
  CHECK(kind_of([] { braiding<Rational>(labels({1}), labels({1})); }) == ErrorKind::kLabelCollision);
}

TEST_CASE("determinant kernels") {
  CHECK(determinant(LabeledMatrix<Rational>()) == 1);
  CHECK(determinant(rat(labels({1, 2}), labels({1, 2}), {1, 2, 3, 4})) == -2);
  CHECK(kind_of([] { determinant(rat(labels({1}), labels({1, 2}), {1, 2})); }) == ErrorKind::kNotSquare);
  CHECK(std::abs(determinant(LabeledMatrix<Complex>(labels({1, 2}), labels({1, 2}),
                                                    {Complex(0, 1), 2, 3, 4})) -
                 Complex(-6, 4)) < 1e-12);

  Rng rng(12);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = uniform(rng, 0, 5);
    auto m = random_matrix<Rational>(rng, n, n);
    std::vector<Rational> e(m.entries().begin(), m.entries().end());
    CHECK(determinant(m) == cofactor_determinant(e, n));
    auto c = random_matrix<Complex>(rng, n, n);
    std::vector<Complex> ce(c.entries().begin(), c.entries().end());
    CHECK(std::abs(determinant(c) - cofactor_determinant(ce, n)) < 1e-9);
  }
}

TEST_CASE("principal minor sum") {
  CHECK(principal_minor_sum(LabeledMatrix<Rational>(labels({1, 2, 3}), labels({1, 2, 3}))) == 1);
  CHECK(principal_minor_sum(rat(labels({1, 2}), labels({1, 2}), {1, 2, 3, 4})) == 4);
  // Columns are aligned to the row order before the identity is added.
  CHECK(principal_minor_sum(rat(labels({1, 2}), labels({2, 1}), {2, 1, 4, 3})) == 4);
  CHECK(kind_of([] { principal_minor_sum(rat(labels({1}), labels({2}), {1})); }) ==
        ErrorKind::kNotEndomorphism);

  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = uniform(rng, 0, 8);
    auto m = random_matrix<Rational>(rng, n, n);
    LabelList shuffled = m.rows();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    m = m.relabeled(m.rows(), shuffled);
    CHECK(principal_minor_sum(m) == explicit_principal_minor_sum(m));
  }
  for (int t = 0; t < 30; ++t) {
    auto x = random_matrix<Rational>(rng, labels({1, 2, 3}), labels({7, 8}));
    auto y = random_matrix<Rational>(rng, labels({8, 7}), labels({2, 3, 1}));
    CHECK(principal_minor_sum(compose(x, y)) == principal_minor_sum(compose(y, x)));
  }
}

TEST_CASE("characteristic polynomial") {
  auto m = rat(labels({1, 2}), labels({1, 2}), {1, 2, 3, 4});
  // det(xI - M) = x^2 - 5x - 2
  CHECK(characteristic_polynomial(m) == std::vector<Rational>{-2, -5, 1});
  CHECK(characteristic_polynomial(LabeledMatrix<Rational>()) == std::vector<Rational>{1});
  Rng rng(14);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = uniform(rng, 1, 5);
    auto a = random_matrix<Rational>(rng, n, n);
    const auto coeff = characteristic_polynomial(a);
    const Rational x = random_rational(rng);
    Rational value = 0;
    for (std::size_t k = coeff.size(); k-- > 0;) value = value * x + coeff[k];
    std::vector<Rational> shifted(a.entries().begin(), a.entries().end());
    for (auto& v : shifted) v = -v;
    for (std::size_t i = 0; i < n; ++i) shifted[i * n + i] += x;
    CHECK(value == cofactor_determinant(shifted, n));
  }
}
