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
#include "detcirc/pfaffian.hpp"
#include "support/support.hpp"

using namespace detcirc;
using namespace detcirc::testing;

namespace {

SkewMatrix<Rational> skew(LabelList l, std::vector<Rational> upper) {
  const std::size_t n = l.size();
  std::vector<Rational> e(n * n, Rational(0));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      e[i * n + j] = upper[k];
      e[j * n + i] = -upper[k];
      ++k;
    }
  }
  return SkewMatrix<Rational>(std::move(l), std::move(e));
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

PfGate<Rational> pair_gate(PfKind kind, std::uint32_t e1, std::uint32_t e2, const Rational& v) {
  return {skew(labels({0, 1}), {v}), kind, {e1, e2}};
}

}  // namespace

TEST_CASE("skew matrices are checked") {
  CHECK(kind_of([] { SkewMatrix<Rational>(labels({1, 2}), {Rational(0), Rational(1)}); }) ==
        ErrorKind::kSizeMismatch);
  CHECK(kind_of([] { SkewMatrix<Rational>(labels({1, 1}), std::vector<Rational>(4, Rational(0))); }) ==
        ErrorKind::kDuplicateLabel);
  CHECK(kind_of([] {
          SkewMatrix<Rational>(labels({1, 2}), {Rational(0), Rational(1), Rational(1), Rational(0)});
        }) == ErrorKind::kNotSkew);
  CHECK(kind_of([] {
          SkewMatrix<Rational>(labels({1}), {Rational(3)});
        }) == ErrorKind::kNotSkew);
}

TEST_CASE("small pfaffians") {
  CHECK(pfaffian(SkewMatrix<Rational>()) == 1);
  CHECK(pfaffian(skew(labels({1, 2}), {7})) == 7);
  CHECK(pfaffian(skew(labels({1, 2, 3}), {1, 2, 3})) == 0);
  // a12 a34 - a13 a24 + a14 a23
  CHECK(pfaffian(skew(labels({1, 2, 3, 4}), {2, 3, 5, 7, 11, 13})) == 2 * 13 - 3 * 11 + 5 * 7);
  auto zero_pivot = skew(labels({1, 2, 3, 4, 5, 6}), {0, 0, 0, 0, 1, 2, 0, 0, 3, 0, 0, 4, 5, 6, 7});
  CHECK(pfaffian(zero_pivot) == pfaffian_oracle(zero_pivot));
}

TEST_CASE("pfaffian against the pairing oracle") {
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = uniform(rng, 0, 12);
    auto a = random_skew<Rational>(rng, n);
    const Rational pf = pfaffian(a);
    CHECK(pf == pfaffian_oracle(a));
    CHECK(pf * pf == determinant(a.as_matrix()));
    CHECK(pfaffian(anti_transpose(a)) == pf);
  }
  for (int t = 0; t < 30; ++t) {
    auto a = random_skew<Complex>(rng, uniform(rng, 0, 10));
    CHECK(std::abs(pfaffian(a) - pfaffian_oracle(a)) < 1e-9);
  }
  auto big = random_skew<Rational>(rng, 13);
  CHECK(kind_of([&] { pfaffian_oracle(big); }) == ErrorKind::kTooLarge);
}

TEST_CASE("sub-pfaffian states") {
  Rational a = 3, b = -5;
  auto n = skew(labels({1, 2, 3, 4}), {0, a, 0, 0, b, 0});
  CHECK(pfaffian(n) == -a * b);
  auto hat = spf(anti_transpose(n));
  CHECK(hat.kets() == labels({4, 3, 2, 1}));
  std::vector<Rational> expect(16, Rational(0));
  expect[0b0000] = 1;
  expect[0b1010] = b;
  expect[0b0101] = a;
  expect[0b1111] = -a * b;
  CHECK(std::vector<Rational>(hat.data().begin(), hat.data().end()) == expect);

  Rng rng(42);
  for (int t = 0; t < 20; ++t) {
    auto m = random_skew<Rational>(rng, uniform(rng, 0, 7));
    const std::size_t k = m.size();
    auto state = spf(m);
    auto costate = spf_dual(m);
    CHECK(reordered(spf(anti_transpose(m)), m.labels(), {}) == state);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
      std::vector<std::size_t> in, out;
      for (std::size_t i = 0; i < k; ++i) {
        ((x >> (k - 1 - i)) & 1 ? in : out).push_back(i);
      }
      CHECK(state.at(x, 0) == pfaffian_oracle(m.principal(in)));
      CHECK(costate.at(0, x) == pfaffian_oracle(m.principal(out)));
    }
  }
}

TEST_CASE("pfaffian circuit validation") {
  PfaffianCircuit<Rational> pc;
  pc.edge_count = 2;
  pc.gates = {pair_gate(PfKind::kState, 1, 2, 1), pair_gate(PfKind::kCostate, 1, 2, 1)};
  CHECK_NOTHROW(validate(pc));
  CHECK(eval_pfaffian_circuit(pc) == 2);
  CHECK(eval_pfaffian_oracle(pc) == 2);

  auto two_states = pc;
  two_states.gates.push_back(pair_gate(PfKind::kState, 1, 2, 1));
  CHECK(kind_of([&] { validate(two_states); }) == ErrorKind::kNotBipartite);

  auto open = pc;
  open.edge_count = 3;
  CHECK(kind_of([&] { validate(open); }) == ErrorKind::kEdgeMultiplicity);

  auto outside = pc;
  outside.gates[1].edges = {1, 5};
  CHECK(kind_of([&] { validate(outside); }) == ErrorKind::kInvalidArgument);

  auto short_edges = pc;
  short_edges.gates[1].edges = {1};
  CHECK(kind_of([&] { validate(short_edges); }) == ErrorKind::kSizeMismatch);
}

TEST_CASE("planar pfaffian circuits match the contraction") {
  Rng rng(43);
  for (int t = 0; t < 60; ++t) {
    auto pc = random_planar_pfaffian<Rational>(rng, static_cast<std::uint32_t>(uniform(rng, 1, 10)));
    REQUIRE(layout_is_noncrossing(pc));
    CHECK(eval_pfaffian_circuit(pc) == eval_pfaffian_oracle(pc));
  }
  for (int t = 0; t < 20; ++t) {
    auto pc = random_planar_pfaffian<Complex>(rng, static_cast<std::uint32_t>(uniform(rng, 1, 10)));
    CHECK(std::abs(eval_pfaffian_circuit(pc) - eval_pfaffian_oracle(pc)) < 1e-9);
  }
}

TEST_CASE("a separate component can be placed anywhere in the edge order") {
  Rng rng(44);
  for (int t = 0; t < 30; ++t) {
    auto a = random_planar_pfaffian<Rational>(rng, static_cast<std::uint32_t>(uniform(rng, 1, 6)));
    auto b = random_planar_pfaffian<Rational>(rng, static_cast<std::uint32_t>(uniform(rng, 1, 6)));
    const Rational expect = eval_pfaffian_circuit(a) * eval_pfaffian_circuit(b);
    for (std::uint32_t at = 0; at <= a.edge_count; ++at) {
      auto joined = insert_component(a, b, at);
      CHECK(eval_pfaffian_circuit(joined) == expect);
      CHECK(eval_pfaffian_oracle(joined) == expect);
    }
  }
}

TEST_CASE("interleaved blocks break the formula") {
  const Rational a = 2, b = 3, c = 5, d = 7;
  PfaffianCircuit<Rational> pc;
  pc.edge_count = 4;
  pc.gates = {pair_gate(PfKind::kState, 1, 3, a), pair_gate(PfKind::kState, 2, 4, b),
              pair_gate(PfKind::kCostate, 1, 2, c), pair_gate(PfKind::kCostate, 3, 4, d)};
  CHECK_FALSE(layout_is_noncrossing(pc));
  CHECK(eval_pfaffian_circuit(pc) == c * d - a * b);
  CHECK(eval_pfaffian_oracle(pc) == c * d + a * b);
}
