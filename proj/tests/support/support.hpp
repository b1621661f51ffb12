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

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "detcirc/circuit.hpp"
#include "detcirc/graph.hpp"
#include "detcirc/pfaffian.hpp"

namespace detcirc::testing {

using Rng = std::mt19937_64;

// p/q in [-5, 5] with q in {1, 2, 3}; zero about one time in five.
Rational random_rational(Rng& rng);
// Real and imaginary parts in [-1, 1] on a 1/8 grid.
Complex random_complex(Rng& rng);

template <typename S>
S random_scalar(Rng& rng) {
  if constexpr (std::is_same_v<S, Rational>) {
    return random_rational(rng);
  } else {
    return random_complex(rng);
  }
}

// Nonzero integer in [-9, 9].
Rational random_nonzero(Rng& rng);

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

// `count` distinct labels drawn from 0..99, in random order.
LabelList random_labels(Rng& rng, std::size_t count);

template <typename S>
LabeledMatrix<S> random_matrix(Rng& rng, LabelList rows, LabelList cols) {
  std::vector<S> e;
  for (std::size_t k = 0; k < rows.size() * cols.size(); ++k) e.push_back(random_scalar<S>(rng));
  return LabeledMatrix<S>(std::move(rows), std::move(cols), std::move(e));
}

template <typename S>
LabeledMatrix<S> random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  return random_matrix<S>(rng, random_labels(rng, r), random_labels(rng, c));
}

template <typename S>
SkewMatrix<S> random_skew(Rng& rng, std::size_t n) {
  std::vector<S> e(n * n, ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      e[i * n + j] = random_scalar<S>(rng);
      e[j * n + i] = -e[i * n + j];
    }
  }
  return SkewMatrix<S>(random_labels(rng, n), std::move(e));
}

struct CircuitShape {
  std::size_t max_depth = 4;
  std::size_t max_width = 4;
};

// Random stacks with random gate splits (empty sides allowed), shuffled
// labels and random bijective wirings.
template <typename S>
Circuit<S> random_circuit(Rng& rng, CircuitShape shape = {});

// Random non-crossing partitions of 1..edges for states and for costates,
// each block carrying a random skew matrix in edge order.
template <typename S>
PfaffianCircuit<S> random_planar_pfaffian(Rng& rng, std::uint32_t edges);

// Places b's edges as one run after position `at` of a's edge order.
template <typename S>
PfaffianCircuit<S> insert_component(const PfaffianCircuit<S>& a, const PfaffianCircuit<S>& b,
                                    std::uint32_t at);

// Random multigraph; edges never loop.
Graph random_graph(Rng& rng, std::size_t vertices, std::size_t edges);

// Every labeled simple graph on n vertices that is connected.
std::vector<Graph> connected_graphs(std::size_t n);

// Oracles independent of the library's elimination routines.

// Laplace expansion over column subsets.
template <typename S>
S cofactor_determinant(const std::vector<S>& a, std::size_t n);

// Sum of det(m_JJ) over all 2^n subsets J.
template <typename S>
S explicit_principal_minor_sum(const LabeledMatrix<S>& m);

// Value of det(m_{I,J}) with positions I, J.
template <typename S>
S minor_of(const LabeledMatrix<S>& m, const std::vector<std::size_t>& rows,
           const std::vector<std::size_t>& cols);

}  // namespace detcirc::testing
