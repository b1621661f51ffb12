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
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "detcirc/circuit.hpp"

namespace detcirc {

inline constexpr std::size_t kEnumerationEdgeCap = 20;

// Undirected multigraph on vertices 0..n-1. Each edge is stored as
// (tail, head), which fixes its orientation.
class Graph {
 public:
  Graph() = default;
  // Throws kInvalidArgument on out-of-range endpoints or self-loops.
  Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  // Flips each edge independently with probability 1/2.
  Graph reoriented(std::uint64_t seed) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// |E| x |V|, +1 at the tail and -1 at the head. Rows are labeled by edge
// index, columns by vertex index.
LabeledMatrix<Rational> incidence_matrix(const Graph& g);

// Edge nodes [1 -1], vertex nodes of all ones, reflected edge nodes [1; -1],
// closed into a loop.
Circuit<Rational> graph_to_circuit(const Graph& g);

// det(I + B B^T).
mpz_class count_rooted_forests(const Graph& g);

// Coefficients of det(xI + B^T B), ascending in x.
std::vector<mpz_class> forest_polynomial(const Graph& g);

// |cofactor| of B^T B at vertex 0; 0 for the empty graph.
mpz_class count_spanning_trees(const Graph& g);

// Determinant of B^T B with row and column i removed, for every i.
std::vector<mpz_class> laplacian_cofactors(const Graph& g);

struct RootedForest {
  std::vector<std::size_t> edges;
  std::vector<std::size_t> roots;
};

// Exhaustive over edge subsets; throw kTooLarge past kEnumerationEdgeCap.
std::vector<RootedForest> enumerate_forests(const Graph& g);
// histogram[k] = number of rooted spanning forests with k roots.
std::vector<std::uint64_t> forest_root_histogram(const Graph& g);
std::vector<std::vector<std::size_t>> enumerate_trees(const Graph& g);

}  // namespace detcirc
