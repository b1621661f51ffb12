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

#include "detcirc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "detcirc/error.hpp"

namespace detcirc {
namespace {

WireLabel label(std::size_t id) { return WireLabel{static_cast<std::uint32_t>(id)}; }

LabeledMatrix<Rational> laplacian(const Graph& g) {
  const LabeledMatrix<Rational> b = incidence_matrix(g);
  return compose(dagger(b), b);
}

mpz_class to_integer(const Rational& v) {
  if (v.get_den() != 1) throw Error(ErrorKind::kInvalidArgument, "expected an integer");
  return v.get_num();
}

mpz_class cofactor(const LabeledMatrix<Rational>& l, std::size_t skip) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < l.row_count(); ++i) {
    if (i != skip) keep.push_back(i);
  }
  return to_integer(determinant(l.submatrix(keep, keep)));
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

void check_enumerable(const Graph& g) {
  if (g.edge_count() > kEnumerationEdgeCap) {
    throw Error(ErrorKind::kTooLarge, "enumeration limited to " +
                                          std::to_string(kEnumerationEdgeCap) + " edges");
  }
}

// Calls visit(edges, components) for every acyclic edge subset.
template <typename Visit>
void for_each_forest(const Graph& g, Visit&& visit) {
  check_enumerable(g);
  const std::size_t m = g.edge_count(), n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    DisjointSets sets(n);
    std::vector<std::size_t> chosen;
    bool acyclic = true;
    for (std::size_t e = 0; e < m && acyclic; ++e) {
      if (!((mask >> e) & 1)) continue;
      acyclic = sets.join(g.edges()[e].first, g.edges()[e].second);
      chosen.push_back(e);
    }
    if (!acyclic) continue;
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> slot(n, SIZE_MAX);
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t r = sets.find(v);
      if (slot[r] == SIZE_MAX) {
        slot[r] = components.size();
        components.emplace_back();
      }
      components[slot[r]].push_back(v);
    }
    visit(chosen, components);
  }
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    if (u >= vertex_count_ || v >= vertex_count_) {
      throw Error(ErrorKind::kInvalidArgument,
                  "edge " + std::to_string(e + 1) + " has an endpoint outside 1.." +
                      std::to_string(vertex_count_));
    }
    if (u == v) throw Error(ErrorKind::kInvalidArgument, "edge " + std::to_string(e + 1) + " is a self-loop");
  }
}

Graph Graph::reoriented(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(0.5);
  auto edges = edges_;
  for (auto& e : edges) {
    if (flip(rng)) std::swap(e.first, e.second);
  }
  return Graph(vertex_count_, std::move(edges));
}

LabeledMatrix<Rational> incidence_matrix(const Graph& g) {
  const std::size_t m = g.edge_count(), n = g.vertex_count();
  LabelList rows, cols;
  for (std::size_t e = 0; e < m; ++e) rows.push_back(label(e));
  for (std::size_t v = 0; v < n; ++v) cols.push_back(label(v));
  std::vector<Rational> e(m * n, Rational(0));
  for (std::size_t k = 0; k < m; ++k) {
    e[k * n + g.edges()[k].first] = 1;
    e[k * n + g.edges()[k].second] = -1;
  }
  return LabeledMatrix<Rational>(std::move(rows), std::move(cols), std::move(e));
}

Circuit<Rational> graph_to_circuit(const Graph& g) {
  const std::size_t m = g.edge_count(), n = g.vertex_count();
  // Endpoint (e, side) carries label 2e + side on the edge-node side.
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < m; ++e) {
    incident[g.edges()[e].first].push_back(2 * e);
    incident[g.edges()[e].second].push_back(2 * e + 1);
  }
  std::vector<std::size_t> slot(2 * m);
  std::size_t next = 0;
  for (const auto& ends : incident) {
    for (auto end : ends) slot[end] = next++;
  }

  Circuit<Rational> c;
  c.stacks.resize(3);
  c.wirings.resize(3);
  for (std::size_t e = 0; e < m; ++e) {
    c.stacks[0].gates.push_back({LabeledMatrix<Rational>({label(e)}, {label(2 * e), label(2 * e + 1)},
                                                         {Rational(1), Rational(-1)})});
    c.stacks[2].gates.push_back({LabeledMatrix<Rational>({label(2 * e), label(2 * e + 1)}, {label(e)},
                                                         {Rational(1), Rational(-1)})});
    c.wirings[2].emplace_back(label(e), label(e));
  }
  for (const auto& ends : incident) {
    if (ends.empty()) continue;
    const std::size_t d = ends.size();
    LabelList slots;
    for (auto end : ends) {
      slots.push_back(label(slot[end]));
      c.wirings[0].emplace_back(label(end), label(slot[end]));
      c.wirings[1].emplace_back(label(slot[end]), label(end));
    }
    c.stacks[1].gates.push_back({LabeledMatrix<Rational>(slots, slots, std::vector<Rational>(d * d, Rational(1)))});
  }
  return c;
}

mpz_class count_rooted_forests(const Graph& g) {
  const LabeledMatrix<Rational> b = incidence_matrix(g);
  return to_integer(principal_minor_sum(compose(b, dagger(b))));
}

std::vector<mpz_class> forest_polynomial(const Graph& g) {
  const std::vector<Rational> p = characteristic_polynomial(laplacian(g));
  const std::size_t n = p.size() - 1;
  std::vector<mpz_class> out;
  // det(xI + L) = (-1)^n det(-xI - L).
  for (std::size_t k = 0; k <= n; ++k) {
    const mpz_class v = to_integer(p[k]);
    out.push_back((n - k) % 2 ? mpz_class(-v) : v);
  }
  return out;
}

mpz_class count_spanning_trees(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  return abs(cofactor(laplacian(g), 0));
}

std::vector<mpz_class> laplacian_cofactors(const Graph& g) {
  const LabeledMatrix<Rational> l = laplacian(g);
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) out.push_back(cofactor(l, i));
  return out;
}

std::vector<RootedForest> enumerate_forests(const Graph& g) {
  std::vector<RootedForest> out;
  for_each_forest(g, [&](const std::vector<std::size_t>& edges,
                         const std::vector<std::vector<std::size_t>>& components) {
    std::vector<std::size_t> pick(components.size(), 0);
    while (true) {
      RootedForest f{edges, {}};
      for (std::size_t k = 0; k < components.size(); ++k) f.roots.push_back(components[k][pick[k]]);
      out.push_back(std::move(f));
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == components[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  });
  return out;
}

std::vector<std::uint64_t> forest_root_histogram(const Graph& g) {
  std::vector<std::uint64_t> hist(g.vertex_count() + 1, 0);
  for_each_forest(g, [&](const std::vector<std::size_t>&,
                         const std::vector<std::vector<std::size_t>>& components) {
    std::uint64_t choices = 1;
    for (const auto& comp : components) choices *= comp.size();
    hist[components.size()] += choices;
  });
  return hist;
}

std::vector<std::vector<std::size_t>> enumerate_trees(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  if (g.vertex_count() == 0) return out;
  for_each_forest(g, [&](const std::vector<std::size_t>& edges,
                         const std::vector<std::vector<std::size_t>>& components) {
    if (components.size() == 1) out.push_back(edges);
  });
  return out;
}

}  // namespace detcirc
