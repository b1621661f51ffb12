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

#include "support.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace detcirc::testing {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Rational random_rational(Rng& rng) {
  if (uniform(rng, 0, 4) == 0) return Rational(0);
  const long q = static_cast<long>(uniform(rng, 1, 3));
  const long p = std::uniform_int_distribution<long>(-5 * q, 5 * q)(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Complex random_complex(Rng& rng) {
  auto part = [&] { return static_cast<double>(std::uniform_int_distribution<int>(-8, 8)(rng)) / 8.0; };
  const double re = part();
  return Complex(re, part());
}

Rational random_nonzero(Rng& rng) {
  long v = 0;
  while (v == 0) v = std::uniform_int_distribution<long>(-9, 9)(rng);
  return Rational(v);
}

LabelList random_labels(Rng& rng, std::size_t count) {
  std::vector<std::uint32_t> pool(100);
  std::iota(pool.begin(), pool.end(), 0u);
  std::shuffle(pool.begin(), pool.end(), rng);
  LabelList out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(WireLabel{pool[i]});
  return out;
}

namespace {

// Splits `total` into `parts` nonnegative counts.
std::vector<std::size_t> composition(Rng& rng, std::size_t total, std::size_t parts) {
  std::vector<std::size_t> cuts{0, total};
  for (std::size_t i = 0; i + 1 < parts; ++i) cuts.push_back(uniform(rng, 0, total));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back(cuts[i + 1] - cuts[i]);
  return out;
}

void noncrossing_blocks(Rng& rng, const std::vector<std::uint32_t>& run,
                        std::vector<std::vector<std::uint32_t>>& blocks) {
  if (run.empty()) return;
  std::vector<std::size_t> picked{0};
  for (std::size_t i = 1; i < run.size(); ++i) {
    if (uniform(rng, 0, 2) == 0) picked.push_back(i);
  }
  std::vector<std::uint32_t> block;
  for (auto i : picked) block.push_back(run[i]);
  blocks.push_back(block);
  picked.push_back(run.size());
  for (std::size_t k = 0; k + 1 < picked.size(); ++k) {
    std::vector<std::uint32_t> gap(run.begin() + static_cast<std::ptrdiff_t>(picked[k] + 1),
                                   run.begin() + static_cast<std::ptrdiff_t>(picked[k + 1]));
    noncrossing_blocks(rng, gap, blocks);
  }
}

}  // namespace

template <typename S>
Circuit<S> random_circuit(Rng& rng, CircuitShape shape) {
  const std::size_t m = uniform(rng, 1, shape.max_depth);
  std::vector<std::size_t> width(m);
  for (auto& w : width) w = uniform(rng, 0, shape.max_width);
  Circuit<S> c;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t in = width[(k + m - 1) % m], out = width[k];
    const std::size_t gates = uniform(rng, 1, std::max<std::size_t>(1, in + out));
    const auto rows = composition(rng, in, gates), cols = composition(rng, out, gates);
    const LabelList row_labels = random_labels(rng, in), col_labels = random_labels(rng, out);
    Stack<S> stack;
    std::size_t ri = 0, ci = 0;
    for (std::size_t g = 0; g < gates; ++g) {
      LabelList r(row_labels.begin() + static_cast<std::ptrdiff_t>(ri),
                  row_labels.begin() + static_cast<std::ptrdiff_t>(ri + rows[g]));
      LabelList cc(col_labels.begin() + static_cast<std::ptrdiff_t>(ci),
                   col_labels.begin() + static_cast<std::ptrdiff_t>(ci + cols[g]));
      ri += rows[g];
      ci += cols[g];
      stack.gates.push_back({random_matrix<S>(rng, std::move(r), std::move(cc))});
    }
    c.stacks.push_back(std::move(stack));
  }
  for (std::size_t k = 0; k < m; ++k) {
    LabelList to = c.stacks[(k + 1) % m].rows();
    std::shuffle(to.begin(), to.end(), rng);
    c.wirings.push_back(positional_wiring(c.stacks[k].cols(), to));
  }
  return c;
}

template <typename S>
PfaffianCircuit<S> random_planar_pfaffian(Rng& rng, std::uint32_t edges) {
  PfaffianCircuit<S> pc;
  pc.edge_count = edges;
  std::vector<std::uint32_t> all(edges);
  std::iota(all.begin(), all.end(), 1u);
  for (PfKind kind : {PfKind::kState, PfKind::kCostate}) {
    std::vector<std::vector<std::uint32_t>> blocks;
    noncrossing_blocks(rng, all, blocks);
    for (auto& block : blocks) {
      std::sort(block.begin(), block.end());
      pc.gates.push_back({random_skew<S>(rng, block.size()), kind, block});
    }
  }
  return pc;
}

template <typename S>
PfaffianCircuit<S> insert_component(const PfaffianCircuit<S>& a, const PfaffianCircuit<S>& b,
                                    std::uint32_t at) {
  PfaffianCircuit<S> out;
  out.edge_count = a.edge_count + b.edge_count;
  for (auto g : a.gates) {
    for (auto& e : g.edges) {
      if (e > at) e += b.edge_count;
    }
    out.gates.push_back(std::move(g));
  }
  for (auto g : b.gates) {
    for (auto& e : g.edges) e += at;
    out.gates.push_back(std::move(g));
  }
  return out;
}

Graph random_graph(Rng& rng, std::size_t vertices, std::size_t edges) {
  std::vector<std::pair<std::size_t, std::size_t>> list;
  for (std::size_t k = 0; k < edges && vertices >= 2; ++k) {
    const std::size_t u = uniform(rng, 0, vertices - 1);
    std::size_t v = uniform(rng, 0, vertices - 2);
    if (v >= u) ++v;
    list.emplace_back(u, v);
  }
  return Graph(vertices, std::move(list));
}

std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t components = n;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!((mask >> k) & 1)) continue;
      edges.push_back(pairs[k]);
      const std::size_t a = find(pairs[k].first), b = find(pairs[k].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1) out.emplace_back(n, std::move(edges));
  }
  return out;
}

template <typename S>
S cofactor_determinant(const std::vector<S>& a, std::size_t n) {
  // best[mask]: determinant of rows 0..|mask|-1 against the columns in mask.
  std::vector<S> best(std::size_t{1} << n, ScalarTraits<S>::zero());
  best[0] = ScalarTraits<S>::one();
  for (std::uint64_t mask = 1; mask < best.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    S acc = ScalarTraits<S>::zero();
    std::size_t above = 0;
    for (std::size_t j = n; j-- > 0;) {
      if (!((mask >> j) & 1)) continue;
      const S term = a[row * n + j] * best[mask & ~(std::uint64_t{1} << j)];
      if (above % 2) {
        acc -= term;
      } else {
        acc += term;
      }
      ++above;
    }
    best[mask] = acc;
  }
  return best.back();
}

template <typename S>
S minor_of(const LabeledMatrix<S>& m, const std::vector<std::size_t>& rows,
           const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) return ScalarTraits<S>::zero();
  std::vector<S> e;
  for (auto i : rows) {
    for (auto j : cols) e.push_back(m(i, j));
  }
  return cofactor_determinant(e, rows.size());
}

template <typename S>
S explicit_principal_minor_sum(const LabeledMatrix<S>& m) {
  const std::size_t n = m.row_count();
  const LabeledMatrix<S> aligned = m.with_col_order(m.rows());
  S total = ScalarTraits<S>::zero();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1) pick.push_back(i);
    }
    total += minor_of(aligned, pick, pick);
  }
  return total;
}

#define DETCIRC_INSTANTIATE(S)                                                              \
  template Circuit<S> random_circuit(Rng&, CircuitShape);                                   \
  template PfaffianCircuit<S> random_planar_pfaffian(Rng&, std::uint32_t);                  \
  template PfaffianCircuit<S> insert_component(const PfaffianCircuit<S>&,                   \
                                               const PfaffianCircuit<S>&, std::uint32_t);   \
  template S cofactor_determinant(const std::vector<S>&, std::size_t);                      \
  template S minor_of(const LabeledMatrix<S>&, const std::vector<std::size_t>&,             \
                      const std::vector<std::size_t>&);                                     \
  template S explicit_principal_minor_sum(const LabeledMatrix<S>&);

DETCIRC_INSTANTIATE(Rational)
DETCIRC_INSTANTIATE(Complex)

#undef DETCIRC_INSTANTIATE

}  // namespace detcirc::testing
