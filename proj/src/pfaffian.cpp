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

#include "detcirc/pfaffian.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "detcirc/error.hpp"

namespace detcirc {
namespace {

using Index = std::uint64_t;

template <typename S>
S small_pfaffian(const std::vector<S>& a, std::size_t n) {
  if (n == 0) return ScalarTraits<S>::one();
  if (n == 2) return a[1];
  // n == 4
  return a[0 * 4 + 1] * a[2 * 4 + 3] - a[0 * 4 + 2] * a[1 * 4 + 3] + a[0 * 4 + 3] * a[1 * 4 + 2];
}

template <typename S>
std::size_t choose_pivot(const std::vector<S>& a, std::size_t n, std::size_t k) {
  std::size_t best = n;
  double best_mag = 0.0;
  for (std::size_t j = k + 1; j < n; ++j) {
    const S& v = a[k * n + j];
    if (ScalarTraits<S>::is_zero(v)) continue;
    if constexpr (ScalarTraits<S>::kExact) return j;
    const double mag = ScalarTraits<S>::magnitude(v);
    if (best == n || mag > best_mag) {
      best = j;
      best_mag = mag;
    }
  }
  return best;
}

template <typename S>
void swap_lines(std::vector<S>& a, std::size_t n, std::size_t p, std::size_t q) {
  for (std::size_t c = 0; c < n; ++c) std::swap(a[p * n + c], a[q * n + c]);
  for (std::size_t r = 0; r < n; ++r) std::swap(a[r * n + p], a[r * n + q]);
}

template <typename S>
S eliminate(std::vector<S> a, std::size_t n) {
  if (n % 2) return ScalarTraits<S>::zero();
  if (n <= 4) return small_pfaffian(a, n);
  S pf = ScalarTraits<S>::one();
  for (std::size_t k = 0; k < n; k += 2) {
    const std::size_t p = choose_pivot(a, n, k);
    if (p == n) return ScalarTraits<S>::zero();
    if (p != k + 1) {
      swap_lines(a, n, k + 1, p);
      pf = -pf;
    }
    const S pivot = a[k * n + k + 1];
    pf *= pivot;
    // Schur complement of the leading 2x2 block.
    for (std::size_t i = k + 2; i < n; ++i) {
      const S u = a[k * n + i] / pivot, v = a[(k + 1) * n + i] / pivot;
      for (std::size_t j = i + 1; j < n; ++j) {
        S update = a[k * n + j] * v - u * a[(k + 1) * n + j];
        if (ScalarTraits<S>::is_zero(update)) continue;
        a[i * n + j] += update;
        a[j * n + i] = -a[i * n + j];
      }
    }
  }
  return pf;
}

void check_cap(std::size_t wires, std::size_t cap, const char* what) {
  if (wires > cap || wires >= 63) {
    throw Error(ErrorKind::kTooLarge, std::string(what) + " needs " + std::to_string(wires) +
                                          " wires, cap is " + std::to_string(cap));
  }
}

// data[I] = Pf(a_I), I in most-significant-first bit order.
template <typename S>
std::vector<S> sub_pfaffians(const SkewMatrix<S>& a) {
  const std::size_t n = a.size();
  std::vector<S> data(Index{1} << n, ScalarTraits<S>::zero());
  data[0] = ScalarTraits<S>::one();
  for (Index x = 1; x < data.size(); ++x) {
    if (std::popcount(x) % 2) continue;
    const int top = std::bit_width(x) - 1;
    const std::size_t first = n - 1 - static_cast<std::size_t>(top);
    const Index rest = x & ~(Index{1} << top);
    S acc = ScalarTraits<S>::zero();
    bool negative = false;  // partner at position q = 1 gets +
    for (int b = top - 1; b >= 0; --b) {
      if (!((rest >> b) & 1)) continue;
      const std::size_t other = n - 1 - static_cast<std::size_t>(b);
      const S& entry = a(first, other);
      if (!ScalarTraits<S>::is_zero(entry)) {
        const S term = entry * data[rest & ~(Index{1} << b)];
        if (negative) {
          acc -= term;
        } else {
          acc += term;
        }
      }
      negative = !negative;
    }
    data[x] = acc;
  }
  return data;
}

LabelList edge_labels(const std::vector<std::uint32_t>& edges) {
  LabelList out;
  for (auto e : edges) out.push_back(WireLabel{e});
  return out;
}

}  // namespace

template <typename S>
SkewMatrix<S>::SkewMatrix(LabelList labels, std::vector<S> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const std::size_t n = labels_.size();
  if (entries_.size() != n * n) {
    throw Error(ErrorKind::kSizeMismatch,
                std::to_string(entries_.size()) + " entries for a " + std::to_string(n) + "x" +
                    std::to_string(n) + " skew matrix");
  }
  LabelList sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::kDuplicateLabel, "skew matrix repeats a label");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!approx_equal(entries_[i * n + i], ScalarTraits<S>::zero())) {
      throw Error(ErrorKind::kNotSkew, "nonzero diagonal entry at " + std::to_string(i + 1));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!approx_equal(entries_[i * n + j], S(-entries_[j * n + i]))) {
        throw Error(ErrorKind::kNotSkew, "entries (" + std::to_string(i + 1) + "," +
                                             std::to_string(j + 1) + ") and (" +
                                             std::to_string(j + 1) + "," +
                                             std::to_string(i + 1) + ") are not opposite");
      }
    }
  }
}

template <typename S>
SkewMatrix<S> SkewMatrix<S>::principal(std::span<const std::size_t> index) const {
  LabelList l;
  std::vector<S> e;
  for (auto i : index) {
    l.push_back(labels_.at(i));
    for (auto j : index) e.push_back((*this)(i, j));
  }
  return SkewMatrix(std::move(l), std::move(e));
}

template <typename S>
LabeledMatrix<S> SkewMatrix<S>::as_matrix() const {
  return LabeledMatrix<S>(labels_, labels_, entries_);
}

template <typename S>
S pfaffian(const SkewMatrix<S>& a) {
  return eliminate(std::vector<S>(a.entries().begin(), a.entries().end()), a.size());
}

template <typename S>
S pfaffian_oracle(const SkewMatrix<S>& a) {
  const std::size_t n = a.size();
  if (n > kPairingOracleCap) {
    throw Error(ErrorKind::kTooLarge, "pairing oracle limited to " +
                                          std::to_string(kPairingOracleCap) + " lines");
  }
  if (n % 2) return ScalarTraits<S>::zero();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(n, false);
  S total = ScalarTraits<S>::zero();
  auto rec = [&](auto&& self) -> void {
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      std::size_t crossings = 0;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        for (std::size_t q = p + 1; q < pairs.size(); ++q) {
          auto [a1, b1] = pairs[p];
          auto [a2, b2] = pairs[q];
          if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1)) ++crossings;
        }
      }
      S term = ScalarTraits<S>::one();
      for (auto [i, j] : pairs) term *= a(i, j);
      if (crossings % 2) {
        total -= term;
      } else {
        total += term;
      }
      return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(first, j);
      self(self);
      pairs.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return total;
}

template <typename S>
SkewMatrix<S> anti_transpose(const SkewMatrix<S>& a) {
  const std::size_t n = a.size();
  LabelList l(a.labels().rbegin(), a.labels().rend());
  std::vector<S> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = a(n - 1 - j, n - 1 - i);
  }
  return SkewMatrix<S>(std::move(l), std::move(e));
}

template <typename S>
Tensor<S> spf(const SkewMatrix<S>& a, std::size_t cap) {
  check_cap(a.size(), cap, "sPf expansion");
  return Tensor<S>(a.labels(), {}, sub_pfaffians(a));
}

template <typename S>
Tensor<S> spf_dual(const SkewMatrix<S>& a, std::size_t cap) {
  check_cap(a.size(), cap, "sPf-dual expansion");
  auto sub = sub_pfaffians(a);
  const Index full = sub.size() - 1;
  std::vector<S> data(sub.size());
  for (Index x = 0; x < sub.size(); ++x) data[x] = sub[full ^ x];
  return Tensor<S>({}, a.labels(), std::move(data));
}

template <typename S>
void validate(const PfaffianCircuit<S>& pc) {
  std::vector<int> states(pc.edge_count + 1, 0), costates(pc.edge_count + 1, 0);
  for (std::size_t g = 0; g < pc.gates.size(); ++g) {
    const auto& gate = pc.gates[g];
    const std::string name = "pfgate " + std::to_string(g + 1);
    if (gate.edges.size() != gate.matrix.size()) {
      throw Error(ErrorKind::kSizeMismatch, name + " has " + std::to_string(gate.edges.size()) +
                                                " edges for a " +
                                                std::to_string(gate.matrix.size()) + "-line matrix");
    }
    for (auto e : gate.edges) {
      if (e == 0 || e > pc.edge_count) {
        throw Error(ErrorKind::kInvalidArgument,
                    name + " uses edge " + std::to_string(e) + " outside 1.." +
                        std::to_string(pc.edge_count));
      }
      auto& count = gate.kind == PfKind::kState ? states[e] : costates[e];
      if (++count > 1) {
        throw Error(ErrorKind::kNotBipartite,
                    "edge " + std::to_string(e) + " joins two " +
                        (gate.kind == PfKind::kState ? "state" : "costate") + " ends");
      }
    }
  }
  for (std::uint32_t e = 1; e <= pc.edge_count; ++e) {
    if (states[e] != 1 || costates[e] != 1) {
      throw Error(ErrorKind::kEdgeMultiplicity,
                  "edge " + std::to_string(e) + " has " + std::to_string(states[e]) +
                      " state and " + std::to_string(costates[e]) + " costate ends");
    }
  }
}

template <typename S>
S eval_pfaffian_circuit(const PfaffianCircuit<S>& pc) {
  validate(pc);
  const std::size_t n = pc.edge_count;
  std::vector<S> a(n * n, ScalarTraits<S>::zero());
  for (const auto& gate : pc.gates) {
    const bool costate = gate.kind == PfKind::kCostate;
    for (std::size_t p = 0; p < gate.edges.size(); ++p) {
      for (std::size_t q = 0; q < gate.edges.size(); ++q) {
        const std::size_t i = gate.edges[p] - 1, j = gate.edges[q] - 1;
        S v = gate.matrix(p, q);
        // (-1)^{i+j+1} with 1-based i, j has the same parity as 0-based.
        if (costate && (i + j) % 2 == 0) v = -v;
        a[i * n + j] += v;
      }
    }
  }
  return eliminate(std::move(a), n);
}

template <typename S>
S eval_pfaffian_oracle(const PfaffianCircuit<S>& pc, std::size_t cap) {
  validate(pc);
  check_cap(pc.edge_count, cap, "Pfaffian circuit contraction");
  Tensor<S> states, costates;
  for (const auto& gate : pc.gates) {
    if (gate.kind == PfKind::kState) {
      Tensor<S> t = spf(gate.matrix, cap);
      states = tensor_product(states, Tensor<S>(edge_labels(gate.edges), {},
                                                {t.data().begin(), t.data().end()}));
    } else {
      Tensor<S> t = spf_dual(gate.matrix, cap);
      costates = tensor_product(costates, Tensor<S>({}, edge_labels(gate.edges),
                                                    {t.data().begin(), t.data().end()}));
    }
  }
  return tensor_compose(costates, states).data()[0];
}

template <typename S>
bool layout_is_noncrossing(const PfaffianCircuit<S>& pc) {
  for (const auto& gate : pc.gates) {
    if (!std::is_sorted(gate.edges.begin(), gate.edges.end())) return false;
  }
  for (std::size_t g = 0; g < pc.gates.size(); ++g) {
    for (std::size_t h = g + 1; h < pc.gates.size(); ++h) {
      if (pc.gates[g].kind != pc.gates[h].kind) continue;
      std::vector<std::pair<std::uint32_t, int>> merged;
      for (auto e : pc.gates[g].edges) merged.emplace_back(e, 0);
      for (auto e : pc.gates[h].edges) merged.emplace_back(e, 1);
      std::sort(merged.begin(), merged.end());
      // An alternation g h g h along the order is a crossing.
      int runs = 0, last = -1;
      for (auto [e, who] : merged) {
        if (who != last) ++runs;
        last = who;
      }
      if (runs >= 4) return false;
    }
  }
  return true;
}

template <typename S>
std::size_t total_entries(const PfaffianCircuit<S>& pc) {
  std::size_t total = 0;
  for (const auto& gate : pc.gates) total += gate.matrix.size() * gate.matrix.size();
  return total;
}

#define DETCIRC_INSTANTIATE(S)                                          \
  template class SkewMatrix<S>;                                         \
  template S pfaffian(const SkewMatrix<S>&);                            \
  template S pfaffian_oracle(const SkewMatrix<S>&);                     \
  template SkewMatrix<S> anti_transpose(const SkewMatrix<S>&);          \
  template Tensor<S> spf(const SkewMatrix<S>&, std::size_t);            \
  template Tensor<S> spf_dual(const SkewMatrix<S>&, std::size_t);       \
  template void validate(const PfaffianCircuit<S>&);                    \
  template S eval_pfaffian_circuit(const PfaffianCircuit<S>&);          \
  template S eval_pfaffian_oracle(const PfaffianCircuit<S>&, std::size_t); \
  template bool layout_is_noncrossing(const PfaffianCircuit<S>&);       \
  template std::size_t total_entries(const PfaffianCircuit<S>&);

DETCIRC_INSTANTIATE(Rational)
DETCIRC_INSTANTIATE(Complex)

#undef DETCIRC_INSTANTIATE

}  // namespace detcirc
