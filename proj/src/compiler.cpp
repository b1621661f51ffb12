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

#include "detcirc/compiler.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "detcirc/error.hpp"

namespace detcirc {
namespace {

template <typename S>
LabeledMatrix<S> positional(const LabeledMatrix<S>& m) {
  const std::size_t r = m.row_count(), c = m.col_count();
  LabelList rows, cols;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(WireLabel{static_cast<std::uint32_t>(i)});
  for (std::size_t j = 0; j < c; ++j) cols.push_back(WireLabel{static_cast<std::uint32_t>(r + j)});
  return m.relabeled(std::move(rows), std::move(cols));
}

template <typename S>
SkewMatrix<S> cap_matrix() {
  return SkewMatrix<S>(labels({0, 1}), {ScalarTraits<S>::zero(), ScalarTraits<S>::one(),
                                        -ScalarTraits<S>::one(), ScalarTraits<S>::zero()});
}

template <typename S>
SkewMatrix<S> zero_state_matrix() {
  return SkewMatrix<S>(labels({0}), {ScalarTraits<S>::zero()});
}

enum class Role { kIn, kPadRow, kY, kZero, kCol };

struct Token {
  Role role;
  std::size_t element, gate, index;
};

using TokenKey = std::tuple<Role, std::size_t, std::size_t, std::size_t>;

struct Part {
  std::size_t rows, cols, size;
};

}  // namespace

template <typename S>
LabeledMatrix<S> reflect(const LabeledMatrix<S>& m) {
  LabelList reversed(m.cols().rbegin(), m.cols().rend());
  return m.with_col_order(reversed);
}

template <typename S>
SkewMatrix<S> skew_embed(const LabeledMatrix<S>& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::kNotSquare, "skew embedding of a " + std::to_string(m.row_count()) +
                                           "x" + std::to_string(m.col_count()) + " matrix");
  }
  const std::size_t n = m.row_count(), size = 2 * n;
  const LabeledMatrix<S> r = reflect(m);
  LabelList l = m.rows();
  l.insert(l.end(), r.cols().begin(), r.cols().end());
  std::vector<S> e(size * size, ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      e[i * size + n + j] = r(i, j);
      e[(n + j) * size + i] = -r(i, j);
    }
  }
  return SkewMatrix<S>(std::move(l), std::move(e));
}

template <typename S>
PaddedMatrix<S> pad_to_square(const LabeledMatrix<S>& m) {
  const std::size_t r = m.row_count(), c = m.col_count();
  if (r == c) return {m, {}, {}};
  std::uint32_t fresh = 0;
  for (const LabelList* list : {&m.rows(), &m.cols()}) {
    for (auto l : *list) fresh = std::max(fresh, l.id + 1);
  }
  const std::size_t n = std::max(r, c);
  PaddedMatrix<S> out;
  LabelList rows = m.rows(), cols = m.cols();
  for (std::size_t k = 0; k < n - r; ++k) out.padded_rows.push_back(WireLabel{fresh++});
  for (std::size_t k = 0; k < n - c; ++k) out.padded_cols.push_back(WireLabel{fresh++});
  rows.insert(rows.end(), out.padded_rows.begin(), out.padded_rows.end());
  cols.insert(cols.end(), out.padded_cols.begin(), out.padded_cols.end());
  std::vector<S> e(n * n, ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) e[i * n + j] = m(i, j);
  }
  out.matrix = LabeledMatrix<S>(std::move(rows), std::move(cols), std::move(e));
  return out;
}

template <typename S>
Tensor<S> gate_gadget_tensor(const LabeledMatrix<S>& m) {
  const std::size_t r = m.row_count(), c = m.col_count();
  const PaddedMatrix<S> padded = pad_to_square(m);
  const std::size_t n = padded.matrix.row_count();
  const auto id = [](std::size_t v) { return WireLabel{static_cast<std::uint32_t>(v)}; };

  // Rows 0..n-1, columns n..2n-1, outputs 2n..3n-1.
  const LabeledMatrix<S> gate = positional(padded.matrix);
  const Tensor<S> state = spf(skew_embed(gate));
  LabelList rows(gate.rows()), tilde, outputs;
  for (std::size_t j = n; j-- > 0;) tilde.push_back(id(n + j));
  for (std::size_t j = n; j-- > 0;) outputs.push_back(id(2 * n + j));
  LabeledMatrix<S> ident = LabeledMatrix<S>::identity(tilde).relabeled(tilde, outputs);
  const Tensor<S> cap = spf_dual(skew_embed(ident));

  // Bend the column wires: the state's trailing kets become bras and the
  // cap's leading bras become kets, keeping the bit layout.
  const Tensor<S> bent_state(rows, tilde, {state.data().begin(), state.data().end()});
  LabelList cap_out(cap.bras().begin() + static_cast<std::ptrdiff_t>(n), cap.bras().end());
  const Tensor<S> bent_cap(tilde, cap_out, {cap.data().begin(), cap.data().end()});
  const Tensor<S> full = tensor_compose(bent_state, bent_cap);

  std::vector<S> data;
  data.reserve(std::size_t{1} << (r + c));
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << r); ++i) {
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << c); ++j) {
      data.push_back(full.at(i << (n - r), j << (n - c)));
    }
  }
  return Tensor<S>(m.rows(), m.cols(), std::move(data));
}

template <typename S>
CompiledCircuit<S> compile(const Circuit<S>& c) {
  validate(c);
  const std::size_t m = c.stacks.size();

  // Elements in loop order: each stack, then its wiring when it permutes.
  std::vector<std::vector<LabeledMatrix<S>>> elements;
  std::size_t source_size = 0;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<LabeledMatrix<S>> gates;
    for (const auto& g : c.stacks[k].gates) {
      const std::size_t r = g.matrix.row_count(), cols = g.matrix.col_count();
      source_size += r * cols + r + cols;
      if (g.matrix.row_count() + g.matrix.col_count() > 0) gates.push_back(g.matrix);
    }
    elements.push_back(std::move(gates));
    const LabelList from = c.stacks[k].cols(), to = c.stacks[(k + 1) % m].rows();
    if (!is_positional(c.wirings[k], from, to)) {
      elements.push_back({permutation_matrix<S>(from, to, c.wirings[k])});
    }
  }
  const std::size_t count = elements.size();
  std::vector<std::vector<Part>> parts(count);
  for (std::size_t e = 0; e < count; ++e) {
    for (const auto& g : elements[e]) {
      parts[e].push_back({g.row_count(), g.col_count(), std::max(g.row_count(), g.col_count())});
    }
  }

  std::vector<Token> tokens;
  auto emit = [&](Role role, std::size_t e, std::size_t g, std::size_t i) {
    tokens.push_back({role, e, g, i});
  };
  for (std::size_t e = 0; e < count; ++e) {
    const std::size_t prev = (e + count - 1) % count;
    // Closures for the previous element's padded columns follow the input
    // that receives that gate's last real output.
    std::multimap<std::size_t, std::size_t> zeros_after;
    std::size_t boundary = 0;
    for (std::size_t h = 0; h < parts[prev].size(); ++h) {
      boundary += parts[prev][h].cols;
      if (parts[prev][h].size > parts[prev][h].cols) zeros_after.emplace(boundary, h);
    }
    auto emit_zeros = [&](std::size_t position) {
      auto [lo, hi] = zeros_after.equal_range(position);
      for (auto it = lo; it != hi; ++it) {
        const Part& p = parts[prev][it->second];
        for (std::size_t j = p.cols; j < p.size; ++j) emit(Role::kZero, prev, it->second, j);
      }
    };
    std::size_t received = 0;
    emit_zeros(0);
    for (std::size_t g = 0; g < parts[e].size(); ++g) {
      const Part& p = parts[e][g];
      for (std::size_t i = 0; i < p.rows; ++i) {
        emit(Role::kIn, e, g, i);
        emit_zeros(++received);
      }
      for (std::size_t z = p.rows; z < p.size; ++z) {
        emit(Role::kPadRow, e, g, z);
        emit(Role::kY, e, g, z);
      }
    }
    for (std::size_t g = parts[e].size(); g-- > 0;) {
      for (std::size_t j = parts[e][g].size; j-- > 0;) emit(Role::kCol, e, g, j);
    }
  }

  std::map<TokenKey, std::uint32_t> edge;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const Token& k = tokens[t];
    edge[{k.role, k.element, k.gate, k.index}] = static_cast<std::uint32_t>(t + 1);
  }
  auto at = [&](Role role, std::size_t e, std::size_t g, std::size_t i) {
    return edge.at({role, e, g, i});
  };

  CompiledCircuit<S> out;
  out.source = c;
  out.target.edge_count = static_cast<std::uint32_t>(tokens.size());
  auto add_cap = [&](std::uint32_t a, std::uint32_t b) {
    out.target.gates.push_back({cap_matrix<S>(), PfKind::kCostate, {std::min(a, b), std::max(a, b)}});
    ++out.gadget_count;
  };

  for (std::size_t e = 0; e < count; ++e) {
    const std::size_t next = (e + 1) % count;
    // Input position -> (gate, row) of the next element.
    std::vector<std::pair<std::size_t, std::size_t>> inputs;
    for (std::size_t g = 0; g < parts[next].size(); ++g) {
      for (std::size_t i = 0; i < parts[next][g].rows; ++i) inputs.emplace_back(g, i);
    }
    std::size_t sent = 0;
    for (std::size_t g = 0; g < parts[e].size(); ++g) {
      const Part& p = parts[e][g];
      std::vector<std::uint32_t> edges;
      for (std::size_t i = 0; i < p.size; ++i) edges.push_back(at(i < p.rows ? Role::kIn : Role::kPadRow, e, g, i));
      for (std::size_t j = p.size; j-- > 0;) edges.push_back(at(Role::kCol, e, g, j));
      const LabeledMatrix<S> square = positional(pad_to_square(elements[e][g]).matrix);
      out.target.gates.push_back({skew_embed(square), PfKind::kState, std::move(edges)});

      for (std::size_t z = p.rows; z < p.size; ++z) {
        out.target.gates.push_back({zero_state_matrix<S>(), PfKind::kState, {at(Role::kY, e, g, z)}});
        ++out.gadget_count;
        add_cap(at(Role::kPadRow, e, g, z), at(Role::kY, e, g, z));
      }
      for (std::size_t j = 0; j < p.size; ++j) {
        std::uint32_t partner;
        if (j < p.cols) {
          auto [ng, ni] = inputs.at(sent++);
          partner = at(Role::kIn, next, ng, ni);
        } else {
          partner = at(Role::kZero, e, g, j);
          out.target.gates.push_back({zero_state_matrix<S>(), PfKind::kState, {partner}});
          ++out.gadget_count;
        }
        add_cap(at(Role::kCol, e, g, j), partner);
      }
    }
  }

  out.size_ratio = Rational(static_cast<unsigned long>(total_entries(out.target)),
                            static_cast<unsigned long>(std::max<std::size_t>(1, source_size)));
  out.size_ratio.canonicalize();
  return out;
}

#define DETCIRC_INSTANTIATE(S)                                          \
  template LabeledMatrix<S> reflect(const LabeledMatrix<S>&);           \
  template SkewMatrix<S> skew_embed(const LabeledMatrix<S>&);           \
  template PaddedMatrix<S> pad_to_square(const LabeledMatrix<S>&);      \
  template Tensor<S> gate_gadget_tensor(const LabeledMatrix<S>&);       \
  template CompiledCircuit<S> compile(const Circuit<S>&);

DETCIRC_INSTANTIATE(Rational)
DETCIRC_INSTANTIATE(Complex)

#undef DETCIRC_INSTANTIATE

}  // namespace detcirc
