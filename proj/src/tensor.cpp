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

#include "detcirc/tensor.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "detcirc/error.hpp"

namespace detcirc {
namespace {

using Index = std::uint64_t;

bool same_set(LabelList a, LabelList b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool overlaps(LabelList a, LabelList b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  LabelList common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return !common.empty();
}

void check_cap(std::size_t wires, std::size_t cap, const char* what) {
  if (wires > cap || wires >= 63) {
    throw Error(ErrorKind::kTooLarge, std::string(what) + " needs " + std::to_string(wires) +
                                          " wires, cap is " + std::to_string(cap));
  }
}

// Bit of list position p in a list of length n.
Index bit_of(std::size_t p, std::size_t n) { return Index{1} << (n - 1 - p); }

std::vector<std::size_t> positions_in(const LabelList& from, const LabelList& order) {
  std::map<WireLabel, std::size_t> index;
  for (std::size_t i = 0; i < from.size(); ++i) index[from[i]] = i;
  std::vector<std::size_t> out;
  for (auto l : order) out.push_back(index.at(l));
  return out;
}

}  // namespace

template <typename S>
Tensor<S>::Tensor() : data_{ScalarTraits<S>::one()} {}

template <typename S>
Tensor<S>::Tensor(LabelList kets, LabelList bras, std::vector<S> data)
    : kets_(std::move(kets)), bras_(std::move(bras)), data_(std::move(data)) {
  const std::size_t wires = kets_.size() + bras_.size();
  if (wires >= 63 || data_.size() != (std::size_t{1} << wires)) {
    throw Error(ErrorKind::kSizeMismatch, std::to_string(data_.size()) + " coefficients for " +
                                              std::to_string(wires) + " wires");
  }
  for (const LabelList* list : {&kets_, &bras_}) {
    LabelList sorted = *list;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::kDuplicateLabel, "tensor wire listed twice");
    }
  }
}

template <typename S>
Tensor<S> Tensor<S>::scalar(const S& value) {
  return Tensor({}, {}, {value});
}

template <typename S>
bool approx_equal(const Tensor<S>& a, const Tensor<S>& b) {
  if (a.kets() != b.kets() || a.bras() != b.bras()) return false;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    if (!approx_equal(a.data()[i], b.data()[i])) return false;
  }
  return true;
}

template <typename S>
Tensor<S> sdet_expand(const LabeledMatrix<S>& m, std::size_t cap) {
  const std::size_t r = m.row_count(), c = m.col_count();
  check_cap(r + c, cap, "sDet expansion");
  const Index total = Index{1} << (r + c);
  const Index bra_mask = (Index{1} << c) - 1;
  std::vector<S> data(total, ScalarTraits<S>::zero());
  data[0] = ScalarTraits<S>::one();
  // Removing a wire lowers the index, so every smaller minor is ready when
  // needed. Expand along the first selected row.
  for (Index x = 1; x < total; ++x) {
    const Index ket = x >> c, bra = x & bra_mask;
    if (std::popcount(ket) != std::popcount(bra)) continue;
    const int top = std::bit_width(ket) - 1;
    const std::size_t row = r - 1 - static_cast<std::size_t>(top);
    const Index rest_ket = ket & ~(Index{1} << top);
    S acc = ScalarTraits<S>::zero();
    bool negative = false;
    for (int b = static_cast<int>(c) - 1; b >= 0; --b) {
      if (!((bra >> b) & 1)) continue;
      const std::size_t col = c - 1 - static_cast<std::size_t>(b);
      const S& entry = m(row, col);
      if (!ScalarTraits<S>::is_zero(entry)) {
        const S term = entry * data[(rest_ket << c) | (bra & ~(Index{1} << b))];
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
  return Tensor<S>(m.rows(), m.cols(), std::move(data));
}

template <typename S>
Tensor<S> reordered(const Tensor<S>& t, const LabelList& kets, const LabelList& bras) {
  if (kets.size() != t.kets().size() || !same_set(kets, t.kets()) ||
      bras.size() != t.bras().size() || !same_set(bras, t.bras())) {
    throw Error(ErrorKind::kLabelMismatch, "reordering must permute the existing wires");
  }
  if (kets == t.kets() && bras == t.bras()) return t;
  const std::size_t nk = kets.size(), nb = bras.size(), n = nk + nb;
  // old_bit[q] is the old index bit feeding new index bit for position q.
  std::vector<Index> old_bit(n), new_bit(n);
  auto ket_pos = positions_in(t.kets(), kets);
  auto bra_pos = positions_in(t.bras(), bras);
  for (std::size_t q = 0; q < nk; ++q) {
    old_bit[q] = bit_of(ket_pos[q], nk) << nb;
    new_bit[q] = bit_of(q, nk) << nb;
  }
  for (std::size_t q = 0; q < nb; ++q) {
    old_bit[nk + q] = bit_of(bra_pos[q], nb);
    new_bit[nk + q] = bit_of(q, nb);
  }
  std::vector<S> data(t.data().size());
  for (Index x = 0; x < data.size(); ++x) {
    Index y = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (x & old_bit[q]) y |= new_bit[q];
    }
    data[y] = t.data()[x];
  }
  return Tensor<S>(kets, bras, std::move(data));
}

template <typename S>
Tensor<S> transposed(const Tensor<S>& t) {
  const std::size_t nk = t.kets().size(), nb = t.bras().size();
  std::vector<S> data(t.data().size());
  for (Index k = 0; k < (Index{1} << nk); ++k) {
    for (Index b = 0; b < (Index{1} << nb); ++b) data[(b << nk) | k] = t.at(k, b);
  }
  return Tensor<S>(t.bras(), t.kets(), std::move(data));
}

template <typename S>
Tensor<S> tensor_compose(const Tensor<S>& a, const Tensor<S>& b) {
  if (a.bras().size() != b.kets().size() || !same_set(a.bras(), b.kets())) {
    throw Error(ErrorKind::kLabelMismatch, "contracted wires differ");
  }
  const Tensor<S> left = reordered(a, a.kets(), b.kets());
  const Index rows = Index{1} << a.kets().size();
  const Index inner = Index{1} << b.kets().size();
  const Index cols = Index{1} << b.bras().size();
  std::vector<S> data(rows * cols, ScalarTraits<S>::zero());
  for (Index i = 0; i < rows; ++i) {
    for (Index s = 0; s < inner; ++s) {
      const S& x = left.at(i, s);
      if (ScalarTraits<S>::is_zero(x)) continue;
      for (Index j = 0; j < cols; ++j) data[i * cols + j] += x * b.at(s, j);
    }
  }
  return Tensor<S>(a.kets(), b.bras(), std::move(data));
}

template <typename S>
Tensor<S> tensor_product(const Tensor<S>& a, const Tensor<S>& b) {
  if (overlaps(a.kets(), b.kets()) || overlaps(a.bras(), b.bras())) {
    throw Error(ErrorKind::kLabelCollision, "tensor factors share a wire");
  }
  LabelList kets = a.kets(), bras = a.bras();
  kets.insert(kets.end(), b.kets().begin(), b.kets().end());
  bras.insert(bras.end(), b.bras().begin(), b.bras().end());
  const std::size_t ak = a.kets().size(), ab = a.bras().size();
  const std::size_t bk = b.kets().size(), bb = b.bras().size();
  std::vector<S> data(Index{1} << (ak + ab + bk + bb));
  for (Index ka = 0; ka < (Index{1} << ak); ++ka) {
    for (Index ba = 0; ba < (Index{1} << ab); ++ba) {
      const S& x = a.at(ka, ba);
      for (Index kb = 0; kb < (Index{1} << bk); ++kb) {
        for (Index bbits = 0; bbits < (Index{1} << bb); ++bbits) {
          const Index ket = (ka << bk) | kb;
          const Index bra = (ba << bb) | bbits;
          data[(ket << (ab + bb)) | bra] = x * b.at(kb, bbits);
        }
      }
    }
  }
  return Tensor<S>(std::move(kets), std::move(bras), std::move(data));
}

template <typename S>
S tensor_trace(const Tensor<S>& t) {
  if (t.kets().size() != t.bras().size() || !same_set(t.kets(), t.bras())) {
    throw Error(ErrorKind::kLabelMismatch, "trace needs matching kets and bras");
  }
  const Tensor<S> aligned = reordered(t, t.kets(), t.kets());
  S acc = ScalarTraits<S>::zero();
  for (Index i = 0; i < (Index{1} << t.kets().size()); ++i) acc += aligned.at(i, i);
  return acc;
}

template <typename S>
Tensor<S> wiring_tensor(const LabelList& from, const LabelList& to, const Wiring& wiring) {
  const LabeledMatrix<S> check = permutation_matrix<S>(from, to, wiring);
  (void)check;
  const std::size_t n = from.size();
  std::map<WireLabel, WireLabel> target(wiring.begin(), wiring.end());
  std::map<WireLabel, std::size_t> slot;
  for (std::size_t j = 0; j < n; ++j) slot[to[j]] = j;
  std::vector<std::size_t> dest(n);
  for (std::size_t i = 0; i < n; ++i) dest[i] = slot.at(target.at(from[i]));

  std::vector<S> data(Index{1} << (2 * n), ScalarTraits<S>::zero());
  for (Index in = 0; in < (Index{1} << n); ++in) {
    Index out = 0;
    std::size_t crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(in & bit_of(i, n))) continue;
      out |= bit_of(dest[i], n);
      for (std::size_t k = i + 1; k < n; ++k) {
        if ((in & bit_of(k, n)) && dest[k] < dest[i]) ++crossings;
      }
    }
    data[(in << n) | out] = crossings % 2 ? -ScalarTraits<S>::one() : ScalarTraits<S>::one();
  }
  return Tensor<S>(from, to, std::move(data));
}

template <typename S>
S oracle_evaluate(const Circuit<S>& c, std::size_t cap) {
  validate(c);
  const std::size_t m = c.stacks.size();
  if (m == 0) return ScalarTraits<S>::one();
  Tensor<S> acc;
  for (std::size_t k = 0; k < m; ++k) {
    Tensor<S> stack;
    for (const auto& g : c.stacks[k].gates) stack = tensor_product(stack, sdet_expand(g.matrix, cap));
    acc = k == 0 ? stack : tensor_compose(acc, stack);
    check_cap(c.stacks[k].cols().size() * 2, cap, "wiring expansion");
    acc = tensor_compose(acc, wiring_tensor<S>(c.stacks[k].cols(), c.stacks[(k + 1) % m].rows(),
                                               c.wirings[k]));
  }
  return tensor_trace(acc);
}

template <typename S>
MulticycleReport<S> enumerate_multicycles(const Circuit<S>& c, std::size_t cap) {
  validate(c);
  const std::size_t m = c.stacks.size();
  MulticycleReport<S> report{{}, ScalarTraits<S>::zero()};
  if (m == 0) {
    report.entries.push_back({{}, ScalarTraits<S>::one()});
    report.total = ScalarTraits<S>::one();
    return report;
  }

  std::vector<LabeledMatrix<S>> mats;
  std::vector<LabelList> outs;
  std::vector<std::vector<std::size_t>> dest(m);
  std::size_t wires = 0, narrowest = SIZE_MAX;
  for (std::size_t k = 0; k < m; ++k) {
    mats.push_back(c.stacks[k].matrix());
    outs.push_back(c.stacks[k].cols());
    wires += outs.back().size();
    narrowest = std::min(narrowest, outs.back().size());
    const LabelList next = c.stacks[(k + 1) % m].rows();
    std::map<WireLabel, WireLabel> target(c.wirings[k].begin(), c.wirings[k].end());
    for (auto l : outs.back()) {
      dest[k].push_back(static_cast<std::size_t>(
          std::find(next.begin(), next.end(), target.at(l)) - next.begin()));
    }
  }
  check_cap(wires, cap, "multicycle enumeration");

  // Minor of stack k on inputs `in` (positions) and outputs `out`.
  auto minor = [&](std::size_t k, const std::vector<std::size_t>& in,
                   const std::vector<std::size_t>& out) {
    std::vector<S> e;
    for (auto i : in) {
      for (auto j : out) e.push_back(mats[k](i, j));
    }
    return detail::dense_determinant(std::move(e), in.size());
  };
  // Image positions of `active` under wiring k, sorted, with the crossing sign.
  auto carry = [&](std::size_t k, const std::vector<std::size_t>& active, bool& negative) {
    std::vector<std::size_t> image;
    std::size_t crossings = 0;
    for (std::size_t a = 0; a < active.size(); ++a) {
      image.push_back(dest[k][active[a]]);
      for (std::size_t b = a + 1; b < active.size(); ++b) {
        if (dest[k][active[b]] < dest[k][active[a]]) ++crossings;
      }
    }
    std::sort(image.begin(), image.end());
    negative = crossings % 2 == 1;
    return image;
  };

  std::vector<std::vector<std::size_t>> chosen(m);
  for (std::size_t size = 0; size <= narrowest; ++size) {
    // Subsets of `size` positions out of n, in lexicographic order.
    auto subsets_of = [size](std::size_t n) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t> cur;
      auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == size) {
          out.push_back(cur);
          return;
        }
        for (std::size_t i = start; i + (size - cur.size()) <= n; ++i) {
          cur.push_back(i);
          self(self, i + 1);
          cur.pop_back();
        }
      };
      rec(rec, 0);
      return out;
    };
    std::vector<std::vector<std::vector<std::size_t>>> options(m);
    for (std::size_t k = 0; k < m; ++k) options[k] = subsets_of(outs[k].size());

    // Stack k reads the image of gap k-1; stack 0 is closed at the end.
    auto rec = [&](auto&& self, std::size_t k, S partial) -> void {
      if (k == m) {
        bool negative = false;
        auto image = carry(m - 1, chosen[m - 1], negative);
        S w = partial * minor(0, image, chosen[0]);
        if (negative) w = -w;
        if (ScalarTraits<S>::is_zero(w)) return;
        MulticycleEntry<S> entry{{}, w};
        for (std::size_t g = 0; g < m; ++g) {
          LabelList active;
          for (auto p : chosen[g]) active.push_back(outs[g][p]);
          entry.subsets.push_back(std::move(active));
        }
        report.total += w;
        report.entries.push_back(std::move(entry));
        return;
      }
      for (const auto& option : options[k]) {
        chosen[k] = option;
        S next = partial;
        if (k > 0) {
          bool negative = false;
          auto image = carry(k - 1, chosen[k - 1], negative);
          next *= minor(k, image, option);
          if (negative) next = -next;
          if (ScalarTraits<S>::is_zero(next)) continue;
        }
        self(self, k + 1, next);
      }
    };
    rec(rec, 0, ScalarTraits<S>::one());
  }
  return report;
}

#define DETCIRC_INSTANTIATE(S)                                                               \
  template class Tensor<S>;                                                                  \
  template bool approx_equal(const Tensor<S>&, const Tensor<S>&);                            \
  template Tensor<S> sdet_expand(const LabeledMatrix<S>&, std::size_t);                      \
  template Tensor<S> reordered(const Tensor<S>&, const LabelList&, const LabelList&);        \
  template Tensor<S> transposed(const Tensor<S>&);                                           \
  template Tensor<S> tensor_compose(const Tensor<S>&, const Tensor<S>&);                     \
  template Tensor<S> tensor_product(const Tensor<S>&, const Tensor<S>&);                     \
  template S tensor_trace(const Tensor<S>&);                                                 \
  template Tensor<S> wiring_tensor<S>(const LabelList&, const LabelList&, const Wiring&);    \
  template S oracle_evaluate(const Circuit<S>&, std::size_t);                                \
  template MulticycleReport<S> enumerate_multicycles(const Circuit<S>&, std::size_t);

DETCIRC_INSTANTIATE(Rational)
DETCIRC_INSTANTIATE(Complex)

#undef DETCIRC_INSTANTIATE

}  // namespace detcirc
