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
#include <span>
#include <vector>

#include "detcirc/circuit.hpp"
#include "detcirc/labeled_matrix.hpp"

namespace detcirc {

inline constexpr std::size_t kDefaultOracleCap = 20;

// Dense coefficients over |I><J|. The index of a coefficient is the bitstring
// ket bits followed by bra bits, the first listed wire being the most
// significant bit. A label may appear once among the kets and once among the
// bras.
template <typename S>
class Tensor {
 public:
  // The scalar 1.
  Tensor();
  Tensor(LabelList kets, LabelList bras, std::vector<S> data);

  static Tensor scalar(const S& value);

  const LabelList& kets() const { return kets_; }
  const LabelList& bras() const { return bras_; }
  std::span<const S> data() const { return data_; }

  // ket_bits and bra_bits use the same most-significant-first convention.
  const S& at(std::uint64_t ket_bits, std::uint64_t bra_bits) const {
    return data_[(ket_bits << bras_.size()) | bra_bits];
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  LabelList kets_;
  LabelList bras_;
  std::vector<S> data_;
};

template <typename S>
bool approx_equal(const Tensor<S>& a, const Tensor<S>& b);

// Coefficient of |I><J| is det(m_IJ). Throws kTooLarge past `cap` wires.
template <typename S>
Tensor<S> sdet_expand(const LabeledMatrix<S>& m, std::size_t cap = kDefaultOracleCap);

// Same coefficients with the wires listed in the given orders.
template <typename S>
Tensor<S> reordered(const Tensor<S>& t, const LabelList& kets, const LabelList& bras);

// Exchanges kets and bras.
template <typename S>
Tensor<S> transposed(const Tensor<S>& t);

// Contracts a's bras with b's kets by label.
template <typename S>
Tensor<S> tensor_compose(const Tensor<S>& a, const Tensor<S>& b);

template <typename S>
Tensor<S> tensor_product(const Tensor<S>& a, const Tensor<S>& b);

template <typename S>
S tensor_trace(const Tensor<S>& t);

// Image of a wiring: |I><w(I)| with sign (-1)^(crossings among I).
template <typename S>
Tensor<S> wiring_tensor(const LabelList& from, const LabelList& to, const Wiring& wiring);

// Contracts the diagram gate by gate and wire by wire.
template <typename S>
S oracle_evaluate(const Circuit<S>& c, std::size_t cap = kDefaultOracleCap);

template <typename S>
struct MulticycleEntry {
  // subsets[k] lists the active outputs of stack k in list order.
  std::vector<LabelList> subsets;
  S weight;
};

template <typename S>
struct MulticycleReport {
  std::vector<MulticycleEntry<S>> entries;
  S total;
};

// Nonzero terms of sum over I_1..I_m of prod det(M^{S_k}) restricted to the
// active wires, with the wiring crossing signs included.
template <typename S>
MulticycleReport<S> enumerate_multicycles(const Circuit<S>& c,
                                          std::size_t cap = kDefaultOracleCap);

}  // namespace detcirc
