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

#include "detcirc/labeled_matrix.hpp"
#include "detcirc/tensor.hpp"

namespace detcirc {

inline constexpr std::size_t kPairingOracleCap = 12;

// Rows and columns share one label list in the same order.
template <typename S>
class SkewMatrix {
 public:
  SkewMatrix() = default;
  // Throws kSizeMismatch, kDuplicateLabel, kNotSkew.
  SkewMatrix(LabelList labels, std::vector<S> entries);

  std::size_t size() const { return labels_.size(); }
  const LabelList& labels() const { return labels_; }
  std::span<const S> entries() const { return entries_; }
  const S& operator()(std::size_t i, std::size_t j) const { return entries_[i * labels_.size() + j]; }

  // Principal submatrix on the given positions, in the given order.
  SkewMatrix principal(std::span<const std::size_t> index) const;
  LabeledMatrix<S> as_matrix() const;

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  LabelList labels_;
  std::vector<S> entries_;
};

// Skew elimination; 1 for 0x0, 0 for odd sizes.
template <typename S>
S pfaffian(const SkewMatrix<S>& a);

// Sum over perfect pairings with sign (-1)^crossings. Throws kTooLarge past
// kPairingOracleCap.
template <typename S>
S pfaffian_oracle(const SkewMatrix<S>& a);

// eta'_{ij} = eta_{n-1-j, n-1-i}; labels are reversed with their lines.
template <typename S>
SkewMatrix<S> anti_transpose(const SkewMatrix<S>& a);

// sum_I Pf(a_I) |I>
template <typename S>
Tensor<S> spf(const SkewMatrix<S>& a, std::size_t cap = kDefaultOracleCap);
// sum_I Pf(a_{complement of I}) <I|
template <typename S>
Tensor<S> spf_dual(const SkewMatrix<S>& a, std::size_t cap = kDefaultOracleCap);

enum class PfKind { kState, kCostate };

template <typename S>
struct PfGate {
  SkewMatrix<S> matrix;
  PfKind kind = PfKind::kState;
  // 1-based edge ids, one per matrix line.
  std::vector<std::uint32_t> edges;
};

template <typename S>
struct PfaffianCircuit {
  std::vector<PfGate<S>> gates;
  std::uint32_t edge_count = 0;
};

// Every edge must touch exactly one state and one costate.
template <typename S>
void validate(const PfaffianCircuit<S>& pc);

// Pf(Xi + Theta-check) in edge-id order.
template <typename S>
S eval_pfaffian_circuit(const PfaffianCircuit<S>& pc);

// Contracts the sPf / sPf-dual tensors over shared edges.
template <typename S>
S eval_pfaffian_oracle(const PfaffianCircuit<S>& pc, std::size_t cap = kDefaultOracleCap);

// True when each gate lists its edges in increasing order and neither the
// state blocks nor the costate blocks interleave along the edge order.
template <typename S>
bool layout_is_noncrossing(const PfaffianCircuit<S>& pc);

template <typename S>
std::size_t total_entries(const PfaffianCircuit<S>& pc);

}  // namespace detcirc
