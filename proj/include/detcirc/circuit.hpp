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
#include <utility>
#include <vector>

#include "detcirc/labeled_matrix.hpp"

namespace detcirc {

template <typename S>
struct Gate {
  LabeledMatrix<S> matrix;
};

// Gates placed side by side. Row labels are the stack's inputs, column
// labels its outputs.
template <typename S>
struct Stack {
  std::vector<Gate<S>> gates;

  LabelList rows() const;
  LabelList cols() const;
  // Direct sum of the gate matrices in gate order.
  LabeledMatrix<S> matrix() const;
};

// (output label of stack k, input label of stack k+1) pairs.
using Wiring = std::vector<std::pair<WireLabel, WireLabel>>;

// wirings[k] connects stacks[k] to stacks[(k + 1) % m]; the last one closes
// the loop.
template <typename S>
struct Circuit {
  std::vector<Stack<S>> stacks;
  std::vector<Wiring> wirings;
};

struct WidthDepth {
  std::size_t width = 0;
  std::size_t depth = 0;
};

// Pairs from[i] with to[i].
Wiring positional_wiring(const LabelList& from, const LabelList& to);
bool is_positional(const Wiring& wiring, const LabelList& from, const LabelList& to);

template <typename S>
void validate(const Circuit<S>& c);

// 0/1 matrix with rows labeled `from`, columns labeled `to`.
template <typename S>
LabeledMatrix<S> permutation_matrix(const LabelList& from, const LabelList& to,
                                    const Wiring& wiring);

// M^{S_1} P_1 M^{S_2} P_2 ... M^{S_m} P_m, an endomorphism of rows(S_1).
template <typename S>
LabeledMatrix<S> collapse(const Circuit<S>& c);

template <typename S>
S evaluate(const Circuit<S>& c);

template <typename S>
WidthDepth width_depth(const Circuit<S>& c);

}  // namespace detcirc
