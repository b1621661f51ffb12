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

#include "detcirc/circuit.hpp"
#include "detcirc/pfaffian.hpp"

namespace detcirc {

// Column order (and column labels) reversed.
template <typename S>
LabeledMatrix<S> reflect(const LabeledMatrix<S>& m);

// [[0, reflect(m)], [-reflect(m)^T, 0]] on rows ++ reversed columns.
// Throws kNotSquare.
template <typename S>
SkewMatrix<S> skew_embed(const LabeledMatrix<S>& m);

template <typename S>
struct PaddedMatrix {
  LabeledMatrix<S> matrix;
  LabelList padded_rows;  // closed by <0|
  LabelList padded_cols;  // closed by |0>
};

// Appends zero rows (wide input) or zero columns (tall input) under fresh
// labels larger than every existing label.
template <typename S>
PaddedMatrix<S> pad_to_square(const LabeledMatrix<S>& m);

// sPf(S(m')) contracted with sPf-dual(S(I)) on the output side, padded lines
// closed by zero vectors. Kets are m's rows, bras m's columns.
template <typename S>
Tensor<S> gate_gadget_tensor(const LabeledMatrix<S>& m);

template <typename S>
struct CompiledCircuit {
  Circuit<S> source;
  PfaffianCircuit<S> target;
  std::size_t gadget_count = 0;
  // Target matrix entries over the source size, which counts every gate's
  // entries plus its row and column labels.
  Rational size_ratio;
};

template <typename S>
CompiledCircuit<S> compile(const Circuit<S>& c);

}  // namespace detcirc
