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

// Labeled matrices: the morphisms of the matrix category. Rows and columns
// carry wire labels; composition aligns on labels, the monoidal product is the
// direct sum, and the dagger is the transpose.
//
// Every template here is explicitly instantiated for Rational and Complex.

#include <cstddef>
#include <span>
#include <vector>

#include "detcirc/scalar.hpp"

namespace detcirc {

template <typename S>
class LabeledMatrix {
 public:
  using Scalar = S;

  // The 0x0 matrix (monoidal unit).
  LabeledMatrix() = default;
  // Zero-filled.
  LabeledMatrix(LabelList rows, LabelList cols);
  // Row-major entries. Throws kSizeMismatch / kDuplicateLabel.
  LabeledMatrix(LabelList rows, LabelList cols, std::vector<S> entries);

  static LabeledMatrix identity(const LabelList& labels);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }
  bool is_square() const { return rows_.size() == cols_.size(); }

  const LabelList& rows() const { return rows_; }
  const LabelList& cols() const { return cols_; }
  std::span<const S> entries() const { return entries_; }

  const S& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_.size() + c];
  }

  // Positional submatrix; labels follow the selected lines.
  LabeledMatrix submatrix(std::span<const std::size_t> row_index,
                          std::span<const std::size_t> col_index) const;
  // Same labeled map with rows (resp. columns) listed in `order`, which must
  // be a permutation of the current labels.
  LabeledMatrix with_row_order(const LabelList& order) const;
  LabeledMatrix with_col_order(const LabelList& order) const;
  LabeledMatrix relabeled(LabelList rows, LabelList cols) const;

  friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;

 private:
  LabelList rows_;
  LabelList cols_;
  std::vector<S> entries_;
};

template <typename S>
bool approx_equal(const LabeledMatrix<S>& a, const LabeledMatrix<S>& b);

// n ∘ m = n·m. The column label set of n must equal the row label set of m;
// m's rows are permuted into n's column order first. Throws kLabelMismatch.
template <typename S>
LabeledMatrix<S> compose(const LabeledMatrix<S>& n, const LabeledMatrix<S>& m);

// Block diagonal; labels concatenate. Throws kLabelCollision.
template <typename S>
LabeledMatrix<S> direct_sum(const LabeledMatrix<S>& a, const LabeledMatrix<S>& b);

template <typename S>
LabeledMatrix<S> dagger(const LabeledMatrix<S>& m);

// c_{A,B}: rows b++a, columns a++b, 0/1 entries exchanging the blocks.
template <typename S>
LabeledMatrix<S> braiding(const LabelList& a, const LabelList& b);

// Bareiss on integer-scaled rows for Rational, partial-pivot LU for Complex.
// The 0x0 determinant is 1. Throws kNotSquare.
template <typename S>
S determinant(const LabeledMatrix<S>& m);

// det(I + m), i.e. the sum of all principal minors. Columns are aligned to
// the row label order first. Throws kNotEndomorphism.
template <typename S>
S principal_minor_sum(const LabeledMatrix<S>& m);

// Coefficients of det(xI - m), lowest degree first, via Faddeev-LeVerrier.
template <typename S>
std::vector<S> characteristic_polynomial(const LabeledMatrix<S>& m);

namespace detail {

// Determinant of a dense row-major n x n array.
template <typename S>
S dense_determinant(std::vector<S> a, std::size_t n);

}  // namespace detail

}  // namespace detcirc
