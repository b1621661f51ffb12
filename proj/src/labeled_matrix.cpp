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

#include "detcirc/labeled_matrix.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "detcirc/error.hpp"

namespace detcirc {
namespace {

std::string describe(const LabelList& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(labels[i].id);
  }
  return out + "}";
}

bool has_duplicates(LabelList labels) {
  std::sort(labels.begin(), labels.end());
  return std::adjacent_find(labels.begin(), labels.end()) != labels.end();
}

bool same_label_set(LabelList a, LabelList b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool disjoint(LabelList a, LabelList b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  LabelList common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

// position[i] = index of order[i] within `current`.
std::vector<std::size_t> positions_of(const LabelList& current, const LabelList& order) {
  if (current.size() != order.size() || !same_label_set(current, order)) {
    throw Error(ErrorKind::kLabelMismatch,
                "cannot reorder " + describe(current) + " as " + describe(order));
  }
  std::map<WireLabel, std::size_t> index;
  for (std::size_t i = 0; i < current.size(); ++i) index[current[i]] = i;
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[i] = index.at(order[i]);
  return pos;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

Rational bareiss_determinant(const std::vector<Rational>& a, std::size_t n) {
  // Clear denominators row by row so elimination runs over the integers.
  std::vector<mpz_class> m(n * n);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a[r * n + c].get_den_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& v = a[r * n + c];
      m[r * n + c] = v.get_num() * (row_lcm / v.get_den());
    }
    scale *= row_lcm;
  }

  int sign = 1;
  mpz_class previous_pivot = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return Rational(0);
      for (std::size_t c = k; c < n; ++c) std::swap(m[k * n + c], m[swap_row * n + c]);
      sign = -sign;
    }
    const mpz_class& pivot = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i * n + j] * pivot - m[i * n + k] * m[k * n + j];
        mpz_divexact(m[i * n + j].get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
      }
      m[i * n + k] = 0;
    }
    previous_pivot = pivot;
  }
  Rational det(n == 0 ? mpz_class(1) : mpz_class(m[n * n - 1] * sign), scale);
  det.canonicalize();
  return det;
}

Complex lu_determinant(std::vector<Complex> a, std::size_t n) {
  Complex det(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      double mag = std::abs(a[i * n + k]);
      if (mag > best) {
        best = mag;
        pivot_row = i;
      }
    }
    if (best == 0.0) return Complex(0.0, 0.0);
    if (pivot_row != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[pivot_row * n + c]);
      det = -det;
    }
    const Complex pivot = a[k * n + k];
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a[i * n + k] / pivot;
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return det;
}

}  // namespace

namespace detail {

template <typename S>
S dense_determinant(std::vector<S> a, std::size_t n) {
  if constexpr (std::is_same_v<S, Rational>) {
    return bareiss_determinant(a, n);
  } else {
    return lu_determinant(std::move(a), n);
  }
}

}  // namespace detail

template <typename S>
LabeledMatrix<S>::LabeledMatrix(LabelList rows, LabelList cols)
    : LabeledMatrix(std::move(rows), std::move(cols), {}) {}

template <typename S>
LabeledMatrix<S>::LabeledMatrix(LabelList rows, LabelList cols, std::vector<S> entries)
    : rows_(std::move(rows)), cols_(std::move(cols)), entries_(std::move(entries)) {
  if (entries_.empty()) entries_.assign(rows_.size() * cols_.size(), ScalarTraits<S>::zero());
  if (entries_.size() != rows_.size() * cols_.size()) {
    throw Error(ErrorKind::kSizeMismatch,
                std::to_string(entries_.size()) + " entries for a " +
                    std::to_string(rows_.size()) + "x" + std::to_string(cols_.size()) + " matrix");
  }
  if (has_duplicates(rows_)) throw Error(ErrorKind::kDuplicateLabel, "row labels " + describe(rows_));
  if (has_duplicates(cols_)) throw Error(ErrorKind::kDuplicateLabel, "column labels " + describe(cols_));
}

template <typename S>
LabeledMatrix<S> LabeledMatrix<S>::identity(const LabelList& labels) {
  const std::size_t n = labels.size();
  std::vector<S> e(n * n, ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = ScalarTraits<S>::one();
  return LabeledMatrix(labels, labels, std::move(e));
}

template <typename S>
LabeledMatrix<S> LabeledMatrix<S>::submatrix(std::span<const std::size_t> row_index,
                                             std::span<const std::size_t> col_index) const {
  LabelList r, c;
  std::vector<S> e;
  e.reserve(row_index.size() * col_index.size());
  for (auto i : row_index) r.push_back(rows_.at(i));
  for (auto j : col_index) c.push_back(cols_.at(j));
  for (auto i : row_index) {
    for (auto j : col_index) e.push_back((*this)(i, j));
  }
  if (e.empty()) e.clear();
  return LabeledMatrix(std::move(r), std::move(c), std::move(e));
}

template <typename S>
LabeledMatrix<S> LabeledMatrix<S>::with_row_order(const LabelList& order) const {
  auto pos = positions_of(rows_, order);
  auto cols = iota(cols_.size());
  return submatrix(pos, cols);
}

template <typename S>
LabeledMatrix<S> LabeledMatrix<S>::with_col_order(const LabelList& order) const {
  auto pos = positions_of(cols_, order);
  auto rows = iota(rows_.size());
  return submatrix(rows, pos);
}

template <typename S>
LabeledMatrix<S> LabeledMatrix<S>::relabeled(LabelList rows, LabelList cols) const {
  if (rows.size() != rows_.size() || cols.size() != cols_.size()) {
    throw Error(ErrorKind::kSizeMismatch, "relabeling changes the shape");
  }
  return LabeledMatrix(std::move(rows), std::move(cols), entries_);
}

template <typename S>
bool approx_equal(const LabeledMatrix<S>& a, const LabeledMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (!approx_equal(a.entries()[i], b.entries()[i])) return false;
  }
  return true;
}

template <typename S>
LabeledMatrix<S> compose(const LabeledMatrix<S>& n, const LabeledMatrix<S>& m) {
  if (n.col_count() != m.row_count() || !same_label_set(n.cols(), m.rows())) {
    throw Error(ErrorKind::kLabelMismatch,
                "columns " + describe(n.cols()) + " vs rows " + describe(m.rows()));
  }
  const LabeledMatrix<S> aligned = m.with_row_order(n.cols());
  const std::size_t rows = n.row_count(), inner = n.col_count(), cols = m.col_count();
  std::vector<S> e(rows * cols, ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      const S& a = n(i, k);
      if (ScalarTraits<S>::is_zero(a)) continue;
      for (std::size_t j = 0; j < cols; ++j) e[i * cols + j] += a * aligned(k, j);
    }
  }
  return LabeledMatrix<S>(n.rows(), m.cols(), std::move(e));
}

template <typename S>
LabeledMatrix<S> direct_sum(const LabeledMatrix<S>& a, const LabeledMatrix<S>& b) {
  if (!disjoint(a.rows(), b.rows()) || !disjoint(a.cols(), b.cols())) {
    throw Error(ErrorKind::kLabelCollision,
                describe(a.rows()) + "x" + describe(a.cols()) + " and " + describe(b.rows()) +
                    "x" + describe(b.cols()));
  }
  LabelList rows = a.rows(), cols = a.cols();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  cols.insert(cols.end(), b.cols().begin(), b.cols().end());
  LabeledMatrix<S> zero(rows, cols);
  std::vector<S> e(zero.entries().begin(), zero.entries().end());
  const std::size_t width = cols.size();
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    for (std::size_t j = 0; j < a.col_count(); ++j) e[i * width + j] = a(i, j);
  }
  for (std::size_t i = 0; i < b.row_count(); ++i) {
    for (std::size_t j = 0; j < b.col_count(); ++j) {
      e[(a.row_count() + i) * width + a.col_count() + j] = b(i, j);
    }
  }
  return LabeledMatrix<S>(std::move(rows), std::move(cols), std::move(e));
}

template <typename S>
LabeledMatrix<S> dagger(const LabeledMatrix<S>& m) {
  std::vector<S> e;
  e.reserve(m.entries().size());
  for (std::size_t j = 0; j < m.col_count(); ++j) {
    for (std::size_t i = 0; i < m.row_count(); ++i) e.push_back(m(i, j));
  }
  return LabeledMatrix<S>(m.cols(), m.rows(), std::move(e));
}

template <typename S>
LabeledMatrix<S> braiding(const LabelList& a, const LabelList& b) {
  if (!disjoint(a, b)) {
    throw Error(ErrorKind::kLabelCollision, describe(a) + " and " + describe(b));
  }
  LabelList rows = b, cols = a;
  rows.insert(rows.end(), a.begin(), a.end());
  cols.insert(cols.end(), b.begin(), b.end());
  const std::size_t n = rows.size();
  std::vector<S> e(n * n, ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < b.size(); ++i) e[i * n + a.size() + i] = ScalarTraits<S>::one();
  for (std::size_t j = 0; j < a.size(); ++j) e[(b.size() + j) * n + j] = ScalarTraits<S>::one();
  return LabeledMatrix<S>(std::move(rows), std::move(cols), std::move(e));
}

template <typename S>
S determinant(const LabeledMatrix<S>& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::kNotSquare, std::to_string(m.row_count()) + "x" +
                                           std::to_string(m.col_count()) + " determinant");
  }
  return detail::dense_determinant(std::vector<S>(m.entries().begin(), m.entries().end()),
                                   m.row_count());
}

template <typename S>
S principal_minor_sum(const LabeledMatrix<S>& m) {
  if (!m.is_square() || !same_label_set(m.rows(), m.cols())) {
    throw Error(ErrorKind::kNotEndomorphism,
                "rows " + describe(m.rows()) + " vs columns " + describe(m.cols()));
  }
  const LabeledMatrix<S> aligned = m.with_col_order(m.rows());
  const std::size_t n = m.row_count();
  std::vector<S> e(aligned.entries().begin(), aligned.entries().end());
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] += ScalarTraits<S>::one();
  return detail::dense_determinant(std::move(e), n);
}

template <typename S>
std::vector<S> characteristic_polynomial(const LabeledMatrix<S>& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::kNotSquare, "characteristic polynomial of a non-square matrix");
  }
  const std::size_t n = m.row_count();
  std::vector<S> coeff(n + 1, ScalarTraits<S>::zero());
  coeff[n] = ScalarTraits<S>::one();
  std::vector<S> current(n * n, ScalarTraits<S>::zero());  // M_{k-1}
  std::vector<S> product(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        S acc = ScalarTraits<S>::zero();
        for (std::size_t t = 0; t < n; ++t) acc += m(i, t) * current[t * n + j];
        product[i * n + j] = acc;
      }
      product[i * n + i] += coeff[n - k + 1];
    }
    current.swap(product);
    // c_{n-k} = -tr(A M_k) / k
    S trace = ScalarTraits<S>::zero();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < n; ++t) trace += m(i, t) * current[t * n + i];
    }
    coeff[n - k] = -trace / ScalarTraits<S>::from_int(static_cast<long>(k));
  }
  return coeff;
}

#define DETCIRC_INSTANTIATE(S)                                                          \
  template class LabeledMatrix<S>;                                                      \
  template bool approx_equal(const LabeledMatrix<S>&, const LabeledMatrix<S>&);         \
  template LabeledMatrix<S> compose(const LabeledMatrix<S>&, const LabeledMatrix<S>&);  \
  template LabeledMatrix<S> direct_sum(const LabeledMatrix<S>&, const LabeledMatrix<S>&); \
  template LabeledMatrix<S> dagger(const LabeledMatrix<S>&);                            \
  template LabeledMatrix<S> braiding(const LabelList&, const LabelList&);               \
  template S determinant(const LabeledMatrix<S>&);                                      \
  template S principal_minor_sum(const LabeledMatrix<S>&);                              \
  template std::vector<S> characteristic_polynomial(const LabeledMatrix<S>&);           \
  template S detail::dense_determinant(std::vector<S>, std::size_t);

DETCIRC_INSTANTIATE(Rational)
DETCIRC_INSTANTIATE(Complex)

#undef DETCIRC_INSTANTIATE

}  // namespace detcirc
