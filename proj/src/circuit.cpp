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

#include "detcirc/circuit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "detcirc/error.hpp"

namespace detcirc {
namespace {

std::string label_text(WireLabel l) { return std::to_string(l.id); }

void require_distinct(const LabelList& labels, const std::string& where) {
  std::set<WireLabel> seen;
  for (auto l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorKind::kDuplicateLabel, where + " repeats label " + label_text(l));
    }
  }
}

// Checks that `wiring` is a bijection from `from` onto `to`.
void check_wiring(const Wiring& wiring, const LabelList& from, const LabelList& to,
                  const std::string& where) {
  if (from.size() != to.size()) {
    throw Error(ErrorKind::kSizeMismatch, where + " joins " + std::to_string(from.size()) +
                                              " outputs to " + std::to_string(to.size()) +
                                              " inputs");
  }
  std::set<WireLabel> sources(from.begin(), from.end());
  std::set<WireLabel> targets(to.begin(), to.end());
  std::set<WireLabel> used_sources, used_targets;
  for (const auto& [a, b] : wiring) {
    if (!sources.count(a)) {
      throw Error(ErrorKind::kDanglingWire, where + " starts at unknown output " + label_text(a));
    }
    if (!targets.count(b)) {
      throw Error(ErrorKind::kDanglingWire, where + " ends at unknown input " + label_text(b));
    }
    if (!used_sources.insert(a).second) {
      throw Error(ErrorKind::kDuplicateLabel, where + " uses output " + label_text(a) + " twice");
    }
    if (!used_targets.insert(b).second) {
      throw Error(ErrorKind::kDuplicateLabel, where + " uses input " + label_text(b) + " twice");
    }
  }
  for (auto a : from) {
    if (!used_sources.count(a)) {
      throw Error(ErrorKind::kDanglingWire, where + " leaves output " + label_text(a) + " open");
    }
  }
  for (auto b : to) {
    if (!used_targets.count(b)) {
      throw Error(ErrorKind::kDanglingWire, where + " leaves input " + label_text(b) + " open");
    }
  }
}

}  // namespace

Wiring positional_wiring(const LabelList& from, const LabelList& to) {
  if (from.size() != to.size()) {
    throw Error(ErrorKind::kSizeMismatch, "positional wiring between lists of different length");
  }
  Wiring w;
  for (std::size_t i = 0; i < from.size(); ++i) w.emplace_back(from[i], to[i]);
  return w;
}

bool is_positional(const Wiring& wiring, const LabelList& from, const LabelList& to) {
  if (from.size() != to.size()) return false;
  std::map<WireLabel, WireLabel> target;
  for (const auto& [a, b] : wiring) target[a] = b;
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = target.find(from[i]);
    if (it == target.end() || it->second != to[i]) return false;
  }
  return true;
}

template <typename S>
LabelList Stack<S>::rows() const {
  LabelList out;
  for (const auto& g : gates) out.insert(out.end(), g.matrix.rows().begin(), g.matrix.rows().end());
  return out;
}

template <typename S>
LabelList Stack<S>::cols() const {
  LabelList out;
  for (const auto& g : gates) out.insert(out.end(), g.matrix.cols().begin(), g.matrix.cols().end());
  return out;
}

template <typename S>
LabeledMatrix<S> Stack<S>::matrix() const {
  LabeledMatrix<S> acc;
  for (const auto& g : gates) acc = direct_sum(acc, g.matrix);
  return acc;
}

template <typename S>
void validate(const Circuit<S>& c) {
  const std::size_t m = c.stacks.size();
  if (c.wirings.size() != m) {
    throw Error(ErrorKind::kSizeMismatch, std::to_string(m) + " stacks but " +
                                              std::to_string(c.wirings.size()) + " wirings");
  }
  for (std::size_t k = 0; k < m; ++k) {
    const std::string name = "stack " + std::to_string(k + 1);
    require_distinct(c.stacks[k].rows(), name + " inputs");
    require_distinct(c.stacks[k].cols(), name + " outputs");
  }
  for (std::size_t k = 0; k < m; ++k) {
    check_wiring(c.wirings[k], c.stacks[k].cols(), c.stacks[(k + 1) % m].rows(),
                 "wiring " + std::to_string(k + 1));
  }
}

template <typename S>
LabeledMatrix<S> permutation_matrix(const LabelList& from, const LabelList& to,
                                    const Wiring& wiring) {
  check_wiring(wiring, from, to, "wiring");
  std::map<WireLabel, std::size_t> column;
  for (std::size_t j = 0; j < to.size(); ++j) column[to[j]] = j;
  std::map<WireLabel, WireLabel> target(wiring.begin(), wiring.end());
  const std::size_t n = from.size();
  std::vector<S> e(n * n, ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < n; ++i) e[i * n + column.at(target.at(from[i]))] = ScalarTraits<S>::one();
  return LabeledMatrix<S>(from, to, std::move(e));
}

template <typename S>
LabeledMatrix<S> collapse(const Circuit<S>& c) {
  validate(c);
  if (c.stacks.empty()) return LabeledMatrix<S>();
  const std::size_t m = c.stacks.size();
  LabeledMatrix<S> acc = LabeledMatrix<S>::identity(c.stacks[0].rows());
  for (std::size_t k = 0; k < m; ++k) {
    acc = compose(acc, c.stacks[k].matrix());
    acc = compose(acc, permutation_matrix<S>(c.stacks[k].cols(), c.stacks[(k + 1) % m].rows(),
                                             c.wirings[k]));
  }
  return acc;
}

template <typename S>
S evaluate(const Circuit<S>& c) {
  return principal_minor_sum(collapse(c));
}

template <typename S>
WidthDepth width_depth(const Circuit<S>& c) {
  WidthDepth wd;
  wd.depth = c.stacks.size();
  for (const auto& s : c.stacks) wd.width = std::max(wd.width, s.cols().size());
  return wd;
}

#define DETCIRC_INSTANTIATE(S)                                                              \
  template struct Stack<S>;                                                                 \
  template void validate(const Circuit<S>&);                                                \
  template LabeledMatrix<S> permutation_matrix<S>(const LabelList&, const LabelList&,       \
                                                  const Wiring&);                           \
  template LabeledMatrix<S> collapse(const Circuit<S>&);                                    \
  template S evaluate(const Circuit<S>&);                                                   \
  template WidthDepth width_depth(const Circuit<S>&);

DETCIRC_INSTANTIATE(Rational)
DETCIRC_INSTANTIATE(Complex)

#undef DETCIRC_INSTANTIATE

}  // namespace detcirc
