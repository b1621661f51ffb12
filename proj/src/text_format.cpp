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

#include "detcirc/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "detcirc/error.hpp"

namespace detcirc {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string w; in >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

std::uint64_t parse_count(const std::string& word, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + word + "'");
  }
  return v;
}

WireLabel parse_label(const std::string& word, std::size_t line) {
  const std::uint64_t v = parse_count(word, line, "a wire label");
  if (v > UINT32_MAX) throw ParseError(line, "label '" + word + "' is too large");
  return WireLabel{static_cast<std::uint32_t>(v)};
}

template <typename S>
S parse_scalar(const std::string& word, std::size_t line) {
  try {
    return ScalarTraits<S>::parse(word);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

template <typename S>
void check_field_line(const Line& line) {
  if (line.words.size() != 2 || (line.words[1] != "rational" && line.words[1] != "complex")) {
    throw ParseError(line.number, "expected 'field rational' or 'field complex'");
  }
}

template <typename S>
std::vector<S> read_rows(const std::vector<Line>& lines, std::size_t& at, std::size_t rows,
                         std::size_t cols, std::size_t header_line) {
  std::vector<S> entries;
  if (cols == 0) return entries;
  for (std::size_t i = 0; i < rows; ++i) {
    if (at >= lines.size()) {
      throw ParseError(header_line, "expected " + std::to_string(rows) + " matrix rows");
    }
    const Line& row = lines[at++];
    if (row.words.size() != cols) {
      throw ParseError(row.number, "expected " + std::to_string(cols) + " entries, got " +
                                       std::to_string(row.words.size()));
    }
    for (const auto& w : row.words) entries.push_back(parse_scalar<S>(w, row.number));
  }
  return entries;
}

std::string join_labels(const LabelList& l) {
  std::string out;
  for (auto x : l) out += " " + std::to_string(x.id);
  return out;
}

}  // namespace

Field detect_field(std::string_view text) {
  for (const Line& line : tokenize(text)) {
    if (line.words[0] == "field") {
      check_field_line<Rational>(line);
      return line.words[1] == "complex" ? Field::kComplex : Field::kRational;
    }
  }
  return Field::kRational;
}

template <typename S>
Circuit<S> parse_circuit(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  Circuit<S> c;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> wiring_lines;
  std::size_t at = 0;
  while (at < lines.size()) {
    const Line& line = lines[at++];
    const std::string& head = line.words[0];
    if (head == "field") {
      check_field_line<S>(line);
    } else if (head == "stack") {
      if (line.words.size() != 1) throw ParseError(line.number, "'stack' takes no arguments");
      c.stacks.emplace_back();
    } else if (head == "gate") {
      if (c.stacks.empty()) throw ParseError(line.number, "gate before the first 'stack'");
      if (line.words.size() < 4) throw ParseError(line.number, "expected 'gate r c <rows> / <cols>'");
      const std::size_t r = parse_count(line.words[1], line.number, "a row count");
      const std::size_t cc = parse_count(line.words[2], line.number, "a column count");
      if (line.words.size() != 4 + r + cc || line.words[3 + r] != "/") {
        throw ParseError(line.number, "expected " + std::to_string(r) + " row labels, '/', and " +
                                          std::to_string(cc) + " column labels");
      }
      LabelList rows, cols;
      for (std::size_t i = 0; i < r; ++i) rows.push_back(parse_label(line.words[3 + i], line.number));
      for (std::size_t j = 0; j < cc; ++j) cols.push_back(parse_label(line.words[4 + r + j], line.number));
      std::vector<S> entries = read_rows<S>(lines, at, r, cc, line.number);
      try {
        c.stacks.back().gates.push_back({LabeledMatrix<S>(rows, cols, std::move(entries))});
      } catch (const Error& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (head == "wiring") {
      wiring_lines.emplace_back(line.number, line.words);
    } else {
      throw ParseError(line.number, "unknown directive '" + head + "'");
    }
  }

  const std::size_t m = c.stacks.size();
  c.wirings.assign(m, {});
  std::vector<bool> given(m, false);
  for (const auto& [number, words] : wiring_lines) {
    std::string rest;
    for (std::size_t i = 1; i < words.size(); ++i) rest += words[i];
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw ParseError(number, "expected 'wiring k: a->b, ...'");
    const std::uint64_t k = parse_count(rest.substr(0, colon), number, "a gap number");
    if (k < 1 || k > m) throw ParseError(number, "gap " + std::to_string(k) + " does not exist");
    if (given[k - 1]) throw ParseError(number, "gap " + std::to_string(k) + " wired twice");
    given[k - 1] = true;
    std::string links = rest.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < links.size()) {
      std::size_t comma = links.find(',', pos);
      if (comma == std::string::npos) comma = links.size();
      const std::string link = links.substr(pos, comma - pos);
      pos = comma + 1;
      const auto arrow = link.find("->");
      if (arrow == std::string::npos) throw ParseError(number, "expected 'a->b', got '" + link + "'");
      c.wirings[k - 1].emplace_back(parse_label(link.substr(0, arrow), number),
                                    parse_label(link.substr(arrow + 2), number));
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (given[k]) continue;
    LabelList from = c.stacks[k].cols(), to = c.stacks[(k + 1) % m].rows();
    std::sort(from.begin(), from.end());
    std::sort(to.begin(), to.end());
    if (from.size() == to.size()) c.wirings[k] = positional_wiring(from, to);
  }
  validate(c);
  return c;
}

template <typename S>
std::string format_circuit(const Circuit<S>& c) {
  std::ostringstream out;
  if (!ScalarTraits<S>::kExact) out << "field complex\n";
  for (const auto& stack : c.stacks) {
    out << "stack\n";
    for (const auto& g : stack.gates) {
      const auto& m = g.matrix;
      out << "gate " << m.row_count() << " " << m.col_count() << join_labels(m.rows()) << " /"
          << join_labels(m.cols()) << "\n";
      if (m.col_count() == 0) continue;
      for (std::size_t i = 0; i < m.row_count(); ++i) {
        for (std::size_t j = 0; j < m.col_count(); ++j) {
          out << (j ? " " : "") << format_scalar(m(i, j));
        }
        out << "\n";
      }
    }
  }
  for (std::size_t k = 0; k < c.wirings.size(); ++k) {
    out << "wiring " << k + 1 << ":";
    for (std::size_t i = 0; i < c.wirings[k].size(); ++i) {
      out << (i ? ", " : " ") << c.wirings[k][i].first.id << "->" << c.wirings[k][i].second.id;
    }
    out << "\n";
  }
  return out.str();
}

template <typename S>
PfaffianCircuit<S> parse_pfaffian(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  PfaffianCircuit<S> pc;
  bool explicit_count = false;
  std::uint32_t highest = 0;
  std::size_t at = 0;
  while (at < lines.size()) {
    const Line& line = lines[at++];
    const std::string& head = line.words[0];
    if (head == "field") {
      check_field_line<S>(line);
    } else if (head == "edges") {
      if (line.words.size() != 2) throw ParseError(line.number, "expected 'edges N'");
      const std::uint64_t n = parse_count(line.words[1], line.number, "an edge count");
      if (n > UINT32_MAX) throw ParseError(line.number, "edge count too large");
      pc.edge_count = static_cast<std::uint32_t>(n);
      explicit_count = true;
    } else if (head == "pfgate") {
      if (line.words.size() < 3 || (line.words[1] != "state" && line.words[1] != "costate")) {
        throw ParseError(line.number, "expected 'pfgate state|costate n <edges>'");
      }
      const std::size_t n = parse_count(line.words[2], line.number, "a size");
      if (line.words.size() != 3 + n) {
        throw ParseError(line.number, "expected " + std::to_string(n) + " edge ids");
      }
      PfGate<S> gate;
      gate.kind = line.words[1] == "state" ? PfKind::kState : PfKind::kCostate;
      LabelList l;
      for (std::size_t i = 0; i < n; ++i) {
        const WireLabel e = parse_label(line.words[3 + i], line.number);
        gate.edges.push_back(e.id);
        highest = std::max(highest, e.id);
        l.push_back(WireLabel{static_cast<std::uint32_t>(i)});
      }
      std::vector<S> entries = read_rows<S>(lines, at, n, n, line.number);
      try {
        gate.matrix = SkewMatrix<S>(std::move(l), std::move(entries));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kNotSkew) {
          throw Error(ErrorKind::kNotSkew, "line " + std::to_string(line.number) + ": " + e.what());
        }
        throw ParseError(line.number, e.what());
      }
      pc.gates.push_back(std::move(gate));
    } else {
      throw ParseError(line.number, "unknown directive '" + head + "'");
    }
  }
  if (!explicit_count) pc.edge_count = highest;
  validate(pc);
  return pc;
}

template <typename S>
std::string format_pfaffian(const PfaffianCircuit<S>& pc) {
  std::ostringstream out;
  if (!ScalarTraits<S>::kExact) out << "field complex\n";
  out << "edges " << pc.edge_count << "\n";
  for (const auto& gate : pc.gates) {
    out << "pfgate " << (gate.kind == PfKind::kState ? "state" : "costate") << " "
        << gate.edges.size();
    for (auto e : gate.edges) out << " " << e;
    out << "\n";
    for (std::size_t i = 0; i < gate.matrix.size(); ++i) {
      for (std::size_t j = 0; j < gate.matrix.size(); ++j) {
        out << (j ? " " : "") << format_scalar(gate.matrix(i, j));
      }
      out << "\n";
    }
  }
  return out.str();
}

Graph parse_graph(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty graph file");
  const Line& head = lines[0];
  if (head.words.size() != 2) throw ParseError(head.number, "expected 'n m'");
  const std::size_t n = parse_count(head.words[0], head.number, "a vertex count");
  const std::size_t m = parse_count(head.words[1], head.number, "an edge count");
  if (lines.size() != m + 1) {
    const std::size_t where = lines.size() > m + 1 ? lines[m + 1].number : head.number;
    throw ParseError(where, "expected " + std::to_string(m) + " edge lines, found " +
                                std::to_string(lines.size() - 1));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 1; k <= m; ++k) {
    const Line& line = lines[k];
    if (line.words.size() != 2) throw ParseError(line.number, "expected 'u v'");
    const std::size_t u = parse_count(line.words[0], line.number, "a vertex");
    const std::size_t v = parse_count(line.words[1], line.number, "a vertex");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line.number, "vertex out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(u - 1, v - 1);
  }
  return Graph(n, std::move(edges));
}

#define DETCIRC_INSTANTIATE(S)                                             \
  template Circuit<S> parse_circuit(std::string_view);                     \
  template std::string format_circuit(const Circuit<S>&);                  \
  template PfaffianCircuit<S> parse_pfaffian(std::string_view);            \
  template std::string format_pfaffian(const PfaffianCircuit<S>&);

DETCIRC_INSTANTIATE(Rational)
DETCIRC_INSTANTIATE(Complex)

#undef DETCIRC_INSTANTIATE

}  // namespace detcirc
