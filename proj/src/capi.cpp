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

#include "detcirc/detcirc.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <variant>

#include "detcirc/compiler.hpp"
#include "detcirc/error.hpp"
#include "detcirc/tensor.hpp"
#include "detcirc/text_format.hpp"

using namespace detcirc;

struct dc_circuit {
  std::variant<Circuit<Rational>, Circuit<Complex>> value;
};

struct dc_pfaffian {
  std::variant<PfaffianCircuit<Rational>, PfaffianCircuit<Complex>> value;
};

struct dc_graph {
  Graph value;
};

namespace {

thread_local std::string last_error;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

dc_status fail(dc_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
dc_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const ParseError& e) {
    return fail(DC_ERR_PARSE, e.what());
  } catch (const Error& e) {
    return fail(e.kind() == ErrorKind::kTooLarge ? DC_ERR_TOO_LARGE : DC_ERR_VALIDATION, e.what());
  } catch (const IoError& e) {
    return fail(DC_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DC_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open '") + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t cap_or_default(std::size_t cap) { return cap == 0 ? kDefaultOracleCap : cap; }

bool want_complex(std::string_view text, dc_field field) {
  if (field == DC_FIELD_AUTO) return detect_field(text) == Field::kComplex;
  return field == DC_FIELD_COMPLEX;
}

template <typename S>
std::string multicycle_text(const MulticycleReport<S>& report) {
  std::string out;
  for (const auto& entry : report.entries) {
    out += format_scalar(entry.weight) + " |";
    for (const auto& subset : entry.subsets) {
      out += " {";
      for (std::size_t i = 0; i < subset.size(); ++i) {
        out += (i ? "," : "") + std::to_string(subset[i].id);
      }
      out += "}";
    }
    out += "\n";
  }
  return out + "total " + format_scalar(report.total) + "\n";
}

dc_status circuit_from_text(const std::string& text, dc_field field, dc_circuit** out) {
  if (!out) return fail(DC_ERR_INVALID_ARGUMENT, "null output handle");
  auto* handle = new dc_circuit;
  try {
    if (want_complex(text, field)) {
      handle->value = parse_circuit<Complex>(text);
    } else {
      handle->value = parse_circuit<Rational>(text);
    }
  } catch (...) {
    delete handle;
    throw;
  }
  *out = handle;
  return DC_OK;
}

dc_status pfaffian_from_text(const std::string& text, dc_field field, dc_pfaffian** out) {
  if (!out) return fail(DC_ERR_INVALID_ARGUMENT, "null output handle");
  auto* handle = new dc_pfaffian;
  try {
    if (want_complex(text, field)) {
      handle->value = parse_pfaffian<Complex>(text);
    } else {
      handle->value = parse_pfaffian<Rational>(text);
    }
  } catch (...) {
    delete handle;
    throw;
  }
  *out = handle;
  return DC_OK;
}

dc_status graph_from_text(const std::string& text, dc_graph** out) {
  if (!out) return fail(DC_ERR_INVALID_ARGUMENT, "null output handle");
  *out = new dc_graph{parse_graph(text)};
  return DC_OK;
}

// Writes `value` to `*slot` after checking the handle and slot.
template <typename Handle>
dc_status emit(const Handle* h, char** slot, const std::string& value) {
  if (!h || !slot) return fail(DC_ERR_INVALID_ARGUMENT, "null argument");
  *slot = copy_string(value);
  return DC_OK;
}

}  // namespace

extern "C" {

const char* dc_version(void) { return "0.1.0"; }

const char* dc_status_name(dc_status status) {
  switch (status) {
    case DC_OK: return "ok";
    case DC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DC_ERR_PARSE: return "parse error";
    case DC_ERR_VALIDATION: return "validation error";
    case DC_ERR_TOO_LARGE: return "too large";
    case DC_ERR_IO: return "i/o error";
    case DC_ERR_MISMATCH: return "mismatch";
    case DC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dc_last_error(void) { return last_error.c_str(); }

void dc_string_free(char* s) { std::free(s); }

dc_status dc_circuit_parse(const char* text, dc_field field, dc_circuit** out) {
  if (!text) return fail(DC_ERR_INVALID_ARGUMENT, "null text");
  return guarded([&] { return circuit_from_text(text, field, out); });
}

dc_status dc_circuit_load(const char* path, dc_field field, dc_circuit** out) {
  if (!path) return fail(DC_ERR_INVALID_ARGUMENT, "null path");
  return guarded([&] { return circuit_from_text(read_file(path), field, out); });
}

void dc_circuit_free(dc_circuit* c) { delete c; }

dc_field dc_circuit_field(const dc_circuit* c) {
  if (!c) return DC_FIELD_AUTO;
  return c->value.index() == 0 ? DC_FIELD_RATIONAL : DC_FIELD_COMPLEX;
}

dc_status dc_circuit_serialize(const dc_circuit* c, char** text) {
  return guarded([&] {
    if (!c) return fail(DC_ERR_INVALID_ARGUMENT, "null circuit");
    return emit(c, text, std::visit([](const auto& v) { return format_circuit(v); }, c->value));
  });
}

dc_status dc_circuit_evaluate(const dc_circuit* c, char** value) {
  return guarded([&] {
    if (!c) return fail(DC_ERR_INVALID_ARGUMENT, "null circuit");
    return emit(c, value,
                std::visit([](const auto& v) { return format_scalar(evaluate(v)); }, c->value));
  });
}

dc_status dc_circuit_oracle(const dc_circuit* c, size_t cap, char** value) {
  return guarded([&] {
    if (!c) return fail(DC_ERR_INVALID_ARGUMENT, "null circuit");
    return emit(c, value, std::visit([&](const auto& v) {
                  return format_scalar(oracle_evaluate(v, cap_or_default(cap)));
                }, c->value));
  });
}

dc_status dc_circuit_check(const dc_circuit* c, size_t cap, char** report) {
  return guarded([&] {
    if (!c || !report) return fail(DC_ERR_INVALID_ARGUMENT, "null argument");
    bool agree = true;
    const std::string text = std::visit([&](const auto& v) {
      const auto fast = evaluate(v);
      const auto slow = oracle_evaluate(v, cap_or_default(cap));
      const auto cycles = enumerate_multicycles(v, cap_or_default(cap)).total;
      agree = approx_equal(fast, slow) && approx_equal(fast, cycles);
      return "fast " + format_scalar(fast) + "\noracle " + format_scalar(slow) +
             "\nmulticycles " + format_scalar(cycles) + "\n" + (agree ? "agree" : "MISMATCH") + "\n";
    }, c->value);
    *report = copy_string(text);
    return agree ? DC_OK : fail(DC_ERR_MISMATCH, "fast evaluation disagrees with the oracle");
  });
}

dc_status dc_circuit_multicycles(const dc_circuit* c, size_t cap, char** report) {
  return guarded([&] {
    if (!c) return fail(DC_ERR_INVALID_ARGUMENT, "null circuit");
    return emit(c, report, std::visit([&](const auto& v) {
                  return multicycle_text(enumerate_multicycles(v, cap_or_default(cap)));
                }, c->value));
  });
}

dc_status dc_circuit_width_depth(const dc_circuit* c, size_t* width, size_t* depth) {
  return guarded([&] {
    if (!c || !width || !depth) return fail(DC_ERR_INVALID_ARGUMENT, "null argument");
    const WidthDepth wd = std::visit([](const auto& v) { return width_depth(v); }, c->value);
    *width = wd.width;
    *depth = wd.depth;
    return DC_OK;
  });
}

dc_status dc_circuit_compile(const dc_circuit* c, dc_pfaffian** out, char** size_ratio) {
  return guarded([&] {
    if (!c || !out) return fail(DC_ERR_INVALID_ARGUMENT, "null argument");
    auto* handle = new dc_pfaffian;
    Rational ratio;
    try {
      std::visit([&](const auto& v) {
        auto compiled = compile(v);
        ratio = compiled.size_ratio;
        handle->value = std::move(compiled.target);
      }, c->value);
      if (size_ratio) *size_ratio = copy_string(format_scalar(ratio));
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
    return DC_OK;
  });
}

dc_status dc_pfaffian_parse(const char* text, dc_field field, dc_pfaffian** out) {
  if (!text) return fail(DC_ERR_INVALID_ARGUMENT, "null text");
  return guarded([&] { return pfaffian_from_text(text, field, out); });
}

dc_status dc_pfaffian_load(const char* path, dc_field field, dc_pfaffian** out) {
  if (!path) return fail(DC_ERR_INVALID_ARGUMENT, "null path");
  return guarded([&] { return pfaffian_from_text(read_file(path), field, out); });
}

void dc_pfaffian_free(dc_pfaffian* pc) { delete pc; }

dc_status dc_pfaffian_evaluate(const dc_pfaffian* pc, char** value) {
  return guarded([&] {
    if (!pc) return fail(DC_ERR_INVALID_ARGUMENT, "null Pfaffian circuit");
    return emit(pc, value, std::visit([](const auto& v) {
                  return format_scalar(eval_pfaffian_circuit(v));
                }, pc->value));
  });
}

dc_status dc_pfaffian_oracle(const dc_pfaffian* pc, size_t cap, char** value) {
  return guarded([&] {
    if (!pc) return fail(DC_ERR_INVALID_ARGUMENT, "null Pfaffian circuit");
    return emit(pc, value, std::visit([&](const auto& v) {
                  return format_scalar(eval_pfaffian_oracle(v, cap_or_default(cap)));
                }, pc->value));
  });
}

dc_status dc_pfaffian_serialize(const dc_pfaffian* pc, char** text) {
  return guarded([&] {
    if (!pc) return fail(DC_ERR_INVALID_ARGUMENT, "null Pfaffian circuit");
    return emit(pc, text, std::visit([](const auto& v) { return format_pfaffian(v); }, pc->value));
  });
}

dc_status dc_graph_parse(const char* text, dc_graph** out) {
  if (!text) return fail(DC_ERR_INVALID_ARGUMENT, "null text");
  return guarded([&] { return graph_from_text(text, out); });
}

dc_status dc_graph_load(const char* path, dc_graph** out) {
  if (!path) return fail(DC_ERR_INVALID_ARGUMENT, "null path");
  return guarded([&] { return graph_from_text(read_file(path), out); });
}

void dc_graph_free(dc_graph* g) { delete g; }

dc_status dc_graph_reorient(const dc_graph* g, uint64_t seed, dc_graph** out) {
  return guarded([&] {
    if (!g || !out) return fail(DC_ERR_INVALID_ARGUMENT, "null argument");
    *out = new dc_graph{g->value.reoriented(seed)};
    return DC_OK;
  });
}

dc_status dc_graph_rooted_forests(const dc_graph* g, char** count) {
  return guarded([&] {
    if (!g) return fail(DC_ERR_INVALID_ARGUMENT, "null graph");
    return emit(g, count, count_rooted_forests(g->value).get_str());
  });
}

dc_status dc_graph_spanning_trees(const dc_graph* g, char** count) {
  return guarded([&] {
    if (!g) return fail(DC_ERR_INVALID_ARGUMENT, "null graph");
    return emit(g, count, count_spanning_trees(g->value).get_str());
  });
}

dc_status dc_graph_forest_polynomial(const dc_graph* g, char** coefficients) {
  return guarded([&] {
    if (!g) return fail(DC_ERR_INVALID_ARGUMENT, "null graph");
    std::string text;
    for (const auto& c : forest_polynomial(g->value)) text += (text.empty() ? "" : " ") + c.get_str();
    return emit(g, coefficients, text);
  });
}

dc_status dc_graph_circuit(const dc_graph* g, dc_circuit** out) {
  return guarded([&] {
    if (!g || !out) return fail(DC_ERR_INVALID_ARGUMENT, "null argument");
    *out = new dc_circuit{graph_to_circuit(g->value)};
    return DC_OK;
  });
}

}  // extern "C"
