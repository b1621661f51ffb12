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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "detcirc/detcirc.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kMismatch = 3 };

struct Options {
  std::string input;
  std::string output;
  std::string field = "auto";
  std::uint64_t orient_seed = 0;
  bool reorient = false;
  std::size_t cap = 0;
  bool oracle = false;
};

int report_failure(dc_status status) {
  std::cerr << "detcirc: " << dc_status_name(status) << ": " << dc_last_error() << "\n";
  return status == DC_ERR_MISMATCH ? kMismatch : kInput;
}

// Prints an owned string and releases it.
void print_owned(char* s, std::ostream& out = std::cout) {
  out << s;
  std::string_view view(s);
  if (view.empty() || view.back() != '\n') out << "\n";
  dc_string_free(s);
}

dc_field field_of(const Options& o) {
  if (o.field == "rational") return DC_FIELD_RATIONAL;
  if (o.field == "complex") return DC_FIELD_COMPLEX;
  return DC_FIELD_AUTO;
}

std::size_t oracle_cap(const Options& o) {
  if (o.cap != 0) return o.cap;
  if (const char* env = std::getenv("DETCIRC_ORACLE_CAP")) return std::strtoul(env, nullptr, 10);
  return 0;
}

using CircuitCall = dc_status (*)(const dc_circuit*, const Options&, char**);

int with_circuit(const Options& o, CircuitCall call) {
  dc_circuit* c = nullptr;
  dc_status s = dc_circuit_load(o.input.c_str(), field_of(o), &c);
  if (s != DC_OK) return report_failure(s);
  char* text = nullptr;
  s = call(c, o, &text);
  dc_circuit_free(c);
  if (text) print_owned(text);
  return s == DC_OK ? kOk : report_failure(s);
}

int run_compile(const Options& o) {
  dc_circuit* c = nullptr;
  dc_status s = dc_circuit_load(o.input.c_str(), field_of(o), &c);
  if (s != DC_OK) return report_failure(s);
  dc_pfaffian* pc = nullptr;
  char* ratio = nullptr;
  s = dc_circuit_compile(c, &pc, &ratio);
  dc_circuit_free(c);
  if (s != DC_OK) return report_failure(s);
  char* text = nullptr;
  s = dc_pfaffian_serialize(pc, &text);
  dc_pfaffian_free(pc);
  if (s != DC_OK) {
    dc_string_free(ratio);
    return report_failure(s);
  }
  int code = kOk;
  if (o.output.empty()) {
    std::cout << text;
    std::cerr << "size_ratio " << ratio << "\n";
  } else {
    std::ofstream out(o.output, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "detcirc: cannot write '" << o.output << "'\n";
      code = kInput;
    } else {
      std::cout << "size_ratio " << ratio << "\n";
    }
  }
  dc_string_free(text);
  dc_string_free(ratio);
  return code;
}

int run_pfeval(const Options& o) {
  dc_pfaffian* pc = nullptr;
  dc_status s = dc_pfaffian_load(o.input.c_str(), field_of(o), &pc);
  if (s != DC_OK) return report_failure(s);
  char* value = nullptr;
  s = o.oracle ? dc_pfaffian_oracle(pc, oracle_cap(o), &value) : dc_pfaffian_evaluate(pc, &value);
  dc_pfaffian_free(pc);
  if (s != DC_OK) return report_failure(s);
  print_owned(value);
  return kOk;
}

using GraphCall = dc_status (*)(const dc_graph*, char**);

int with_graph(const Options& o, GraphCall call) {
  dc_graph* g = nullptr;
  dc_status s = dc_graph_load(o.input.c_str(), &g);
  if (s != DC_OK) return report_failure(s);
  if (o.reorient) {
    dc_graph* turned = nullptr;
    s = dc_graph_reorient(g, o.orient_seed, &turned);
    dc_graph_free(g);
    if (s != DC_OK) return report_failure(s);
    g = turned;
  }
  char* text = nullptr;
  s = call(g, &text);
  dc_graph_free(g);
  if (s != DC_OK) return report_failure(s);
  print_owned(text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinantal and Pfaffian circuit evaluator"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Input file")->required();
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "Scalar field")
        ->check(CLI::IsMember({"auto", "rational", "complex"}));
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Oracle wire cap (default 20, or DETCIRC_ORACLE_CAP)");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--orient-seed", o.orient_seed, "Re-randomize edge orientations with this seed")
        ->each([&](const std::string&) { o.reorient = true; });
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a determinantal circuit as det(I+M)");
  auto* oracle = app.add_subcommand("oracle", "Evaluate by full tensor contraction");
  auto* check = app.add_subcommand("check", "Compare the fast evaluator with the oracles");
  auto* cycles = app.add_subcommand("multicycles", "List weighted multicycles");
  auto* comp = app.add_subcommand("compile", "Compile to a Pfaffian circuit");
  auto* pfeval = app.add_subcommand("pfeval", "Evaluate a Pfaffian circuit");
  auto* forests = app.add_subcommand("forests", "Count rooted spanning forests");
  auto* trees = app.add_subcommand("trees", "Count spanning trees");
  auto* poly = app.add_subcommand("poly", "Rooted forest counts by number of roots");

  for (auto* sub : {eval, oracle, check, cycles, comp, pfeval, forests, trees, poly}) add_input(sub);
  for (auto* sub : {eval, oracle, check, cycles, comp, pfeval}) add_field(sub);
  for (auto* sub : {oracle, check, cycles, pfeval}) add_cap(sub);
  for (auto* sub : {forests, trees, poly}) add_seed(sub);
  comp->add_option("-o,--output", o.output, "Write the Pfaffian circuit here");
  pfeval->add_flag("--oracle", o.oracle, "Contract sPf tensors instead of Pf(Xi+Theta)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (eval->parsed()) {
    return with_circuit(o, [](const dc_circuit* c, const Options&, char** out) {
      return dc_circuit_evaluate(c, out);
    });
  }
  if (oracle->parsed()) {
    return with_circuit(o, [](const dc_circuit* c, const Options& opt, char** out) {
      return dc_circuit_oracle(c, oracle_cap(opt), out);
    });
  }
  if (check->parsed()) {
    return with_circuit(o, [](const dc_circuit* c, const Options& opt, char** out) {
      return dc_circuit_check(c, oracle_cap(opt), out);
    });
  }
  if (cycles->parsed()) {
    return with_circuit(o, [](const dc_circuit* c, const Options& opt, char** out) {
      return dc_circuit_multicycles(c, oracle_cap(opt), out);
    });
  }
  if (comp->parsed()) return run_compile(o);
  if (pfeval->parsed()) return run_pfeval(o);
  if (forests->parsed()) return with_graph(o, dc_graph_rooted_forests);
  if (trees->parsed()) return with_graph(o, dc_graph_spanning_trees);
  if (poly->parsed()) return with_graph(o, dc_graph_forest_polynomial);
  return kUsage;
}
