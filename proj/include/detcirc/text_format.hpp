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

#include <string>
#include <string_view>

#include "detcirc/circuit.hpp"
#include "detcirc/graph.hpp"
#include "detcirc/pfaffian.hpp"

namespace detcirc {

enum class Field { kRational, kComplex };

// Reads an optional `field rational|complex` line; rational otherwise.
Field detect_field(std::string_view text);

// Parse errors throw ParseError with a line number; the parsed value is then
// validated and may throw the corresponding validation error.
template <typename S>
Circuit<S> parse_circuit(std::string_view text);
template <typename S>
std::string format_circuit(const Circuit<S>& c);

template <typename S>
PfaffianCircuit<S> parse_pfaffian(std::string_view text);
template <typename S>
std::string format_pfaffian(const PfaffianCircuit<S>& pc);

Graph parse_graph(std::string_view text);

}  // namespace detcirc
