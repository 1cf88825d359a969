// Copyright 2026 The ncomsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCOMSIM_CIRCUIT_HPP
#define NCOMSIM_CIRCUIT_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncomsim/diagnostics.hpp"

namespace ncomsim {

/// One gate application. `wires` holds 1 or 2 distinct indices; the first
/// listed wire is the control / row-major coordinate for two-wire gates.
struct GateApp {
    std::string name;
    std::vector<int> wires;
    std::optional<int> param;  // e.g. the multiplier a of M_a, in [1, d-1]

    bool operator==(const GateApp&) const = default;
};

/// A qudit circuit: basis-state preparations on every wire, an ordered
/// gate list, and a terminal computational-basis measurement of a subset
/// of wires. Wire indices are 0-based.
struct Circuit {
    std::string name;
    int dim = 0;      // qudit dimension d >= 2
    int n_wires = 0;  // n >= 1
    std::vector<std::pair<int, int>> preps;  // (wire, basis label), one per wire
    std::vector<GateApp> gates;
    std::vector<int> measured;  // ordered, distinct; outcome digit order

    bool operator==(const Circuit&) const = default;
};

/// Gates packed into parallel time steps; each step touches each wire at
/// most once. Entries are indices into Circuit::gates.
struct Schedule {
    std::vector<std::vector<size_t>> steps;

    int depth() const { return static_cast<int>(steps.size()); }
};

struct ParseResult {
    std::optional<Circuit> circuit;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return circuit.has_value() && diagnostics.empty(); }
};

/// Parses the line-oriented circuit file format:
///
///   dim <d>
///   wires <n>
///   prep <wire> basis <j>
///   gate <NAME> <w1> [<w2>] [param <a>]
///   measure <w1> <w2> ...
///
/// '#' starts a comment. Exactly one dim and one wires line, in that
/// order, before any prep; preps precede gates; measure is terminal.
/// Gate names are not resolved here (that is the backend's job).
ParseResult parse_circuit(std::string_view text);

/// Canonical text form; parse_circuit(format_circuit(c)) reproduces c
/// except `name`, which travels as a comment and is not parsed back.
std::string format_circuit(const Circuit& c);

/// Greedy earliest-step packing: a gate is placed in the first step where
/// all its wires are free, preserving per-wire gate order. Deterministic.
Schedule schedule(const Circuit& c);

struct GateInfo {
    int arity = 1;
};

/// Gate sets are keyed by gate key, i.e. "X" or "M[2]" (name plus
/// bracketed parameter when one is present).
using GateSet = std::map<std::string, GateInfo>;

std::string gate_key(const GateApp& g);

/// Checks every gate against `gate_set` (membership and arity). Returns
/// all violations, not just the first.
std::vector<Diagnostic> validate_circuit(const Circuit& c, const GateSet& gate_set);

}  // namespace ncomsim

#endif
