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

#ifndef NCOMSIM_MODEL_HPP
#define NCOMSIM_MODEL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncomsim/circuit.hpp"
#include "ncomsim/diagnostics.hpp"

namespace ncomsim {

/// A finite ontological model of a circuit family: per-wire local ontic
/// spaces of size L (wire-homogeneous), pairwise nonlocal spaces of size
/// P that exist only for wire pairs touched by a two-wire gate,
/// per-basis-label preparation distributions, deterministic gate
/// permutations, and per-outcome measurement indicator tables.
///
/// Two-wire gate tables act on the joint index
///   lambda_i * (L*P) + lambda_j * P + lambda_nl
/// (row-major, first-listed/control wire first). Holistic coordinates of
/// three or more wires are never represented: single- and two-wire gates
/// cannot populate them.
struct OntologicalModel {
    int n_wires = 0;
    int d = 0;           // outcome alphabet size
    int local_size = 0;  // L = |local ontic space| per wire
    int pair_size = 1;   // P = |pairwise nonlocal space| per touched pair

    std::vector<std::vector<double>> preparations;        // [basis label][lambda], d x L
    std::map<std::string, std::vector<uint32_t>> gates1;  // gate key -> permutation of [0, L)
    std::map<std::string, std::vector<uint32_t>> gates2;  // gate key -> permutation of [0, L*L*P)
    std::vector<std::vector<double>> indicator;           // [x][lambda], d x L

    bool operator==(const OntologicalModel&) const = default;
};

/// Every violation of the model invariants, located by field: preparation
/// tables nonnegative and normalized (1e-12), gate tables bijective
/// (checked by exhaustive image counting), indicator entries in [0,1]
/// with unit column sums (1e-12).
std::vector<Diagnostic> validate_model(const OntologicalModel& m);

/// Gate keys advertised by a model, with arities, for validate_circuit.
GateSet model_gate_set(const OntologicalModel& m);

/// Square nonnegative matrix with unit column sums: entry (r, c) is the
/// probability of moving to state r from state c.
struct StochasticMap {
    Eigen::MatrixXd m;
};

std::vector<Diagnostic> validate_stochastic(const StochasticMap& t);

/// True iff every column is a unit basis vector (a 0/1 permutation
/// matrix), i.e. the map is deterministic.
bool is_deterministic(const StochasticMap& t);

/// The stochastic two-sided inverse of t, if one exists among stochastic
/// matrices; nullopt otherwise. For a permutation this is its transpose.
/// Any such inverse must equal the matrix inverse, so the general path
/// inverts t and accepts the result iff it is itself stochastic.
std::optional<StochasticMap> stochastic_inverse(const StochasticMap& t);

/// JSON model file, schema version 1: version, d, n_wires, local_size,
/// pair_size, preparations (label -> array of L), gates1 (key ->
/// permutation of L), gates2 (key -> permutation of L*L*P), indicator
/// (d x L nested arrays).
std::string save_model(const OntologicalModel& m);

struct ModelLoadResult {
    std::optional<OntologicalModel> model;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return model.has_value() && diagnostics.empty(); }
};

/// Parses and validates. Schema violations are reported with JSON paths;
/// a model that fails validate_model is refused.
ModelLoadResult load_model(const std::string& text);

}  // namespace ncomsim

#endif
