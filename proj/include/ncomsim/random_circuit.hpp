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

#ifndef NCOMSIM_RANDOM_CIRCUIT_HPP
#define NCOMSIM_RANDOM_CIRCUIT_HPP

#include <cstdint>

#include "ncomsim/circuit.hpp"

namespace ncomsim {

/// A random circuit over the built-in Clifford catalog: every wire gets a
/// random basis preparation, then `n_gates` gates drawn uniformly over
/// {X, Z, F, P, M[a], SUM, CZ} with random wires (and random a for M),
/// then every wire is measured. Deterministic in `seed`.
Circuit random_stabilizer_circuit(int n_wires, int d, int n_gates, uint64_t seed);

/// Like random_stabilizer_circuit but arranged in `depth` layers of a
/// fixed width: each layer applies a two-wire gate on a random disjoint
/// pairing of roughly half of the wires plus single-wire gates on the
/// rest. Exercises wide, deep circuits at bounded memory per shot.
Circuit random_layered_circuit(int n_wires, int d, int depth, uint64_t seed);

}  // namespace ncomsim

#endif
