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

#ifndef NCOMSIM_ENGINE_HPP
#define NCOMSIM_ENGINE_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncomsim/circuit.hpp"
#include "ncomsim/distribution.hpp"
#include "ncomsim/model.hpp"
#include "ncomsim/rng.hpp"

namespace ncomsim {

/// A sample point: one local coordinate per wire plus pairwise nonlocal
/// coordinates. Pair slots materialize lazily, at value 0, when a
/// two-wire gate first touches the pair, so memory stays at
/// O(n + touched pairs).
struct OnticState {
    std::vector<uint32_t> wire;
    std::unordered_map<uint64_t, uint32_t> pair;  // pair_key(i, j) -> lambda_nl

    static uint64_t pair_key(int i, int j) {
        if (i > j) std::swap(i, j);
        return (static_cast<uint64_t>(i) << 32) | static_cast<uint32_t>(j);
    }
};

/// Structural compatibility of a model with a circuit: matching d and
/// wire count, and a table for every gate key the circuit uses.
std::vector<Diagnostic> check_compatible(const OntologicalModel& m, const Circuit& c);

/// One run of the sampling algorithm: draw each wire's initial coordinate
/// independently from its preparation table, walk the schedule applying
/// each gate's permutation (single-wire gates substitute one coordinate;
/// two-wire gates substitute the (lambda_i, lambda_j, lambda_nl) triple),
/// then sample each measured wire's outcome from its indicator column
/// independently, ignoring pair coordinates. Returns the outcome digits
/// in measurement order. Time O(gate count + n), memory O(n + touched
/// pairs).
///
/// Throws ModelInvalid if the model and circuit are incompatible.
std::string sample_run(const OntologicalModel& m, const Circuit& c, const Schedule& s,
                       SplitMix64& rng);

struct SampleStats {
    size_t max_tracked_pairs = 0;  // pair slots materialized in any shot
};

/// `shots` independent runs; shot k uses the stream shot_stream(seed, k),
/// so counts are reproducible and independent of execution order.
/// `threads` <= 0 means min(hardware concurrency, NCOMSIM_THREADS).
/// Throws std::invalid_argument if shots < 1.
Distribution sample_many(const OntologicalModel& m, const Circuit& c, const Schedule& s,
                         uint64_t seed, uint64_t shots, int threads = 0,
                         SampleStats* stats = nullptr);

/// Default cap on the initial joint support size of the exact enumerator.
constexpr uint64_t kDefaultSupportCap = 1000000;

/// Exact output distribution of the model: pushes the factorized input
/// distribution through each gate permutation (support size is invariant
/// under bijections, asserted at every step) and contracts with the
/// factorized indicators. Throws CapExceeded when the initial support
/// product exceeds `support_cap`.
Distribution exact_ontological_distribution(const OntologicalModel& m, const Circuit& c,
                                            const Schedule& s,
                                            uint64_t support_cap = kDefaultSupportCap);

}  // namespace ncomsim

#endif
