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

#ifndef NCOMSIM_RNG_HPP
#define NCOMSIM_RNG_HPP

#include <cstdint>

namespace ncomsim {

/// SplitMix64 finalizer (Steele/Lea/Flood). Also used to derive per-shot
/// stream states from (seed, shot index).
constexpr uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// The repo-wide pseudo-random generator: SplitMix64.
///
/// Chosen because it is 8 bytes of state, integer-only, and produces
/// bit-identical sequences on every platform, so simulation outputs are
/// reproducible from the seed alone. Each shot owns a private stream.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t state) : state_(state) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        return mix64(z);
    }

    /// Uniform double in [0, 1) built from the top 53 bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be nonzero. The modulo
    /// bias is below 2^-50 for every bound used in this project.
    uint64_t next_below(uint64_t bound) { return next() % bound; }

  private:
    uint64_t state_;
};

/// Stream for shot k of a run seeded with `seed`.
///
/// The state depends on (seed, k) only, so shots may be executed in any
/// order by any number of workers and still produce identical results:
///   state0 = mix64(mix64(seed) + (k+1) * 0x9e3779b97f4a7c15).
inline SplitMix64 shot_stream(uint64_t seed, uint64_t shot) {
    return SplitMix64(mix64(mix64(seed) + (shot + 1) * 0x9e3779b97f4a7c15ULL));
}

}  // namespace ncomsim

#endif
