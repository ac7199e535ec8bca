// Copyright 2026 ArcBench Contributors
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

#ifndef ARC_RNG_H
#define ARC_RNG_H

#include <cstdint>
#include <random>

namespace arc {

inline uint64_t split_mix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministic per-shot random stream. Shots are independent streams
/// derived from (seed, shot index), so results do not depend on how shots
/// are distributed over workers.
struct ShotRng {
    std::mt19937_64 gen;

    ShotRng(uint64_t seed, uint64_t stream) {
        uint64_t s = seed ^ 0x5851f42d4c957f2dull;
        split_mix64(s);
        s ^= stream * 0x9e3779b97f4a7c15ull;
        gen.seed(split_mix64(s));
    }

    uint64_t next_u64() {
        return gen();
    }

    bool next_bit() {
        return gen() >> 63;
    }

    // 53-bit uniform in [0, 1).
    double next_double() {
        return (gen() >> 11) * (1.0 / 9007199254740992.0);
    }

    bool bernoulli(double p) {
        return next_double() < p;
    }

    // Uniform integer in [0, n) for small n.
    uint32_t next_below(uint32_t n) {
        return static_cast<uint32_t>(gen() % n);
    }
};

}  // namespace arc

#endif
