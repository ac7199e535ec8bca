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

#ifndef ARC_SIMULATOR_H
#define ARC_SIMULATOR_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arc/circuit.h"
#include "arc/rng.h"

namespace arc {

/// Pauli noise attached to circuit locations: depolarizing after every
/// single-qubit gate (p1) and CX (p2), an X flip immediately before every
/// measurement (p_meas), and depolarizing at idle placeholders (idle, with
/// optional per-qubit overrides).
struct NoiseModel {
    double p1 = 0;
    double p2 = 0;
    double p_meas = 0;
    double idle = 0;
    std::map<qubit_t, double> idle_overrides;

    static NoiseModel uniform(double p) {
        NoiseModel m;
        m.p1 = m.p2 = m.p_meas = p;
        return m;
    }
    bool is_zero() const {
        return p1 == 0 && p2 == 0 && p_meas == 0 && idle == 0 && idle_overrides.empty();
    }
};

struct CountsRecord {
    std::map<std::string, uint64_t> counts;
    uint64_t shots = 0;
    uint64_t seed = 0;
    std::string circuit_id;
    NoiseModel noise;
};

enum class Engine { Auto, Tableau, Frame };

/// A Pauli inserted into the gap immediately before layer `gap` (gap ==
/// num_layers() addresses the slot after the last layer).
struct FaultLocation {
    uint32_t gap = 0;
    qubit_t qubit = 0;

    auto operator<=>(const FaultLocation&) const = default;
};

/// Noiseless reference execution: measurement outcomes with non-determined
/// results fixed to 0, which measurements were random, and the branch-flip
/// operator for each random one. Shared by both engines so that their
/// sampled outcomes agree bit-exactly per seed.
struct Reference {
    std::vector<uint8_t> bits;
    std::vector<uint8_t> was_random;
    std::vector<int32_t> flip_of_bit;  // bit -> branch-flip index or -1
    std::vector<std::vector<uint64_t>> flip_x;
    std::vector<std::vector<uint64_t>> flip_z;
};

Reference compute_reference(const CircuitIR& circuit);

/// Reference outcomes rendered as a counts string.
std::string noiseless_counts_string(const CircuitIR& circuit);

/// Samples noisy executions with exact Clifford semantics; deterministic
/// given the seed, and identical across engines. Shots are split over
/// `threads` workers with per-shot derived random streams, so the result
/// does not depend on the thread count.
CountsRecord simulate(const CircuitIR& circuit,
                      const NoiseModel& noise,
                      uint64_t shots,
                      uint64_t seed,
                      Engine engine = Engine::Auto,
                      int threads = 1,
                      const std::string& circuit_id = "");

/// Runs the noiseless circuit with exactly one inserted Pauli and returns
/// the classical bits whose values differ from the reference, ascending.
std::vector<uint32_t> simulate_with_fault(const CircuitIR& circuit, const FaultLocation& where, char pauli);

/// Reusable fault-propagation scratch for exhaustive sweeps.
class FaultRunner {
  public:
    explicit FaultRunner(const CircuitIR& circuit);

    /// Flipped classical bits, ascending. The location must satisfy
    /// gap <= num_layers() and qubit < num_qubits.
    void run(const FaultLocation& where, char pauli, std::vector<uint32_t>& out_flips);

  private:
    const CircuitIR& circuit_;
    std::vector<uint64_t> fx_, fz_;
    std::vector<uint8_t> flip_bits_;
};

/// Single-shot engines used by simulate(); exposed for cross-checking.
void run_shot_frame(const CircuitIR& circuit,
                    const Reference& ref,
                    const NoiseModel& noise,
                    ShotRng& rng,
                    std::vector<uint8_t>& out_bits);
void run_shot_tableau(const CircuitIR& circuit,
                      const Reference& ref,
                      const NoiseModel& noise,
                      ShotRng& rng,
                      std::vector<uint8_t>& out_bits);

}  // namespace arc

#endif
