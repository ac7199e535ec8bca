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

#ifndef ARC_CIRCUIT_H
#define ARC_CIRCUIT_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arc/link_graph.h"

namespace arc {

enum class OpKind : uint8_t {
    H,
    S,
    SDag,
    X,
    Y,
    Z,
    Idle,      // delay placeholder; optionally noisy
    CX,
    Measure,   // Z-basis measurement producing a classical bit
    Reset,
    CondPauli  // Pauli applied when a previously recorded bit is 1
};

struct Op {
    OpKind kind;
    qubit_t q0 = 0;
    qubit_t q1 = 0;     // CX target
    uint32_t bit = 0;   // Measure: bit produced; CondPauli: controlling bit
    char pauli = 'x';   // CondPauli payload

    bool operator==(const Op&) const = default;
};

enum class MeasKind : uint8_t { Standard, Conjugate, Final };

struct MeasurementInfo {
    uint32_t bit = 0;
    qubit_t qubit = 0;
    int round = 0;                  // 1..T syndrome rounds; T+1 final readout
    uint32_t link = NO_LINK;        // for auxiliary measurements
    MeasKind kind = MeasKind::Standard;
    bool reset_since_prev = true;   // auxiliary reset between this and its previous measurement
    bool is_held_control = false;   // post-hold neighbour measurement of a [[2,0,2]] block
    int block = -1;                 // enclosing [[2,0,2]] block index, if any
};

struct LayerInfo {
    int round = 0;     // 0 = preparation, 1..T = syndrome rounds, T+1 = final readout
    int index = 0;     // layer index within the round
    bool is_measurement = false;
};

struct Block202 {
    uint32_t link = NO_LINK;
    int first_round = 0;  // step-1 round
    int last_round = 0;   // step-3 round
    struct Correction {
        qubit_t qubit;
        char pauli;
        uint32_t neighbor_link;
        uint32_t control_bit;
    };
    std::vector<Correction> corrections;
};

/// Layered Clifford circuit for one encoding-basis variant of a memory
/// experiment, together with per-bit measurement metadata.
struct CircuitIR {
    uint32_t num_qubits = 0;
    int rounds = 0;  // T
    int lambda = 0;  // CX layers + 1 measurement layer per syndrome round
    bool resets = true;
    bool ff = true;
    bool run_202 = false;  // true when [[2,0,2]] blocks were actually inserted
    std::string basis;
    int logical = 0;
    qubit_t designated_readout = 0;

    std::vector<std::vector<Op>> layers;
    std::vector<LayerInfo> layer_info;
    std::vector<double> layer_time;  // start-of-layer time coordinate
    std::vector<MeasurementInfo> measurements;  // indexed by classical bit id
    std::map<qubit_t, char> qubit_basis;        // code qubit -> basis character
    std::vector<Block202> blocks;

    size_t num_bits() const {
        return measurements.size();
    }
    size_t num_layers() const {
        return layers.size();
    }
};

/// Rendering order of the counts string. Groups appear space-separated, the
/// final code-qubit readout leftmost, then round T down to round 1 at the
/// right. Within a group, bits are ordered by descending qubit id.
struct CountsLayout {
    std::vector<std::vector<uint32_t>> groups;  // groups[0] = round 1, ..., groups[T] = final
    size_t string_length = 0;
    std::vector<uint32_t> bit_to_pos;  // bit id -> character index in the rendered string
};

CountsLayout readout_layout(const CircuitIR& circuit);
std::string render_counts_string(const CountsLayout& layout, const std::vector<uint8_t>& bits);
/// Throws std::invalid_argument on malformed or mis-sized strings.
std::vector<uint8_t> parse_counts_string(const CountsLayout& layout, const std::string& str);

}  // namespace arc

#endif
