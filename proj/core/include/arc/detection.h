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

#ifndef ARC_DETECTION_H
#define ARC_DETECTION_H

#include <string>
#include <vector>

#include "arc/circuit.h"
#include "arc/link_graph.h"
#include "arc/simulator.h"

namespace arc {

/// One possible detection event, expressed as the parity of a few classical
/// bits compared against the same parity in the noiseless reference.
struct EventDef {
    DetectionEvent node;
    uint32_t link = NO_LINK;
    std::vector<uint32_t> bits;
    bool ff_sensitive = false;  // first comparison after a [[2,0,2]] hold
};

/// Comparison rules for one circuit, derived from its measurement metadata:
/// with resets each syndrome value is a measured bit, without resets it is
/// the XOR with the previous measurement of the same auxiliary; events
/// compare consecutive same-kind syndrome values, first-round values compare
/// against the noiseless reference, final-readout link values are the parity
/// of the link's code-qubit bits, and measurements held through a [[2,0,2]]
/// block act as feedforward controls rather than events.
struct DetectionContext {
    const CircuitIR* circuit = nullptr;
    CountsLayout layout;
    std::vector<EventDef> defs;               // sorted by node
    std::vector<uint8_t> ref_parity;          // per def, evaluated on the reference
    std::vector<std::vector<uint32_t>> defs_of_bit;
    uint32_t raw_logical_bit = 0;
};

DetectionContext make_detection_context(const CircuitIR& circuit, const LinkGraph& graph);

struct ShotSyndrome {
    std::vector<uint32_t> def_indices;       // ascending
    std::vector<DetectionEvent> events;      // matching defs, sorted
    int raw_logical = 0;
};

ShotSyndrome extract(const DetectionContext& ctx, const std::string& counts_string);
ShotSyndrome extract_bits(const DetectionContext& ctx, const std::vector<uint8_t>& bits);

/// Event defs triggered by a set of flipped bits (reference parities cancel).
std::vector<uint32_t> events_of_flips(const DetectionContext& ctx, const std::vector<uint32_t>& flipped_bits);

}  // namespace arc

#endif
