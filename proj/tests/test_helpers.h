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

#ifndef ARC_TEST_HELPERS_H
#define ARC_TEST_HELPERS_H

#include <string>
#include <vector>

#include "arc/builder.h"
#include "arc/circuit.h"
#include "arc/link_graph.h"
#include "arc/simulator.h"

namespace arc::testing {

inline LinkGraph d3_lagos() {
    return LinkGraph({{0, 1, 3}, {3, 5, 6}});
}

inline LinkGraph linear_chain(int d) {
    std::vector<Link> links;
    for (int i = 0; i + 1 < d; i++) {
        links.push_back({qubit_t(2 * i), qubit_t(2 * i + 1), qubit_t(2 * i + 2)});
    }
    return LinkGraph(links);
}

inline LinkGraph line202() {
    return LinkGraph({{0, 1, 4}, {4, 7, 10}, {10, 12, 15}});
}

inline CircuitIR build_simple(const LinkGraph& g, const ArcOptions& opts, const std::string& variant = "") {
    Coloring c = auto_color(g);
    Schedule s = auto_schedule(g);
    return build_arc_variant(g, c, s, opts, variant.empty() ? opts.basis : variant);
}

// Index of the first layer belonging to the given round (0 = preparation,
// 1..T = syndrome rounds, T+1 = final readout).
inline uint32_t gap_before_round(const CircuitIR& circuit, int round) {
    for (uint32_t i = 0; i < circuit.layer_info.size(); i++) {
        if (circuit.layer_info[i].round == round) {
            return i;
        }
    }
    return uint32_t(circuit.num_layers());
}

// Gap immediately before the measurement layer of the given round.
inline uint32_t gap_before_measurement(const CircuitIR& circuit, int round) {
    for (uint32_t i = 0; i < circuit.layer_info.size(); i++) {
        if (circuit.layer_info[i].round == round && circuit.layer_info[i].is_measurement) {
            return i;
        }
    }
    return uint32_t(circuit.num_layers());
}

inline std::string string_with_flips(const CircuitIR& circuit, const std::vector<uint32_t>& flips) {
    Reference ref = compute_reference(circuit);
    std::vector<uint8_t> bits = ref.bits;
    for (uint32_t b : flips) {
        bits[b] ^= 1;
    }
    return render_counts_string(readout_layout(circuit), bits);
}

}  // namespace arc::testing

#endif
