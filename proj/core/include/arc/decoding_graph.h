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

#ifndef ARC_DECODING_GRAPH_H
#define ARC_DECODING_GRAPH_H

#include <string>
#include <vector>

#include "arc/detection.h"
#include "arc/link_graph.h"
#include "arc/simulator.h"

namespace arc {

enum class EdgeClass : uint8_t {
    CodeBitFlip,
    CodePhaseFlip,
    AuxFlip,
    Misassignment,
    Conjugate,
    Feedforward,
};

std::string edge_class_name(EdgeClass cls);

struct DecodingEdge {
    uint32_t node_a = 0;
    uint32_t node_b = 0;  // == node_a for self-edges
    EdgeClass cls = EdgeClass::AuxFlip;
    qubit_t qubit = 0;
    double t_lo = 0;
    double t_hi = 0;
    uint32_t fault_multiplicity = 0;
    // Code qubits whose final readout the generating fault flips; the
    // per-mechanism correction applied when the decoder selects this edge.
    std::vector<qubit_t> readout_flips;

    bool is_self() const {
        return node_a == node_b;
    }
};

struct UndetectableFault {
    FaultLocation where;
    char pauli;
};

/// Nodes are the possible detection events of a circuit; edges join the node
/// pairs produced by exhaustive single-Pauli fault propagation, annotated
/// with the responsible qubit, an error class, and the time range implied by
/// the schedule. One virtual node stands for the logical readout: faults
/// that flip the designated qubit's final value connect their events to it,
/// so the decoder can only toggle the logical by reaching that boundary.
struct DecodingGraph {
    std::vector<DetectionEvent> nodes;  // defs first, then the sentinel logical node
    std::vector<uint8_t> node_ff;       // feedforward-sensitive comparison flags
    uint32_t logical_node = 0;
    std::vector<DecodingEdge> edges;
    std::vector<std::vector<uint32_t>> incident_edges;  // node -> edge indices
    std::vector<UndetectableFault> undetectable;

    bool is_logical(uint32_t node) const {
        return node == logical_node;
    }
    /// Distinct-neighbour degree over detection-event nodes, self-edges
    /// excluded; the virtual logical node is not scanned.
    size_t max_node_degree() const;
    size_t node_degree(uint32_t node) const;
};

/// The point between the jth and (j+1)th layers of round r, with lambda
/// layers per round.
double time_coordinate(int round, int layer_index, int lambda);

DecodingGraph build_decoding_graph(const CircuitIR& circuit,
                                   const LinkGraph& graph,
                                   const Schedule& schedule,
                                   const DetectionContext& ctx);

}  // namespace arc

#endif
