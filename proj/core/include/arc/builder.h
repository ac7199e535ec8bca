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

#ifndef ARC_BUILDER_H
#define ARC_BUILDER_H

#include <map>
#include <string>
#include <utility>

#include "arc/circuit.h"
#include "arc/link_graph.h"

namespace arc {

struct ArcOptions {
    int rounds = 0;  // T
    std::string basis = "xz";
    int logical = 0;
    bool resets = true;
    bool conditional_reset = false;  // reset via an X conditioned on the measured bit
    bool run_202 = false;
    int rounds_per_202 = 9;  // at least 9
    bool ff = true;          // undo [[2,0,2]] side effects via feedforward
    bool barriers = true;    // layer bookkeeping only; no circuit effect
    int delay = 0;           // idle placeholders on auxiliaries after mid-circuit measurements
};

/// Observables measured on a link, as (basis of code_a, basis of code_b).
std::pair<char, char> standard_observable(const Link& link, const Coloring& coloring, const std::string& basis);

/// The tensor-reversed standard observable. For a monochromatic link the
/// reversal is a no-op, so a fixed distinct basis is substituted on both
/// qubits (x->z, z->x, y->x) to keep the qubit-wise anticommutation.
std::pair<char, char> conjugate_observable(const Link& link, const Coloring& coloring, const std::string& basis);

/// Links eligible for a [[2,0,2]] sequence: both code qubits must have a
/// neighbouring link to define the feedforward corrections.
std::vector<uint32_t> links_202(const LinkGraph& graph);

/// Builds the memory-experiment circuits for the declared basis and its
/// reverse (the conjugate encoding). Keys are the two-character basis
/// strings; a palindromic basis yields a single entry.
std::map<std::string, CircuitIR> build_arc(const LinkGraph& graph,
                                           const Coloring& coloring,
                                           const Schedule& schedule,
                                           const ArcOptions& options);

/// Single-variant version of build_arc.
CircuitIR build_arc_variant(const LinkGraph& graph,
                            const Coloring& coloring,
                            const Schedule& schedule,
                            const ArcOptions& options,
                            const std::string& basis_variant);

}  // namespace arc

#endif
