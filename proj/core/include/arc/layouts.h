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

#ifndef ARC_LAYOUTS_H
#define ARC_LAYOUTS_H

#include <map>
#include <utility>

#include "arc/link_graph.h"

namespace arc {

/// Heavy-hex link graph: qubits on the vertices of a honeycomb lattice are
/// code qubits, qubits on its edges are auxiliaries. Supported sizes: 127
/// (the 127-qubit device layout: 54 code qubits, 71 links, qubits 13 and 113
/// unused) and 12 (a single hexagon: 6 code qubits, 6 links).
LinkGraph heavy_hex(int num_qubits);

/// Linear chain of `distance` code qubits at even ids, auxiliaries between.
LinkGraph linear_graph(int distance);

/// The minimal three-links-in-a-line [[2,0,2]] demonstration layout.
LinkGraph line202_graph();

/// Plot coordinates. Heavy-hex sizes get their lattice positions; other
/// graphs fall back to a generic arrangement.
std::map<qubit_t, std::pair<double, double>> layout_coords(const LinkGraph& graph);

}  // namespace arc

#endif
