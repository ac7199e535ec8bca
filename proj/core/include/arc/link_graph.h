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

#ifndef ARC_LINK_GRAPH_H
#define ARC_LINK_GRAPH_H

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arc/events.h"

namespace arc {

constexpr uint32_t NO_LINK = UINT32_MAX;

/// Two code qubits and the shared auxiliary that mediates their parity check.
struct Link {
    qubit_t code_a;
    qubit_t aux;
    qubit_t code_b;

    bool has_code(qubit_t q) const {
        return q == code_a || q == code_b;
    }
    qubit_t other_code(qubit_t q) const {
        return q == code_a ? code_b : code_a;
    }
    auto operator<=>(const Link&) const = default;
};

/// Spatial structure of a code: code qubits are the vertices, links are the
/// edges. Immutable after construction; all queries are read-only.
///
/// The constructor rejects graphs that reuse an auxiliary, repeat a code
/// qubit pair, or are disconnected (a disconnected instance is several
/// independent codes and callers should split it).
class LinkGraph {
  public:
    explicit LinkGraph(std::vector<Link> links);

    const std::vector<Link>& links() const {
        return links_;
    }
    const Link& link(uint32_t index) const {
        return links_[index];
    }
    size_t num_links() const {
        return links_.size();
    }

    /// Sorted ascending.
    const std::vector<qubit_t>& code_qubits() const {
        return code_qubits_;
    }
    size_t num_code_qubits() const {
        return code_qubits_.size();
    }
    bool is_code_qubit(qubit_t q) const {
        return incident_.count(q) > 0;
    }
    bool is_auxiliary(qubit_t q) const {
        return aux_to_link_.count(q) > 0;
    }
    qubit_t max_qubit_id() const {
        return max_qubit_;
    }

    /// Link indices incident to a code qubit.
    const std::vector<uint32_t>& links_of(qubit_t code) const;
    size_t degree(qubit_t code) const {
        return links_of(code).size();
    }
    size_t max_degree() const {
        return max_degree_;
    }
    uint32_t link_of_aux(qubit_t aux) const;
    std::optional<uint32_t> link_between(qubit_t a, qubit_t b) const;

    /// Links of the given link's neighbours: links sharing a code qubit.
    std::vector<uint32_t> neighbor_links(uint32_t link_index) const;

  private:
    std::vector<Link> links_;
    std::vector<qubit_t> code_qubits_;
    std::map<qubit_t, std::vector<uint32_t>> incident_;
    std::map<qubit_t, uint32_t> aux_to_link_;
    qubit_t max_qubit_ = 0;
    size_t max_degree_ = 0;
};

/// Code qubit -> {0, 1}. Total on all code qubits.
using Coloring = std::map<qubit_t, int>;

/// Layers of simultaneous (code qubit, auxiliary) interactions. Every link
/// contributes two pairs, each in exactly one layer, and no qubit appears
/// twice within a layer.
struct Schedule {
    std::vector<std::vector<std::pair<qubit_t, qubit_t>>> layers;

    size_t num_layers() const {
        return layers.size();
    }
};

/// Fundamental cycle basis of the link graph, indexed so the cycles through
/// any given link can be found quickly.
struct CycleBasis {
    std::vector<std::vector<uint32_t>> cycles;  // sorted link-index sets
    std::map<uint32_t, std::vector<uint32_t>> link_to_cycles;
};

/// Number of links joining same-colored code qubits.
int monochromatic_links(const LinkGraph& graph, const Coloring& coloring);

/// Greedy BFS bicolouring followed by local-search recolouring that
/// minimizes the number of monochromatic links. `max_dist` bounds the radius
/// of the recoloured neighbourhoods tried by the local search. For bipartite
/// link graphs the result is always proper.
Coloring auto_color(const LinkGraph& graph, int max_dist = 2);

/// Greedy edge colouring of the code-qubit/auxiliary interaction graph,
/// deterministic given the link ordering. The layer count is at least the
/// maximum code-qubit degree.
Schedule auto_schedule(const LinkGraph& graph);

bool schedule_is_valid(const LinkGraph& graph, const Schedule& schedule);

/// Fundamental cycle basis from a BFS spanning tree rooted at the lowest
/// code qubit id.
CycleBasis cycle_basis(const LinkGraph& graph);

/// Links with odd multiplicity in the event multiset.
std::set<uint32_t> flatten(const std::vector<DetectionEvent>& events);

/// If `cut_links` is a valid edge cut, returns one complete colour region as
/// a set of code qubits: the smaller of the two sides, ties broken toward
/// the side containing the lowest qubit id. Returns std::nullopt when the
/// link set is not an edge cut. Uses the cycle-basis index so the work
/// scales with the affected region rather than the code size.
std::optional<std::set<qubit_t>> bicolor_query(const LinkGraph& graph,
                                               const CycleBasis& basis,
                                               const std::set<uint32_t>& cut_links);

/// Links with exactly one endpoint in `region`.
std::set<uint32_t> region_boundary(const LinkGraph& graph, const std::set<qubit_t>& region);

}  // namespace arc

#endif
