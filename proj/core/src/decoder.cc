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

#include "arc/decoder.h"

#include <algorithm>
#include <stdexcept>

namespace arc {

ClusterDecoder::ClusterDecoder(const DecodingGraph& dgraph,
                               const LinkGraph& graph,
                               const CycleBasis& basis,
                               qubit_t designated_readout)
    : dgraph_(dgraph), graph_(graph), basis_(basis), designated_(designated_readout) {
    parent_.assign(dgraph_.nodes.size(), -1);
    growth_.assign(dgraph_.edges.size(), 0);
}

uint32_t ClusterDecoder::find(uint32_t node) {
    uint32_t root = node;
    while (parent_[root] != int32_t(root)) {
        root = uint32_t(parent_[root]);
    }
    while (parent_[node] != int32_t(root)) {
        uint32_t next = uint32_t(parent_[node]);
        parent_[node] = int32_t(root);
        node = next;
    }
    return root;
}

void ClusterDecoder::refresh_neutrality(ClusterData& c, bool exhausted) {
    std::vector<DetectionEvent> events;
    events.reserve(c.events.size());
    for (uint32_t e : c.events) {
        events.push_back(dgraph_.nodes[e]);
    }
    c.neutral = false;
    c.region.clear();
    c.flip_side.clear();
    auto region = bicolor_query(graph_, basis_, flatten(events));
    if (!region.has_value()) {
        return;
    }
    size_t total = graph_.num_code_qubits();
    bool tie = 2 * region->size() == total;
    if (tie && !exhausted) {
        return;  // both sides cost the same; grow for more context
    }
    std::set<qubit_t> chosen = *region;
    if (tie && chosen.count(designated_)) {
        std::set<qubit_t> complement;
        for (qubit_t q : graph_.code_qubits()) {
            if (!chosen.count(q)) {
                complement.insert(q);
            }
        }
        chosen = std::move(complement);
    }
    if (chosen.count(designated_) && !c.owns_logical && !exhausted) {
        return;  // must reach the logical boundary before toggling it
    }
    c.neutral = true;
    c.region = std::move(*region);
    c.flip_side = std::move(chosen);
}

DecodeResult ClusterDecoder::decode(const ShotSyndrome& shot) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(growth_.begin(), growth_.end(), 0);
    clusters_.clear();

    for (uint32_t node : shot.def_indices) {
        if (node >= dgraph_.nodes.size()) {
            throw std::invalid_argument("event outside the decoding graph");
        }
        parent_[node] = int32_t(node);
        ClusterData& c = clusters_[node];
        c.events.push_back(node);
        c.members.push_back(node);
    }

    // Uniform, weight-agnostic growth: every non-neutral cluster advances
    // each boundary edge by half a step, merging on contact, until all
    // clusters are neutral. Neutrality is evaluated after growing, so
    // coincident events merge before either side can settle on a
    // smaller-but-wrong explanation of its own.
    size_t passes = 0;
    const size_t pass_limit = 2 * dgraph_.edges.size() + 4;
    while (true) {
        std::vector<uint32_t> active;
        for (const auto& [root, c] : clusters_) {
            if (!c.neutral) {
                active.push_back(root);
            }
        }
        if (active.empty()) {
            break;
        }
        if (++passes > pass_limit) {
            throw std::runtime_error("cluster growth failed to converge");
        }

        bool progress = false;
        std::set<uint32_t> dirty;
        for (uint32_t root : active) {
            if (find(root) != root) {
                continue;  // merged earlier in this pass
            }
            dirty.insert(root);
            // Boundary edges, deduplicated; an edge seen from two members
            // still grows by a single half-step.
            std::vector<uint32_t> boundary;
            for (uint32_t u : clusters_.at(root).members) {
                for (uint32_t e : dgraph_.incident_edges[u]) {
                    const DecodingEdge& edge = dgraph_.edges[e];
                    if (edge.is_self() || growth_[e] >= 2) {
                        continue;
                    }
                    boundary.push_back(e);
                }
            }
            std::sort(boundary.begin(), boundary.end());
            boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());

            for (uint32_t e : boundary) {
                const DecodingEdge& edge = dgraph_.edges[e];
                uint32_t ra = parent_[edge.node_a] < 0 ? UINT32_MAX : find(edge.node_a);
                uint32_t rb = parent_[edge.node_b] < 0 ? UINT32_MAX : find(edge.node_b);
                if (ra == rb && ra != UINT32_MAX) {
                    continue;  // internal
                }
                growth_[e]++;
                progress = true;
                if (growth_[e] < 2) {
                    continue;
                }
                // Fully grown: absorb free endpoints, merge touching clusters.
                uint32_t home = find(root);
                for (uint32_t v : {edge.node_a, edge.node_b}) {
                    if (parent_[v] < 0) {
                        parent_[v] = int32_t(home);
                        ClusterData& h = clusters_.at(home);
                        h.members.push_back(v);
                        h.owns_logical |= dgraph_.is_logical(v);
                    } else {
                        uint32_t rv = find(v);
                        if (rv == home) {
                            continue;
                        }
                        ClusterData& a = clusters_.at(home);
                        ClusterData& b = clusters_.at(rv);
                        uint32_t winner = a.members.size() >= b.members.size() ? home : rv;
                        uint32_t loser = winner == home ? rv : home;
                        ClusterData& w = clusters_.at(winner);
                        ClusterData& l = clusters_.at(loser);
                        w.events.insert(w.events.end(), l.events.begin(), l.events.end());
                        w.members.insert(w.members.end(), l.members.begin(), l.members.end());
                        w.owns_logical |= l.owns_logical;
                        parent_[loser] = int32_t(winner);
                        clusters_.erase(loser);
                        home = winner;
                    }
                }
                dirty.insert(home);
            }
        }
        for (uint32_t root : dirty) {
            uint32_t r = find(root);
            if (clusters_.count(r)) {
                refresh_neutrality(clusters_.at(r), false);
            }
        }
        if (!progress) {
            // Growth is exhausted: accept tied clusters, then anything still
            // non-neutral is genuinely undecodable.
            bool stuck = false;
            for (auto& [root, c] : clusters_) {
                if (!c.neutral) {
                    refresh_neutrality(c, true);
                    stuck |= !c.neutral;
                }
            }
            if (stuck) {
                throw std::runtime_error("syndrome is not decodable (flattened form is not a cut)");
            }
        }
    }

    DecodeResult result;
    result.raw_logical = shot.raw_logical;
    bool flip = false;
    for (auto& [root, c] : clusters_) {
        Cluster out;
        std::sort(c.events.begin(), c.events.end());
        out.event_nodes = c.events;
        out.neutral = true;
        // The flattened form's smaller side sets the size; the flipped
        // qubits come from peeling, which keeps the time structure the
        // flattening discards.
        out.size = int(c.region.size());
        auto peeled = peel_region(c);
        out.flip_region = peeled.has_value() ? std::move(*peeled) : c.flip_side;
        flip ^= out.flip_region.count(designated_) > 0;
        result.clusters.push_back(std::move(out));
    }
    result.corrected_logical = result.raw_logical ^ int(flip);
    result.logical_flipped = flip;
    return result;
}

std::optional<std::set<qubit_t>> ClusterDecoder::peel_region(const ClusterData& c) {
    std::set<uint32_t> members(c.members.begin(), c.members.end());
    std::set<uint32_t> pending(c.events.begin(), c.events.end());

    auto has_self_edge = [&](uint32_t v) {
        for (uint32_t e : dgraph_.incident_edges[v]) {
            if (dgraph_.edges[e].is_self()) {
                return true;
            }
        }
        return false;
    };
    // Prefer rooting at the boundary: leftover parity discharges there.
    uint32_t root = *members.begin();
    if (members.count(dgraph_.logical_node)) {
        root = dgraph_.logical_node;
    } else {
        for (uint32_t v : members) {
            if (has_self_edge(v)) {
                root = v;
                break;
            }
        }
    }

    std::map<uint32_t, std::pair<uint32_t, uint32_t>> parent_edge;  // node -> (parent, edge)
    std::vector<uint32_t> order{root};
    std::set<uint32_t> visited{root};
    for (size_t head = 0; head < order.size(); head++) {
        uint32_t u = order[head];
        for (uint32_t e : dgraph_.incident_edges[u]) {
            const DecodingEdge& edge = dgraph_.edges[e];
            if (edge.is_self()) {
                continue;
            }
            uint32_t v = edge.node_a == u ? edge.node_b : edge.node_a;
            if (!members.count(v) || !visited.insert(v).second) {
                continue;
            }
            parent_edge[v] = {u, e};
            order.push_back(v);
        }
    }
    if (visited.size() != members.size()) {
        return std::nullopt;
    }

    std::set<qubit_t> region;
    auto apply_flips = [&](const std::vector<qubit_t>& flips) {
        for (qubit_t q : flips) {
            if (!region.erase(q)) {
                region.insert(q);
            }
        }
    };
    for (size_t i = order.size(); i-- > 1;) {
        uint32_t v = order[i];
        if (!pending.count(v)) {
            continue;
        }
        auto [u, e] = parent_edge.at(v);
        pending.erase(v);
        if (!dgraph_.is_logical(u) && !pending.insert(u).second) {
            pending.erase(u);
        }
        apply_flips(dgraph_.edges[e].readout_flips);
    }
    if (pending.count(root)) {
        const DecodingEdge* self = nullptr;
        for (uint32_t e : dgraph_.incident_edges[root]) {
            if (dgraph_.edges[e].is_self()) {
                self = &dgraph_.edges[e];
                break;
            }
        }
        if (self == nullptr) {
            return std::nullopt;
        }
        apply_flips(self->readout_flips);
        pending.erase(root);
    }
    if (!pending.empty()) {
        return std::nullopt;
    }

    std::vector<DetectionEvent> events;
    events.reserve(c.events.size());
    for (uint32_t e : c.events) {
        events.push_back(dgraph_.nodes[e]);
    }
    if (region_boundary(graph_, region) != flatten(events)) {
        return std::nullopt;
    }
    return region;
}

std::map<int, double> cluster_histogram(const std::vector<DecodeResult>& results) {
    std::map<int, double> hist;
    for (const DecodeResult& r : results) {
        for (const Cluster& c : r.clusters) {
            hist[c.size] += 1.0;
        }
    }
    for (auto& [size, value] : hist) {
        value /= double(results.size());
    }
    return hist;
}

double logical_error_rate(const std::vector<DecodeResult>& results, int encoded) {
    if (results.empty()) {
        throw std::invalid_argument("logical_error_rate needs at least one shot");
    }
    uint64_t errors = 0;
    for (const DecodeResult& r : results) {
        errors += r.corrected_logical != encoded;
    }
    return double(errors) / double(results.size());
}

void ClusterStats::add(const DecodeResult& result, uint64_t weight, int encoded) {
    shots += weight;
    if (result.corrected_logical != encoded) {
        logical_errors += weight;
    }
    for (const Cluster& c : result.clusters) {
        size_counts[c.size] += weight;
    }
}

void ClusterStats::merge(const ClusterStats& other) {
    shots += other.shots;
    logical_errors += other.logical_errors;
    for (const auto& [size, n] : other.size_counts) {
        size_counts[size] += n;
    }
}

std::map<int, double> ClusterStats::histogram() const {
    std::map<int, double> hist;
    for (const auto& [size, n] : size_counts) {
        hist[size] = double(n) / double(shots);
    }
    return hist;
}

double ClusterStats::logical_error_rate() const {
    return shots == 0 ? 0.0 : double(logical_errors) / double(shots);
}

}  // namespace arc
