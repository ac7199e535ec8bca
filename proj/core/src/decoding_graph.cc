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

#include "arc/decoding_graph.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace arc {

std::string edge_class_name(EdgeClass cls) {
    switch (cls) {
        case EdgeClass::CodeBitFlip:
            return "code-bitflip";
        case EdgeClass::CodePhaseFlip:
            return "code-phaseflip";
        case EdgeClass::AuxFlip:
            return "aux-flip";
        case EdgeClass::Misassignment:
            return "misassignment";
        case EdgeClass::Conjugate:
            return "conjugate";
        case EdgeClass::Feedforward:
            return "feedforward";
    }
    return "?";
}

double time_coordinate(int round, int layer_index, int lambda) {
    return round + double(layer_index) / double(lambda);
}

size_t DecodingGraph::node_degree(uint32_t node) const {
    std::set<uint32_t> neighbors;
    for (uint32_t e : incident_edges[node]) {
        const DecodingEdge& edge = edges[e];
        if (edge.is_self()) {
            continue;
        }
        neighbors.insert(edge.node_a == node ? edge.node_b : edge.node_a);
    }
    return neighbors.size();
}

size_t DecodingGraph::max_node_degree() const {
    size_t best = 0;
    for (uint32_t v = 0; v < nodes.size(); v++) {
        if (is_logical(v)) {
            continue;
        }
        best = std::max(best, node_degree(v));
    }
    return best;
}

namespace {

struct EdgeAccumulator {
    EdgeClass cls;
    qubit_t qubit;
    uint32_t multiplicity = 0;
    double hull_lo = 0;
    double hull_hi = 0;
    std::vector<qubit_t> readout_flips;
};

// Schedule layer indices at which a code qubit interacts with the two links.
std::pair<int, int> interaction_layers(const Schedule& schedule, qubit_t q, uint32_t la, uint32_t lb,
                                       const LinkGraph& graph) {
    int ja = -1, jb = -1;
    for (size_t j = 0; j < schedule.num_layers(); j++) {
        for (const auto& [code, aux] : schedule.layers[j]) {
            if (code != q) {
                continue;
            }
            uint32_t li = graph.link_of_aux(aux);
            if (li == la) {
                ja = int(j);
            } else if (li == lb) {
                jb = int(j);
            }
        }
    }
    return {ja, jb};
}

}  // namespace

DecodingGraph build_decoding_graph(const CircuitIR& circuit,
                                   const LinkGraph& graph,
                                   const Schedule& schedule,
                                   const DetectionContext& ctx) {
    DecodingGraph g;
    g.nodes.reserve(ctx.defs.size() + 1);
    g.node_ff.reserve(ctx.defs.size() + 1);
    for (const EventDef& def : ctx.defs) {
        g.nodes.push_back(def.node);
        g.node_ff.push_back(def.ff_sensitive);
    }
    g.logical_node = uint32_t(g.nodes.size());
    g.nodes.push_back({-1, NO_LINK, false, false});
    g.node_ff.push_back(0);

    std::set<qubit_t> used;
    for (const auto& layer : circuit.layers) {
        for (const Op& op : layer) {
            used.insert(op.q0);
            if (op.kind == OpKind::CX) {
                used.insert(op.q1);
            }
        }
    }

    FaultRunner runner(circuit);
    std::vector<uint32_t> flips;
    std::map<std::tuple<uint32_t, uint32_t, EdgeClass>, EdgeAccumulator> acc;

    for (uint32_t gap = 0; gap <= circuit.num_layers(); gap++) {
        double t = gap < circuit.num_layers() ? circuit.layer_time[gap]
                                              : circuit.layer_time.back() + 1.0;
        for (qubit_t q : used) {
            for (char pauli : {'x', 'y', 'z'}) {
                runner.run({gap, q}, pauli, flips);
                std::vector<uint32_t> events = events_of_flips(ctx, flips);
                if (events.empty()) {
                    g.undetectable.push_back({{gap, q}, pauli});
                    continue;
                }
                bool logical_flip = std::binary_search(flips.begin(), flips.end(), ctx.raw_logical_bit);

                EdgeClass cls;
                bool any_ff = false, any_conj = false;
                for (uint32_t e : events) {
                    any_ff |= ctx.defs[e].ff_sensitive;
                    any_conj |= ctx.defs[e].node.is_conjugate;
                }
                if (any_ff) {
                    cls = EdgeClass::Feedforward;
                } else if (any_conj) {
                    cls = EdgeClass::Conjugate;
                } else if (graph.is_auxiliary(q)) {
                    cls = EdgeClass::AuxFlip;
                    if (events.size() == 2) {
                        const DetectionEvent& a = ctx.defs[events[0]].node;
                        const DetectionEvent& b = ctx.defs[events[1]].node;
                        if (a.link == b.link && !a.is_final && !b.is_final &&
                            std::abs(a.time - b.time) == 2 && !circuit.resets) {
                            cls = EdgeClass::Misassignment;
                        }
                    }
                } else {
                    cls = circuit.qubit_basis.count(q) && circuit.qubit_basis.at(q) == 'z'
                              ? EdgeClass::CodeBitFlip
                              : EdgeClass::CodePhaseFlip;
                }

                std::vector<qubit_t> readout_flips;
                for (uint32_t bit : flips) {
                    if (circuit.measurements[bit].kind == MeasKind::Final) {
                        readout_flips.push_back(circuit.measurements[bit].qubit);
                    }
                }
                auto touch = [&](uint32_t na, uint32_t nb) {
                    if (na > nb) {
                        std::swap(na, nb);
                    }
                    auto [it, fresh] = acc.try_emplace({na, nb, cls}, EdgeAccumulator{cls, q, 0, t, t, readout_flips});
                    it->second.multiplicity++;
                    it->second.hull_lo = std::min(it->second.hull_lo, t);
                    it->second.hull_hi = std::max(it->second.hull_hi, t);
                };
                std::vector<uint32_t> endpoints = events;
                if (logical_flip) {
                    endpoints.push_back(g.logical_node);
                }
                if (endpoints.size() == 1) {
                    touch(endpoints[0], endpoints[0]);
                } else {
                    for (size_t i = 0; i < endpoints.size(); i++) {
                        for (size_t j = i + 1; j < endpoints.size(); j++) {
                            touch(endpoints[i], endpoints[j]);
                        }
                    }
                }
            }
        }
    }

    const int lambda = circuit.lambda;
    for (const auto& [key, a] : acc) {
        auto [na, nb, cls] = key;
        DecodingEdge edge;
        edge.node_a = na;
        edge.node_b = nb;
        edge.cls = cls;
        edge.qubit = a.qubit;
        edge.fault_multiplicity = a.multiplicity;
        edge.t_lo = a.hull_lo;
        edge.t_hi = a.hull_hi;
        edge.readout_flips = a.readout_flips;

        const DetectionEvent& ea = g.nodes[na];
        const DetectionEvent& eb = g.nodes[nb];
        if (na == g.logical_node || nb == g.logical_node) {
            g.edges.push_back(edge);  // boundary edges keep the fault hull
            continue;
        }
        bool same_link = ea.link == eb.link && na != nb;
        bool rule_applied = false;
        if (same_link && (cls == EdgeClass::AuxFlip || cls == EdgeClass::Misassignment)) {
            int r = std::min(ea.time, eb.time);
            if (circuit.resets || ea.is_final || eb.is_final) {
                // Flip and misassignment cannot be told apart: the range is
                // the entire first round in which the error was detected.
                edge.t_lo = r;
                edge.t_hi = r + 1.0;
            } else if (cls == EdgeClass::Misassignment) {
                edge.t_lo = time_coordinate(r, lambda - 1, lambda);
                edge.t_hi = r + 1.0;
            } else {
                edge.t_lo = r;
                edge.t_hi = time_coordinate(r, lambda - 1, lambda);
            }
            rule_applied = true;
        } else if (!same_link && na != nb && (cls == EdgeClass::CodeBitFlip || cls == EdgeClass::CodePhaseFlip)) {
            auto shared = [&]() -> int64_t {
                const Link& la = graph.link(ea.link);
                const Link& lb = graph.link(eb.link);
                for (qubit_t q : {la.code_a, la.code_b}) {
                    if (lb.has_code(q)) {
                        return q;
                    }
                }
                return -1;
            }();
            if (shared >= 0) {
                auto [ja, jb] = interaction_layers(schedule, qubit_t(shared), ea.link, eb.link, graph);
                if (ja >= 0 && jb >= 0) {
                    int j_min = std::min(ja, jb), j_max = std::max(ja, jb);
                    // Order nodes in time; final counts as after round T.
                    auto order = [](const DetectionEvent& e) {
                        return e.time * 2 + (e.is_final ? 1 : 0);
                    };
                    int oa = order(ea), ob = order(eb);
                    if (oa == ob) {
                        if (ea.is_final) {
                            // Between the last interactions of round T and readout.
                            edge.t_lo = time_coordinate(ea.time, j_max, lambda);
                            edge.t_hi = ea.time + 1.0;
                        } else {
                            // Between the last interaction in the earlier
                            // round and the first in the detecting round.
                            int r = ea.time;
                            edge.t_lo = time_coordinate(r - 1, j_max, lambda);
                            edge.t_hi = time_coordinate(r, j_min + 1, lambda);
                        }
                    } else {
                        // Between the two interactions within the earlier round.
                        int r_early = std::min(oa, ob) / 2;
                        edge.t_lo = time_coordinate(r_early, j_min, lambda);
                        edge.t_hi = time_coordinate(r_early, j_max + 1, lambda);
                    }
                    rule_applied = true;
                }
            }
        }
        (void)rule_applied;  // hull retained otherwise (self, conjugate, feedforward)
        g.edges.push_back(edge);
    }

    g.incident_edges.assign(g.nodes.size(), {});
    for (uint32_t e = 0; e < g.edges.size(); e++) {
        g.incident_edges[g.edges[e].node_a].push_back(e);
        if (!g.edges[e].is_self()) {
            g.incident_edges[g.edges[e].node_b].push_back(e);
        }
    }
    return g;
}

}  // namespace arc
