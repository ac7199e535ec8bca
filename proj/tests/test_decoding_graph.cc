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

#include <gtest/gtest.h>

#include <set>

#include "arc/layouts.h"
#include "test_helpers.h"

using namespace arc;
using namespace arc::testing;

namespace {

struct Built {
    LinkGraph graph;
    CircuitIR circuit;
    DetectionContext ctx;
    DecodingGraph dgraph;
    Schedule schedule;
};

Built build_all(const LinkGraph& g, const ArcOptions& opts, const std::string& variant = "") {
    Coloring col = auto_color(g);
    Schedule sched = auto_schedule(g);
    CircuitIR c = build_arc_variant(g, col, sched, opts, variant.empty() ? opts.basis : variant);
    DetectionContext ctx = make_detection_context(c, g);
    DecodingGraph d = build_decoding_graph(c, g, sched, ctx);
    return {g, std::move(c), std::move(ctx), std::move(d), std::move(sched)};
}

int find_node(const DecodingGraph& d, const DetectionEvent& e) {
    for (uint32_t i = 0; i < d.nodes.size(); i++) {
        if (d.nodes[i] == e) {
            return int(i);
        }
    }
    return -1;
}

const DecodingEdge* find_edge(const DecodingGraph& d, const DetectionEvent& a, const DetectionEvent& b) {
    int na = find_node(d, a), nb = find_node(d, b);
    if (na < 0 || nb < 0) {
        return nullptr;
    }
    for (const DecodingEdge& e : d.edges) {
        if ((int(e.node_a) == std::min(na, nb) && int(e.node_b) == std::max(na, nb))) {
            return &e;
        }
    }
    return nullptr;
}

}  // namespace

TEST(TimeCoordinate, Formula) {
    EXPECT_NEAR(time_coordinate(2, 1, 3), 2.0 + 1.0 / 3.0, 1e-12);
    EXPECT_EQ(time_coordinate(0, 0, 3), 0.0);
    EXPECT_EQ(time_coordinate(5, 3, 3), 6.0);
}

TEST(DecodingGraph, ZFaultOnZBasisQubitIsUndetectable) {
    ArcOptions opts;
    opts.rounds = 2;
    opts.basis = "zz";
    Built b = build_all(linear_chain(3), opts);
    auto flips = simulate_with_fault(b.circuit, {gap_before_round(b.circuit, 2), 2}, 'z');
    EXPECT_TRUE(flips.empty());
    bool listed = false;
    for (const auto& u : b.dgraph.undetectable) {
        listed |= u.where.qubit == 2 && u.pauli == 'z';
    }
    EXPECT_TRUE(listed);
}

TEST(DecodingGraph, MiddleQubitFaultMakesSameTimeEdge) {
    ArcOptions opts;
    opts.rounds = 2;
    opts.basis = "zz";
    Built b = build_all(linear_chain(3), opts);
    const DecodingEdge* e = find_edge(b.dgraph, {2, 0, false, false}, {2, 1, false, false});
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->cls, EdgeClass::CodeBitFlip);
    EXPECT_EQ(e->qubit, 2u);
}

TEST(DecodingGraph, AuxFaultMakesTimeLikeEdgeWithWholeRoundRange) {
    ArcOptions opts;
    opts.rounds = 4;
    opts.basis = "zz";
    Built b = build_all(linear_chain(3), opts);
    ASSERT_EQ(b.circuit.lambda, 3);
    const DecodingEdge* e = find_edge(b.dgraph, {2, 0, false, false}, {3, 0, false, false});
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->cls, EdgeClass::AuxFlip);
    EXPECT_EQ(e->qubit, 1u);
    EXPECT_EQ(e->t_lo, 2.0);
    EXPECT_EQ(e->t_hi, 3.0);
}

TEST(DecodingGraph, DiagonalEdgeRangeSpansInteractionLayers) {
    ArcOptions opts;
    opts.rounds = 4;
    opts.basis = "zz";
    Built b = build_all(linear_chain(3), opts);
    // Qubit 2 interacts with link 1 at layer 0 and link 0 at layer 1; an X
    // between them flips link 0 in-round and link 1 next round.
    const DecodingEdge* e = find_edge(b.dgraph, {2, 0, false, false}, {3, 1, false, false});
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->cls, EdgeClass::CodeBitFlip);
    EXPECT_EQ(e->qubit, 2u);
    EXPECT_NEAR(e->t_lo, 2.0, 1e-12);
    EXPECT_NEAR(e->t_hi, 2.0 + 2.0 / 3.0, 1e-12);
}

TEST(DecodingGraph, SameTimeEdgeRangeBridgesRounds) {
    ArcOptions opts;
    opts.rounds = 4;
    opts.basis = "zz";
    Built b = build_all(linear_chain(3), opts);
    const DecodingEdge* e = find_edge(b.dgraph, {3, 0, false, false}, {3, 1, false, false});
    ASSERT_NE(e, nullptr);
    // Last interaction of qubit 2 in round 2 is layer 1; first in round 3 is
    // layer 0.
    EXPECT_NEAR(e->t_lo, 2.0 + 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(e->t_hi, 3.0 + 1.0 / 3.0, 1e-12);
}

TEST(DecodingGraph, NoResetModelProducesNoMisassignmentEdges) {
    ArcOptions opts;
    opts.rounds = 4;
    opts.basis = "zx";
    opts.resets = false;
    Built b = build_all(d3_lagos(), opts);
    for (const DecodingEdge& e : b.dgraph.edges) {
        EXPECT_NE(e.cls, EdgeClass::Misassignment);
    }
    // Auxiliary state flips land one round apart instead.
    const DecodingEdge* e = find_edge(b.dgraph, {2, 0, false, false}, {3, 0, false, false});
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->cls, EdgeClass::AuxFlip);
    EXPECT_NEAR(e->t_hi, 2.0 + 2.0 / 3.0, 1e-12);
}

TEST(DecodingGraph, EveryFaultIsEdgedOrListedExhaustively) {
    std::vector<std::pair<LinkGraph, ArcOptions>> cases;
    {
        ArcOptions o;
        o.rounds = 3;
        o.basis = "zx";
        cases.push_back({d3_lagos(), o});
        o.resets = false;
        cases.push_back({d3_lagos(), o});
        ArcOptions o2;
        o2.rounds = 2;
        o2.basis = "xy";
        cases.push_back({LinkGraph({{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}), o2});
    }
    for (const auto& [g, opts] : cases) {
        Built b = build_all(g, opts);
        std::set<std::pair<uint32_t, uint32_t>> edge_pairs;
        for (const DecodingEdge& e : b.dgraph.edges) {
            edge_pairs.insert({e.node_a, e.node_b});
        }
        FaultRunner runner(b.circuit);
        std::vector<uint32_t> flips;
        size_t undetectable_seen = 0;
        for (uint32_t gap = 0; gap <= b.circuit.num_layers(); gap++) {
            for (qubit_t q = 0; q <= b.graph.max_qubit_id(); q++) {
                if (!b.graph.is_code_qubit(q) && !b.graph.is_auxiliary(q)) {
                    continue;
                }
                for (char p : {'x', 'y', 'z'}) {
                    runner.run({gap, q}, p, flips);
                    auto endpoints = events_of_flips(b.ctx, flips);
                    if (endpoints.empty()) {
                        undetectable_seen++;
                        continue;
                    }
                    if (std::binary_search(flips.begin(), flips.end(), b.ctx.raw_logical_bit)) {
                        endpoints.push_back(b.dgraph.logical_node);
                    }
                    if (endpoints.size() == 1) {
                        EXPECT_TRUE(edge_pairs.count({endpoints[0], endpoints[0]}));
                    } else {
                        for (size_t i = 0; i < endpoints.size(); i++) {
                            for (size_t j = i + 1; j < endpoints.size(); j++) {
                                EXPECT_TRUE(edge_pairs.count({endpoints[i], endpoints[j]}));
                            }
                        }
                    }
                }
            }
        }
        EXPECT_EQ(undetectable_seen, b.dgraph.undetectable.size());
    }
}

TEST(DecodingGraph, BasisVariantsAreIsomorphicWithSwappedClasses) {
    ArcOptions opts;
    opts.rounds = 3;
    opts.basis = "zx";
    Built a = build_all(linear_chain(4), opts, "zx");
    Built b = build_all(linear_chain(4), opts, "xz");
    ASSERT_EQ(a.dgraph.nodes.size(), b.dgraph.nodes.size());
    for (size_t i = 0; i < a.dgraph.nodes.size(); i++) {
        EXPECT_EQ(a.dgraph.nodes[i], b.dgraph.nodes[i]);
    }
    // Same topology.
    auto pairs = [](const DecodingGraph& d) {
        std::set<std::pair<uint32_t, uint32_t>> out;
        for (const DecodingEdge& e : d.edges) {
            out.insert({e.node_a, e.node_b});
        }
        return out;
    };
    EXPECT_EQ(pairs(a.dgraph), pairs(b.dgraph));
    // Bit/phase classes swap; other classes persist.
    std::map<EdgeClass, int> ca, cb;
    for (const DecodingEdge& e : a.dgraph.edges) {
        ca[e.cls]++;
    }
    for (const DecodingEdge& e : b.dgraph.edges) {
        cb[e.cls]++;
    }
    EXPECT_EQ(ca[EdgeClass::CodeBitFlip], cb[EdgeClass::CodePhaseFlip]);
    EXPECT_EQ(ca[EdgeClass::CodePhaseFlip], cb[EdgeClass::CodeBitFlip]);
    EXPECT_EQ(ca[EdgeClass::AuxFlip], cb[EdgeClass::AuxFlip]);
}

TEST(DecodingGraph, EagleMaxNodeDegreeIsTen) {
    LinkGraph g = heavy_hex(127);
    EXPECT_EQ(g.num_code_qubits(), 54u);
    EXPECT_EQ(g.num_links(), 71u);
    ArcOptions opts;
    opts.rounds = 10;
    opts.basis = "xz";
    Built b = build_all(g, opts);
    EXPECT_EQ(b.dgraph.max_node_degree(), 10u);
}
