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

#include "arc/detection.h"

#include <gtest/gtest.h>

#include "test_helpers.h"

using namespace arc;
using namespace arc::testing;

TEST(Detection, NoErrorStringHasNoEvents) {
    LinkGraph g = d3_lagos();
    ArcOptions opts;
    opts.rounds = 2;
    opts.basis = "zx";
    CircuitIR c = build_simple(g, opts);
    DetectionContext ctx = make_detection_context(c, g);
    ShotSyndrome shot = extract(ctx, "000 00 00");
    EXPECT_TRUE(shot.events.empty());
    EXPECT_EQ(shot.raw_logical, 0);
}

TEST(Detection, PaperErrorStringGivesRoundTwoEvent) {
    // '100 10 00' is an X on qubit 6 between rounds 1 and 2. The flip is in
    // both the round-2 syndrome and the final readout parity of link
    // (3,5,6), so their comparison cancels: the sole event is at round 2 and
    // the error surfaces as a self-edge on the boundary qubit.
    LinkGraph g = d3_lagos();
    ArcOptions opts;
    opts.rounds = 2;
    opts.basis = "zx";
    CircuitIR c = build_simple(g, opts);
    DetectionContext ctx = make_detection_context(c, g);
    ShotSyndrome shot = extract(ctx, "100 10 00");
    ASSERT_EQ(shot.events.size(), 1u);
    EXPECT_EQ(shot.events[0], (DetectionEvent{2, 1, false, false}));
    EXPECT_EQ(shot.raw_logical, 0);

    // The same error after round 2 is caught by the final comparison only.
    FaultLocation late{gap_before_round(c, 3), 6};
    auto flips = simulate_with_fault(c, late, 'x');
    auto events = events_of_flips(ctx, flips);
    ASSERT_EQ(events.size(), 1u);
    EXPECT_EQ(ctx.defs[events[0]].node, (DetectionEvent{2, 1, false, true}));
}

TEST(Detection, MalformedStringsThrow) {
    LinkGraph g = d3_lagos();
    ArcOptions opts;
    opts.rounds = 2;
    opts.basis = "zx";
    CircuitIR c = build_simple(g, opts);
    DetectionContext ctx = make_detection_context(c, g);
    EXPECT_THROW(extract(ctx, "000 00"), std::invalid_argument);
    EXPECT_THROW(extract(ctx, "000200 00"), std::invalid_argument);
}

TEST(Detection, AuxStateFlipWithoutResets) {
    // A flipped auxiliary state shows up one round apart; a pure readout
    // misassignment (not in the noise model) would be two rounds apart.
    LinkGraph g = d3_lagos();
    ArcOptions opts;
    opts.rounds = 4;
    opts.basis = "zx";
    opts.resets = false;
    CircuitIR c = build_simple(g, opts);
    DetectionContext ctx = make_detection_context(c, g);
    auto flips = simulate_with_fault(c, {gap_before_measurement(c, 2), 1}, 'x');
    auto events = events_of_flips(ctx, flips);
    ASSERT_EQ(events.size(), 2u);
    EXPECT_EQ(ctx.defs[events[0]].node, (DetectionEvent{2, 0, false, false}));
    EXPECT_EQ(ctx.defs[events[1]].node, (DetectionEvent{3, 0, false, false}));

    // A pure recorded-bit flip (no state change) is the two-round signature.
    std::vector<uint32_t> pure_flip;
    for (const MeasurementInfo& m : c.measurements) {
        if (m.qubit == 1 && m.round == 2) {
            pure_flip.push_back(m.bit);
        }
    }
    ASSERT_EQ(pure_flip.size(), 1u);
    auto events2 = events_of_flips(ctx, pure_flip);
    ASSERT_EQ(events2.size(), 2u);
    EXPECT_EQ(ctx.defs[events2[0]].node, (DetectionEvent{2, 0, false, false}));
    EXPECT_EQ(ctx.defs[events2[1]].node, (DetectionEvent{4, 0, false, false}));
}

TEST(Detection, AuxFlipWithResets) {
    LinkGraph g = d3_lagos();
    ArcOptions opts;
    opts.rounds = 4;
    opts.basis = "zx";
    CircuitIR c = build_simple(g, opts);
    DetectionContext ctx = make_detection_context(c, g);
    auto flips = simulate_with_fault(c, {gap_before_measurement(c, 2), 5}, 'x');
    auto events = events_of_flips(ctx, flips);
    ASSERT_EQ(events.size(), 2u);
    EXPECT_EQ(ctx.defs[events[0]].node, (DetectionEvent{2, 1, false, false}));
    EXPECT_EQ(ctx.defs[events[1]].node, (DetectionEvent{3, 1, false, false}));
}

TEST(Detection, NoiselessShotsHaveNoEvents) {
    struct Case {
        LinkGraph graph;
        ArcOptions opts;
    };
    std::vector<Case> cases;
    {
        ArcOptions o;
        o.rounds = 3;
        o.basis = "zx";
        cases.push_back({d3_lagos(), o});
        o.resets = false;
        cases.push_back({d3_lagos(), o});
    }
    {
        ArcOptions o;
        o.rounds = 10;
        o.basis = "xy";
        o.run_202 = true;
        cases.push_back({line202(), o});
        o.logical = 1;
        cases.push_back({line202(), o});
    }
    {
        ArcOptions o;
        o.rounds = 4;
        o.basis = "yy";  // monochromatic observables with substituted conjugates
        o.run_202 = false;
        cases.push_back({linear_chain(4), o});
    }
    for (const auto& [graph, opts] : cases) {
        for (const std::string variant : {std::string(opts.basis), std::string{opts.basis[1], opts.basis[0]}}) {
            Coloring col = auto_color(graph);
            Schedule sched = auto_schedule(graph);
            CircuitIR c = build_arc_variant(graph, col, sched, opts, variant);
            DetectionContext ctx = make_detection_context(c, graph);
            CountsRecord r = simulate(c, NoiseModel{}, 100, 23, Engine::Auto);
            for (const auto& [s, n] : r.counts) {
                ShotSyndrome shot = extract(ctx, s);
                EXPECT_TRUE(shot.events.empty()) << "variant " << variant << " string " << s;
                EXPECT_EQ(shot.raw_logical, opts.logical);
            }
        }
    }
}

TEST(Detection, EventsAreXorLinearOverDisjointFaults) {
    LinkGraph g = line202();
    ArcOptions opts;
    opts.rounds = 10;
    opts.basis = "xy";
    opts.run_202 = true;
    CircuitIR c = build_simple(g, opts);
    DetectionContext ctx = make_detection_context(c, g);
    FaultLocation la{gap_before_round(c, 3), 4};
    FaultLocation lb{gap_before_measurement(c, 6), 7};
    auto fa = simulate_with_fault(c, la, 'x');
    auto fb = simulate_with_fault(c, lb, 'x');
    // Joint run: inject both by XORing flip sets (Clifford linearity), then
    // compare extracted events against the symmetric difference.
    std::vector<uint32_t> joint;
    std::set_symmetric_difference(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(joint));
    auto ea = events_of_flips(ctx, fa);
    auto eb = events_of_flips(ctx, fb);
    auto ej = events_of_flips(ctx, joint);
    std::vector<uint32_t> sym;
    std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(sym));
    EXPECT_EQ(ej, sym);
}

TEST(Detection, HeldNeighborBitsReflectConjugateFlip) {
    // Without feedforward the two held neighbour measurements both equal the
    // flip indicator, and the given link's code qubits read out flipped
    // exactly when it is set.
    LinkGraph g = line202();
    ArcOptions opts;
    opts.rounds = 10;
    opts.basis = "xy";
    opts.run_202 = true;
    opts.ff = false;
    CircuitIR c = build_simple(g, opts);
    ASSERT_TRUE(c.run_202);
    CountsLayout layout = readout_layout(c);
    CountsRecord r = simulate(c, NoiseModel{}, 300, 77, Engine::Tableau);
    std::vector<uint32_t> held_bits;
    for (const MeasurementInfo& m : c.measurements) {
        if (m.is_held_control) {
            held_bits.push_back(m.bit);
        }
    }
    ASSERT_EQ(held_bits.size(), 2u);
    uint32_t final_q4 = 0, final_q10 = 0, final_q0 = 0;
    for (const MeasurementInfo& m : c.measurements) {
        if (m.kind == MeasKind::Final) {
            if (m.qubit == 4) {
                final_q4 = m.bit;
            } else if (m.qubit == 10) {
                final_q10 = m.bit;
            } else if (m.qubit == 0) {
                final_q0 = m.bit;
            }
        }
    }
    uint64_t indicator_on = 0;
    for (const auto& [s, n] : r.counts) {
        auto bits = parse_counts_string(layout, s);
        EXPECT_EQ(bits[held_bits[0]], bits[held_bits[1]]);
        uint8_t indicator = bits[held_bits[0]];
        EXPECT_EQ(bits[final_q4], indicator);
        EXPECT_EQ(bits[final_q10], indicator);
        EXPECT_EQ(bits[final_q0], 0);
        if (indicator) {
            indicator_on += n;
        }
    }
    EXPECT_GT(indicator_on, 100u);
    EXPECT_LT(indicator_on, 200u);
}

TEST(Detection, FeedforwardUndoesTheFlip) {
    LinkGraph g = line202();
    ArcOptions opts;
    opts.rounds = 10;
    opts.basis = "xy";
    opts.run_202 = true;
    opts.ff = true;
    CircuitIR c = build_simple(g, opts);
    CountsLayout layout = readout_layout(c);
    CountsRecord r = simulate(c, NoiseModel{}, 300, 78, Engine::Tableau);
    uint32_t final_q4 = 0, final_q10 = 0;
    for (const MeasurementInfo& m : c.measurements) {
        if (m.kind == MeasKind::Final && m.qubit == 4) {
            final_q4 = m.bit;
        }
        if (m.kind == MeasKind::Final && m.qubit == 10) {
            final_q10 = m.bit;
        }
    }
    for (const auto& [s, n] : r.counts) {
        auto bits = parse_counts_string(layout, s);
        EXPECT_EQ(bits[final_q4], 0);
        EXPECT_EQ(bits[final_q10], 0);
    }
}
