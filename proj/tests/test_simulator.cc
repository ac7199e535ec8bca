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

#include "arc/simulator.h"

#include <gtest/gtest.h>

#include <cmath>

#include "test_helpers.h"

using namespace arc;
using namespace arc::testing;

namespace {

// One qubit prepared |+> and measured in the X basis.
CircuitIR plus_state_circuit() {
    CircuitIR c;
    c.num_qubits = 1;
    c.rounds = 0;
    c.lambda = 1;
    c.layers = {{{OpKind::H, 0}}, {{OpKind::H, 0}, {OpKind::Measure, 0, 0, 0}}};
    c.layer_info = {{0, 0, false}, {1, 0, true}};
    c.layer_time = {0.0, 1.0};
    MeasurementInfo m;
    m.bit = 0;
    m.qubit = 0;
    m.round = 1;
    m.kind = MeasKind::Final;
    c.measurements = {m};
    c.designated_readout = 0;
    return c;
}

std::vector<CircuitIR> engine_test_matrix() {
    std::vector<CircuitIR> circuits;
    for (bool resets : {true, false}) {
        ArcOptions opts;
        opts.rounds = 3;
        opts.basis = "zx";
        opts.resets = resets;
        circuits.push_back(build_simple(d3_lagos(), opts));
    }
    {
        ArcOptions opts;
        opts.rounds = 3;
        opts.basis = "xy";
        opts.conditional_reset = true;
        circuits.push_back(build_simple(linear_chain(4), opts));
    }
    for (bool ff : {true, false}) {
        ArcOptions opts;
        opts.rounds = 10;
        opts.basis = "xy";
        opts.run_202 = true;
        opts.ff = ff;
        circuits.push_back(build_simple(line202(), opts));
    }
    return circuits;
}

}  // namespace

TEST(Simulator, NoiselessD3GivesSingleString) {
    ArcOptions opts;
    opts.rounds = 2;
    opts.basis = "zx";
    CircuitIR c = build_simple(d3_lagos(), opts);
    CountsRecord r = simulate(c, NoiseModel{}, 1000, 3, Engine::Frame);
    ASSERT_EQ(r.counts.size(), 1u);
    EXPECT_EQ(r.counts.at("000 00 00"), 1000u);
}

TEST(Simulator, MeasurementFlipFrequencyMatchesBinomial) {
    CircuitIR c = plus_state_circuit();
    NoiseModel noise;
    noise.p_meas = 0.1;
    const uint64_t shots = 100000;
    CountsRecord r = simulate(c, noise, shots, 12345, Engine::Frame);
    uint64_t ones = 0;
    for (const auto& [s, n] : r.counts) {
        if (s == "1") {
            ones += n;
        }
    }
    double freq = double(ones) / double(shots);
    double sigma = std::sqrt(0.1 * 0.9 / double(shots));
    EXPECT_NEAR(freq, 0.1, 3 * sigma);
}

TEST(Simulator, PlusStateMeasuredInZIsUniform) {
    // The random collapse path: reference outcome convention must not bias
    // sampled frequencies.
    CircuitIR c = plus_state_circuit();
    c.layers[1] = {{OpKind::Measure, 0, 0, 0}};  // no basis change: Z measurement of |+>
    const uint64_t shots = 100000;
    CountsRecord r = simulate(c, NoiseModel{}, shots, 7, Engine::Frame);
    double freq = double(r.counts.at("1")) / double(shots);
    double sigma = std::sqrt(0.25 / double(shots));
    EXPECT_NEAR(freq, 0.5, 4 * sigma);
}

TEST(Simulator, EnginesAgreeBitExactly) {
    for (const CircuitIR& c : engine_test_matrix()) {
        for (double p : {0.0, 0.02}) {
            NoiseModel noise = NoiseModel::uniform(p);
            CountsRecord a = simulate(c, noise, 200, 42, Engine::Tableau);
            CountsRecord b = simulate(c, noise, 200, 42, Engine::Frame);
            EXPECT_EQ(a.counts, b.counts) << "basis " << c.basis << " p " << p;
        }
    }
}

TEST(Simulator, DeterministicAcrossThreadCounts) {
    ArcOptions opts;
    opts.rounds = 3;
    opts.basis = "zx";
    CircuitIR c = build_simple(d3_lagos(), opts);
    NoiseModel noise = NoiseModel::uniform(0.03);
    CountsRecord a = simulate(c, noise, 500, 9, Engine::Frame, 1);
    CountsRecord b = simulate(c, noise, 500, 9, Engine::Frame, 4);
    CountsRecord c2 = simulate(c, noise, 500, 9, Engine::Frame, 1);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(a.counts, c2.counts);
    CountsRecord d = simulate(c, noise, 500, 10, Engine::Frame, 1);
    EXPECT_NE(a.counts, d.counts);
}

TEST(Simulator, CommutingMeasurementsRepeatWithinShot) {
    // In a noiseless [[2,0,2]] block the four conjugate outcomes agree, as do
    // the interleaved standard outcomes, because the observables commute.
    ArcOptions opts;
    opts.rounds = 10;
    opts.basis = "xy";
    opts.run_202 = true;
    CircuitIR c = build_simple(line202(), opts);
    ASSERT_TRUE(c.run_202);
    CountsLayout layout = readout_layout(c);
    CountsRecord r = simulate(c, NoiseModel{}, 64, 17, Engine::Tableau);
    bool saw_one = false;
    for (const auto& [s, n] : r.counts) {
        auto bits = parse_counts_string(layout, s);
        std::vector<uint8_t> conj, std_block;
        for (const MeasurementInfo& m : c.measurements) {
            if (m.kind == MeasKind::Conjugate) {
                conj.push_back(bits[m.bit]);
            } else if (m.block >= 0 && m.link == c.blocks[0].link && m.kind == MeasKind::Standard) {
                std_block.push_back(bits[m.bit]);
            }
        }
        ASSERT_EQ(conj.size(), 4u);
        for (uint8_t b : conj) {
            EXPECT_EQ(b, conj[0]);
        }
        saw_one |= conj[0] == 1;
        for (uint8_t b : std_block) {
            EXPECT_EQ(b, std_block[0]);
        }
    }
    EXPECT_TRUE(saw_one) << "first conjugate outcome should be random";
}

TEST(SimulateWithFault, NoFaultMeansNoDelta) {
    ArcOptions opts;
    opts.rounds = 2;
    opts.basis = "zx";
    CircuitIR c = build_simple(d3_lagos(), opts);
    // An identity insertion is a fault with Pauli that acts trivially; use a
    // Z on a z-basis qubit, which commutes with everything it meets.
    auto flips = simulate_with_fault(c, {gap_before_round(c, 2), 0}, 'z');
    EXPECT_TRUE(flips.empty());
}

TEST(SimulateWithFault, AuxFlipBeforeMeasurementFlipsOneRound) {
    ArcOptions opts;
    opts.rounds = 3;
    opts.basis = "zx";
    CircuitIR c = build_simple(d3_lagos(), opts);
    auto flips = simulate_with_fault(c, {gap_before_measurement(c, 2), 1}, 'x');
    ASSERT_EQ(flips.size(), 1u);
    const MeasurementInfo& m = c.measurements[flips[0]];
    EXPECT_EQ(m.round, 2);
    EXPECT_EQ(m.qubit, 1u);
}

TEST(SimulateWithFault, MiddleQubitXFlipsBothLinksAndFinal) {
    // All-z basis linear d=3: X between rounds 1 and 2 on the middle qubit
    // flips both links' round-2 bits and the qubit's final readout.
    ArcOptions opts;
    opts.rounds = 2;
    opts.basis = "zz";
    CircuitIR c = build_simple(linear_chain(3), opts);
    auto flips = simulate_with_fault(c, {gap_before_round(c, 2), 2}, 'x');
    ASSERT_EQ(flips.size(), 3u);
    int round2_auxes = 0, final_bits = 0;
    for (uint32_t b : flips) {
        const MeasurementInfo& m = c.measurements[b];
        if (m.kind == MeasKind::Final) {
            final_bits++;
            EXPECT_EQ(m.qubit, 2u);
        } else {
            EXPECT_EQ(m.round, 2);
            round2_auxes++;
        }
    }
    EXPECT_EQ(round2_auxes, 2);
    EXPECT_EQ(final_bits, 1);
}

TEST(SimulateWithFault, PauliProductDeltaIsSymmetricDifference) {
    ArcOptions opts;
    opts.rounds = 3;
    opts.basis = "xy";
    CircuitIR c = build_simple(line202(), opts);
    std::vector<FaultLocation> locations = {
        {gap_before_round(c, 2), 4},
        {gap_before_measurement(c, 3), 7},
        {gap_before_round(c, 1), 10},
    };
    for (const auto& loc : locations) {
        auto fx = simulate_with_fault(c, loc, 'x');
        auto fz = simulate_with_fault(c, loc, 'z');
        auto fy = simulate_with_fault(c, loc, 'y');
        std::vector<uint32_t> sym;
        std::set_symmetric_difference(fx.begin(), fx.end(), fz.begin(), fz.end(), std::back_inserter(sym));
        EXPECT_EQ(fy, sym);
    }
}

TEST(Simulator, SingleChannelFrequenciesWithinFourSigma) {
    // One CX with two-qubit depolarizing: the control's Z readout flips for
    // 8 of 15 Pauli pairs (X or Y on the control side).
    CircuitIR c;
    c.num_qubits = 2;
    c.rounds = 0;
    c.lambda = 1;
    c.layers = {{{OpKind::CX, 0, 1}}, {{OpKind::Measure, 0, 0, 0}, {OpKind::Measure, 1, 0, 1}}};
    c.layer_info = {{0, 0, false}, {1, 0, true}};
    c.layer_time = {0.0, 1.0};
    for (uint32_t b = 0; b < 2; b++) {
        MeasurementInfo m;
        m.bit = b;
        m.qubit = b;
        m.round = 1;
        m.kind = MeasKind::Final;
        c.measurements.push_back(m);
    }
    NoiseModel noise;
    noise.p2 = 0.3;
    const uint64_t shots = 100000;
    CountsRecord r = simulate(c, noise, shots, 321, Engine::Frame);
    uint64_t control_flips = 0;
    for (const auto& [s, n] : r.counts) {
        // Rendered string is "q1 q0" descending; both bits in one group.
        if (s[1] == '1') {
            control_flips += n;
        }
    }
    double expect = 0.3 * 8.0 / 15.0;
    double sigma = std::sqrt(expect * (1 - expect) / double(shots));
    EXPECT_NEAR(double(control_flips) / double(shots), expect, 4 * sigma);
}
