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

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "arc/tableau.h"

namespace arc {

namespace {

constexpr char PAULIS_1Q[3] = {'x', 'y', 'z'};

// The 15 non-identity two-qubit Paulis as (control, target) characters,
// 'i' meaning identity on that side.
constexpr std::pair<char, char> PAULIS_2Q[15] = {
    {'i', 'x'}, {'i', 'y'}, {'i', 'z'},
    {'x', 'i'}, {'x', 'x'}, {'x', 'y'}, {'x', 'z'},
    {'y', 'i'}, {'y', 'x'}, {'y', 'y'}, {'y', 'z'},
    {'z', 'i'}, {'z', 'x'}, {'z', 'y'}, {'z', 'z'},
};

struct Frame {
    std::vector<uint64_t> x, z;

    explicit Frame(size_t num_qubits) : x((num_qubits + 63) / 64, 0), z((num_qubits + 63) / 64, 0) {}

    void clear() {
        std::fill(x.begin(), x.end(), 0);
        std::fill(z.begin(), z.end(), 0);
    }
    bool get_x(qubit_t q) const {
        return (x[q >> 6] >> (q & 63)) & 1;
    }
    void mul_pauli(qubit_t q, char p) {
        uint64_t m = 1ull << (q & 63);
        if (p == 'x' || p == 'y') {
            x[q >> 6] ^= m;
        }
        if (p == 'z' || p == 'y') {
            z[q >> 6] ^= m;
        }
    }
    void apply_gate(const Op& op) {
        uint64_t m0 = 1ull << (op.q0 & 63);
        switch (op.kind) {
            case OpKind::H: {
                uint64_t xb = x[op.q0 >> 6] & m0;
                uint64_t zb = z[op.q0 >> 6] & m0;
                x[op.q0 >> 6] ^= xb ^ zb;
                z[op.q0 >> 6] ^= xb ^ zb;
                break;
            }
            case OpKind::S:
            case OpKind::SDag:
                z[op.q0 >> 6] ^= x[op.q0 >> 6] & m0;
                break;
            case OpKind::CX: {
                uint64_t m1 = 1ull << (op.q1 & 63);
                if (x[op.q0 >> 6] & m0) {
                    x[op.q1 >> 6] ^= m1;
                }
                if (z[op.q1 >> 6] & m1) {
                    z[op.q0 >> 6] ^= m0;
                }
                break;
            }
            default:
                break;  // Paulis and idles commute up to phase
        }
    }
    void mul_words(const std::vector<uint64_t>& ox, const std::vector<uint64_t>& oz) {
        for (size_t w = 0; w < x.size(); w++) {
            x[w] ^= ox[w];
            z[w] ^= oz[w];
        }
    }
    void clear_x(qubit_t q) {
        x[q >> 6] &= ~(1ull << (q & 63));
    }
    void clear_z(qubit_t q) {
        z[q >> 6] &= ~(1ull << (q & 63));
    }
};

double idle_rate(const NoiseModel& noise, qubit_t q) {
    auto it = noise.idle_overrides.find(q);
    return it == noise.idle_overrides.end() ? noise.idle : it->second;
}

// Noise site after a gate op; zero-probability sites draw nothing.
template <typename Apply1Q, typename Apply2Q>
void maybe_noise(const Op& op, const NoiseModel& noise, ShotRng& rng, Apply1Q&& apply1, Apply2Q&& apply2) {
    switch (op.kind) {
        case OpKind::H:
        case OpKind::S:
        case OpKind::SDag:
        case OpKind::X:
        case OpKind::Y:
        case OpKind::Z:
        case OpKind::CondPauli:
            if (noise.p1 > 0 && rng.bernoulli(noise.p1)) {
                apply1(op.q0, PAULIS_1Q[rng.next_below(3)]);
            }
            break;
        case OpKind::Idle: {
            double p = idle_rate(noise, op.q0);
            if (p > 0 && rng.bernoulli(p)) {
                apply1(op.q0, PAULIS_1Q[rng.next_below(3)]);
            }
            break;
        }
        case OpKind::CX:
            if (noise.p2 > 0 && rng.bernoulli(noise.p2)) {
                auto [pc, pt] = PAULIS_2Q[rng.next_below(15)];
                if (pc != 'i') {
                    apply1(op.q0, pc);
                }
                if (pt != 'i') {
                    apply1(op.q1, pt);
                }
            }
            break;
        default:
            break;
    }
    (void)apply2;
}

}  // namespace

Reference compute_reference(const CircuitIR& circuit) {
    Reference ref;
    ref.bits.assign(circuit.num_bits(), 0);
    ref.was_random.assign(circuit.num_bits(), 0);
    ref.flip_of_bit.assign(circuit.num_bits(), -1);
    Tableau tab(circuit.num_qubits);
    for (const auto& layer : circuit.layers) {
        for (const Op& op : layer) {
            switch (op.kind) {
                case OpKind::H:
                    tab.h(op.q0);
                    break;
                case OpKind::S:
                    tab.s(op.q0);
                    break;
                case OpKind::SDag:
                    tab.sdg(op.q0);
                    break;
                case OpKind::X:
                    tab.x(op.q0);
                    break;
                case OpKind::Y:
                    tab.y(op.q0);
                    break;
                case OpKind::Z:
                    tab.z(op.q0);
                    break;
                case OpKind::Idle:
                    break;
                case OpKind::CX:
                    tab.cx(op.q0, op.q1);
                    break;
                case OpKind::Measure:
                    if (tab.measure_is_random(op.q0)) {
                        ref.was_random[op.bit] = 1;
                        ref.flip_of_bit[op.bit] = int32_t(ref.flip_x.size());
                        ref.flip_x.emplace_back();
                        ref.flip_z.emplace_back();
                        // Random reference outcomes are fixed to 0.
                        tab.collapse_random(op.q0, false, &ref.flip_x.back(), &ref.flip_z.back());
                        ref.bits[op.bit] = 0;
                    } else {
                        ref.bits[op.bit] = tab.measure_deterministic(op.q0);
                    }
                    break;
                case OpKind::Reset:
                    tab.reset(op.q0);
                    break;
                case OpKind::CondPauli:
                    if (ref.bits[op.bit]) {
                        tab.pauli(op.q0, op.pauli);
                    }
                    break;
            }
        }
    }
    return ref;
}

std::string noiseless_counts_string(const CircuitIR& circuit) {
    Reference ref = compute_reference(circuit);
    return render_counts_string(readout_layout(circuit), ref.bits);
}

void run_shot_frame(const CircuitIR& circuit,
                    const Reference& ref,
                    const NoiseModel& noise,
                    ShotRng& rng,
                    std::vector<uint8_t>& out_bits) {
    Frame frame(circuit.num_qubits);
    out_bits.assign(circuit.num_bits(), 0);
    for (const auto& layer : circuit.layers) {
        for (const Op& op : layer) {
            switch (op.kind) {
                case OpKind::Measure: {
                    if (noise.p_meas > 0 && rng.bernoulli(noise.p_meas)) {
                        frame.mul_pauli(op.q0, 'x');
                    }
                    bool flip = frame.get_x(op.q0);
                    if (ref.was_random[op.bit]) {
                        bool want = rng.next_bit();
                        if (want != (bool(ref.bits[op.bit]) ^ flip)) {
                            int32_t f = ref.flip_of_bit[op.bit];
                            frame.mul_words(ref.flip_x[f], ref.flip_z[f]);
                            flip = frame.get_x(op.q0);
                        }
                    }
                    out_bits[op.bit] = ref.bits[op.bit] ^ flip;
                    frame.clear_z(op.q0);
                    break;
                }
                case OpKind::Reset:
                    frame.clear_x(op.q0);
                    frame.clear_z(op.q0);
                    break;
                case OpKind::CondPauli: {
                    // Applied when the recorded bit is 1; relative to the
                    // reference this multiplies the frame when the bit flipped.
                    bool flipped = out_bits[op.bit] != ref.bits[op.bit];
                    if (flipped) {
                        frame.mul_pauli(op.q0, op.pauli);
                    }
                    maybe_noise(op, noise, rng, [&](qubit_t q, char p) { frame.mul_pauli(q, p); }, 0);
                    break;
                }
                default:
                    frame.apply_gate(op);
                    maybe_noise(op, noise, rng, [&](qubit_t q, char p) { frame.mul_pauli(q, p); }, 0);
                    break;
            }
        }
    }
}

void run_shot_tableau(const CircuitIR& circuit,
                      const Reference& ref,
                      const NoiseModel& noise,
                      ShotRng& rng,
                      std::vector<uint8_t>& out_bits) {
    Tableau tab(circuit.num_qubits);
    out_bits.assign(circuit.num_bits(), 0);
    for (const auto& layer : circuit.layers) {
        for (const Op& op : layer) {
            switch (op.kind) {
                case OpKind::H:
                    tab.h(op.q0);
                    break;
                case OpKind::S:
                    tab.s(op.q0);
                    break;
                case OpKind::SDag:
                    tab.sdg(op.q0);
                    break;
                case OpKind::X:
                    tab.x(op.q0);
                    break;
                case OpKind::Y:
                    tab.y(op.q0);
                    break;
                case OpKind::Z:
                    tab.z(op.q0);
                    break;
                case OpKind::Idle:
                    break;
                case OpKind::CX:
                    tab.cx(op.q0, op.q1);
                    break;
                case OpKind::Measure: {
                    if (noise.p_meas > 0 && rng.bernoulli(noise.p_meas)) {
                        tab.x(op.q0);
                    }
                    bool is_random = tab.measure_is_random(op.q0);
                    if (is_random != bool(ref.was_random[op.bit])) {
                        // Pauli noise cannot change which outcomes are
                        // determined, so a mismatch is an engine bug.
                        throw std::logic_error("measurement randomness deviates from reference");
                    }
                    if (is_random) {
                        bool want = rng.next_bit();
                        tab.collapse_random(op.q0, want);
                        out_bits[op.bit] = want;
                    } else {
                        out_bits[op.bit] = tab.measure_deterministic(op.q0);
                    }
                    break;
                }
                case OpKind::Reset:
                    tab.reset(op.q0);
                    break;
                case OpKind::CondPauli:
                    if (out_bits[op.bit]) {
                        tab.pauli(op.q0, op.pauli);
                    }
                    break;
            }
            if (op.kind != OpKind::Measure && op.kind != OpKind::Reset) {
                maybe_noise(op, noise, rng, [&](qubit_t q, char p) { tab.pauli(q, p); }, 0);
            }
        }
    }
}

CountsRecord simulate(const CircuitIR& circuit,
                      const NoiseModel& noise,
                      uint64_t shots,
                      uint64_t seed,
                      Engine engine,
                      int threads,
                      const std::string& circuit_id) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    if (engine == Engine::Auto) {
        bool small = circuit.num_qubits <= 40 && shots <= 256;
        engine = small ? Engine::Tableau : Engine::Frame;
    }
    Reference ref = compute_reference(circuit);
    CountsLayout layout = readout_layout(circuit);

    auto run_range = [&](uint64_t begin, uint64_t end, std::map<std::string, uint64_t>& counts) {
        std::vector<uint8_t> bits;
        for (uint64_t s = begin; s < end; s++) {
            ShotRng rng(seed, s);
            if (engine == Engine::Frame) {
                run_shot_frame(circuit, ref, noise, rng, bits);
            } else {
                run_shot_tableau(circuit, ref, noise, rng, bits);
            }
            counts[render_counts_string(layout, bits)]++;
        }
    };

    CountsRecord record;
    record.shots = shots;
    record.seed = seed;
    record.circuit_id = circuit_id;
    record.noise = noise;

    int workers = std::max(1, threads);
    if (workers == 1 || shots < 64) {
        run_range(0, shots, record.counts);
    } else {
        std::vector<std::map<std::string, uint64_t>> partial(workers);
        std::vector<std::thread> pool;
        uint64_t chunk = (shots + workers - 1) / workers;
        for (int w = 0; w < workers; w++) {
            uint64_t begin = std::min<uint64_t>(w * chunk, shots);
            uint64_t end = std::min<uint64_t>(begin + chunk, shots);
            pool.emplace_back([&, begin, end, w] { run_range(begin, end, partial[w]); });
        }
        for (auto& t : pool) {
            t.join();
        }
        for (const auto& p : partial) {
            for (const auto& [str, n] : p) {
                record.counts[str] += n;
            }
        }
    }
    return record;
}

FaultRunner::FaultRunner(const CircuitIR& circuit) : circuit_(circuit) {
    size_t words = (circuit.num_qubits + 63) / 64;
    fx_.assign(words, 0);
    fz_.assign(words, 0);
    flip_bits_.assign(circuit.num_bits(), 0);
}

void FaultRunner::run(const FaultLocation& where, char pauli, std::vector<uint32_t>& out_flips) {
    if (where.gap > circuit_.num_layers() || where.qubit >= circuit_.num_qubits) {
        throw std::invalid_argument("invalid fault location");
    }
    out_flips.clear();
    Frame frame(0);
    frame.x = std::move(fx_);
    frame.z = std::move(fz_);
    frame.clear();
    std::fill(flip_bits_.begin(), flip_bits_.end(), 0);
    frame.mul_pauli(where.qubit, pauli);

    // All randomness is resolved identically to the reference, so the delta
    // is the pure propagation of the inserted Pauli.
    for (size_t layer = where.gap; layer < circuit_.num_layers(); layer++) {
        for (const Op& op : circuit_.layers[layer]) {
            switch (op.kind) {
                case OpKind::Measure:
                    flip_bits_[op.bit] = frame.get_x(op.q0);
                    if (flip_bits_[op.bit]) {
                        out_flips.push_back(op.bit);
                    }
                    frame.clear_z(op.q0);
                    break;
                case OpKind::Reset:
                    frame.clear_x(op.q0);
                    frame.clear_z(op.q0);
                    break;
                case OpKind::CondPauli:
                    if (flip_bits_[op.bit]) {
                        frame.mul_pauli(op.q0, op.pauli);
                    }
                    break;
                default:
                    frame.apply_gate(op);
                    break;
            }
        }
    }
    fx_ = std::move(frame.x);
    fz_ = std::move(frame.z);
    std::sort(out_flips.begin(), out_flips.end());
}

std::vector<uint32_t> simulate_with_fault(const CircuitIR& circuit, const FaultLocation& where, char pauli) {
    FaultRunner runner(circuit);
    std::vector<uint32_t> flips;
    runner.run(where, pauli, flips);
    return flips;
}

}  // namespace arc
