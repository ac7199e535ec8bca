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

#include "arc/builder.h"

#include <algorithm>
#include <stdexcept>

namespace arc {

namespace {

void check_basis(const std::string& basis) {
    if (basis.size() != 2 || basis.find_first_not_of("xyz") != std::string::npos) {
        throw std::invalid_argument("basis must be two characters from {x,y,z}, got '" + basis + "'");
    }
}

char substituted_basis(char b) {
    switch (b) {
        case 'x':
            return 'z';
        case 'z':
            return 'x';
        default:
            return 'x';  // y
    }
}

// Single-qubit rotation taking the basis-B observable to Z; applied before a
// CX on the code qubit and undone afterwards.
void emit_to_z(std::vector<Op>& ops, qubit_t q, char b) {
    if (b == 'x') {
        ops.push_back({OpKind::H, q});
    } else if (b == 'y') {
        ops.push_back({OpKind::SDag, q});
        ops.push_back({OpKind::H, q});
    }
}

void emit_from_z(std::vector<Op>& ops, qubit_t q, char b) {
    if (b == 'x') {
        ops.push_back({OpKind::H, q});
    } else if (b == 'y') {
        ops.push_back({OpKind::H, q});
        ops.push_back({OpKind::S, q});
    }
}

struct RoundContext {
    int block = -1;           // enclosing block index, or -1
    bool step1 = false;
    bool step2 = false;
    bool step3 = false;
    bool conjugate = false;   // step-2 round measuring the conjugate observable
};

}  // namespace

std::pair<char, char> standard_observable(const Link& link, const Coloring& coloring, const std::string& basis) {
    return {basis[coloring.at(link.code_a)], basis[coloring.at(link.code_b)]};
}

std::pair<char, char> conjugate_observable(const Link& link, const Coloring& coloring, const std::string& basis) {
    auto [a, b] = standard_observable(link, coloring, basis);
    if (a == b) {
        char s = substituted_basis(a);
        return {s, s};
    }
    return {b, a};
}

std::vector<uint32_t> links_202(const LinkGraph& graph) {
    std::vector<uint32_t> chosen;
    for (uint32_t li = 0; li < graph.num_links(); li++) {
        const Link& l = graph.link(li);
        if (graph.degree(l.code_a) >= 2 && graph.degree(l.code_b) >= 2) {
            chosen.push_back(li);
        }
    }
    return chosen;
}

CircuitIR build_arc_variant(const LinkGraph& graph,
                            const Coloring& coloring,
                            const Schedule& schedule,
                            const ArcOptions& options,
                            const std::string& basis_variant) {
    check_basis(basis_variant);
    if (options.rounds < 0) {
        throw std::invalid_argument("rounds must be non-negative");
    }
    if (!schedule_is_valid(graph, schedule)) {
        throw std::invalid_argument("schedule inconsistent with link graph");
    }
    for (qubit_t q : graph.code_qubits()) {
        auto it = coloring.find(q);
        if (it == coloring.end() || (it->second != 0 && it->second != 1)) {
            throw std::invalid_argument("coloring must assign 0 or 1 to every code qubit");
        }
    }
    if (options.run_202 && options.rounds_per_202 < 9) {
        throw std::invalid_argument("rounds_per_202 must be at least 9");
    }

    const int T = options.rounds;
    CircuitIR c;
    c.num_qubits = graph.max_qubit_id() + 1;
    c.rounds = T;
    c.lambda = int(schedule.num_layers()) + 1;
    c.resets = options.resets;
    c.ff = options.ff;
    c.basis = basis_variant;
    c.logical = options.logical;
    c.designated_readout = graph.code_qubits().front();
    for (qubit_t q : graph.code_qubits()) {
        c.qubit_basis[q] = basis_variant[coloring.at(q)];
    }

    // Plan the [[2,0,2]] blocks: one eligible link per block of
    // rounds_per_202 rounds, ascending link index. Disabled when T cannot
    // cover all of them.
    std::vector<uint32_t> chosen;
    if (options.run_202) {
        chosen = links_202(graph);
        if (chosen.empty() || T < options.rounds_per_202 * int(chosen.size())) {
            chosen.clear();
        }
    }
    c.run_202 = !chosen.empty();
    std::map<int, RoundContext> round_context;
    for (size_t k = 0; k < chosen.size(); k++) {
        Block202 block;
        block.link = chosen[k];
        block.first_round = int(k) * options.rounds_per_202 + 1;
        block.last_round = block.first_round + options.rounds_per_202 - 1;
        for (int r = block.first_round; r <= block.last_round; r++) {
            RoundContext ctx;
            ctx.block = int(k);
            ctx.step1 = r == block.first_round;
            ctx.step3 = r == block.last_round;
            ctx.step2 = !ctx.step1 && !ctx.step3;
            ctx.conjugate = ctx.step2 && (r - block.first_round) % 2 == 1;
            round_context[r] = ctx;
        }
        c.blocks.push_back(block);
    }

    auto add_layer = [&](int round, int index, bool is_measurement) -> std::vector<Op>& {
        c.layers.emplace_back();
        c.layer_info.push_back({round, index, is_measurement});
        return c.layers.back();
    };

    // Preparation: every code qubit starts in the +/-1 eigenstate of its
    // colour's basis Pauli encoding the logical value.
    {
        std::vector<Op> flips;
        std::vector<Op> rotations;
        for (qubit_t q : graph.code_qubits()) {
            if (options.logical == 1) {
                flips.push_back({OpKind::X, q});
            }
            emit_from_z(rotations, q, c.qubit_basis.at(q));
        }
        int index = 0;
        if (!flips.empty()) {
            add_layer(0, index++, false) = std::move(flips);
        }
        if (!rotations.empty()) {
            add_layer(0, index++, false) = std::move(rotations);
        }
    }

    std::map<qubit_t, bool> aux_reset_since;  // auxiliary -> reset since its last measurement
    std::map<qubit_t, uint32_t> last_meas_bit;

    for (int r = 1; r <= T; r++) {
        RoundContext ctx;
        auto ctx_it = round_context.find(r);
        if (ctx_it != round_context.end()) {
            ctx = ctx_it->second;
        }
        const Block202* block = ctx.block >= 0 ? &c.blocks[ctx.block] : nullptr;
        std::set<uint32_t> skipped;  // neighbour links held during step 2
        if (block && ctx.step2) {
            auto neighbors = graph.neighbor_links(block->link);
            skipped.insert(neighbors.begin(), neighbors.end());
        }

        auto measured = [&](uint32_t li) {
            return !skipped.count(li);
        };
        auto observable = [&](uint32_t li) {
            if (block && ctx.conjugate && li == block->link) {
                return conjugate_observable(graph.link(li), coloring, basis_variant);
            }
            return standard_observable(graph.link(li), coloring, basis_variant);
        };

        // Entangling-gate layers follow the schedule; each CX is conjugated
        // by the rotation taking the measured factor on its code qubit to Z.
        for (size_t j = 0; j < schedule.num_layers(); j++) {
            std::vector<Op>& ops = add_layer(r, int(j), false);
            for (const auto& [code, aux] : schedule.layers[j]) {
                uint32_t li = graph.link_of_aux(aux);
                if (!measured(li)) {
                    continue;
                }
                const Link& l = graph.link(li);
                auto [fa, fb] = observable(li);
                char factor = code == l.code_a ? fa : fb;
                emit_to_z(ops, code, factor);
                ops.push_back({OpKind::CX, code, aux});
                emit_from_z(ops, code, factor);
            }
        }

        // One layer of simultaneous measurements ends the round, followed by
        // resets (plain or conditional) and optional idle padding.
        std::vector<Op>& mops = add_layer(r, int(schedule.num_layers()), true);
        std::vector<qubit_t> measured_auxes;
        for (const Link& l : graph.links()) {
            if (measured(graph.link_of_aux(l.aux))) {
                measured_auxes.push_back(l.aux);
            }
        }
        std::sort(measured_auxes.begin(), measured_auxes.end());
        for (qubit_t aux : measured_auxes) {
            uint32_t li = graph.link_of_aux(aux);
            uint32_t bit = uint32_t(c.measurements.size());
            mops.push_back({OpKind::Measure, aux, 0, bit});
            MeasurementInfo info;
            info.bit = bit;
            info.qubit = aux;
            info.round = r;
            info.link = li;
            info.kind = (block && ctx.conjugate && li == block->link) ? MeasKind::Conjugate : MeasKind::Standard;
            auto reset_it = aux_reset_since.find(aux);
            info.reset_since_prev = reset_it == aux_reset_since.end() ? true : reset_it->second;
            info.block = ctx.block;
            if (block && ctx.step3) {
                auto neighbors = graph.neighbor_links(block->link);
                if (std::find(neighbors.begin(), neighbors.end(), li) != neighbors.end()) {
                    info.is_held_control = true;
                }
            }
            c.measurements.push_back(info);
            aux_reset_since[aux] = false;
            last_meas_bit[aux] = bit;
        }

        for (qubit_t aux : measured_auxes) {
            uint32_t li = graph.link_of_aux(aux);
            bool do_reset;
            if (block) {
                // Block rounds reset every measured auxiliary, except the
                // neighbours at step 1 which are left in the
                // post-measurement state until step 3.
                bool is_neighbor = false;
                if (ctx.step1 || ctx.step3) {
                    auto neighbors = graph.neighbor_links(block->link);
                    is_neighbor = std::find(neighbors.begin(), neighbors.end(), li) != neighbors.end();
                }
                do_reset = !(ctx.step1 && is_neighbor);
            } else {
                do_reset = options.resets;
            }
            if (do_reset) {
                if (options.conditional_reset) {
                    mops.push_back({OpKind::CondPauli, aux, 0, last_meas_bit.at(aux), 'x'});
                } else {
                    mops.push_back({OpKind::Reset, aux});
                }
                aux_reset_since[aux] = true;
            }
        }

        if (options.delay > 0 && r < T + 1) {
            for (qubit_t aux : measured_auxes) {
                for (int d = 0; d < options.delay; d++) {
                    mops.push_back({OpKind::Idle, aux});
                }
            }
        }

        // Step 3: feedforward. For each code qubit of the given link, the
        // lowest-index neighbouring link's held measurement controls a Pauli
        // equal to the conjugate observable's factor on that qubit.
        if (block && ctx.step3 && options.ff) {
            const Link& gl = graph.link(block->link);
            auto [ca, cb] = conjugate_observable(gl, coloring, basis_variant);
            for (auto [q, factor] : {std::pair<qubit_t, char>{gl.code_a, ca}, {gl.code_b, cb}}) {
                uint32_t chosen_neighbor = NO_LINK;
                for (uint32_t li : graph.links_of(q)) {
                    if (li != block->link) {
                        chosen_neighbor = std::min(chosen_neighbor, li);
                    }
                }
                if (chosen_neighbor == NO_LINK) {
                    continue;  // no neighbour on this side; skip the correction
                }
                uint32_t control = last_meas_bit.at(graph.link(chosen_neighbor).aux);
                mops.push_back({OpKind::CondPauli, q, 0, control, factor});
                c.blocks[ctx.block].corrections.push_back({q, factor, chosen_neighbor, control});
            }
        }
    }

    // Final readout: every code qubit measured in its own basis.
    {
        std::vector<Op> rotations;
        for (qubit_t q : graph.code_qubits()) {
            emit_to_z(rotations, q, c.qubit_basis.at(q));
        }
        int index = 0;
        if (!rotations.empty()) {
            add_layer(T + 1, index++, false) = std::move(rotations);
        }
        std::vector<Op>& mops = add_layer(T + 1, index, true);
        for (qubit_t q : graph.code_qubits()) {
            uint32_t bit = uint32_t(c.measurements.size());
            mops.push_back({OpKind::Measure, q, 0, bit});
            MeasurementInfo info;
            info.bit = bit;
            info.qubit = q;
            info.round = T + 1;
            info.kind = MeasKind::Final;
            c.measurements.push_back(info);
        }
    }

    // Time coordinate of the start of each layer: round + index / depth,
    // all gates taking equal time.
    std::map<int, int> round_depth;
    for (const LayerInfo& li : c.layer_info) {
        round_depth[li.round] = std::max(round_depth[li.round], li.index + 1);
    }
    c.layer_time.reserve(c.layers.size());
    for (const LayerInfo& li : c.layer_info) {
        c.layer_time.push_back(li.round + double(li.index) / double(round_depth[li.round]));
    }
    return c;
}

std::map<std::string, CircuitIR> build_arc(const LinkGraph& graph,
                                           const Coloring& coloring,
                                           const Schedule& schedule,
                                           const ArcOptions& options) {
    check_basis(options.basis);
    std::map<std::string, CircuitIR> out;
    std::string reversed{options.basis[1], options.basis[0]};
    out[options.basis] = build_arc_variant(graph, coloring, schedule, options, options.basis);
    if (reversed != options.basis) {
        out[reversed] = build_arc_variant(graph, coloring, schedule, options, reversed);
    }
    return out;
}

CountsLayout readout_layout(const CircuitIR& circuit) {
    CountsLayout layout;
    layout.groups.resize(circuit.rounds + 1);
    for (const MeasurementInfo& m : circuit.measurements) {
        int group = m.kind == MeasKind::Final ? circuit.rounds : m.round - 1;
        layout.groups[group].push_back(m.bit);
    }
    for (auto& group : layout.groups) {
        std::sort(group.begin(), group.end(), [&](uint32_t a, uint32_t b) {
            return circuit.measurements[a].qubit > circuit.measurements[b].qubit;
        });
    }
    layout.bit_to_pos.assign(circuit.num_bits(), 0);
    size_t pos = 0;
    for (size_t g = layout.groups.size(); g-- > 0;) {
        for (uint32_t bit : layout.groups[g]) {
            layout.bit_to_pos[bit] = uint32_t(pos++);
        }
        if (g != 0) {
            pos++;  // separating space
        }
    }
    layout.string_length = pos;
    return layout;
}

std::string render_counts_string(const CountsLayout& layout, const std::vector<uint8_t>& bits) {
    std::string s(layout.string_length, ' ');
    for (size_t bit = 0; bit < layout.bit_to_pos.size(); bit++) {
        s[layout.bit_to_pos[bit]] = bits[bit] ? '1' : '0';
    }
    return s;
}

std::vector<uint8_t> parse_counts_string(const CountsLayout& layout, const std::string& str) {
    if (str.size() != layout.string_length) {
        throw std::invalid_argument("counts string has length " + std::to_string(str.size()) +
                                    ", expected " + std::to_string(layout.string_length));
    }
    std::vector<uint8_t> bits(layout.bit_to_pos.size());
    for (size_t bit = 0; bit < bits.size(); bit++) {
        char ch = str[layout.bit_to_pos[bit]];
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("counts string has non-bit character at position " +
                                        std::to_string(layout.bit_to_pos[bit]));
        }
        bits[bit] = ch == '1';
    }
    // Every inter-group position must be a space.
    std::vector<uint8_t> is_bit(layout.string_length, 0);
    for (uint32_t pos : layout.bit_to_pos) {
        is_bit[pos] = 1;
    }
    for (size_t i = 0; i < layout.string_length; i++) {
        if (!is_bit[i] && str[i] != ' ') {
            throw std::invalid_argument("counts string missing group separator at position " + std::to_string(i));
        }
    }
    return bits;
}

}  // namespace arc
