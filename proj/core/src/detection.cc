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

#include <algorithm>
#include <stdexcept>

namespace arc {

namespace {

using BitSet = std::vector<uint32_t>;  // small sorted sets of bit ids

BitSet sym_diff(const BitSet& a, const BitSet& b) {
    BitSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

DetectionContext make_detection_context(const CircuitIR& circuit, const LinkGraph& graph) {
    DetectionContext ctx;
    ctx.circuit = &circuit;
    ctx.layout = readout_layout(circuit);

    // Per-link measurement sequences, in emission (round) order.
    std::vector<std::vector<const MeasurementInfo*>> by_link(graph.num_links());
    std::vector<const MeasurementInfo*> finals(circuit.num_qubits, nullptr);
    for (const MeasurementInfo& m : circuit.measurements) {
        if (m.kind == MeasKind::Final) {
            finals[m.qubit] = &m;
        } else {
            by_link[m.link].push_back(&m);
        }
    }

    for (uint32_t li = 0; li < graph.num_links(); li++) {
        BitSet prev_std;
        bool have_prev_std = false;
        BitSet prev_conj;
        int prev_conj_block = -1;
        bool after_hold = false;
        const MeasurementInfo* prev_meas = nullptr;

        for (const MeasurementInfo* m : by_link[li]) {
            // Syndrome content: the measured bit, XORed with the previous
            // measurement of this auxiliary when it was not reset in between.
            BitSet content{m->bit};
            if (!m->reset_since_prev && prev_meas != nullptr) {
                content = sym_diff(content, {prev_meas->bit});
            }
            prev_meas = m;

            if (m->kind == MeasKind::Conjugate) {
                if (prev_conj_block == m->block && !prev_conj.empty()) {
                    EventDef def;
                    def.node = {m->round, li, true, false};
                    def.link = li;
                    def.bits = sym_diff(content, prev_conj);
                    ctx.defs.push_back(def);
                }
                // The block's first conjugate outcome is random and has no
                // same-kind predecessor; it defines no event.
                prev_conj = content;
                prev_conj_block = m->block;
                continue;
            }

            if (m->is_held_control) {
                // Flip indicator consumed by feedforward; never an event.
                if (!circuit.ff) {
                    prev_std = content;
                    have_prev_std = true;
                }
                after_hold = true;
                continue;
            }

            EventDef def;
            def.node = {m->round, li, false, false};
            def.link = li;
            def.bits = have_prev_std ? sym_diff(content, prev_std) : content;
            def.ff_sensitive = after_hold;
            ctx.defs.push_back(def);
            prev_std = content;
            have_prev_std = true;
            after_hold = false;
        }

        // Final-readout link value: parity of the two code-qubit bits.
        const Link& l = graph.link(li);
        if (finals[l.code_a] == nullptr || finals[l.code_b] == nullptr) {
            throw std::logic_error("final readout missing for a code qubit");
        }
        BitSet content;
        content.push_back(finals[l.code_a]->bit);
        content.push_back(finals[l.code_b]->bit);
        std::sort(content.begin(), content.end());
        EventDef def;
        def.node = {circuit.rounds, li, false, true};
        def.link = li;
        def.bits = have_prev_std ? sym_diff(content, prev_std) : content;
        def.ff_sensitive = after_hold;
        ctx.defs.push_back(def);
    }

    std::sort(ctx.defs.begin(), ctx.defs.end(),
              [](const EventDef& a, const EventDef& b) { return a.node < b.node; });

    Reference ref = compute_reference(circuit);
    ctx.ref_parity.reserve(ctx.defs.size());
    for (const EventDef& def : ctx.defs) {
        uint8_t parity = 0;
        for (uint32_t bit : def.bits) {
            parity ^= ref.bits[bit];
        }
        ctx.ref_parity.push_back(parity);
    }

    ctx.defs_of_bit.assign(circuit.num_bits(), {});
    for (uint32_t d = 0; d < ctx.defs.size(); d++) {
        for (uint32_t bit : ctx.defs[d].bits) {
            ctx.defs_of_bit[bit].push_back(d);
        }
    }

    ctx.raw_logical_bit = finals[circuit.designated_readout]->bit;
    return ctx;
}

ShotSyndrome extract_bits(const DetectionContext& ctx, const std::vector<uint8_t>& bits) {
    if (bits.size() != ctx.circuit->num_bits()) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    ShotSyndrome shot;
    for (uint32_t d = 0; d < ctx.defs.size(); d++) {
        uint8_t parity = 0;
        for (uint32_t bit : ctx.defs[d].bits) {
            parity ^= bits[bit];
        }
        if (parity != ctx.ref_parity[d]) {
            shot.def_indices.push_back(d);
            shot.events.push_back(ctx.defs[d].node);
        }
    }
    shot.raw_logical = bits[ctx.raw_logical_bit];
    return shot;
}

ShotSyndrome extract(const DetectionContext& ctx, const std::string& counts_string) {
    return extract_bits(ctx, parse_counts_string(ctx.layout, counts_string));
}

std::vector<uint32_t> events_of_flips(const DetectionContext& ctx, const std::vector<uint32_t>& flipped_bits) {
    std::vector<uint32_t> touched;
    for (uint32_t bit : flipped_bits) {
        for (uint32_t d : ctx.defs_of_bit[bit]) {
            touched.push_back(d);
        }
    }
    std::sort(touched.begin(), touched.end());
    std::vector<uint32_t> odd;
    for (size_t i = 0; i < touched.size();) {
        size_t j = i;
        while (j < touched.size() && touched[j] == touched[i]) {
            j++;
        }
        if ((j - i) % 2 == 1) {
            odd.push_back(touched[i]);
        }
        i = j;
    }
    return odd;
}

}  // namespace arc
