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

#include "arc/link_graph.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace arc {

std::string DetectionEvent::str() const {
    std::string s = "(t=" + std::to_string(time) + ",L" + std::to_string(link);
    if (is_conjugate) {
        s += ",conj";
    }
    if (is_final) {
        s += ",final";
    }
    return s + ")";
}

LinkGraph::LinkGraph(std::vector<Link> links) : links_(std::move(links)) {
    if (links_.empty()) {
        throw std::invalid_argument("link graph needs at least one link");
    }
    std::set<std::pair<qubit_t, qubit_t>> seen_pairs;
    for (uint32_t i = 0; i < links_.size(); i++) {
        const Link& l = links_[i];
        if (l.code_a == l.code_b) {
            throw std::invalid_argument("link joins a code qubit to itself");
        }
        if (l.aux == l.code_a || l.aux == l.code_b) {
            throw std::invalid_argument("auxiliary coincides with a code qubit");
        }
        auto pair = std::minmax(l.code_a, l.code_b);
        if (!seen_pairs.insert(pair).second) {
            throw std::invalid_argument("duplicate link between code qubits " +
                                        std::to_string(pair.first) + " and " + std::to_string(pair.second));
        }
        if (!aux_to_link_.emplace(l.aux, i).second) {
            throw std::invalid_argument("auxiliary " + std::to_string(l.aux) + " used by more than one link");
        }
        incident_[l.code_a].push_back(i);
        incident_[l.code_b].push_back(i);
        max_qubit_ = std::max({max_qubit_, l.code_a, l.aux, l.code_b});
    }
    for (const auto& [q, inc] : incident_) {
        if (aux_to_link_.count(q)) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " is both auxiliary and code qubit");
        }
        code_qubits_.push_back(q);
        max_degree_ = std::max(max_degree_, inc.size());
    }

    // Connectivity: a disconnected instance is several codes in a trenchcoat.
    std::set<qubit_t> reached{code_qubits_.front()};
    std::deque<qubit_t> frontier{code_qubits_.front()};
    while (!frontier.empty()) {
        qubit_t q = frontier.front();
        frontier.pop_front();
        for (uint32_t li : incident_.at(q)) {
            qubit_t other = links_[li].other_code(q);
            if (reached.insert(other).second) {
                frontier.push_back(other);
            }
        }
    }
    if (reached.size() != code_qubits_.size()) {
        throw std::invalid_argument("link graph is disconnected");
    }
}

const std::vector<uint32_t>& LinkGraph::links_of(qubit_t code) const {
    auto it = incident_.find(code);
    if (it == incident_.end()) {
        throw std::out_of_range("not a code qubit: " + std::to_string(code));
    }
    return it->second;
}

uint32_t LinkGraph::link_of_aux(qubit_t aux) const {
    auto it = aux_to_link_.find(aux);
    if (it == aux_to_link_.end()) {
        throw std::out_of_range("not an auxiliary: " + std::to_string(aux));
    }
    return it->second;
}

std::optional<uint32_t> LinkGraph::link_between(qubit_t a, qubit_t b) const {
    auto it = incident_.find(a);
    if (it == incident_.end()) {
        return std::nullopt;
    }
    for (uint32_t li : it->second) {
        if (links_[li].has_code(b)) {
            return li;
        }
    }
    return std::nullopt;
}

std::vector<uint32_t> LinkGraph::neighbor_links(uint32_t link_index) const {
    std::set<uint32_t> out;
    const Link& l = links_[link_index];
    for (qubit_t q : {l.code_a, l.code_b}) {
        for (uint32_t li : links_of(q)) {
            if (li != link_index) {
                out.insert(li);
            }
        }
    }
    return {out.begin(), out.end()};
}

int monochromatic_links(const LinkGraph& graph, const Coloring& coloring) {
    int count = 0;
    for (const Link& l : graph.links()) {
        if (coloring.at(l.code_a) == coloring.at(l.code_b)) {
            count++;
        }
    }
    return count;
}

namespace {

// Change in monochromatic-link count if every qubit in `flip` switches color.
int flip_delta(const LinkGraph& graph, const Coloring& coloring, const std::set<qubit_t>& flip) {
    int delta = 0;
    std::set<uint32_t> seen;
    for (qubit_t q : flip) {
        for (uint32_t li : graph.links_of(q)) {
            if (!seen.insert(li).second) {
                continue;
            }
            const Link& l = graph.link(li);
            bool mono_before = coloring.at(l.code_a) == coloring.at(l.code_b);
            bool a_in = flip.count(l.code_a) > 0;
            bool b_in = flip.count(l.code_b) > 0;
            bool mono_after = (a_in == b_in) ? mono_before : !mono_before;
            delta += int(mono_after) - int(mono_before);
        }
    }
    return delta;
}

std::set<qubit_t> ball(const LinkGraph& graph, qubit_t center, int radius) {
    std::set<qubit_t> members{center};
    std::deque<std::pair<qubit_t, int>> frontier{{center, 0}};
    while (!frontier.empty()) {
        auto [q, d] = frontier.front();
        frontier.pop_front();
        if (d == radius) {
            continue;
        }
        for (uint32_t li : graph.links_of(q)) {
            qubit_t other = graph.link(li).other_code(q);
            if (members.insert(other).second) {
                frontier.push_back({other, d + 1});
            }
        }
    }
    return members;
}

}  // namespace

Coloring auto_color(const LinkGraph& graph, int max_dist) {
    Coloring color;
    qubit_t root = graph.code_qubits().front();
    color[root] = 0;
    std::deque<qubit_t> frontier{root};
    while (!frontier.empty()) {
        qubit_t q = frontier.front();
        frontier.pop_front();
        for (uint32_t li : graph.links_of(q)) {
            qubit_t other = graph.link(li).other_code(q);
            if (!color.count(other)) {
                color[other] = 1 - color[q];
                frontier.push_back(other);
            }
        }
    }
    if (monochromatic_links(graph, color) == 0) {
        return color;
    }

    // Non-bipartite: the colouring is a compromise. Flip neighbourhoods of
    // increasing radius while doing so removes monochromatic links.
    bool improved = true;
    while (improved) {
        improved = false;
        for (int radius = 0; radius < std::max(1, max_dist); radius++) {
            for (qubit_t q : graph.code_qubits()) {
                std::set<qubit_t> region = radius == 0 ? std::set<qubit_t>{q} : ball(graph, q, radius);
                if (flip_delta(graph, color, region) < 0) {
                    for (qubit_t r : region) {
                        color[r] = 1 - color[r];
                    }
                    improved = true;
                }
            }
        }
    }
    return color;
}

Schedule auto_schedule(const LinkGraph& graph) {
    Schedule schedule;
    std::map<qubit_t, uint64_t> busy;  // bitmask of occupied layers per qubit
    for (const Link& l : graph.links()) {
        for (qubit_t code : {l.code_a, l.code_b}) {
            uint64_t occupied = busy[code] | busy[l.aux];
            size_t layer = 0;
            while (occupied & (1ull << layer)) {
                layer++;
            }
            if (layer >= 64) {
                throw std::runtime_error("schedule needs more than 64 layers");
            }
            while (schedule.layers.size() <= layer) {
                schedule.layers.push_back({});
            }
            schedule.layers[layer].push_back({code, l.aux});
            busy[code] |= 1ull << layer;
            busy[l.aux] |= 1ull << layer;
        }
    }
    return schedule;
}

bool schedule_is_valid(const LinkGraph& graph, const Schedule& schedule) {
    std::map<std::pair<qubit_t, qubit_t>, int> pair_count;
    for (const auto& layer : schedule.layers) {
        std::set<qubit_t> used;
        for (const auto& [code, aux] : layer) {
            if (!used.insert(code).second || !used.insert(aux).second) {
                return false;
            }
            if (!graph.is_code_qubit(code) || !graph.is_auxiliary(aux)) {
                return false;
            }
            if (!graph.link(graph.link_of_aux(aux)).has_code(code)) {
                return false;
            }
            pair_count[{code, aux}]++;
        }
    }
    for (const Link& l : graph.links()) {
        if (pair_count[{l.code_a, l.aux}] != 1 || pair_count[{l.code_b, l.aux}] != 1) {
            return false;
        }
    }
    if (schedule.num_layers() < graph.max_degree()) {
        return false;
    }
    return true;
}

CycleBasis cycle_basis(const LinkGraph& graph) {
    // BFS spanning tree from the lowest code qubit.
    qubit_t root = graph.code_qubits().front();
    std::map<qubit_t, std::pair<qubit_t, uint32_t>> parent;  // qubit -> (parent, link used)
    std::map<qubit_t, int> depth;
    std::set<uint32_t> tree_links;
    depth[root] = 0;
    std::deque<qubit_t> frontier{root};
    while (!frontier.empty()) {
        qubit_t q = frontier.front();
        frontier.pop_front();
        for (uint32_t li : graph.links_of(q)) {
            qubit_t other = graph.link(li).other_code(q);
            if (!depth.count(other)) {
                depth[other] = depth[q] + 1;
                parent[other] = {q, li};
                tree_links.insert(li);
                frontier.push_back(other);
            }
        }
    }

    CycleBasis basis;
    for (uint32_t li = 0; li < graph.num_links(); li++) {
        if (tree_links.count(li)) {
            continue;
        }
        // Tree path between endpoints, plus the chord itself.
        std::set<uint32_t> cycle{li};
        qubit_t a = graph.link(li).code_a;
        qubit_t b = graph.link(li).code_b;
        while (a != b) {
            if (depth[a] >= depth[b]) {
                cycle.insert(parent[a].second);
                a = parent[a].first;
            } else {
                cycle.insert(parent[b].second);
                b = parent[b].first;
            }
        }
        uint32_t cycle_index = basis.cycles.size();
        basis.cycles.emplace_back(cycle.begin(), cycle.end());
        for (uint32_t member : basis.cycles.back()) {
            basis.link_to_cycles[member].push_back(cycle_index);
        }
    }
    return basis;
}

std::set<uint32_t> flatten(const std::vector<DetectionEvent>& events) {
    std::map<uint32_t, int> counts;
    for (const DetectionEvent& e : events) {
        counts[e.link]++;
    }
    std::set<uint32_t> odd;
    for (const auto& [link, n] : counts) {
        if (n % 2 == 1) {
            odd.insert(link);
        }
    }
    return odd;
}

std::optional<std::set<qubit_t>> bicolor_query(const LinkGraph& graph,
                                               const CycleBasis& basis,
                                               const std::set<uint32_t>& cut_links) {
    if (cut_links.empty()) {
        return std::set<qubit_t>{};  // identity cut; nothing flipped
    }

    // A link set is a cut iff it meets every basis cycle an even number of
    // times. Only cycles through the candidate links can fail.
    std::set<uint32_t> cycles_to_check;
    for (uint32_t li : cut_links) {
        auto it = basis.link_to_cycles.find(li);
        if (it != basis.link_to_cycles.end()) {
            cycles_to_check.insert(it->second.begin(), it->second.end());
        }
    }
    for (uint32_t ci : cycles_to_check) {
        int overlap = 0;
        for (uint32_t member : basis.cycles[ci]) {
            overlap += cut_links.count(member);
        }
        if (overlap % 2 == 1) {
            return std::nullopt;
        }
    }

    // Grow both colour regions from a seed until every cut endpoint is
    // coloured and one region has stopped growing; that region is complete.
    std::set<qubit_t> needed;
    qubit_t root = UINT32_MAX;
    for (uint32_t li : cut_links) {
        const Link& l = graph.link(li);
        needed.insert(l.code_a);
        needed.insert(l.code_b);
        root = std::min({root, l.code_a, l.code_b});
    }

    std::map<qubit_t, int> color{{root, 0}};
    std::vector<std::set<qubit_t>> members(2);
    members[0].insert(root);
    needed.erase(root);
    std::vector<qubit_t> wave{root};
    size_t counts[2] = {1, 0};
    size_t last_counts[2] = {1, 0};
    int stopped = -1;
    while (stopped < 0) {
        std::vector<qubit_t> next_wave;
        for (qubit_t q : wave) {
            for (uint32_t li : graph.links_of(q)) {
                qubit_t other = graph.link(li).other_code(q);
                int c = color[q] ^ (cut_links.count(li) ? 1 : 0);
                auto [it, inserted] = color.emplace(other, c);
                if (inserted) {
                    members[c].insert(other);
                    counts[c]++;
                    needed.erase(other);
                    next_wave.push_back(other);
                }
            }
        }
        if (needed.empty()) {
            if (counts[0] == last_counts[0]) {
                stopped = 0;
            } else if (counts[1] == last_counts[1]) {
                stopped = 1;
            }
        }
        last_counts[0] = counts[0];
        last_counts[1] = counts[1];
        wave = std::move(next_wave);
    }

    size_t other_size = graph.num_code_qubits() - counts[stopped];
    bool use_stopped;
    if (counts[stopped] != other_size) {
        use_stopped = counts[stopped] < other_size;
    } else {
        // Tie: prefer the side containing the lowest code qubit id.
        use_stopped = members[stopped].count(graph.code_qubits().front()) > 0;
    }
    if (use_stopped) {
        return members[stopped];
    }
    std::set<qubit_t> complement;
    for (qubit_t q : graph.code_qubits()) {
        if (!members[stopped].count(q)) {
            complement.insert(q);
        }
    }
    return complement;
}

std::set<uint32_t> region_boundary(const LinkGraph& graph, const std::set<qubit_t>& region) {
    std::set<uint32_t> boundary;
    for (uint32_t li = 0; li < graph.num_links(); li++) {
        const Link& l = graph.link(li);
        if (region.count(l.code_a) != region.count(l.code_b)) {
            boundary.insert(li);
        }
    }
    return boundary;
}

}  // namespace arc
