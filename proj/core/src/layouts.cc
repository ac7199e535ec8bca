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

#include "arc/layouts.h"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace arc {

namespace {

struct HeavyHex127 {
    // Long rows of the 127-qubit lattice: start id, first column, length.
    struct Row {
        qubit_t start;
        int col0;
        int len;
    };
    static constexpr Row rows[7] = {
        {0, 0, 14}, {18, 0, 15}, {37, 0, 15}, {56, 0, 15}, {75, 0, 15}, {94, 0, 15}, {113, 1, 14},
    };
    // Connector rows: start id and the column of the first of four columns
    // (spaced by 4) bridging row k and row k+1.
    struct Conn {
        qubit_t start;
        int col0;
    };
    static constexpr Conn conns[6] = {
        {14, 0}, {33, 2}, {52, 0}, {71, 2}, {90, 0}, {109, 2},
    };

    static qubit_t row_qubit(int row, int col) {
        return rows[row].start + qubit_t(col - rows[row].col0);
    }
    static bool row_has_col(int row, int col) {
        return col >= rows[row].col0 && col < rows[row].col0 + rows[row].len;
    }
};

std::vector<Link> heavy_hex_links_127() {
    using H = HeavyHex127;
    std::vector<Link> links;
    // In-row links: code qubits sit at even columns, auxiliaries at odd
    // ones. Truncated-row ends (qubits 13 and 113) have no second code
    // qubit and stay unused.
    for (int row = 0; row < 7; row++) {
        for (int col = H::rows[row].col0; col < H::rows[row].col0 + H::rows[row].len; col++) {
            if (col % 2 == 1 && H::row_has_col(row, col - 1) && H::row_has_col(row, col + 1)) {
                links.push_back({H::row_qubit(row, col - 1), H::row_qubit(row, col), H::row_qubit(row, col + 1)});
            }
        }
    }
    for (int c = 0; c < 6; c++) {
        for (int k = 0; k < 4; k++) {
            int col = H::conns[c].col0 + 4 * k;
            links.push_back({H::row_qubit(c, col), H::conns[c].start + qubit_t(k), H::row_qubit(c + 1, col)});
        }
    }
    return links;
}

}  // namespace

LinkGraph heavy_hex(int num_qubits) {
    if (num_qubits == 127) {
        return LinkGraph(heavy_hex_links_127());
    }
    if (num_qubits == 12) {
        std::vector<Link> links;
        for (qubit_t v = 0; v < 12; v += 2) {
            links.push_back({v, v + 1, qubit_t((v + 2) % 12)});
        }
        return LinkGraph(links);
    }
    throw std::invalid_argument("unsupported heavy-hex size " + std::to_string(num_qubits) +
                                " (supported: 12, 127)");
}

LinkGraph linear_graph(int distance) {
    if (distance < 2) {
        throw std::invalid_argument("linear layout needs distance >= 2");
    }
    std::vector<Link> links;
    for (int i = 0; i + 1 < distance; i++) {
        links.push_back({qubit_t(2 * i), qubit_t(2 * i + 1), qubit_t(2 * i + 2)});
    }
    return LinkGraph(links);
}

LinkGraph line202_graph() {
    return LinkGraph({{0, 1, 4}, {4, 7, 10}, {10, 12, 15}});
}

std::map<qubit_t, std::pair<double, double>> layout_coords(const LinkGraph& graph) {
    std::map<qubit_t, std::pair<double, double>> coords;
    if (graph.max_qubit_id() == 126 && graph.num_links() == 71) {
        using H = HeavyHex127;
        for (int row = 0; row < 7; row++) {
            for (int col = H::rows[row].col0; col < H::rows[row].col0 + H::rows[row].len; col++) {
                coords[H::row_qubit(row, col)] = {double(col), double(2 * row)};
            }
        }
        for (int c = 0; c < 6; c++) {
            for (int k = 0; k < 4; k++) {
                coords[H::conns[c].start + qubit_t(k)] = {double(H::conns[c].col0 + 4 * k), double(2 * c + 1)};
            }
        }
        return coords;
    }
    // Generic fallback: code qubits on a circle, auxiliaries at link midpoints.
    const auto& qs = graph.code_qubits();
    double r = std::max(2.0, double(qs.size()) / 2.0);
    for (size_t i = 0; i < qs.size(); i++) {
        double angle = 2.0 * M_PI * double(i) / double(qs.size());
        coords[qs[i]] = {r * std::cos(angle), r * std::sin(angle)};
    }
    for (const Link& l : graph.links()) {
        auto [ax, ay] = coords[l.code_a];
        auto [bx, by] = coords[l.code_b];
        coords[l.aux] = {(ax + bx) / 2, (ay + by) / 2};
    }
    return coords;
}

}  // namespace arc
