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

#include "arc/tableau.h"

#include <bit>
#include <stdexcept>

namespace arc {

Tableau::Tableau(size_t num_qubits) : n_(num_qubits), words_((num_qubits + 63) / 64) {
    xs_.assign((2 * n_ + 1) * words_, 0);
    zs_.assign((2 * n_ + 1) * words_, 0);
    rs_.assign(2 * n_ + 1, 0);
    for (size_t i = 0; i < n_; i++) {
        row_x(i)[i >> 6] |= 1ull << (i & 63);           // destabilizer X_i
        row_z(n_ + i)[i >> 6] |= 1ull << (i & 63);      // stabilizer Z_i
    }
}

void Tableau::rowsum(size_t h, size_t i) {
    // Multiplies row h by row i, tracking the power of i in the phase. The
    // per-qubit contribution is +1 for cyclically ordered Pauli pairs
    // (X,Y), (Y,Z), (Z,X) and -1 for the reversed ones.
    const uint64_t* xi = row_x(i);
    const uint64_t* zi = row_z(i);
    uint64_t* xh = row_x(h);
    uint64_t* zh = row_z(h);
    int64_t phase = 2 * (int64_t(rs_[h]) + int64_t(rs_[i]));
    for (size_t w = 0; w < words_; w++) {
        uint64_t x1 = xi[w], z1 = zi[w], x2 = xh[w], z2 = zh[w];
        uint64_t pos = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t neg = (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
        phase += std::popcount(pos) - std::popcount(neg);
        xh[w] ^= x1;
        zh[w] ^= z1;
    }
    phase &= 3;
    if (phase != 0 && phase != 2) {
        throw std::logic_error("tableau rowsum produced imaginary phase");
    }
    rs_[h] = phase == 2;
}

void Tableau::h(size_t q) {
    size_t w = q >> 6;
    uint64_t m = 1ull << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t* x = row_x(r);
        uint64_t* z = row_z(r);
        uint64_t xb = x[w] & m, zb = z[w] & m;
        rs_[r] ^= (xb && zb);
        x[w] ^= xb ^ zb;
        z[w] ^= xb ^ zb;
    }
}

void Tableau::s(size_t q) {
    size_t w = q >> 6;
    uint64_t m = 1ull << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t xb = row_x(r)[w] & m;
        uint64_t zb = row_z(r)[w] & m;
        rs_[r] ^= (xb && zb);
        row_z(r)[w] ^= xb;
    }
}

void Tableau::sdg(size_t q) {
    size_t w = q >> 6;
    uint64_t m = 1ull << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t xb = row_x(r)[w] & m;
        uint64_t zb = row_z(r)[w] & m;
        rs_[r] ^= (xb && !zb);
        row_z(r)[w] ^= xb;
    }
}

void Tableau::x(size_t q) {
    size_t w = q >> 6;
    uint64_t m = 1ull << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        rs_[r] ^= (row_z(r)[w] & m) != 0;
    }
}

void Tableau::z(size_t q) {
    size_t w = q >> 6;
    uint64_t m = 1ull << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        rs_[r] ^= (row_x(r)[w] & m) != 0;
    }
}

void Tableau::y(size_t q) {
    size_t w = q >> 6;
    uint64_t m = 1ull << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        rs_[r] ^= ((row_x(r)[w] ^ row_z(r)[w]) & m) != 0;
    }
}

void Tableau::pauli(size_t q, char p) {
    switch (p) {
        case 'x':
            x(q);
            break;
        case 'y':
            y(q);
            break;
        case 'z':
            z(q);
            break;
        default:
            throw std::invalid_argument("unknown Pauli");
    }
}

void Tableau::cx(size_t control, size_t target) {
    size_t wc = control >> 6, wt = target >> 6;
    uint64_t mc = 1ull << (control & 63), mt = 1ull << (target & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t* x = row_x(r);
        uint64_t* z = row_z(r);
        bool xc = x[wc] & mc, zc = z[wc] & mc;
        bool xt = x[wt] & mt, zt = z[wt] & mt;
        rs_[r] ^= xc && zt && (xt == zc);
        if (xc) {
            x[wt] ^= mt;
        }
        if (zt) {
            z[wc] ^= mc;
        }
    }
}

size_t Tableau::find_anticommuting_stabilizer(size_t q) const {
    for (size_t p = n_; p < 2 * n_; p++) {
        if (get(row_x(p), q)) {
            return p;
        }
    }
    return SIZE_MAX;
}

bool Tableau::measure_is_random(size_t q) const {
    return find_anticommuting_stabilizer(q) != SIZE_MAX;
}

bool Tableau::measure_deterministic(size_t q) {
    // Accumulate the stabilizers indicated by destabilizer X components into
    // the scratch row; its sign is the outcome.
    size_t scratch = 2 * n_;
    uint64_t* sx = row_x(scratch);
    uint64_t* sz = row_z(scratch);
    for (size_t w = 0; w < words_; w++) {
        sx[w] = 0;
        sz[w] = 0;
    }
    rs_[scratch] = 0;
    for (size_t i = 0; i < n_; i++) {
        if (get(row_x(i), q)) {
            rowsum(scratch, i + n_);
        }
    }
    return rs_[scratch];
}

void Tableau::collapse_random(size_t q, bool outcome,
                              std::vector<uint64_t>* out_flip_x,
                              std::vector<uint64_t>* out_flip_z) {
    size_t p = find_anticommuting_stabilizer(q);
    if (p == SIZE_MAX) {
        throw std::logic_error("collapse_random called on a determined measurement");
    }
    for (size_t i = 0; i < 2 * n_; i++) {
        if (i != p && get(row_x(i), q)) {
            rowsum(i, p);
        }
    }
    if (out_flip_x) {
        out_flip_x->assign(row_x(p), row_x(p) + words_);
    }
    if (out_flip_z) {
        out_flip_z->assign(row_z(p), row_z(p) + words_);
    }
    // The consumed stabilizer becomes the destabilizer; the measured Z_q
    // (with the chosen sign) replaces it.
    size_t d = p - n_;
    for (size_t w = 0; w < words_; w++) {
        row_x(d)[w] = row_x(p)[w];
        row_z(d)[w] = row_z(p)[w];
        row_x(p)[w] = 0;
        row_z(p)[w] = 0;
    }
    rs_[d] = rs_[p];
    row_z(p)[q >> 6] |= 1ull << (q & 63);
    rs_[p] = outcome;
}

void Tableau::reset(size_t q) {
    if (measure_is_random(q)) {
        collapse_random(q, false);
    } else if (measure_deterministic(q)) {
        x(q);
    }
}

}  // namespace arc
