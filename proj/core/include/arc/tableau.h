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

#ifndef ARC_TABLEAU_H
#define ARC_TABLEAU_H

#include <cstdint>
#include <cstdlib>
#include <vector>

namespace arc {

/// Stabilizer tableau over n qubits with destabilizer rows, tracking the
/// state |0...0> evolved by Clifford gates and Z measurements.
class Tableau {
  public:
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }

    void h(size_t q);
    void s(size_t q);
    void sdg(size_t q);
    void x(size_t q);
    void y(size_t q);
    void z(size_t q);
    void cx(size_t control, size_t target);
    void pauli(size_t q, char p);

    /// True when the Z measurement outcome on q is not determined by the
    /// current stabilizer group.
    bool measure_is_random(size_t q) const;

    /// Measures Z on q when the outcome is determined.
    bool measure_deterministic(size_t q);

    /// Collapses a non-determined Z measurement on q to the given outcome.
    /// When out_flip_x/out_flip_z are non-null they receive the branch-flip
    /// operator (the stabilizer consumed by the collapse), which maps the
    /// outcome-b post-measurement state to the outcome-(1-b) one.
    void collapse_random(size_t q, bool outcome,
                         std::vector<uint64_t>* out_flip_x = nullptr,
                         std::vector<uint64_t>* out_flip_z = nullptr);

    /// Collapse to |0>, resolving any randomness internally (no RNG used).
    void reset(size_t q);

  private:
    size_t n_;
    size_t words_;
    // Rows 0..n-1 are destabilizers, n..2n-1 stabilizers, row 2n scratch.
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> rs_;

    uint64_t* row_x(size_t r) {
        return xs_.data() + r * words_;
    }
    uint64_t* row_z(size_t r) {
        return zs_.data() + r * words_;
    }
    const uint64_t* row_x(size_t r) const {
        return xs_.data() + r * words_;
    }
    const uint64_t* row_z(size_t r) const {
        return zs_.data() + r * words_;
    }
    bool get(const uint64_t* bits, size_t q) const {
        return (bits[q >> 6] >> (q & 63)) & 1;
    }
    void rowsum(size_t h, size_t i);
    size_t find_anticommuting_stabilizer(size_t q) const;  // SIZE_MAX if none
};

}  // namespace arc

#endif
