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

#ifndef ARC_DECODER_H
#define ARC_DECODER_H

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "arc/decoding_graph.h"
#include "arc/detection.h"
#include "arc/link_graph.h"

namespace arc {

struct Cluster {
    std::vector<uint32_t> event_nodes;  // node indices, ascending
    bool neutral = false;
    std::set<qubit_t> flip_region;      // empty when non-neutral
    int size = 0;                       // code-qubit errors needed: |flip_region|
};

struct DecodeResult {
    std::vector<Cluster> clusters;
    int raw_logical = 0;
    int corrected_logical = 0;
    bool logical_flipped = false;
};

/// Clustering decoder: one cluster per detection event, grown along
/// decoding-graph edges in uniform half-edge steps and merged on contact
/// until every cluster's flattened link set is an edge cut. Working state is
/// reusable; one instance per worker.
class ClusterDecoder {
  public:
    ClusterDecoder(const DecodingGraph& dgraph,
                   const LinkGraph& graph,
                   const CycleBasis& basis,
                   qubit_t designated_readout);

    /// Throws std::invalid_argument on events outside the decoding graph and
    /// std::runtime_error when the syndrome admits no neutral clustering.
    DecodeResult decode(const ShotSyndrome& shot);

  private:
    const DecodingGraph& dgraph_;
    const LinkGraph& graph_;
    const CycleBasis& basis_;
    qubit_t designated_;

    struct ClusterData {
        std::vector<uint32_t> events;
        std::vector<uint32_t> members;
        bool neutral = false;
        bool owns_logical = false;
        std::set<qubit_t> region;     // smaller cut side of the flattened form
        std::set<qubit_t> flip_side;  // side used for the logical correction
    };
    std::vector<int32_t> parent_;       // node -> cluster tree parent (-1 = free)
    std::vector<uint8_t> growth_;       // per edge: 0, 1, 2 half-steps
    std::map<uint32_t, ClusterData> clusters_;

    uint32_t find(uint32_t node);
    // A cluster is neutral when its flattened form is an edge cut, the
    // chosen side is unambiguous (no exact tie, unless growth is exhausted),
    // and flipping the designated readout is backed by ownership of the
    // logical boundary node.
    void refresh_neutrality(ClusterData& c, bool exhausted);
    // Peeling over the cluster's spanning tree: pairs events through edge
    // mechanisms and accumulates their readout flips. Falls back to the
    // flattened min side when the mechanisms cannot reproduce the parity.
    std::optional<std::set<qubit_t>> peel_region(const ClusterData& c);
};

std::map<int, double> cluster_histogram(const std::vector<DecodeResult>& results);
double logical_error_rate(const std::vector<DecodeResult>& results, int encoded);

/// Associative accumulator for weighted (counts-based) decoding pipelines.
struct ClusterStats {
    std::map<int, uint64_t> size_counts;
    uint64_t shots = 0;
    uint64_t logical_errors = 0;

    void add(const DecodeResult& result, uint64_t weight, int encoded);
    void merge(const ClusterStats& other);
    std::map<int, double> histogram() const;
    double logical_error_rate() const;
};

}  // namespace arc

#endif
