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

#ifndef ARC_EVENTS_H
#define ARC_EVENTS_H

#include <compare>
#include <cstdint>
#include <string>

namespace arc {

using qubit_t = uint32_t;

/// An error sensitive event: a change between consecutive same-kind syndrome
/// values, localized to a round and a link. Syndrome rounds are numbered from
/// 1; events derived from the final readout reuse the last round index and
/// set `is_final`.
struct DetectionEvent {
    int time = 0;
    uint32_t link = 0;
    bool is_conjugate = false;
    bool is_final = false;

    auto operator<=>(const DetectionEvent&) const = default;

    std::string str() const;
};

}  // namespace arc

#endif
