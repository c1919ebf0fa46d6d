// Copyright 2026 The bellrate Authors
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

#ifndef BELLRATE_SEARCH_H
#define BELLRATE_SEARCH_H

#include <cstdint>
#include <vector>

#include "bellrate/block_dist.h"
#include "bellrate/label_map.h"
#include "bellrate/protocol.h"

namespace bellrate {

/// Largest block the search accepts; beyond 4 pairs it is beam-guided.
inline constexpr size_t kMaxSearchPairs = 6;

struct SearchConfig {
    /// Blocks with more pairs are rejected. At most kMaxSearchPairs.
    size_t max_pairs = 4;
    /// Memoize on orbits of the label-map group instead of exact distributions.
    bool canonicalize = true;
    bool memoize = true;
    /// Resolution of memo keys.
    double memo_tolerance = 1e-10;
    bool parity_checks = true;
    bool measurements = true;
    /// Allow a label map before each measurement.
    bool relabelings = true;
    /// Cap on parity checks plus measurements along any path; 0 means no cap.
    size_t max_depth = 0;
    /// Actions explored per state; 0 means exhaustive for up to 4 pairs and
    /// kDefaultBeamWidth above that.
    size_t beam_width = 0;
};

inline constexpr size_t kDefaultBeamWidth = 2;
inline constexpr size_t kDefaultBeamDepth = 4;

struct SearchStats {
    size_t states_expanded = 0;
    size_t memo_hits = 0;
};

struct SearchResult {
    /// Ebits per initial pair.
    double best_rate = 0;
    /// Ebits per block.
    double best_yield = 0;
    ProtocolTree best_tree;
    SearchStats stats;
};

/// Best protocol built from asymptotic parity checks, local Bell
/// measurements (each optionally preceded by a label map), hashing and
/// discarding, for the block d.
///
/// The value of a state is the maximum of its hashing yield, 0 (discard),
/// -S(mu0, mu1) + mu0 V(d0) + mu1 V(d1) over parity masks that split it, and
/// q0 V(r0) + q1 V(r1) over measurements. Values within 1e-12 are tied and
/// resolved in favour of the shallower tree, then the smaller text form.
/// Throws std::invalid_argument if d has more than cfg.max_pairs pairs.
SearchResult optimize(const BlockDist &d, const SearchConfig &cfg = {});

struct CanonicalForm {
    size_t pairs = 0;
    /// Entries of the minimal pushforward, rounded to multiples of the tolerance.
    std::vector<int64_t> key;
    /// Group element (with translation) whose pushforward attains the key.
    LabelMap to_canonical;
    /// Number of group elements attaining the key.
    size_t stabilizer_size = 0;
};

/// Lexicographically minimal rounded pushforward over the label-map group
/// and all translations. Supported for blocks of 1 or 2 pairs; throws
/// std::invalid_argument otherwise.
CanonicalForm canonicalize(const BlockDist &d, double tolerance = 1e-10);

/// A measurement preceded by an optional label map.
struct MeasureAction {
    std::optional<LabelMap> relabel;
    size_t pair;
    BellBit which;
};

/// One measurement per distinct (measured parity, destroyed plane) pair;
/// plain measurements of each pair's bits come first.
const std::vector<MeasureAction> &measurement_actions(size_t pairs, bool with_relabel);

}  // namespace bellrate

#endif
