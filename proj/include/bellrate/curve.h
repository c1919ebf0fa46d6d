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

#ifndef BELLRATE_CURVE_H
#define BELLRATE_CURVE_H

#include <span>
#include <string>
#include <vector>

#include "bellrate/protocol.h"
#include "bellrate/search.h"

namespace bellrate {

/// Recurrence rounds tried for the rec_hash column.
inline constexpr size_t kCurveRecurrenceRounds = 20;

struct CurveRow {
    double f = 0;
    /// 1 - S, not clamped.
    double hash = 0;
    double asym_rec = 0;
    double two_copy = 0;
    /// Best of recurrence followed by hashing over rounds and variants.
    double rec_hash = 0;
    /// Searched rate per copy on werner(f) to the power `copies`.
    double optimized = 0;
    ProtocolTree tree;
};

struct MonotonicityViolation {
    std::string column;
    /// Row whose value is below the one before it.
    size_t row;
    double drop;
};

struct WernerCurve {
    size_t copies = 0;
    std::vector<CurveRow> rows;
    std::vector<MonotonicityViolation> violations;
};

/// Tabulates every rate column over a grid of Werner fidelities.
///
/// Each grid point must lie in (1/2, 1]. Rows keep grid order; monotonicity
/// in f is checked between consecutive increasing grid points.
WernerCurve werner_curve(std::span<const double> grid, size_t copies, const SearchConfig &cfg = {});

/// Header "f,hash,asym_rec,two_copy,rec_hash,optimized" and one line per row.
std::string curve_csv(const WernerCurve &curve);

/// Parses "lo:hi:step" (inclusive of hi up to rounding) or a single value.
std::vector<double> parse_grid(const std::string &text);

}  // namespace bellrate

#endif
