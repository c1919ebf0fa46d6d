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

#include "bellrate/curve.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bellrate/entropy.h"
#include "bellrate/format.h"
#include "bellrate/reference_protocols.h"

namespace bellrate {

WernerCurve werner_curve(std::span<const double> grid, size_t copies, const SearchConfig &cfg) {
    if (grid.empty()) {
        throw std::invalid_argument("Fidelity grid is empty.");
    }
    if (copies == 0) {
        throw std::invalid_argument("copies must be at least 1.");
    }
    for (double f : grid) {
        if (!(f > 0.5 && f <= 1.0)) {
            throw std::invalid_argument(
                "Grid point " + format_number(f) + " is outside the entangled Werner region (1/2, 1].");
        }
    }
    SearchConfig search_cfg = cfg;
    search_cfg.max_pairs = std::max(search_cfg.max_pairs, copies);

    WernerCurve out;
    out.copies = copies;
    for (double f : grid) {
        BlockDist w = werner_dist(f);
        CurveRow row;
        row.f = f;
        row.hash = hashing_yield(w);
        row.asym_rec = rate_asymptotic_recurrence(w);
        row.two_copy = rate_2copy(w);
        row.rec_hash = std::max(
            best_recurrence_then_hash(w, kCurveRecurrenceRounds, RecurrenceVariant::plain).rate,
            best_recurrence_then_hash(w, kCurveRecurrenceRounds, RecurrenceVariant::twirl).rate);
        SearchResult found = optimize(tensor_power(w, copies), search_cfg);
        row.optimized = found.best_rate;
        row.tree = found.best_tree;
        out.rows.push_back(std::move(row));
    }

    const std::pair<const char *, double CurveRow::*> columns[] = {
        {"hash", &CurveRow::hash},         {"asym_rec", &CurveRow::asym_rec}, {"two_copy", &CurveRow::two_copy},
        {"rec_hash", &CurveRow::rec_hash}, {"optimized", &CurveRow::optimized},
    };
    for (size_t k = 1; k < out.rows.size(); k++) {
        const CurveRow &prev = out.rows[k - 1];
        const CurveRow &cur = out.rows[k];
        if (!(cur.f > prev.f)) {
            continue;
        }
        for (const auto &[name, member] : columns) {
            double drop = prev.*member - cur.*member;
            if (drop > kProbabilityTolerance) {
                out.violations.push_back({name, k, drop});
            }
        }
    }
    return out;
}

std::string curve_csv(const WernerCurve &curve) {
    std::string out = "f,hash,asym_rec,two_copy,rec_hash,optimized\n";
    for (const auto &r : curve.rows) {
        out += format_number(r.f) + "," + format_number(r.hash) + "," + format_number(r.asym_rec) + "," +
               format_number(r.two_copy) + "," + format_number(r.rec_hash) + "," + format_number(r.optimized) + "\n";
    }
    return out;
}

std::vector<double> parse_grid(const std::string &text) {
    size_t first = text.find(':');
    if (first == std::string::npos) {
        return {parse_number(text)};
    }
    size_t second = text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
        throw std::invalid_argument("Grid must be 'lo:hi:step' or a single value, got '" + text + "'.");
    }
    double lo = parse_number(text.substr(0, first));
    double hi = parse_number(text.substr(first + 1, second - first - 1));
    double step = parse_number(text.substr(second + 1));
    if (!(step > 0)) {
        throw std::invalid_argument("Grid step must be positive.");
    }
    if (hi < lo) {
        throw std::invalid_argument("Grid upper bound is below the lower bound.");
    }
    auto count = static_cast<size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (size_t k = 0; k < count; k++) {
        // Rounded so that 0.51 + 48 * 0.01 prints as 0.99.
        double v = lo + static_cast<double>(k) * step;
        out.push_back(parse_number(format_number(v)));
    }
    return out;
}

}  // namespace bellrate
