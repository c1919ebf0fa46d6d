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

#ifndef BELLRATE_BOOTSTRAP_H
#define BELLRATE_BOOTSTRAP_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bellrate {

/// Schedule that turns an entanglement-assisted protocol of rate r into one
/// that needs no pre-shared ebits.
///
/// An activating protocol of rate k first distills floor(sqrt(n)) ebits from
/// ceil(floor(sqrt(n)) / k) extra copies. Those seed a pool; each block of b
/// copies borrows b ebits from the pool and returns (1 + r) b.
struct BootstrapPlan {
    uint64_t n = 0;
    double k = 0;
    double r = 0;
    uint64_t sqrt_n = 0;
    uint64_t activating_copies = 0;
    std::vector<uint64_t> blocks;
    /// Smallest pool balance seen right after a block borrows its ebits.
    double min_pool = 0;
    double final_pool = 0;
    /// Net ebits (final pool minus the activating ebits) per input copy.
    double effective_rate = 0;
};

/// Builds the block schedule. Block t has floor((1 + r)^t sqrt(n)) copies,
/// capped by the pool; a remainder smaller than the next block is folded
/// into the current one. Throws std::invalid_argument for n = 0 or
/// nonpositive k, r.
BootstrapPlan make_plan(uint64_t n, double k, double r);

/// Recomputes pool balances for an arbitrary schedule; throws
/// std::logic_error if the pool ever goes negative.
double replay_pool(const BootstrapPlan &plan);

/// Lower bound p(s) (1 - k_err e^{-c s})^s on the success probability, with
/// s = floor(sqrt(n)). Evaluated in log space; 0 when k_err e^{-c s} >= 1.
double success_bound(uint64_t n, const std::function<double(double)> &p_activating, double k_err, double c);

/// One CSV row "n,activating_copies,blocks,effective_rate,success_bound".
std::string bootstrap_csv_row(const BootstrapPlan &plan, double bound);
inline constexpr const char *kBootstrapCsvHeader = "n,activating_copies,blocks,effective_rate,success_bound";

}  // namespace bellrate

#endif
