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

#ifndef BELLRATE_REFERENCE_PROTOCOLS_H
#define BELLRATE_REFERENCE_PROTOCOLS_H

#include "bellrate/block_dist.h"
#include "bellrate/protocol.h"

namespace bellrate {

/// Check parity 1010 of two copies, hash the even branch, drop the odd one.
ProtocolTree asymptotic_recurrence_tree();

/// Check parity 1010 of two copies; hash the even branch; on the odd branch
/// measure the amp bit of pair 1 and hash the remaining rank-two pair for
/// both outcomes.
ProtocolTree two_copy_tree();

/// Per-copy rate of asymptotic_recurrence_tree on two copies of a one-pair
/// spectrum: -S(p_odd, p_even)/2 + p_even (1 - S(rho_even)/2).
double rate_asymptotic_recurrence(const BlockDist &spectrum);

/// Improvement of the two-copy protocol over hashing:
/// p_odd/4 * (S([l00, l01]) + S([l11, l10])). Zero for rank <= 2.
double two_copy_extra_term(const BlockDist &spectrum);

/// Per-copy rate of two_copy_tree: 1 - S(lambda) + two_copy_extra_term.
double rate_2copy(const BlockDist &spectrum);

/// How the output of a recurrence step is post-processed.
enum class RecurrenceVariant {
    /// Keep the full Bell-diagonal output.
    plain,
    /// Map the output to the Werner state of the same fidelity.
    twirl,
};

struct RecurrenceStep {
    double p_success;
    BlockDist spectrum;
};

/// One recurrence round: two copies, bilateral CNOT (pair 0 source, pair 1
/// target), measure the target's amp bit, keep the coinciding outcome.
/// Throws std::domain_error if the step succeeds with probability 0.
RecurrenceStep recurrence_step(const BlockDist &spectrum, RecurrenceVariant variant = RecurrenceVariant::plain);

/// (prod_k p_k / 2) * max(0, 1 - S(final spectrum)) after `rounds` rounds.
double rate_recurrence_then_hash(
    const BlockDist &spectrum, size_t rounds, RecurrenceVariant variant = RecurrenceVariant::plain);

struct BestRecurrence {
    double rate;
    size_t rounds;
};

/// Best rate_recurrence_then_hash over 0..max_rounds; ties keep fewer rounds.
/// Rounds whose step fails are skipped.
BestRecurrence best_recurrence_then_hash(
    const BlockDist &spectrum, size_t max_rounds, RecurrenceVariant variant = RecurrenceVariant::plain);

/// Werner fidelity where 1 - S(werner(f)) = 0, located by bisection on
/// [0.5, 1] to the given interval width.
double werner_hashing_threshold(double tolerance = 1e-12);

}  // namespace bellrate

#endif
