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

#include "bellrate/reference_protocols.h"

#include <cmath>
#include <stdexcept>

#include "bellrate/entropy.h"

namespace bellrate {

namespace {

void require_single_pair(const BlockDist &d, const char *who) {
    if (d.pairs() != 1) {
        throw std::invalid_argument(std::string(who) + " expects a single-pair spectrum.");
    }
}

const ParityMask &amp_parity_mask() {
    static const ParityMask mask = ParityMask::parse("1010");
    return mask;
}

}  // namespace

ProtocolTree asymptotic_recurrence_tree() {
    return protocol::parity_check(amp_parity_mask(), protocol::hash(), protocol::discard());
}

ProtocolTree two_copy_tree() {
    auto odd = protocol::measure(1, BellBit::amp, protocol::hash(), protocol::hash());
    return protocol::parity_check(amp_parity_mask(), protocol::hash(), odd);
}

double rate_asymptotic_recurrence(const BlockDist &spectrum) {
    require_single_pair(spectrum, "rate_asymptotic_recurrence");
    const auto &l = spectrum.probs();
    double a = l[0] + l[1];
    double b = l[2] + l[3];
    double p_even = a * a + b * b;
    double p_odd = 2 * a * b;
    if (p_even < kBranchFloor) {
        return 0.0;
    }
    // rho_even puts weight l_ij l_il on P_ij (x) P_il.
    std::vector<double> even;
    even.reserve(8);
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                even.push_back(l[2 * i + j] * l[2 * i + k]);
            }
        }
    }
    double s_even = normalized_entropy(even);
    double cost = p_odd < kBranchFloor ? 0.0 : binary_entropy(p_odd, p_even);
    return -cost / 2 + p_even * (1 - s_even / 2);
}

double two_copy_extra_term(const BlockDist &spectrum) {
    require_single_pair(spectrum, "two_copy_extra_term");
    const auto &l = spectrum.probs();
    double p_odd = 2 * (l[0] + l[1]) * (l[2] + l[3]);
    if (p_odd < kBranchFloor) {
        return 0.0;
    }
    return p_odd / 4 * (binary_entropy(l[0], l[1]) + binary_entropy(l[3], l[2]));
}

double rate_2copy(const BlockDist &spectrum) {
    require_single_pair(spectrum, "rate_2copy");
    return 1 - spectrum.entropy() + two_copy_extra_term(spectrum);
}

RecurrenceStep recurrence_step(const BlockDist &spectrum, RecurrenceVariant variant) {
    require_single_pair(spectrum, "recurrence_step");
    auto pair = tensor(spectrum, spectrum);
    auto after = apply_label_map(LabelMap::bcnot(2, 0, 1), pair);
    auto out = bell_measure(after, 1, BellBit::amp);
    if (!out.r0) {
        throw std::domain_error("Recurrence step succeeds with probability 0 for this spectrum.");
    }
    BlockDist kept = *out.r0;
    if (variant == RecurrenceVariant::twirl) {
        kept = werner_dist(kept[0]);
    }
    return {out.q0, std::move(kept)};
}

double rate_recurrence_then_hash(const BlockDist &spectrum, size_t rounds, RecurrenceVariant variant) {
    require_single_pair(spectrum, "rate_recurrence_then_hash");
    double factor = 1;
    BlockDist current = spectrum;
    for (size_t r = 0; r < rounds; r++) {
        auto step = recurrence_step(current, variant);
        factor *= step.p_success / 2;
        current = std::move(step.spectrum);
    }
    return factor * std::max(0.0, hashing_yield(current));
}

BestRecurrence best_recurrence_then_hash(const BlockDist &spectrum, size_t max_rounds, RecurrenceVariant variant) {
    require_single_pair(spectrum, "best_recurrence_then_hash");
    BestRecurrence best{std::max(0.0, hashing_yield(spectrum)), 0};
    double factor = 1;
    BlockDist current = spectrum;
    for (size_t r = 1; r <= max_rounds; r++) {
        RecurrenceStep step{0.0, current};
        try {
            step = recurrence_step(current, variant);
        } catch (const std::domain_error &) {
            break;
        } catch (const std::invalid_argument &) {
            // Twirling a state whose fidelity fell to 1/4 or below.
            break;
        }
        factor *= step.p_success / 2;
        current = std::move(step.spectrum);
        double rate = factor * std::max(0.0, hashing_yield(current));
        if (rate > best.rate) {
            best = {rate, r};
        }
    }
    return best;
}

double werner_hashing_threshold(double tolerance) {
    auto g = [](double f) { return hashing_yield(werner_dist(f)); };
    double lo = 0.5;
    double hi = 1.0;
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) > 0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace bellrate
