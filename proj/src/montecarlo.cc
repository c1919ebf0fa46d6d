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

#include "bellrate/montecarlo.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "bellrate/format.h"
#include "bellrate/gf2.h"

namespace bellrate {

namespace {

uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-pair relabelings that move the parity a*i + b*j into the amp bit.
BellLabel route(BellLabel l, uint8_t a, uint8_t b) {
    if (a && b) {
        return BellLabel(static_cast<uint8_t>(l.amp ^ l.phase), l.phase);
    }
    if (b) {
        return BellLabel(l.phase, l.amp);
    }
    return l;
}

BellLabel unroute(BellLabel l, uint8_t a, uint8_t b) {
    // Both nontrivial routes are involutions.
    return route(l, a, b);
}

}  // namespace

std::mt19937_64 make_stream(uint64_t seed, uint64_t stream) {
    uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (stream + 1));
    std::vector<uint32_t> words;
    for (int k = 0; k < 8; k++) {
        uint64_t v = splitmix64(state);
        words.push_back(static_cast<uint32_t>(v));
        words.push_back(static_cast<uint32_t>(v >> 32));
    }
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

LabelIndex sample_label(std::span<const double> probs, std::mt19937_64 &rng) {
    double u = uniform01(rng);
    double acc = 0;
    LabelIndex last = 0;
    for (LabelIndex x = 0; x < probs.size(); x++) {
        if (probs[x] <= 0) {
            continue;
        }
        acc += probs[x];
        last = x;
        if (u < acc) {
            return x;
        }
    }
    return last;
}

SampledEnsemble sample_ensemble(const BlockDist &spectrum, size_t n, uint64_t seed) {
    if (spectrum.pairs() != 1) {
        throw std::invalid_argument("sample_ensemble needs a one-pair spectrum.");
    }
    if (n == 0) {
        throw std::invalid_argument("Ensemble size must be at least 1.");
    }
    auto rng = make_stream(seed, 0);
    std::vector<BellLabel> labels;
    labels.reserve(n);
    for (size_t k = 0; k < n; k++) {
        labels.push_back(BellLabel::from_index(sample_label(spectrum.probs(), rng)));
    }
    return {LabelString(std::move(labels)), seed};
}

uint8_t simulate_parity_check(const SampledEnsemble &e, const ParityMask &mask) {
    size_t n = e.n();
    if (mask.pairs() != n) {
        throw std::invalid_argument(
            "Mask covers " + std::to_string(mask.pairs()) + " pairs but the ensemble has " + std::to_string(n) + ".");
    }
    std::vector<BellLabel> work = e.labels.labels();
    work.emplace_back(0, 0);
    LabelString s(std::move(work));
    size_t ancilla = n;
    for (size_t p = 0; p < n; p++) {
        auto a = static_cast<uint8_t>((mask.bits() >> label_bit(n, p, BellBit::amp)) & 1);
        auto b = static_cast<uint8_t>((mask.bits() >> label_bit(n, p, BellBit::phase)) & 1);
        if (!a && !b) {
            continue;
        }
        s.set_pair(p, route(s.pair(p), a, b));
        s = bcnot(p, ancilla, s);
        s.set_pair(p, unroute(s.pair(p), a, b));
    }
    for (size_t p = 0; p < n; p++) {
        if (!(s.pair(p) == e.labels.pair(p))) {
            throw std::logic_error("Parity check disturbed the ensemble.");
        }
    }
    if (s.pair(ancilla).phase != 0) {
        throw std::logic_error("Parity check left the ancilla phase set.");
    }
    return s.pair(ancilla).amp;
}

uint8_t direct_parity(const LabelString &s, const ParityMask &mask) {
    if (mask.pairs() != s.pairs()) {
        throw std::invalid_argument("Mask and label string sizes differ.");
    }
    return static_cast<uint8_t>(dot_parity(s.index(), mask.bits()));
}

std::vector<ResidualEntropyPoint> residual_entropy_curve(
    const BlockDist &spectrum, size_t n, size_t checks, size_t trials, uint64_t seed) {
    if (spectrum.pairs() != 1) {
        throw std::invalid_argument("residual_entropy_curve needs a one-pair spectrum.");
    }
    if (n == 0 || n > kMaxEnumeratedPairs) {
        throw std::invalid_argument(
            "Posterior enumeration supports 1.." + std::to_string(kMaxEnumeratedPairs) + " pairs.");
    }
    if (checks > 2 * n) {
        throw std::invalid_argument("At most 2n independent parity checks exist on n pairs.");
    }
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1.");
    }

    BlockDist prior = tensor_power(spectrum, n);
    auto p = prior.probs();
    size_t size = p.size();
    std::vector<double> plogp(size);
    for (size_t x = 0; x < size; x++) {
        plogp[x] = p[x] > 0 ? p[x] * std::log2(p[x]) : 0.0;
    }
    LabelIndex full = static_cast<LabelIndex>(size);

    std::vector<double> sum(checks + 1, 0.0);
    std::vector<double> sum_sq(checks + 1, 0.0);
    std::vector<LabelIndex> support;
    std::vector<LabelIndex> next;
    for (size_t t = 0; t < trials; t++) {
        auto rng = make_stream(seed, t);
        LabelIndex truth = sample_label(p, rng);
        support.clear();
        for (LabelIndex x = 0; x < full; x++) {
            if (p[x] > 0) {
                support.push_back(x);
            }
        }
        Gf2Span used(n);
        for (size_t k = 0; k <= checks; k++) {
            if (k > 0) {
                LabelIndex mask = 0;
                do {
                    mask = static_cast<LabelIndex>(rng() & (full - 1));
                } while (mask == 0 || used.contains(mask));
                used.insert(mask);
                unsigned outcome = dot_parity(truth, mask);
                next.clear();
                for (LabelIndex x : support) {
                    if (dot_parity(x, mask) == outcome) {
                        next.push_back(x);
                    }
                }
                support.swap(next);
            }
            double z = 0;
            double s = 0;
            for (LabelIndex x : support) {
                z += p[x];
                s += plogp[x];
            }
            double h = std::max(0.0, std::log2(z) - s / z);
            sum[k] += h;
            sum_sq[k] += h * h;
        }
    }
    std::vector<ResidualEntropyPoint> out;
    auto count = static_cast<double>(trials);
    for (size_t k = 0; k <= checks; k++) {
        double mean = sum[k] / count;
        double var = trials > 1 ? std::max(0.0, (sum_sq[k] - count * mean * mean) / (count - 1)) : 0.0;
        out.push_back({k, mean, std::sqrt(var)});
    }
    return out;
}

std::string residual_entropy_csv(const std::vector<ResidualEntropyPoint> &curve) {
    std::string out = "k,mean_residual_entropy_bits,stddev\n";
    for (const auto &pt : curve) {
        out += std::to_string(pt.k) + "," + format_number(pt.mean_bits) + "," + format_number(pt.stddev_bits) + "\n";
    }
    return out;
}

std::pair<double, double> empirical_branch_probabilities(
    const BlockDist &spectrum, const ParityMask &mask, size_t trials, uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1.");
    }
    if (mask.pairs() != spectrum.pairs()) {
        throw std::invalid_argument("Mask and spectrum sizes differ.");
    }
    auto rng = make_stream(seed, 0);
    size_t ones = 0;
    for (size_t t = 0; t < trials; t++) {
        ones += dot_parity(sample_label(spectrum.probs(), rng), mask.bits());
    }
    double mu1 = static_cast<double>(ones) / static_cast<double>(trials);
    return {static_cast<double>(trials - ones) / static_cast<double>(trials), mu1};
}

}  // namespace bellrate
