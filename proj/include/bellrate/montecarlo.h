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

#ifndef BELLRATE_MONTECARLO_H
#define BELLRATE_MONTECARLO_H

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bellrate/bell_label.h"
#include "bellrate/block_dist.h"
#include "bellrate/protocol.h"

namespace bellrate {

/// Random stream for (seed, stream): a 64-bit Mersenne twister whose state is
/// filled from splitmix64 applied to the seed and stream index.
std::mt19937_64 make_stream(uint64_t seed, uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(std::mt19937_64 &rng);

/// Draws a label index from a distribution by inversion of its cumulative sum.
LabelIndex sample_label(std::span<const double> probs, std::mt19937_64 &rng);

/// n Bell pairs drawn i.i.d. from a one-pair spectrum.
struct SampledEnsemble {
    LabelString labels;
    uint64_t seed = 0;

    size_t n() const {
        return labels.pairs();
    }
};

SampledEnsemble sample_ensemble(const BlockDist &spectrum, size_t n, uint64_t seed);

/// Learns <S|M> mod 2 by local operations only.
///
/// Each pair selected by the mask is relabeled so that the requested parity
/// sits in its amplitude bit, used as the source of a bilateral CNOT onto an
/// ancilla in psi_00, and relabeled back. The ancilla's amplitude bit is the
/// answer. Throws std::invalid_argument if the mask size differs from n, and
/// std::logic_error if the ensemble would be disturbed.
uint8_t simulate_parity_check(const SampledEnsemble &e, const ParityMask &mask);

/// <S|M> mod 2 computed directly from the bits.
uint8_t direct_parity(const LabelString &s, const ParityMask &mask);

struct ResidualEntropyPoint {
    size_t k = 0;
    double mean_bits = 0;
    double stddev_bits = 0;
};

inline constexpr size_t kMaxEnumeratedPairs = 10;

/// Posterior entropy of a sampled n-pair string after k = 0..checks random
/// parity checks, averaged over trials.
///
/// Every trial draws the true string and a fresh sequence of linearly
/// independent masks, so checks may not exceed 2n. The posterior is computed
/// exactly over all 4^n strings.
std::vector<ResidualEntropyPoint> residual_entropy_curve(
    const BlockDist &spectrum, size_t n, size_t checks, size_t trials, uint64_t seed);

/// Header "k,mean_residual_entropy_bits,stddev" and one line per point.
std::string residual_entropy_csv(const std::vector<ResidualEntropyPoint> &curve);

/// Frequencies of parity 0 and 1 over sampled blocks.
std::pair<double, double> empirical_branch_probabilities(
    const BlockDist &spectrum, const ParityMask &mask, size_t trials, uint64_t seed);

}  // namespace bellrate

#endif
