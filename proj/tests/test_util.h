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

#ifndef BELLRATE_TESTS_TEST_UTIL_H
#define BELLRATE_TESTS_TEST_UTIL_H

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "bellrate/block_dist.h"

namespace bellrate::test_util {

/// Random one-pair spectrum with exactly `nonzero` positive eigenvalues at
/// random positions (1..4).
inline BlockDist random_spectrum(std::mt19937_64 &rng, size_t nonzero = 4) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::array<size_t, 4> order{0, 1, 2, 3};
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<double> w(4, 0.0);
    for (size_t k = 0; k < nonzero; k++) {
        w[order[k]] = u(rng);
    }
    return BlockDist::from_weights(1, w);
}

/// Random distribution over m pairs with every entry positive.
inline BlockDist random_block(std::mt19937_64 &rng, size_t pairs) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(size_t{1} << (2 * pairs));
    for (auto &x : w) {
        x = e(rng) + 1e-3;
    }
    return BlockDist::from_weights(pairs, w);
}

/// Amplitudes of psi_ij over |a b> (Alice bit a, Bob bit b), index 2a + b.
inline std::array<double, 4> bell_vector(unsigned i, unsigned j) {
    std::array<double, 4> v{};
    double s = 1 / std::sqrt(2.0);
    v[0 * 2 + i] = s;
    v[1 * 2 + (1 - i)] = j ? -s : s;
    return v;
}

}  // namespace bellrate::test_util

#endif
