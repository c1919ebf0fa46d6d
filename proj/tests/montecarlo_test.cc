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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "bellrate/gf2.h"

using namespace bellrate;

TEST(montecarlo, streams_are_reproducible_and_distinct) {
    auto a = make_stream(7, 0);
    auto b = make_stream(7, 0);
    auto c = make_stream(7, 1);
    auto d = make_stream(8, 0);
    uint64_t x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
    EXPECT_NE(x, d());
    for (int k = 0; k < 1000; k++) {
        double u = uniform01(a);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(montecarlo, sample_ensemble_is_deterministic) {
    auto w = werner_dist(0.8);
    auto e1 = sample_ensemble(w, 12, 3);
    auto e2 = sample_ensemble(w, 12, 3);
    EXPECT_EQ(e1.labels, e2.labels);
    EXPECT_EQ(e1.n(), 12u);
    EXPECT_THROW(sample_ensemble(tensor(w, w), 4, 1), std::invalid_argument);
    auto pure = sample_ensemble(BlockDist::delta(1, 0b10), 5, 1);
    EXPECT_EQ(pure.labels.str(), "1010101010");
}

TEST(montecarlo, parity_check_examples) {
    SampledEnsemble zero{LabelString::parse("0000"), 0};
    for (LabelIndex m = 1; m < 16; m++) {
        EXPECT_EQ(simulate_parity_check(zero, ParityMask(2, m)), 0u);
    }
    SampledEnsemble e{LabelString::parse("1100"), 0};
    EXPECT_EQ(simulate_parity_check(e, ParityMask::parse("1010")), 1u);
    EXPECT_EQ(simulate_parity_check(e, ParityMask::parse("1100")), 0u);
    EXPECT_EQ(simulate_parity_check(e, ParityMask::parse("0100")), 1u);
    EXPECT_THROW(simulate_parity_check(e, ParityMask::parse("10")), std::invalid_argument);
}

TEST(montecarlo, parity_check_equals_inner_product) {
    std::mt19937_64 rng(5);
    auto w = werner_dist(0.7);
    for (int k = 0; k < 2000; k++) {
        size_t n = 1 + rng() % 16;
        auto e = sample_ensemble(w, n, rng());
        LabelIndex bits = 0;
        while (bits == 0) {
            bits = static_cast<LabelIndex>(rng() & ((uint64_t{1} << (2 * n)) - 1));
        }
        ParityMask mask(n, bits);
        auto before = e.labels;
        EXPECT_EQ(simulate_parity_check(e, mask), direct_parity(e.labels, mask));
        EXPECT_EQ(e.labels, before);
    }
}

TEST(montecarlo, residual_entropy_starts_at_block_entropy) {
    auto w = werner_dist(0.8);
    auto curve = residual_entropy_curve(w, 4, 8, 5, 1);
    ASSERT_EQ(curve.size(), 9u);
    EXPECT_NEAR(curve[0].mean_bits, 4 * w.entropy(), 1e-12);
    EXPECT_EQ(curve[0].stddev_bits, 0.0);
    EXPECT_NEAR(curve[8].mean_bits, 0.0, 1e-12);
}

TEST(montecarlo, residual_entropy_special_spectra) {
    auto pure = residual_entropy_curve(BlockDist::delta(1, 0), 3, 2, 3, 1);
    EXPECT_EQ(pure[0].mean_bits, 0.0);
    auto uniform = residual_entropy_curve(BlockDist::uniform(1), 4, 3, 10, 2);
    EXPECT_NEAR(uniform[0].mean_bits, 8.0, 1e-12);
    EXPECT_NEAR(uniform[1].mean_bits, 7.0, 1e-12);
    EXPECT_NEAR(uniform[3].mean_bits, 5.0, 1e-12);
}

TEST(montecarlo, residual_entropy_drops_about_a_bit_per_check) {
    auto curve = residual_entropy_curve(werner_dist(0.8), 6, 12, 100, 9);
    for (size_t k = 1; k <= 3; k++) {
        double drop = curve[k - 1].mean_bits - curve[k].mean_bits;
        EXPECT_GT(drop, 0.6);
        EXPECT_LT(drop, 1.2);
    }
    EXPECT_NEAR(curve[12].mean_bits, 0.0, 1e-12);
}

TEST(montecarlo, residual_entropy_rejects_bad_arguments) {
    auto w = werner_dist(0.8);
    EXPECT_THROW(residual_entropy_curve(w, 11, 1, 1, 1), std::invalid_argument);
    EXPECT_THROW(residual_entropy_curve(w, 2, 5, 1, 1), std::invalid_argument);
    EXPECT_THROW(residual_entropy_curve(w, 2, 1, 0, 1), std::invalid_argument);
}

TEST(montecarlo, residual_entropy_csv) {
    std::vector<ResidualEntropyPoint> pts{{0, 2.5, 0.0}, {1, 1.5, 0.25}};
    EXPECT_EQ(residual_entropy_csv(pts), "k,mean_residual_entropy_bits,stddev\n0,2.5,0\n1,1.5,0.25\n");
}

TEST(montecarlo, empirical_branch_probabilities) {
    auto [d0, d1] = empirical_branch_probabilities(BlockDist::delta(1, 0), ParityMask::parse("10"), 1000, 1);
    EXPECT_EQ(d0, 1.0);
    EXPECT_EQ(d1, 0.0);

    size_t trials = 200000;
    auto [u0, u1] = empirical_branch_probabilities(BlockDist::uniform(1), ParityMask::parse("10"), trials, 2);
    double sigma = std::sqrt(0.25 / trials);
    EXPECT_NEAR(u0, 0.5, 5 * sigma);
    EXPECT_NEAR(u0 + u1, 1.0, 1e-15);

    auto w = werner_dist(0.7);
    double a = w[0] + w[1];
    double b = w[2] + w[3];
    double mu0 = a * a + b * b;
    auto [w0, w1] = empirical_branch_probabilities(tensor(w, w), ParityMask::parse("1010"), trials, 3);
    EXPECT_NEAR(w0, mu0, 5 * std::sqrt(mu0 * (1 - mu0) / trials));
}
