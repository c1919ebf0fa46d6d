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

#include "bellrate/label_map.h"

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "bellrate/gf2.h"
#include "test_util.h"

using namespace bellrate;

namespace {

LabelMap random_group_element(size_t m, std::mt19937_64 &rng) {
    const auto &group = enumerate_label_maps(m);
    LabelMap g = group[rng() % group.size()];
    return LabelMap::shift(m, static_cast<LabelIndex>(rng() & ((1u << (2 * m)) - 1))).after(g);
}

}  // namespace

TEST(label_map, bcnot_map_agrees_with_label_bcnot) {
    for (size_t s = 0; s < 3; s++) {
        for (size_t t = 0; t < 3; t++) {
            if (s == t) {
                continue;
            }
            auto g = LabelMap::bcnot(3, s, t);
            for (LabelIndex x = 0; x < 64; x++) {
                EXPECT_EQ(g.apply(x), bcnot(3, s, t, x));
                EXPECT_EQ(g.apply(LabelString::from_index(3, x)), bcnot(s, t, LabelString::from_index(3, x)));
            }
        }
    }
}

TEST(label_map, generators) {
    auto swap = LabelMap::amp_phase_swap(1, 0);
    EXPECT_EQ(swap.apply(0b10), 0b01u);
    EXPECT_EQ(swap.apply(0b11), 0b11u);
    auto shear = LabelMap::phase_shear(1, 0);
    EXPECT_EQ(shear.apply(0b10), 0b11u);
    EXPECT_EQ(shear.apply(0b01), 0b01u);
    auto shift = LabelMap::shift(2, 0b0110);
    EXPECT_EQ(shift.apply(0b0000), 0b0110u);
    EXPECT_TRUE(LabelMap::identity(3).is_identity());
}

TEST(label_map, rejects_non_symplectic_or_singular) {
    // (i, j) -> (i, i) is singular; (i, j) -> (i, 0) too.
    EXPECT_THROW(LabelMap(1, {0b11, 0b00}), std::invalid_argument);
    // Amp bit of pair 0 copied onto amp bit of pair 1 alone breaks the form.
    EXPECT_THROW(LabelMap::from_rows(2, {0b1000, 0b0100, 0b1010, 0b0001}), std::invalid_argument);
}

TEST(label_map, from_rows_gives_functionals) {
    // New amp of pair 0 is i1 + i2, everything else unchanged: a BCNOT onto pair 0.
    auto g = LabelMap::from_rows(2, {0b1010, 0b0100, 0b0010, 0b0101});
    for (LabelIndex x = 0; x < 16; x++) {
        EXPECT_EQ(g.apply(x), bcnot(2, 1, 0, x));
    }
}

TEST(label_map, composition_and_inverse) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; k++) {
        auto g = random_group_element(2, rng);
        auto h = random_group_element(2, rng);
        auto gh = g.after(h);
        auto inv = g.inverse();
        for (LabelIndex x = 0; x < 16; x++) {
            EXPECT_EQ(gh.apply(x), g.apply(h.apply(x)));
            EXPECT_EQ(inv.apply(g.apply(x)), x);
        }
        EXPECT_TRUE(inv.after(g).is_identity());
    }
}

TEST(label_map, transport_mask_tracks_parities) {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 200; k++) {
        auto g = random_group_element(2, rng);
        LabelIndex mask = 1 + rng() % 15;
        LabelIndex moved = g.transport_mask(mask);
        unsigned offset = dot_parity(g.apply(0), moved) ^ dot_parity(0, mask);
        for (LabelIndex x = 0; x < 16; x++) {
            EXPECT_EQ(dot_parity(g.apply(x), moved), dot_parity(x, mask) ^ offset);
        }
    }
}

TEST(label_map, pushforward_preserves_entropy) {
    std::mt19937_64 rng(9);
    auto d = test_util::random_block(rng, 2);
    for (int k = 0; k < 50; k++) {
        auto g = random_group_element(2, rng);
        auto moved = apply_label_map(g, d);
        EXPECT_NEAR(moved.entropy(), d.entropy(), 1e-12);
        for (LabelIndex x = 0; x < 16; x++) {
            EXPECT_EQ(moved[g.apply(x)], d[x]);
        }
    }
}

TEST(label_map, group_orders) {
    EXPECT_EQ(symplectic_group_order(1), 6u);
    EXPECT_EQ(symplectic_group_order(2), 720u);
    EXPECT_EQ(symplectic_group_order(3), 1451520u);
    EXPECT_EQ(label_map_closure(1).size(), 6u);
    EXPECT_EQ(brute_force_symplectic_maps(1).size(), 6u);
    EXPECT_EQ(label_map_closure(2).size(), 720u);
    EXPECT_EQ(brute_force_symplectic_maps(2).size(), 720u);
    EXPECT_EQ(per_pair_coset_count(2), 20u);
}

TEST(label_map, closure_and_brute_force_are_the_same_set) {
    std::set<std::string> a;
    std::set<std::string> b;
    for (const auto &g : label_map_closure(2)) {
        EXPECT_TRUE(g.preserves_symplectic_form());
        a.insert(g.linear_bits());
    }
    for (const auto &g : brute_force_symplectic_maps(2)) {
        b.insert(g.linear_bits());
    }
    EXPECT_EQ(a, b);
}

TEST(label_map, three_pair_closure_has_full_order) {
    EXPECT_EQ(label_map_closure(3).size(), symplectic_group_order(3));
}

TEST(label_map, text_forms) {
    auto g = LabelMap::bcnot(2, 0, 1);
    EXPECT_EQ(g.linear_bits(), "1000010110100001");
    EXPECT_EQ(LabelMap::shift(2, 0b0011).translation_bits(), "0011");
}
