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

#include "bellrate/bell_label.h"

#include <array>
#include <cmath>

#include "gtest/gtest.h"

#include "test_util.h"

using namespace bellrate;

namespace {

// Qubit order in the 16-entry vector: A_source, B_source, A_target, B_target.
std::array<double, 16> two_pair_state(unsigned i, unsigned j, unsigned k, unsigned l) {
    auto s = test_util::bell_vector(i, j);
    auto t = test_util::bell_vector(k, l);
    std::array<double, 16> out{};
    for (unsigned a = 0; a < 4; a++) {
        for (unsigned b = 0; b < 4; b++) {
            out[a * 4 + b] = s[a] * t[b];
        }
    }
    return out;
}

// CNOT from A_source to A_target and from B_source to B_target.
std::array<double, 16> local_cnots(const std::array<double, 16> &v) {
    std::array<double, 16> out{};
    for (unsigned x = 0; x < 16; x++) {
        unsigned as = (x >> 3) & 1, bs = (x >> 2) & 1, at = (x >> 1) & 1, bt = x & 1;
        unsigned y = (as << 3) | (bs << 2) | ((at ^ as) << 1) | (bt ^ bs);
        out[y] = v[x];
    }
    return out;
}

// Returns the unique product of Bell labels with |overlap| = 1.
std::string identify(const std::array<double, 16> &v) {
    std::string found;
    for (unsigned a = 0; a < 4; a++) {
        for (unsigned b = 0; b < 4; b++) {
            auto w = two_pair_state(a >> 1, a & 1, b >> 1, b & 1);
            double overlap = 0;
            for (unsigned x = 0; x < 16; x++) {
                overlap += v[x] * w[x];
            }
            if (std::abs(std::abs(overlap) - 1) < 1e-12) {
                EXPECT_TRUE(found.empty());
                found = LabelString({BellLabel::from_index(a), BellLabel::from_index(b)}).str();
            }
        }
    }
    return found;
}

}  // namespace

TEST(bell_label, parse_and_print) {
    auto s = LabelString::parse("1001");
    ASSERT_EQ(s.pairs(), 2u);
    EXPECT_EQ(s.pair(0), BellLabel(1, 0));
    EXPECT_EQ(s.pair(1), BellLabel(0, 1));
    EXPECT_EQ(s.str(), "1001");
    EXPECT_EQ(s.index(), 0b1001u);
}

TEST(bell_label, parse_rejects_bad_input) {
    EXPECT_THROW(LabelString::parse(""), std::invalid_argument);
    EXPECT_THROW(LabelString::parse("101"), std::invalid_argument);
    EXPECT_THROW(LabelString::parse("1021"), std::invalid_argument);
    EXPECT_THROW(BellLabel(2, 0), std::invalid_argument);
}

TEST(bell_label, index_round_trip) {
    for (size_t m = 1; m <= 4; m++) {
        for (LabelIndex x = 0; x < (LabelIndex{1} << (2 * m)); x++) {
            auto s = LabelString::from_index(m, x);
            EXPECT_EQ(s.index(), x);
            EXPECT_EQ(LabelString::parse(s.str()), s);
        }
    }
}

TEST(bell_label, bit_positions) {
    // Wire order i1 j1 i2 j2: the first pair's amp bit is the most significant.
    EXPECT_EQ(label_bit(2, 0, BellBit::amp), 3u);
    EXPECT_EQ(label_bit(2, 0, BellBit::phase), 2u);
    EXPECT_EQ(label_bit(2, 1, BellBit::amp), 1u);
    EXPECT_EQ(label_bit(2, 1, BellBit::phase), 0u);
    EXPECT_EQ(string_position_bit(2, 0), 3u);
    EXPECT_EQ(phase_bits_mask(3), 0b010101u);
}

TEST(bell_label, bcnot_matches_state_vector_for_all_inputs) {
    for (unsigned a = 0; a < 4; a++) {
        for (unsigned b = 0; b < 4; b++) {
            auto in = LabelString({BellLabel::from_index(a), BellLabel::from_index(b)});
            std::string expected = identify(local_cnots(two_pair_state(a >> 1, a & 1, b >> 1, b & 1)));
            EXPECT_EQ(bcnot(0, 1, in).str(), expected) << in.str();
            EXPECT_EQ(LabelString::from_index(2, bcnot(2, 0, 1, in.index())).str(), expected) << in.str();
        }
    }
}

TEST(bell_label, bcnot_examples) {
    EXPECT_EQ(bcnot(0, 1, LabelString::parse("1000")).str(), "1010");
    EXPECT_EQ(bcnot(0, 1, LabelString::parse("0001")).str(), "0101");
    EXPECT_EQ(bcnot(0, 1, LabelString::parse("0000")).str(), "0000");
}

TEST(bell_label, bcnot_is_an_involution_and_leaves_others) {
    for (LabelIndex x = 0; x < 64; x++) {
        auto s = LabelString::from_index(3, x);
        auto t = bcnot(2, 0, s);
        EXPECT_EQ(bcnot(2, 0, t), s);
        EXPECT_EQ(t.pair(1), s.pair(1));
    }
}

TEST(bell_label, bcnot_rejects_bad_pairs) {
    auto s = LabelString::parse("0000");
    EXPECT_THROW(bcnot(0, 0, s), std::invalid_argument);
    EXPECT_THROW(bcnot(0, 2, s), std::out_of_range);
    EXPECT_THROW(bcnot(2, 2, 0, 0), std::out_of_range);
}
