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

#include "bellrate/protocol_text.h"

#include "gtest/gtest.h"

#include "bellrate/reference_protocols.h"

using namespace bellrate;

TEST(protocol_text, two_copy_tree_text) {
    EXPECT_EQ(
        to_text(two_copy_tree()),
        "PC 1010\n"
        "  HASH\n"
        "  MEAS 1 amp\n"
        "    HASH\n"
        "    HASH\n");
}

TEST(protocol_text, round_trip_all_node_kinds) {
    auto tree = protocol::relabel(
        LabelMap::shift(2, 0b0001).after(LabelMap::bcnot(2, 1, 0)),
        protocol::parity_check(
            ParityMask::parse("0110"),
            protocol::measure(0, BellBit::phase, protocol::hash(), protocol::discard()),
            protocol::discard()));
    std::string text = to_text(tree);
    EXPECT_EQ(text.substr(0, 8), "RELABEL ");
    auto back = tree_from_text(text);
    EXPECT_EQ(to_text(back), text);
    validate_tree(back, 2);
}

TEST(protocol_text, parses_leaves) {
    EXPECT_EQ(to_text(tree_from_text("HASH\n")), "HASH\n");
    EXPECT_EQ(to_text(tree_from_text("DISCARD\n")), "DISCARD\n");
    EXPECT_THROW(tree_from_text("DISCARD"), std::invalid_argument);
}

TEST(protocol_text, rejects_malformed_text) {
    EXPECT_THROW(tree_from_text(""), std::invalid_argument);
    EXPECT_THROW(tree_from_text("PC 1010\n  HASH\n"), std::invalid_argument);
    EXPECT_THROW(tree_from_text("PC 10x0\n  HASH\n  HASH\n"), std::invalid_argument);
    EXPECT_THROW(tree_from_text("MEAS 0 spin\n  HASH\n  HASH\n"), std::invalid_argument);
    EXPECT_THROW(tree_from_text("HASH\nHASH\n"), std::invalid_argument);
    EXPECT_THROW(tree_from_text("  HASH\n"), std::invalid_argument);
    EXPECT_THROW(tree_from_text("RELABEL 1001:0\n  HASH\n"), std::invalid_argument);
    EXPECT_THROW(tree_from_text("JUMP\n"), std::invalid_argument);
}
