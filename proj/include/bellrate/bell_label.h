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

#ifndef BELLRATE_BELL_LABEL_H
#define BELLRATE_BELL_LABEL_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bellrate {

/// Largest block (in pairs) whose labels are packed into a `LabelIndex`.
inline constexpr size_t kMaxPackedPairs = 16;

/// A multi-pair label packed into an integer.
///
/// The wire order of a label string is (i_1, j_1, i_2, j_2, ..., i_m, j_m):
/// amplitude bit then phase bit, pair by pair. The packed index is that
/// string read as a big-endian binary number, so string position k lives at
/// integer bit 2m-1-k and lexicographic string order equals numeric order.
using LabelIndex = uint32_t;

enum class BellBit : uint8_t { amp = 0, phase = 1 };

/// Integer bit holding the amplitude (or phase) bit of `pair` in an m-pair index.
constexpr unsigned label_bit(size_t pairs, size_t pair, BellBit which) {
    return static_cast<unsigned>(2 * (pairs - 1 - pair) + (which == BellBit::amp ? 1 : 0));
}

/// Integer bit for string position `pos` (0-based) of a 2m-bit label string.
constexpr unsigned string_position_bit(size_t pairs, size_t pos) {
    return static_cast<unsigned>(2 * pairs - 1 - pos);
}

/// Mask with every phase bit of an m-pair index set.
constexpr LabelIndex phase_bits_mask(size_t pairs) {
    LabelIndex m = 0;
    for (size_t p = 0; p < pairs; p++) {
        m |= LabelIndex{1} << (2 * p);
    }
    return m;
}

/// Identifies one of the four Bell states psi_ij.
struct BellLabel {
    uint8_t amp = 0;
    uint8_t phase = 0;

    BellLabel() = default;
    BellLabel(uint8_t amp, uint8_t phase);

    /// Index 0..3 in the order 00, 01, 10, 11.
    uint8_t index() const {
        return static_cast<uint8_t>((amp << 1) | phase);
    }
    static BellLabel from_index(unsigned index);

    bool operator==(const BellLabel &other) const = default;
};

/// Label of a tensor product of m Bell states, stored in wire order.
class LabelString {
   public:
    LabelString() = default;
    explicit LabelString(std::vector<BellLabel> pairs);

    /// Parses a string of 2m characters '0'/'1' in wire order.
    static LabelString parse(std::string_view bits);
    static LabelString from_index(size_t pairs, LabelIndex index);

    size_t pairs() const {
        return pairs_.size();
    }
    const BellLabel &pair(size_t p) const;
    void set_pair(size_t p, BellLabel label);
    const std::vector<BellLabel> &labels() const {
        return pairs_;
    }

    /// Packed index; requires pairs() <= kMaxPackedPairs.
    LabelIndex index() const;
    std::string str() const;

    bool operator==(const LabelString &other) const = default;

   private:
    std::vector<BellLabel> pairs_;
};

/// Bilateral CNOT on two pairs of a label string.
///
/// Source (i, j) and target (k, l) become (i, j+l) and (k+i, l); every other
/// pair is untouched. Throws std::out_of_range for a bad index and
/// std::invalid_argument when source == target.
LabelString bcnot(size_t source, size_t target, const LabelString &s);

/// Same map on a packed index.
LabelIndex bcnot(size_t pairs, size_t source, size_t target, LabelIndex label);

}  // namespace bellrate

#endif
