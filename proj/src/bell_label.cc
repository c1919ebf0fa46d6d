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

#include <stdexcept>

namespace bellrate {

BellLabel::BellLabel(uint8_t amp, uint8_t phase) : amp(amp), phase(phase) {
    if (amp > 1 || phase > 1) {
        throw std::invalid_argument("Bell label bits must be 0 or 1.");
    }
}

BellLabel BellLabel::from_index(unsigned index) {
    if (index > 3) {
        throw std::invalid_argument("Bell label index must be in 0..3.");
    }
    return BellLabel(static_cast<uint8_t>(index >> 1), static_cast<uint8_t>(index & 1));
}

LabelString::LabelString(std::vector<BellLabel> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) {
        throw std::invalid_argument("A label string needs at least one pair.");
    }
}

LabelString LabelString::parse(std::string_view bits) {
    if (bits.empty() || bits.size() % 2 != 0) {
        throw std::invalid_argument("Label string must have a positive even number of bits: '" + std::string(bits) + "'.");
    }
    std::vector<BellLabel> pairs;
    pairs.reserve(bits.size() / 2);
    for (size_t k = 0; k < bits.size(); k += 2) {
        char a = bits[k];
        char b = bits[k + 1];
        if ((a != '0' && a != '1') || (b != '0' && b != '1')) {
            throw std::invalid_argument("Label string may only contain '0' and '1': '" + std::string(bits) + "'.");
        }
        pairs.emplace_back(static_cast<uint8_t>(a - '0'), static_cast<uint8_t>(b - '0'));
    }
    return LabelString(std::move(pairs));
}

LabelString LabelString::from_index(size_t pairs, LabelIndex index) {
    if (pairs == 0 || pairs > kMaxPackedPairs) {
        throw std::invalid_argument("Packed labels support 1.." + std::to_string(kMaxPackedPairs) + " pairs.");
    }
    if (pairs < kMaxPackedPairs && (index >> (2 * pairs)) != 0) {
        throw std::invalid_argument("Label index out of range for the block size.");
    }
    std::vector<BellLabel> out;
    out.reserve(pairs);
    for (size_t p = 0; p < pairs; p++) {
        out.emplace_back(
            static_cast<uint8_t>((index >> label_bit(pairs, p, BellBit::amp)) & 1),
            static_cast<uint8_t>((index >> label_bit(pairs, p, BellBit::phase)) & 1));
    }
    return LabelString(std::move(out));
}

const BellLabel &LabelString::pair(size_t p) const {
    if (p >= pairs_.size()) {
        throw std::out_of_range("Pair index " + std::to_string(p) + " out of range.");
    }
    return pairs_[p];
}

void LabelString::set_pair(size_t p, BellLabel label) {
    if (p >= pairs_.size()) {
        throw std::out_of_range("Pair index " + std::to_string(p) + " out of range.");
    }
    pairs_[p] = label;
}

LabelIndex LabelString::index() const {
    if (pairs_.size() > kMaxPackedPairs) {
        throw std::invalid_argument("Label string too long to pack.");
    }
    LabelIndex out = 0;
    for (const auto &l : pairs_) {
        out = (out << 2) | l.index();
    }
    return out;
}

std::string LabelString::str() const {
    std::string out;
    out.reserve(2 * pairs_.size());
    for (const auto &l : pairs_) {
        out.push_back(static_cast<char>('0' + l.amp));
        out.push_back(static_cast<char>('0' + l.phase));
    }
    return out;
}

static void check_bcnot_pairs(size_t pairs, size_t source, size_t target) {
    if (source >= pairs || target >= pairs) {
        throw std::out_of_range("bcnot pair index out of range.");
    }
    if (source == target) {
        throw std::invalid_argument("bcnot source and target must differ.");
    }
}

LabelString bcnot(size_t source, size_t target, const LabelString &s) {
    check_bcnot_pairs(s.pairs(), source, target);
    BellLabel src = s.pair(source);
    BellLabel tgt = s.pair(target);
    LabelString out = s;
    out.set_pair(source, BellLabel(src.amp, static_cast<uint8_t>(src.phase ^ tgt.phase)));
    out.set_pair(target, BellLabel(static_cast<uint8_t>(tgt.amp ^ src.amp), tgt.phase));
    return out;
}

LabelIndex bcnot(size_t pairs, size_t source, size_t target, LabelIndex label) {
    check_bcnot_pairs(pairs, source, target);
    unsigned si = label_bit(pairs, source, BellBit::amp);
    unsigned sj = label_bit(pairs, source, BellBit::phase);
    unsigned tk = label_bit(pairs, target, BellBit::amp);
    unsigned tl = label_bit(pairs, target, BellBit::phase);
    LabelIndex i = (label >> si) & 1;
    LabelIndex l = (label >> tl) & 1;
    return label ^ (l << sj) ^ (i << tk);
}

}  // namespace bellrate
