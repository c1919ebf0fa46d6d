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

#include <iostream>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "bellrate/gf2.h"

namespace bellrate {

namespace {

void check_pairs(size_t pairs) {
    if (pairs == 0 || pairs > kMaxMapPairs) {
        throw std::invalid_argument("Label maps support 1.." + std::to_string(kMaxMapPairs) + " pairs.");
    }
}

LabelIndex label_mask(size_t pairs) {
    return static_cast<LabelIndex>((uint64_t{1} << (2 * pairs)) - 1);
}

bool columns_invertible(size_t pairs, const LabelMap::Columns &cols) {
    Gf2Span span(pairs);
    for (size_t b = 0; b < 2 * pairs; b++) {
        if (!span.insert(cols[b])) {
            return false;
        }
    }
    return true;
}

bool columns_symplectic(size_t pairs, const LabelMap::Columns &cols) {
    unsigned n = static_cast<unsigned>(2 * pairs);
    for (unsigned a = 0; a < n; a++) {
        for (unsigned b = a + 1; b < n; b++) {
            unsigned want = symplectic_form(pairs, LabelIndex{1} << a, LabelIndex{1} << b);
            if (symplectic_form(pairs, cols[a], cols[b]) != want) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

LabelMap::LabelMap(size_t pairs, const std::vector<LabelIndex> &columns, LabelIndex translation)
    : pairs_(pairs), t_(translation) {
    check_pairs(pairs);
    if (columns.size() != 2 * pairs) {
        throw std::invalid_argument("A label map on m pairs needs 2m columns.");
    }
    LabelIndex full = label_mask(pairs);
    for (size_t b = 0; b < columns.size(); b++) {
        if (columns[b] & ~full) {
            throw std::invalid_argument("Label map column has bits outside the block.");
        }
        cols_[b] = static_cast<uint16_t>(columns[b]);
    }
    if (translation & ~full) {
        throw std::invalid_argument("Label map translation has bits outside the block.");
    }
    if (!columns_invertible(pairs, cols_)) {
        throw std::invalid_argument("Label map linear part is not invertible.");
    }
    if (!columns_symplectic(pairs, cols_)) {
        throw std::invalid_argument("Label map linear part does not preserve the symplectic form.");
    }
}

LabelMap LabelMap::identity(size_t pairs) {
    check_pairs(pairs);
    std::vector<LabelIndex> cols(2 * pairs);
    for (size_t b = 0; b < cols.size(); b++) {
        cols[b] = LabelIndex{1} << b;
    }
    return LabelMap(pairs, cols);
}

LabelMap LabelMap::from_rows(size_t pairs, const std::vector<LabelIndex> &rows, LabelIndex translation) {
    check_pairs(pairs);
    if (rows.size() != 2 * pairs) {
        throw std::invalid_argument("A label map on m pairs needs 2m rows.");
    }
    std::vector<LabelIndex> cols(2 * pairs, 0);
    for (size_t r = 0; r < rows.size(); r++) {
        LabelIndex out_bit = LabelIndex{1} << string_position_bit(pairs, r);
        for (unsigned b = 0; b < 2 * pairs; b++) {
            if ((rows[r] >> b) & 1) {
                cols[b] |= out_bit;
            }
        }
    }
    return LabelMap(pairs, cols, translation);
}

LabelMap LabelMap::bcnot(size_t pairs, size_t source, size_t target) {
    check_pairs(pairs);
    std::vector<LabelIndex> cols(2 * pairs);
    for (unsigned b = 0; b < 2 * pairs; b++) {
        cols[b] = bellrate::bcnot(pairs, source, target, LabelIndex{1} << b);
    }
    return LabelMap(pairs, cols);
}

LabelMap LabelMap::amp_phase_swap(size_t pairs, size_t pair) {
    check_pairs(pairs);
    if (pair >= pairs) {
        throw std::out_of_range("Pair index out of range.");
    }
    std::vector<LabelIndex> cols(2 * pairs);
    unsigned a = label_bit(pairs, pair, BellBit::amp);
    unsigned p = label_bit(pairs, pair, BellBit::phase);
    for (unsigned b = 0; b < 2 * pairs; b++) {
        unsigned to = b == a ? p : b == p ? a : b;
        cols[b] = LabelIndex{1} << to;
    }
    return LabelMap(pairs, cols);
}

LabelMap LabelMap::phase_shear(size_t pairs, size_t pair) {
    check_pairs(pairs);
    if (pair >= pairs) {
        throw std::out_of_range("Pair index out of range.");
    }
    std::vector<LabelIndex> cols(2 * pairs);
    unsigned a = label_bit(pairs, pair, BellBit::amp);
    unsigned p = label_bit(pairs, pair, BellBit::phase);
    for (unsigned b = 0; b < 2 * pairs; b++) {
        cols[b] = LabelIndex{1} << b;
    }
    cols[a] |= LabelIndex{1} << p;
    return LabelMap(pairs, cols);
}

LabelMap LabelMap::shift(size_t pairs, LabelIndex t) {
    LabelMap out = identity(pairs);
    if (t & ~label_mask(pairs)) {
        throw std::invalid_argument("Translation has bits outside the block.");
    }
    out.t_ = t;
    return out;
}

LabelIndex LabelMap::linear_apply(LabelIndex x) const {
    LabelIndex y = 0;
    while (x) {
        unsigned b = static_cast<unsigned>(std::countr_zero(x));
        y ^= cols_[b];
        x &= x - 1;
    }
    return y;
}

LabelString LabelMap::apply(const LabelString &s) const {
    if (s.pairs() != pairs_) {
        throw std::invalid_argument("Label length does not match the map.");
    }
    return LabelString::from_index(pairs_, apply(s.index()));
}

LabelMap LabelMap::after(const LabelMap &other) const {
    if (other.pairs_ != pairs_) {
        throw std::invalid_argument("Cannot compose label maps of different sizes.");
    }
    LabelMap out;
    out.pairs_ = pairs_;
    for (size_t b = 0; b < 2 * pairs_; b++) {
        out.cols_[b] = static_cast<uint16_t>(linear_apply(other.cols_[b]));
    }
    out.t_ = apply(other.t_);
    return out;
}

LabelMap LabelMap::inverse() const {
    size_t n = size_t{1} << (2 * pairs_);
    std::vector<LabelIndex> inv_table(n);
    for (LabelIndex x = 0; x < n; x++) {
        inv_table[linear_apply(x)] = x;
    }
    LabelMap out;
    out.pairs_ = pairs_;
    for (size_t b = 0; b < 2 * pairs_; b++) {
        out.cols_[b] = static_cast<uint16_t>(inv_table[LabelIndex{1} << b]);
    }
    out.t_ = out.linear_apply(t_);
    return out;
}

LabelMap LabelMap::linear_part() const {
    LabelMap out = *this;
    out.t_ = 0;
    return out;
}

bool LabelMap::is_identity() const {
    if (t_ != 0) {
        return false;
    }
    for (size_t b = 0; b < 2 * pairs_; b++) {
        if (cols_[b] != (LabelIndex{1} << b)) {
            return false;
        }
    }
    return true;
}

bool LabelMap::preserves_symplectic_form() const {
    return columns_symplectic(pairs_, cols_);
}

LabelIndex LabelMap::transport_mask(LabelIndex mask) const {
    LabelMap inv = inverse();
    LabelIndex out = 0;
    for (unsigned b = 0; b < 2 * pairs_; b++) {
        out |= static_cast<LabelIndex>(dot_parity(inv.cols_[b], mask)) << b;
    }
    return out;
}

std::string LabelMap::linear_bits() const {
    std::string out;
    size_t n = 2 * pairs_;
    out.reserve(n * n);
    for (size_t r = 0; r < n; r++) {
        unsigned row_bit = string_position_bit(pairs_, r);
        for (size_t c = 0; c < n; c++) {
            unsigned col_bit = string_position_bit(pairs_, c);
            out.push_back(((cols_[col_bit] >> row_bit) & 1) ? '1' : '0');
        }
    }
    return out;
}

std::string LabelMap::translation_bits() const {
    return LabelString::from_index(pairs_, t_).str();
}

uint64_t LabelMap::linear_key() const {
    uint64_t key = 0;
    for (size_t b = 0; b < 2 * pairs_; b++) {
        key = (key << (2 * pairs_)) | cols_[b];
    }
    return key;
}

BlockDist apply_label_map(const LabelMap &g, const BlockDist &d) {
    if (g.pairs() != d.pairs()) {
        throw std::invalid_argument("Label map and distribution sizes differ.");
    }
    std::vector<double> out(d.size(), 0.0);
    for (LabelIndex x = 0; x < d.size(); x++) {
        out[g.apply(x)] = d[x];
    }
    return BlockDist(d.pairs(), std::move(out));
}

std::vector<LabelMap> label_map_closure(size_t pairs) {
    if (pairs == 0 || pairs > 3) {
        throw std::invalid_argument("label_map_closure supports 1..3 pairs.");
    }
    std::vector<LabelMap> gens;
    for (size_t s = 0; s < pairs; s++) {
        for (size_t t = 0; t < pairs; t++) {
            if (s != t) {
                gens.push_back(LabelMap::bcnot(pairs, s, t));
            }
        }
    }
    for (size_t p = 0; p < pairs; p++) {
        gens.push_back(LabelMap::amp_phase_swap(pairs, p));
        gens.push_back(LabelMap::phase_shear(pairs, p));
    }

    std::vector<LabelMap> group{LabelMap::identity(pairs)};
    std::unordered_set<uint64_t> seen{group[0].linear_key()};
    for (size_t next = 0; next < group.size(); next++) {
        for (const auto &g : gens) {
            LabelMap h = g.after(group[next]);
            if (seen.insert(h.linear_key()).second) {
                group.push_back(h);
            }
        }
    }
    return group;
}

std::vector<LabelMap> brute_force_symplectic_maps(size_t pairs) {
    if (pairs == 0 || pairs > 2) {
        throw std::invalid_argument("brute_force_symplectic_maps supports 1..2 pairs.");
    }
    size_t n = 2 * pairs;
    uint64_t total = uint64_t{1} << (n * n);
    LabelIndex col_mask = label_mask(pairs);
    std::vector<LabelMap> out;
    LabelMap::Columns cols{};
    for (uint64_t bits = 0; bits < total; bits++) {
        for (size_t b = 0; b < n; b++) {
            cols[b] = static_cast<uint16_t>((bits >> (b * n)) & col_mask);
        }
        if (columns_symplectic(pairs, cols) && columns_invertible(pairs, cols)) {
            out.emplace_back(pairs, std::vector<LabelIndex>(cols.begin(), cols.begin() + n));
        }
    }
    return out;
}

const std::vector<LabelMap> &enumerate_label_maps(size_t pairs) {
    if (pairs == 0 || pairs > 3) {
        throw std::invalid_argument("enumerate_label_maps supports 1..3 pairs.");
    }
    static std::once_flag flags[3];
    static std::vector<LabelMap> groups[3];
    std::call_once(flags[pairs - 1], [pairs]() {
        auto group = label_map_closure(pairs);
        if (pairs <= 2) {
            auto full = brute_force_symplectic_maps(pairs);
            if (group.size() < full.size()) {
                std::cerr << "label maps: generator closure on " << pairs << " pairs has order " << group.size()
                          << " but the symplectic group has order " << full.size() << "; using the latter.\n";
                group = std::move(full);
            }
        }
        groups[pairs - 1] = std::move(group);
    });
    return groups[pairs - 1];
}

uint64_t symplectic_group_order(size_t pairs) {
    uint64_t order = uint64_t{1} << (pairs * pairs);
    for (size_t i = 1; i <= pairs; i++) {
        order *= (uint64_t{1} << (2 * i)) - 1;
    }
    return order;
}

uint64_t per_pair_coset_count(size_t pairs) {
    uint64_t sub = 1;
    for (size_t p = 0; p < pairs; p++) {
        sub *= symplectic_group_order(1);
    }
    return symplectic_group_order(pairs) / sub;
}

}  // namespace bellrate
