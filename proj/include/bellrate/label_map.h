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

#ifndef BELLRATE_LABEL_MAP_H
#define BELLRATE_LABEL_MAP_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bellrate/bell_label.h"
#include "bellrate/block_dist.h"

namespace bellrate {

/// Largest block a LabelMap acts on.
inline constexpr size_t kMaxMapPairs = 8;

/// Affine map x -> Lx + t on 2m-bit labels induced by a local unitary that
/// sends products of Bell states to products of Bell states.
///
/// The linear part is stored by columns: column b is the image of the unit
/// vector at integer bit b of a LabelIndex. Construction checks that L is
/// invertible and preserves the symplectic form (L^T J L = J).
class LabelMap {
   public:
    using Columns = std::array<uint16_t, 2 * kMaxMapPairs>;

    LabelMap() = default;
    LabelMap(size_t pairs, const std::vector<LabelIndex> &columns, LabelIndex translation = 0);

    static LabelMap identity(size_t pairs);
    /// Builds L from its rows, given in wire order (row r produces string position r).
    static LabelMap from_rows(size_t pairs, const std::vector<LabelIndex> &rows, LabelIndex translation = 0);
    /// Linear part of the bilateral CNOT between two pairs.
    static LabelMap bcnot(size_t pairs, size_t source, size_t target);
    /// Exchanges the amp and phase bit of one pair.
    static LabelMap amp_phase_swap(size_t pairs, size_t pair);
    /// (i, j) -> (i, i + j) on one pair.
    static LabelMap phase_shear(size_t pairs, size_t pair);
    /// One-sided Pauli relabeling x -> x + t.
    static LabelMap shift(size_t pairs, LabelIndex t);

    size_t pairs() const {
        return pairs_;
    }
    LabelIndex column(unsigned bit) const {
        return cols_[bit];
    }
    LabelIndex translation() const {
        return t_;
    }

    LabelIndex linear_apply(LabelIndex x) const;
    LabelIndex apply(LabelIndex x) const {
        return linear_apply(x) ^ t_;
    }
    LabelString apply(const LabelString &s) const;

    /// (*this)(other(x)).
    LabelMap after(const LabelMap &other) const;
    LabelMap inverse() const;
    LabelMap linear_part() const;

    bool is_identity() const;
    bool preserves_symplectic_form() const;

    /// Image of a parity mask: <g(x)|transport(M)> = <x|M> + const for every x.
    LabelIndex transport_mask(LabelIndex mask) const;

    /// 2m x 2m linear part as row-major '0'/'1' text in wire order.
    std::string linear_bits() const;
    std::string translation_bits() const;

    /// Packs the linear part into an integer; unique per linear part for m <= 4.
    uint64_t linear_key() const;

    bool operator==(const LabelMap &other) const = default;

   private:
    size_t pairs_ = 0;
    Columns cols_{};
    LabelIndex t_ = 0;
};

/// Pushforward: the output puts probability d[x] at label g(x).
BlockDist apply_label_map(const LabelMap &g, const BlockDist &d);

/// Closure under composition of the generators: every bilateral CNOT,
/// every per-pair amp/phase swap, and every per-pair phase shear. m in 1..3.
std::vector<LabelMap> label_map_closure(size_t pairs);

/// All 2m x 2m binary matrices preserving the symplectic form, found by
/// testing every matrix. m in 1..2.
std::vector<LabelMap> brute_force_symplectic_maps(size_t pairs);

/// Linear parts of the allowed label-map group for m in 1..3, cached.
///
/// This is the generator closure. Should it ever come out smaller than the
/// brute-force symplectic group (checked for m <= 2), the brute-force group
/// is returned and the discrepancy is reported on stderr.
const std::vector<LabelMap> &enumerate_label_maps(size_t pairs);

/// Order of the symplectic group Sp(2m, 2).
uint64_t symplectic_group_order(size_t pairs);

/// Number of cosets of the subgroup acting pair-by-pair (no mixing of pairs).
uint64_t per_pair_coset_count(size_t pairs);

}  // namespace bellrate

#endif
