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

#ifndef BELLRATE_GF2_H
#define BELLRATE_GF2_H

#include <bit>
#include <cstddef>
#include <vector>

#include "bellrate/bell_label.h"

namespace bellrate {

/// Parity of <x|y> over the two-element field.
inline unsigned dot_parity(LabelIndex x, LabelIndex y) {
    return static_cast<unsigned>(std::popcount(x & y) & 1);
}

/// Symplectic form pairing the amp and phase bit of each pair:
/// sum_p (x_amp y_phase + x_phase y_amp) mod 2.
inline unsigned symplectic_form(size_t pairs, LabelIndex x, LabelIndex y) {
    LabelIndex phases = phase_bits_mask(pairs);
    LabelIndex cross = (((x >> 1) & y) ^ ((y >> 1) & x)) & phases;
    return static_cast<unsigned>(std::popcount(cross) & 1);
}

/// Linear subspace of 2m-bit vectors, kept as a reduced echelon basis.
class Gf2Span {
   public:
    explicit Gf2Span(size_t pairs = 0) : pairs_(pairs) {}

    size_t pairs() const {
        return pairs_;
    }
    size_t dimension() const {
        return basis_.size();
    }
    const std::vector<LabelIndex> &basis() const {
        return basis_;
    }

    /// Reduces v against the basis; zero iff v lies in the span.
    LabelIndex reduce(LabelIndex v) const;
    bool contains(LabelIndex v) const {
        return reduce(v) == 0;
    }

    /// Adds v; returns false (and leaves the span unchanged) if v is dependent.
    bool insert(LabelIndex v);

    /// Every element of the span, in increasing order.
    std::vector<LabelIndex> elements() const;

   private:
    size_t pairs_;
    // Sorted by leading bit, descending; each leading bit is cleared in the others.
    std::vector<LabelIndex> basis_;
};

/// Symplectic basis of a nondegenerate subspace spanned by `vectors`.
///
/// Returns (e_1, f_1, e_2, f_2, ...) with form(e_a, f_a) = 1 and all other
/// pairings zero. Throws std::invalid_argument if the span is degenerate.
std::vector<LabelIndex> symplectic_basis(size_t pairs, std::vector<LabelIndex> vectors);

}  // namespace bellrate

#endif
