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

#ifndef BELLRATE_BLOCK_DIST_H
#define BELLRATE_BLOCK_DIST_H

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bellrate/bell_label.h"

namespace bellrate {

/// Largest block a BlockDist may describe (4^10 labels).
inline constexpr size_t kMaxBlockPairs = 10;

/// Probability distribution over the 4^m labels of an m-pair block.
///
/// Entries are indexed by LabelIndex (lexicographic wire order). A block of
/// zero pairs is allowed and holds the single entry 1; it is what remains
/// after the last pair of a block has been measured.
class BlockDist {
   public:
    /// Validates: length 4^m, entries >= 0, total within 1e-12 of 1.
    BlockDist(size_t pairs, std::vector<double> probs);

    /// Divides by the total; entries must be >= 0 with a positive total.
    static BlockDist from_weights(size_t pairs, std::vector<double> weights);
    static BlockDist delta(size_t pairs, LabelIndex label);
    static BlockDist uniform(size_t pairs);

    size_t pairs() const {
        return pairs_;
    }
    size_t size() const {
        return p_.size();
    }
    std::span<const double> probs() const {
        return p_;
    }
    double operator[](LabelIndex label) const {
        return p_[label];
    }
    double at(const LabelString &label) const;

    /// Shannon entropy of the label distribution, in bits.
    double entropy() const;

    bool operator==(const BlockDist &other) const = default;

   private:
    size_t pairs_;
    std::vector<double> p_;
};

/// Fidelity parameter of a Werner state; valid range (1/4, 1].
class WernerParams {
   public:
    explicit WernerParams(double fidelity);
    double fidelity() const {
        return f_;
    }
    bool entangled() const {
        return f_ > 0.5;
    }

   private:
    double f_;
};

/// Spectrum (f, (1-f)/3, (1-f)/3, (1-f)/3) in label order 00, 01, 10, 11.
BlockDist werner_dist(WernerParams w);
BlockDist werner_dist(double fidelity);

/// Product distribution over concatenated labels; a's pairs come first.
BlockDist tensor(const BlockDist &a, const BlockDist &b);

/// `copies`-fold tensor power.
BlockDist tensor_power(const BlockDist &d, size_t copies);

/// Largest single-pair eigenvalue; only meaningful for m = 1.
double max_eigenvalue(const BlockDist &d);

/// A one-pair Bell-diagonal state is separable iff no eigenvalue exceeds 1/2.
bool is_separable(const BlockDist &d);

/// Text form: "m=<int>" then one "label<TAB>probability" line per label.
std::string to_text(const BlockDist &d);
BlockDist block_dist_from_text(std::string_view text);

}  // namespace bellrate

#endif
