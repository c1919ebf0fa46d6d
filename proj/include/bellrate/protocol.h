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

#ifndef BELLRATE_PROTOCOL_H
#define BELLRATE_PROTOCOL_H

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bellrate/bell_label.h"
#include "bellrate/block_dist.h"
#include "bellrate/gf2.h"
#include "bellrate/label_map.h"

namespace bellrate {

/// Branch probabilities below this are treated as zero.
inline constexpr double kBranchFloor = 1e-15;

/// Nonzero 2m-bit parity vector; the parity of label x is <x|mask> mod 2.
class ParityMask {
   public:
    ParityMask(size_t pairs, LabelIndex bits);
    /// From wire-order text such as "1010".
    static ParityMask parse(std::string_view bits);

    size_t pairs() const {
        return pairs_;
    }
    LabelIndex bits() const {
        return bits_;
    }
    std::string str() const;

    bool operator==(const ParityMask &other) const = default;

   private:
    size_t pairs_;
    LabelIndex bits_;
};

/// Outcome of an asymptotic parity check: d = mu0 d0 + mu1 d1 at a cost of
/// S(mu0, mu1) ebits per block. An empty branch has weight 0 and no state.
struct ParitySplit {
    double mu0 = 0;
    std::optional<BlockDist> d0;
    double mu1 = 0;
    std::optional<BlockDist> d1;
    double cost = 0;
};

ParitySplit parity_split(const BlockDist &d, const ParityMask &mask);

/// Outcome of a local Bell measurement of one bit of one pair. The measured
/// pair is destroyed; r_b is the state of the remaining m-1 pairs.
struct MeasureOutcome {
    double q0 = 0;
    std::optional<BlockDist> r0;
    double q1 = 0;
    std::optional<BlockDist> r1;
};

MeasureOutcome bell_measure(const BlockDist &d, size_t pair, BellBit which);

/// Asymptotic hashing yield m - S(d), in ebits per block. Never clamped.
double hashing_yield(const BlockDist &d);

namespace kernel {

// Unvalidated building blocks shared by the public primitives and the search.
// `p` has 4^pairs entries; outputs are unnormalized restrictions.

/// Splits p by the parity of <x|mask>; returns (mu0, mu1).
std::pair<double, double> split_by_parity(
    std::span<const double> p, LabelIndex mask, std::vector<double> &out0, std::vector<double> &out1);

/// Splits by one measured bit and marginalizes the destroyed pair.
std::pair<double, double> split_by_measurement(
    size_t pairs, std::span<const double> p, size_t pair, BellBit which, std::vector<double> &out0,
    std::vector<double> &out1);

void push_forward(const LabelMap &g, std::span<const double> p, std::vector<double> &out);

/// Entropy of an unnormalized nonnegative vector with the given total.
double entropy_of_weights(std::span<const double> w, double total);

/// Divides by total; empty when total < kBranchFloor.
std::optional<std::vector<double>> normalized(std::vector<double> w, double total);

}  // namespace kernel

struct ProtocolNode;
using ProtocolTree = std::shared_ptr<const ProtocolNode>;

struct ParityCheckNode {
    ParityMask mask;
    ProtocolTree child0;
    ProtocolTree child1;
};

struct MeasureNode {
    size_t pair;
    BellBit which;
    ProtocolTree child0;
    ProtocolTree child1;
};

struct RelabelNode {
    LabelMap map;
    ProtocolTree child;
};

struct HashNode {};
struct DiscardNode {};

/// A finite decision tree of distillation primitives. Branch 0 is parity (or
/// measured bit) 0.
struct ProtocolNode {
    std::variant<ParityCheckNode, MeasureNode, RelabelNode, HashNode, DiscardNode> op;
};

namespace protocol {

ProtocolTree parity_check(ParityMask mask, ProtocolTree child0, ProtocolTree child1);
ProtocolTree measure(size_t pair, BellBit which, ProtocolTree child0, ProtocolTree child1);
ProtocolTree relabel(LabelMap map, ProtocolTree child);
ProtocolTree hash();
ProtocolTree discard();

}  // namespace protocol

/// Number of internal nodes on the longest root-to-leaf path.
size_t tree_depth(const ProtocolTree &tree);

/// Checks the tree against a block of `pairs` pairs: mask and relabel sizes
/// match the block at each node, measured pairs exist, and parity masks along
/// every path are linearly independent (tracked through relabelings and
/// measurements). Throws std::invalid_argument on the first violation.
void validate_tree(const ProtocolTree &tree, size_t pairs);

/// Parity masks whose value is already fixed along a path.
///
/// Relabeling transports each mask so it keeps tracking the same parity;
/// measuring a pair keeps only the parities that do not involve the pair's
/// destroyed bit, plus the measured bit itself, restricted to the other pairs.
class CheckedMasks {
   public:
    explicit CheckedMasks(size_t pairs) : span_(pairs) {}

    const Gf2Span &span() const {
        return span_;
    }
    size_t pairs() const {
        return span_.pairs();
    }
    bool is_fresh(LabelIndex mask) const {
        return !span_.contains(mask);
    }
    /// Returns false if the mask was already determined.
    bool add(LabelIndex mask) {
        return span_.insert(mask);
    }
    CheckedMasks after_relabel(const LabelMap &g) const;
    CheckedMasks after_measure(size_t pair, BellBit which) const;

   private:
    Gf2Span span_;
};

struct BranchRecord {
    /// Outcomes from the root, e.g. "P0 M1": P for parity checks, M for measurements.
    std::string path;
    double probability;
    /// Parity-check ebits spent along the path, per block.
    double cost;
    /// Yield of the leaf (hash or 0 for discard), per block.
    double terminal_yield;
};

struct RateReport {
    double rate_per_copy = 0;
    double raw_yield = 0;
    size_t initial_pairs = 0;
    std::vector<BranchRecord> branch_log;
};

/// Expected ebit yield of a protocol tree applied to d.
///
/// yield(ParityCheck) = -S(mu0, mu1) + mu0 yield(child0) + mu1 yield(child1),
/// yield(Measure) = q0 yield(child0) + q1 yield(child1),
/// yield(Relabel) = yield(child) on the pushforward, yield(Hash) = m - S,
/// yield(Discard) = 0. Empty branches contribute nothing.
RateReport evaluate(const ProtocolTree &tree, const BlockDist &d);

}  // namespace bellrate

#endif
