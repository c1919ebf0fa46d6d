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

#include "bellrate/protocol.h"

#include <cmath>
#include <stdexcept>

#include "bellrate/entropy.h"

namespace bellrate {

namespace {

LabelIndex remove_pair_bits(size_t pairs, size_t pair, LabelIndex x) {
    unsigned low_bits = static_cast<unsigned>(2 * (pairs - 1 - pair));
    LabelIndex low = x & ((LabelIndex{1} << low_bits) - 1);
    LabelIndex high = x >> (low_bits + 2);
    return (high << low_bits) | low;
}

std::optional<BlockDist> to_block(size_t pairs, std::optional<std::vector<double>> w) {
    if (!w) {
        return std::nullopt;
    }
    return BlockDist(pairs, std::move(*w));
}

}  // namespace

ParityMask::ParityMask(size_t pairs, LabelIndex bits) : pairs_(pairs), bits_(bits) {
    if (pairs == 0 || pairs > kMaxPackedPairs) {
        throw std::invalid_argument("Parity masks need 1.." + std::to_string(kMaxPackedPairs) + " pairs.");
    }
    if (pairs < kMaxPackedPairs && (bits >> (2 * pairs)) != 0) {
        throw std::invalid_argument("Parity mask has bits outside the block.");
    }
    if (bits == 0) {
        throw std::invalid_argument("Parity mask must be nonzero.");
    }
}

ParityMask ParityMask::parse(std::string_view bits) {
    auto s = LabelString::parse(bits);
    return ParityMask(s.pairs(), s.index());
}

std::string ParityMask::str() const {
    return LabelString::from_index(pairs_, bits_).str();
}

namespace kernel {

std::pair<double, double> split_by_parity(
    std::span<const double> p, LabelIndex mask, std::vector<double> &out0, std::vector<double> &out1) {
    out0.assign(p.size(), 0.0);
    out1.assign(p.size(), 0.0);
    double mu0 = 0;
    double mu1 = 0;
    for (LabelIndex x = 0; x < p.size(); x++) {
        if (dot_parity(x, mask)) {
            out1[x] = p[x];
            mu1 += p[x];
        } else {
            out0[x] = p[x];
            mu0 += p[x];
        }
    }
    return {mu0, mu1};
}

std::pair<double, double> split_by_measurement(
    size_t pairs, std::span<const double> p, size_t pair, BellBit which, std::vector<double> &out0,
    std::vector<double> &out1) {
    size_t rest = p.size() / 4;
    out0.assign(rest, 0.0);
    out1.assign(rest, 0.0);
    unsigned bit = label_bit(pairs, pair, which);
    double q0 = 0;
    double q1 = 0;
    for (LabelIndex x = 0; x < p.size(); x++) {
        LabelIndex r = remove_pair_bits(pairs, pair, x);
        if ((x >> bit) & 1) {
            out1[r] += p[x];
            q1 += p[x];
        } else {
            out0[r] += p[x];
            q0 += p[x];
        }
    }
    return {q0, q1};
}

void push_forward(const LabelMap &g, std::span<const double> p, std::vector<double> &out) {
    out.assign(p.size(), 0.0);
    for (LabelIndex x = 0; x < p.size(); x++) {
        out[g.apply(x)] = p[x];
    }
}

double entropy_of_weights(std::span<const double> w, double total) {
    double s = 0;
    for (double x : w) {
        if (x > 0) {
            double q = x / total;
            s -= q * std::log2(q);
        }
    }
    return s;
}

std::optional<std::vector<double>> normalized(std::vector<double> w, double total) {
    if (total < kBranchFloor) {
        return std::nullopt;
    }
    for (double &x : w) {
        x /= total;
    }
    return w;
}

}  // namespace kernel

ParitySplit parity_split(const BlockDist &d, const ParityMask &mask) {
    if (mask.pairs() != d.pairs()) {
        throw std::invalid_argument(
            "Parity mask '" + mask.str() + "' does not match a " + std::to_string(d.pairs()) + "-pair block.");
    }
    std::vector<double> w0;
    std::vector<double> w1;
    auto [mu0, mu1] = kernel::split_by_parity(d.probs(), mask.bits(), w0, w1);
    ParitySplit out;
    out.d0 = to_block(d.pairs(), kernel::normalized(std::move(w0), mu0));
    out.d1 = to_block(d.pairs(), kernel::normalized(std::move(w1), mu1));
    out.mu0 = out.d0 ? mu0 : 0.0;
    out.mu1 = out.d1 ? mu1 : 0.0;
    out.cost = (out.d0 && out.d1) ? binary_entropy(mu0, mu1) : 0.0;
    return out;
}

MeasureOutcome bell_measure(const BlockDist &d, size_t pair, BellBit which) {
    if (pair >= d.pairs()) {
        throw std::out_of_range(
            "Cannot measure pair " + std::to_string(pair) + " of a " + std::to_string(d.pairs()) + "-pair block.");
    }
    std::vector<double> w0;
    std::vector<double> w1;
    auto [q0, q1] = kernel::split_by_measurement(d.pairs(), d.probs(), pair, which, w0, w1);
    MeasureOutcome out;
    out.r0 = to_block(d.pairs() - 1, kernel::normalized(std::move(w0), q0));
    out.r1 = to_block(d.pairs() - 1, kernel::normalized(std::move(w1), q1));
    out.q0 = out.r0 ? q0 : 0.0;
    out.q1 = out.r1 ? q1 : 0.0;
    return out;
}

double hashing_yield(const BlockDist &d) {
    return static_cast<double>(d.pairs()) - d.entropy();
}

namespace protocol {

namespace {
ProtocolTree make(auto op) {
    return std::make_shared<const ProtocolNode>(ProtocolNode{std::move(op)});
}
void require(const ProtocolTree &t) {
    if (!t) {
        throw std::invalid_argument("Protocol tree children must be non-null.");
    }
}
}  // namespace

ProtocolTree parity_check(ParityMask mask, ProtocolTree child0, ProtocolTree child1) {
    require(child0);
    require(child1);
    return make(ParityCheckNode{mask, std::move(child0), std::move(child1)});
}

ProtocolTree measure(size_t pair, BellBit which, ProtocolTree child0, ProtocolTree child1) {
    require(child0);
    require(child1);
    return make(MeasureNode{pair, which, std::move(child0), std::move(child1)});
}

ProtocolTree relabel(LabelMap map, ProtocolTree child) {
    require(child);
    return make(RelabelNode{std::move(map), std::move(child)});
}

ProtocolTree hash() {
    static const ProtocolTree leaf = make(HashNode{});
    return leaf;
}

ProtocolTree discard() {
    static const ProtocolTree leaf = make(DiscardNode{});
    return leaf;
}

}  // namespace protocol

size_t tree_depth(const ProtocolTree &tree) {
    return std::visit(
        [](const auto &node) -> size_t {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ParityCheckNode> || std::is_same_v<T, MeasureNode>) {
                return 1 + std::max(tree_depth(node.child0), tree_depth(node.child1));
            } else if constexpr (std::is_same_v<T, RelabelNode>) {
                return 1 + tree_depth(node.child);
            } else {
                return 0;
            }
        },
        tree->op);
}

CheckedMasks CheckedMasks::after_relabel(const LabelMap &g) const {
    CheckedMasks out(pairs());
    for (LabelIndex b : span_.basis()) {
        out.span_.insert(g.transport_mask(b));
    }
    return out;
}

CheckedMasks CheckedMasks::after_measure(size_t pair, BellBit which) const {
    size_t m = pairs();
    Gf2Span known = span_;
    known.insert(LabelIndex{1} << label_bit(m, pair, which));
    BellBit other = which == BellBit::amp ? BellBit::phase : BellBit::amp;
    LabelIndex destroyed = LabelIndex{1} << label_bit(m, pair, other);
    CheckedMasks out(m - 1);
    for (LabelIndex v : known.elements()) {
        if (!(v & destroyed)) {
            LabelIndex r = remove_pair_bits(m, pair, v);
            if (r) {
                out.span_.insert(r);
            }
        }
    }
    return out;
}

namespace {

void validate_node(const ProtocolTree &tree, const CheckedMasks &checked) {
    if (!tree) {
        throw std::invalid_argument("Protocol tree contains a null node.");
    }
    size_t m = checked.pairs();
    std::visit(
        [&](const auto &node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ParityCheckNode>) {
                if (node.mask.pairs() != m) {
                    throw std::invalid_argument(
                        "Parity mask '" + node.mask.str() + "' used on a " + std::to_string(m) + "-pair block.");
                }
                CheckedMasks next = checked;
                if (!next.add(node.mask.bits())) {
                    throw std::invalid_argument(
                        "Parity mask '" + node.mask.str() + "' depends on masks already checked on this path.");
                }
                validate_node(node.child0, next);
                validate_node(node.child1, next);
            } else if constexpr (std::is_same_v<T, MeasureNode>) {
                if (node.pair >= m) {
                    throw std::invalid_argument(
                        "Measurement of pair " + std::to_string(node.pair) + " on a " + std::to_string(m) +
                        "-pair block.");
                }
                CheckedMasks next = checked.after_measure(node.pair, node.which);
                validate_node(node.child0, next);
                validate_node(node.child1, next);
            } else if constexpr (std::is_same_v<T, RelabelNode>) {
                if (node.map.pairs() != m) {
                    throw std::invalid_argument(
                        "Relabeling on " + std::to_string(node.map.pairs()) + " pairs used on a " +
                        std::to_string(m) + "-pair block.");
                }
                validate_node(node.child, checked.after_relabel(node.map));
            }
        },
        tree->op);
}

struct Evaluator {
    std::vector<BranchRecord> log;

    double run(const ProtocolTree &tree, const BlockDist &d, double prob, double cost, const std::string &path) {
        return std::visit(
            [&](const auto &node) -> double {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, ParityCheckNode>) {
                    auto split = parity_split(d, node.mask);
                    double y = -split.cost;
                    y += branch(node.child0, split.mu0, split.d0, prob, cost + split.cost, path + "P0 ");
                    y += branch(node.child1, split.mu1, split.d1, prob, cost + split.cost, path + "P1 ");
                    return y;
                } else if constexpr (std::is_same_v<T, MeasureNode>) {
                    auto out = bell_measure(d, node.pair, node.which);
                    double y = 0;
                    y += branch(node.child0, out.q0, out.r0, prob, cost, path + "M0 ");
                    y += branch(node.child1, out.q1, out.r1, prob, cost, path + "M1 ");
                    return y;
                } else if constexpr (std::is_same_v<T, RelabelNode>) {
                    return run(node.child, apply_label_map(node.map, d), prob, cost, path);
                } else if constexpr (std::is_same_v<T, HashNode>) {
                    double y = hashing_yield(d);
                    log.push_back({trim(path), prob, cost, y});
                    return y;
                } else {
                    log.push_back({trim(path), prob, cost, 0.0});
                    return 0.0;
                }
            },
            tree->op);
    }

    double branch(
        const ProtocolTree &child, double weight, const std::optional<BlockDist> &d, double prob, double cost,
        const std::string &path) {
        if (!d) {
            record_empty(child, cost, path);
            return 0.0;
        }
        return weight * run(child, *d, prob * weight, cost, path);
    }

    void record_empty(const ProtocolTree &tree, double cost, const std::string &path) {
        std::visit(
            [&](const auto &node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, ParityCheckNode>) {
                    record_empty(node.child0, cost, path + "P0 ");
                    record_empty(node.child1, cost, path + "P1 ");
                } else if constexpr (std::is_same_v<T, MeasureNode>) {
                    record_empty(node.child0, cost, path + "M0 ");
                    record_empty(node.child1, cost, path + "M1 ");
                } else if constexpr (std::is_same_v<T, RelabelNode>) {
                    record_empty(node.child, cost, path);
                } else {
                    log.push_back({trim(path), 0.0, cost, 0.0});
                }
            },
            tree->op);
    }

    static std::string trim(const std::string &path) {
        return path.empty() ? path : path.substr(0, path.size() - 1);
    }
};

}  // namespace

void validate_tree(const ProtocolTree &tree, size_t pairs) {
    validate_node(tree, CheckedMasks(pairs));
}

RateReport evaluate(const ProtocolTree &tree, const BlockDist &d) {
    validate_tree(tree, d.pairs());
    Evaluator ev;
    RateReport report;
    report.raw_yield = ev.run(tree, d, 1.0, 0.0, "");
    report.initial_pairs = d.pairs();
    report.rate_per_copy = d.pairs() == 0 ? 0.0 : report.raw_yield / static_cast<double>(d.pairs());
    report.branch_log = std::move(ev.log);
    return report;
}

}  // namespace bellrate
