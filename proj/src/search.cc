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

#include "bellrate/search.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "bellrate/protocol_text.h"

namespace bellrate {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr size_t kExhaustiveMeasurePairs = 4;

std::vector<int64_t> rounded(std::span<const double> p, double tolerance) {
    std::vector<int64_t> out(p.size());
    for (size_t k = 0; k < p.size(); k++) {
        out[k] = std::llround(p[k] / tolerance);
    }
    return out;
}

MeasureAction action_for_plane(size_t pairs, LabelIndex phi, LabelIndex psi) {
    // The measured parity phi becomes the amp bit of the last pair, psi its
    // phase bit, and a symplectic basis of their complement fills the rest.
    std::vector<LabelIndex> complement;
    for (unsigned b = 0; b < 2 * pairs; b++) {
        LabelIndex v = LabelIndex{1} << b;
        LabelIndex w = v;
        if (symplectic_form(pairs, v, psi)) {
            w ^= phi;
        }
        if (symplectic_form(pairs, v, phi)) {
            w ^= psi;
        }
        complement.push_back(w);
    }
    auto rest = symplectic_basis(pairs, complement);
    rest.push_back(phi);
    rest.push_back(psi);
    return {LabelMap::from_rows(pairs, rest), pairs - 1, BellBit::amp};
}

std::vector<MeasureAction> build_measurement_actions(size_t pairs, bool with_relabel) {
    std::vector<MeasureAction> out;
    LabelIndex n = LabelIndex{1} << (2 * pairs);
    std::vector<bool> covered(n, false);
    for (size_t p = 0; p < pairs; p++) {
        out.push_back({std::nullopt, p, BellBit::amp});
        covered[LabelIndex{1} << label_bit(pairs, p, BellBit::amp)] = true;
        out.push_back({std::nullopt, p, BellBit::phase});
        covered[LabelIndex{1} << label_bit(pairs, p, BellBit::phase)] = true;
    }
    if (!with_relabel) {
        return out;
    }
    if (pairs > kExhaustiveMeasurePairs) {
        // Larger blocks: only recurrence-style measurements of a CNOT target.
        for (size_t s = 0; s < pairs; s++) {
            for (size_t t = 0; t < pairs; t++) {
                if (s == t) {
                    continue;
                }
                for (BellBit which : {BellBit::amp, BellBit::phase}) {
                    out.push_back({LabelMap::bcnot(pairs, s, t), t, which});
                }
            }
        }
        return out;
    }
    // One partner psi per measured parity phi; other partners only relabel
    // the remaining pairs.
    for (LabelIndex phi = 1; phi < n; phi++) {
        if (covered[phi]) {
            continue;
        }
        for (LabelIndex psi = 1; psi < n; psi++) {
            if (symplectic_form(pairs, phi, psi) == 1) {
                out.push_back(action_for_plane(pairs, phi, psi));
                break;
            }
        }
    }
    return out;
}

size_t hash_key(const std::vector<int64_t> &key, size_t pairs, size_t budget) {
    size_t h = std::hash<size_t>{}(pairs * 1315423911u + budget);
    for (int64_t v : key) {
        h ^= std::hash<int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

struct MemoKey {
    size_t pairs;
    size_t budget;
    std::vector<int64_t> entries;
    bool operator==(const MemoKey &other) const = default;
};

struct MemoKeyHash {
    size_t operator()(const MemoKey &k) const {
        return hash_key(k.entries, k.pairs, k.budget);
    }
};

/// A solved state: value, the tree achieving it, and the tree's text.
struct Solution {
    double value = 0;
    size_t depth = 0;
    ProtocolTree tree;
    std::string text;
};

std::string indent(const std::string &text) {
    std::string out;
    out.reserve(text.size() + 64);
    size_t start = 0;
    while (start < text.size()) {
        size_t nl = text.find('\n', start);
        out += "  ";
        out.append(text, start, nl - start + 1);
        start = nl + 1;
    }
    return out;
}

Solution leaf(ProtocolTree tree, double value) {
    std::string text = to_text(tree);
    return {value, 0, std::move(tree), std::move(text)};
}

/// Tracks the best candidate at one state.
class Best {
   public:
    bool worth_considering(double value, size_t depth) const {
        if (!have_) {
            return true;
        }
        if (value > best_.value + kTieTolerance) {
            return true;
        }
        return value >= best_.value - kTieTolerance && depth <= best_.depth;
    }

    template <typename MakeText>
    void offer(double value, size_t depth, MakeText &&make) {
        if (!worth_considering(value, depth)) {
            return;
        }
        if (have_ && value <= best_.value + kTieTolerance && depth == best_.depth) {
            Solution cand = make();
            if (cand.text < best_.text) {
                best_ = std::move(cand);
            }
            return;
        }
        best_ = make();
        have_ = true;
    }

    Solution take() {
        return std::move(best_);
    }

   private:
    bool have_ = false;
    Solution best_;
};

class Searcher {
   public:
    explicit Searcher(const SearchConfig &cfg, size_t root_pairs) : cfg_(cfg) {
        beam_ = cfg.beam_width > 0 || root_pairs > kExhaustiveMeasurePairs;
        beam_width_ = cfg.beam_width > 0 ? cfg.beam_width : kDefaultBeamWidth;
        size_t depth = cfg.max_depth;
        if (depth == 0 && root_pairs > kExhaustiveMeasurePairs) {
            depth = kDefaultBeamDepth;
        }
        capped_ = depth > 0;
        root_budget_ = capped_ ? depth : 0;
    }

    Solution solve_root(const BlockDist &d) {
        std::vector<double> p(d.probs().begin(), d.probs().end());
        return solve(d.pairs(), p, CheckedMasks(d.pairs()), root_budget_);
    }

    SearchStats stats;

   private:
    Solution solve(size_t m, const std::vector<double> &p, const CheckedMasks &checked, size_t budget) {
        if (!cfg_.memoize) {
            return expand(m, p, checked, budget);
        }
        MemoKey key{m, capped_ ? budget : 0, {}};
        std::optional<LabelMap> to_rep;
        if (cfg_.canonicalize && m >= 1 && m <= 2) {
            MemoKey raw{m, 0, rounded(p, cfg_.memo_tolerance)};
            auto cached = canonical_cache_.find(raw);
            if (cached == canonical_cache_.end()) {
                cached = canonical_cache_.emplace(std::move(raw), canonicalize(BlockDist(m, p), cfg_.memo_tolerance)).first;
            }
            key.entries = cached->second.key;
            to_rep = cached->second.to_canonical;
        } else {
            key.entries = rounded(p, cfg_.memo_tolerance);
        }
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            stats.memo_hits++;
            return with_relabel(it->second, to_rep);
        }
        Solution sol = expand(m, p, checked, budget);
        auto [pos, inserted] = memo_.emplace(std::move(key), Entry{sol, to_rep});
        (void)inserted;
        return sol;
    }

    struct Entry {
        Solution solution;
        // Map taking the stored representative to the canonical form.
        std::optional<LabelMap> to_canonical;
    };

    Solution with_relabel(const Entry &entry, const std::optional<LabelMap> &to_canonical) {
        if (!to_canonical || !entry.to_canonical) {
            return entry.solution;
        }
        // d' -> canonical -> stored representative.
        LabelMap h = entry.to_canonical->inverse().after(*to_canonical);
        if (h.is_identity()) {
            return entry.solution;
        }
        Solution out;
        out.value = entry.solution.value;
        out.depth = entry.solution.depth + 1;
        out.tree = protocol::relabel(h, entry.solution.tree);
        out.text = "RELABEL " + h.linear_bits() + ":" + h.translation_bits() + "\n" + indent(entry.solution.text);
        return out;
    }

    Solution child_or_discard(
        size_t m, std::optional<std::vector<double>> p, const CheckedMasks &checked, size_t budget) {
        if (!p) {
            return leaf(protocol::discard(), 0.0);
        }
        return solve(m, *p, checked, budget);
    }

    struct Candidate {
        double score;
        size_t order;
        std::function<void(Best &)> run;
    };

    Solution expand(size_t m, const std::vector<double> &p, const CheckedMasks &checked, size_t budget) {
        stats.states_expanded++;
        double total = 1.0;
        Best best;
        best.offer(0.0, 0, [] { return leaf(protocol::discard(), 0.0); });
        double hash_value = static_cast<double>(m) - kernel::entropy_of_weights(p, total);
        best.offer(hash_value, 0, [&] { return leaf(protocol::hash(), hash_value); });
        if (m == 0 || (capped_ && budget == 0)) {
            return best.take();
        }
        size_t next_budget = capped_ ? budget - 1 : 0;

        std::vector<Candidate> candidates;
        std::vector<double> w0;
        std::vector<double> w1;

        if (cfg_.parity_checks) {
            LabelIndex n = static_cast<LabelIndex>(p.size());
            for (LabelIndex mask = 1; mask < n; mask++) {
                if (!checked.is_fresh(mask)) {
                    continue;
                }
                auto [mu0, mu1] = kernel::split_by_parity(p, mask, w0, w1);
                if (mu0 < kBranchFloor || mu1 < kBranchFloor) {
                    continue;
                }
                double cost = kernel::entropy_of_weights(std::vector<double>{mu0, mu1}, mu0 + mu1);
                auto d0 = *kernel::normalized(w0, mu0);
                auto d1 = *kernel::normalized(w1, mu1);
                double score = -cost + mu0 * std::max(0.0, m - kernel::entropy_of_weights(d0, 1.0)) +
                               mu1 * std::max(0.0, m - kernel::entropy_of_weights(d1, 1.0));
                candidates.push_back({score, candidates.size(), [=, this, &checked](Best &b) {
                                          CheckedMasks next = checked;
                                          next.add(mask);
                                          Solution s0 = solve(m, d0, next, next_budget);
                                          Solution s1 = solve(m, d1, next, next_budget);
                                          double v = -cost + mu0 * s0.value + mu1 * s1.value;
                                          size_t depth = 1 + std::max(s0.depth, s1.depth);
                                          b.offer(v, depth, [&] {
                                              ParityMask pm(m, mask);
                                              Solution s;
                                              s.value = v;
                                              s.depth = depth;
                                              s.tree = protocol::parity_check(pm, s0.tree, s1.tree);
                                              s.text = "PC " + pm.str() + "\n" + indent(s0.text) + indent(s1.text);
                                              return s;
                                          });
                                      }});
            }
        }

        if (cfg_.measurements) {
            const auto &actions = measurement_actions(m, cfg_.relabelings);
            std::vector<double> moved;
            for (const auto &action : actions) {
                std::span<const double> src = p;
                if (action.relabel) {
                    kernel::push_forward(*action.relabel, p, moved);
                    src = moved;
                }
                auto [q0, q1] = kernel::split_by_measurement(m, src, action.pair, action.which, w0, w1);
                auto r0 = kernel::normalized(w0, q0);
                auto r1 = kernel::normalized(w1, q1);
                double score = 0;
                if (r0) {
                    score += q0 * std::max(0.0, (m - 1) - kernel::entropy_of_weights(*r0, 1.0));
                }
                if (r1) {
                    score += q1 * std::max(0.0, (m - 1) - kernel::entropy_of_weights(*r1, 1.0));
                }
                const MeasureAction *act = &action;
                candidates.push_back({score, candidates.size(), [=, this, &checked](Best &b) {
                                          CheckedMasks base = act->relabel ? checked.after_relabel(*act->relabel) : checked;
                                          CheckedMasks next = base.after_measure(act->pair, act->which);
                                          Solution s0 = child_or_discard(m - 1, r0, next, next_budget);
                                          Solution s1 = child_or_discard(m - 1, r1, next, next_budget);
                                          double v = (r0 ? q0 * s0.value : 0.0) + (r1 ? q1 * s1.value : 0.0);
                                          size_t depth = 1 + std::max(s0.depth, s1.depth) + (act->relabel ? 1 : 0);
                                          b.offer(v, depth, [&] {
                                              Solution s;
                                              s.value = v;
                                              s.depth = depth;
                                              auto meas = protocol::measure(act->pair, act->which, s0.tree, s1.tree);
                                              std::string text = "MEAS " + std::to_string(act->pair) +
                                                                 (act->which == BellBit::amp ? " amp\n" : " phase\n") +
                                                                 indent(s0.text) + indent(s1.text);
                                              if (act->relabel) {
                                                  s.tree = protocol::relabel(*act->relabel, meas);
                                                  s.text = "RELABEL " + act->relabel->linear_bits() + ":" +
                                                           act->relabel->translation_bits() + "\n" + indent(text);
                                              } else {
                                                  s.tree = meas;
                                                  s.text = std::move(text);
                                              }
                                              return s;
                                          });
                                      }});
            }
        }

        if (beam_ && candidates.size() > beam_width_) {
            std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate &a, const Candidate &b) {
                return a.score > b.score;
            });
            candidates.resize(beam_width_);
            std::sort(candidates.begin(), candidates.end(), [](const Candidate &a, const Candidate &b) {
                return a.order < b.order;
            });
        }
        for (auto &c : candidates) {
            c.run(best);
        }
        return best.take();
    }

    const SearchConfig &cfg_;
    bool beam_ = false;
    size_t beam_width_ = kDefaultBeamWidth;
    bool capped_ = false;
    size_t root_budget_ = 0;
    std::unordered_map<MemoKey, Entry, MemoKeyHash> memo_;
    std::unordered_map<MemoKey, CanonicalForm, MemoKeyHash> canonical_cache_;
};

}  // namespace

const std::vector<MeasureAction> &measurement_actions(size_t pairs, bool with_relabel) {
    if (pairs == 0 || pairs > kMaxSearchPairs) {
        throw std::invalid_argument("measurement_actions supports 1.." + std::to_string(kMaxSearchPairs) + " pairs.");
    }
    static std::mutex mu;
    static std::map<std::pair<size_t, bool>, std::vector<MeasureAction>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(pairs, with_relabel);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, build_measurement_actions(pairs, with_relabel)).first;
    }
    return it->second;
}

CanonicalForm canonicalize(const BlockDist &d, double tolerance) {
    size_t m = d.pairs();
    if (m == 0 || m > 2) {
        throw std::invalid_argument(
            "canonicalize: the label-map group is only enumerated for 1 or 2 pairs, got " + std::to_string(m) + ".");
    }
    if (!(tolerance > 0)) {
        throw std::invalid_argument("canonicalize: tolerance must be positive.");
    }
    const auto &group = enumerate_label_maps(m);
    size_t n = d.size();
    std::vector<int64_t> base = rounded(d.probs(), tolerance);
    std::vector<int64_t> moved(n);
    CanonicalForm out;
    out.pairs = m;
    out.key.assign(n, 0);
    bool have = false;
    for (const auto &g : group) {
        for (LabelIndex x = 0; x < n; x++) {
            moved[g.linear_apply(x)] = base[x];
        }
        int64_t lead = *std::min_element(moved.begin(), moved.end());
        if (have && lead > out.key[0]) {
            continue;
        }
        for (LabelIndex t = 0; t < n; t++) {
            if (moved[t] != lead) {
                continue;
            }
            int cmp = 0;
            if (have) {
                for (LabelIndex y = 0; y < n && cmp == 0; y++) {
                    int64_t a = moved[y ^ t];
                    int64_t b = out.key[y];
                    cmp = a < b ? -1 : a > b ? 1 : 0;
                }
            }
            if (!have || cmp < 0) {
                for (LabelIndex y = 0; y < n; y++) {
                    out.key[y] = moved[y ^ t];
                }
                out.to_canonical = LabelMap::shift(m, t).after(g);
                out.stabilizer_size = 1;
                have = true;
            } else if (cmp == 0) {
                out.stabilizer_size++;
            }
        }
    }
    return out;
}

SearchResult optimize(const BlockDist &d, const SearchConfig &cfg) {
    if (cfg.max_pairs == 0 || cfg.max_pairs > kMaxSearchPairs) {
        throw std::invalid_argument("max_pairs must be in 1.." + std::to_string(kMaxSearchPairs) + ".");
    }
    if (d.pairs() == 0 || d.pairs() > cfg.max_pairs) {
        throw std::invalid_argument(
            "Block of " + std::to_string(d.pairs()) + " pairs is outside the configured limit of " +
            std::to_string(cfg.max_pairs) + ".");
    }
    if (!(cfg.memo_tolerance > 0)) {
        throw std::invalid_argument("memo_tolerance must be positive.");
    }
    Searcher searcher(cfg, d.pairs());
    Solution best = searcher.solve_root(d);
    SearchResult out;
    out.best_yield = best.value;
    out.best_rate = best.value / static_cast<double>(d.pairs());
    out.best_tree = best.tree;
    out.stats = searcher.stats;
    return out;
}

}  // namespace bellrate
