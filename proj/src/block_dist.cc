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

#include "bellrate/block_dist.h"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bellrate/entropy.h"

namespace bellrate {

namespace {

size_t label_count(size_t pairs) {
    if (pairs > kMaxBlockPairs) {
        throw std::invalid_argument(
            "Blocks are limited to " + std::to_string(kMaxBlockPairs) + " pairs, got " + std::to_string(pairs) + ".");
    }
    return size_t{1} << (2 * pairs);
}

}  // namespace

BlockDist::BlockDist(size_t pairs, std::vector<double> probs) : pairs_(pairs), p_(std::move(probs)) {
    if (p_.size() != label_count(pairs_)) {
        throw std::invalid_argument(
            "A " + std::to_string(pairs_) + "-pair distribution needs " + std::to_string(label_count(pairs_)) +
            " entries, got " + std::to_string(p_.size()) + ".");
    }
    double total = 0;
    for (double x : p_) {
        if (!(x >= 0)) {
            throw std::invalid_argument("Probabilities must be nonnegative.");
        }
        total += x;
    }
    if (std::abs(total - 1) > kProbabilityTolerance) {
        throw std::invalid_argument("Probabilities must sum to 1 (got " + std::to_string(total) + ").");
    }
}

BlockDist BlockDist::from_weights(size_t pairs, std::vector<double> weights) {
    double total = 0;
    for (double x : weights) {
        if (!(x >= 0)) {
            throw std::invalid_argument("Weights must be nonnegative.");
        }
        total += x;
    }
    if (!(total > 0)) {
        throw std::invalid_argument("Weights must have a positive total.");
    }
    for (double &x : weights) {
        x /= total;
    }
    return BlockDist(pairs, std::move(weights));
}

BlockDist BlockDist::delta(size_t pairs, LabelIndex label) {
    std::vector<double> p(label_count(pairs), 0.0);
    if (label >= p.size()) {
        throw std::invalid_argument("Label index out of range.");
    }
    p[label] = 1;
    return BlockDist(pairs, std::move(p));
}

BlockDist BlockDist::uniform(size_t pairs) {
    size_t n = label_count(pairs);
    return BlockDist(pairs, std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double BlockDist::at(const LabelString &label) const {
    if (label.pairs() != pairs_) {
        throw std::invalid_argument("Label length does not match the block.");
    }
    return p_[label.index()];
}

double BlockDist::entropy() const {
    return bellrate::entropy(p_);
}

WernerParams::WernerParams(double fidelity) : f_(fidelity) {
    if (!(fidelity > 0.25 && fidelity <= 1)) {
        throw std::invalid_argument("Werner fidelity must lie in (1/4, 1], got " + std::to_string(fidelity) + ".");
    }
}

BlockDist werner_dist(WernerParams w) {
    double f = w.fidelity();
    double r = (1 - f) / 3;
    return BlockDist(1, {f, r, r, r});
}

BlockDist werner_dist(double fidelity) {
    return werner_dist(WernerParams(fidelity));
}

BlockDist tensor(const BlockDist &a, const BlockDist &b) {
    size_t pairs = a.pairs() + b.pairs();
    std::vector<double> p(label_count(pairs));
    size_t nb = b.size();
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < nb; j++) {
            p[i * nb + j] = a[static_cast<LabelIndex>(i)] * b[static_cast<LabelIndex>(j)];
        }
    }
    return BlockDist(pairs, std::move(p));
}

BlockDist tensor_power(const BlockDist &d, size_t copies) {
    if (copies == 0) {
        throw std::invalid_argument("tensor_power needs at least one copy.");
    }
    BlockDist out = d;
    for (size_t c = 1; c < copies; c++) {
        out = tensor(out, d);
    }
    return out;
}

double max_eigenvalue(const BlockDist &d) {
    double best = 0;
    for (double x : d.probs()) {
        best = std::max(best, x);
    }
    return best;
}

bool is_separable(const BlockDist &d) {
    if (d.pairs() != 1) {
        throw std::invalid_argument("is_separable is defined for single-pair states.");
    }
    return max_eigenvalue(d) <= 0.5;
}

std::string to_text(const BlockDist &d) {
    std::string out = "m=" + std::to_string(d.pairs()) + "\n";
    char buf[64];
    for (size_t i = 0; i < d.size(); i++) {
        if (d.pairs() > 0) {
            out += LabelString::from_index(d.pairs(), static_cast<LabelIndex>(i)).str();
        }
        out += '\t';
        auto r = std::to_chars(buf, buf + sizeof(buf), d[static_cast<LabelIndex>(i)], std::chars_format::general, 17);
        out.append(buf, r.ptr);
        out += '\n';
    }
    return out;
}

BlockDist block_dist_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line.rfind("m=", 0) != 0) {
        throw std::invalid_argument("Distribution text must start with 'm=<int>'.");
    }
    size_t pairs = 0;
    auto head = std::from_chars(line.data() + 2, line.data() + line.size(), pairs);
    if (head.ec != std::errc() || head.ptr != line.data() + line.size()) {
        throw std::invalid_argument("Bad header line '" + line + "'.");
    }
    std::vector<double> p(label_count(pairs), 0.0);
    std::vector<bool> seen(p.size(), false);
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::invalid_argument("Expected 'label<TAB>probability', got '" + line + "'.");
        }
        LabelIndex index = 0;
        if (pairs > 0) {
            auto label = LabelString::parse(std::string_view(line).substr(0, tab));
            if (label.pairs() != pairs) {
                throw std::invalid_argument("Label '" + label.str() + "' has the wrong length.");
            }
            index = label.index();
        } else if (tab != 0) {
            throw std::invalid_argument("A zero-pair distribution has an empty label.");
        }
        double v = 0;
        const char *begin = line.data() + tab + 1;
        const char *end = line.data() + line.size();
        auto r = std::from_chars(begin, end, v);
        if (r.ec != std::errc() || r.ptr != end) {
            throw std::invalid_argument("Bad probability in line '" + line + "'.");
        }
        if (seen[index]) {
            throw std::invalid_argument("Duplicate label in line '" + line + "'.");
        }
        seen[index] = true;
        p[index] = v;
    }
    return BlockDist(pairs, std::move(p));
}

}  // namespace bellrate
