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

// Acceptance suite: one PASS/FAIL line per criterion. Exit code is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bellrate/bell_label.h"
#include "bellrate/bootstrap.h"
#include "bellrate/entropy.h"
#include "bellrate/label_map.h"
#include "bellrate/montecarlo.h"
#include "bellrate/protocol.h"
#include "bellrate/reference_protocols.h"
#include "bellrate/search.h"

using namespace bellrate;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void criterion(const char *id, const char *title, double limit_seconds, const std::function<Outcome()> &body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
        out = body();
    } catch (const std::exception &e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = limit_seconds <= 0 || secs < limit_seconds;
    bool pass = out.pass && in_time;
    if (!pass) {
        failures++;
    }
    std::string limit = limit_seconds > 0 ? ", limit " + num(limit_seconds) + " s" : "";
    std::printf(
        "%s %s  %s: %s [%.3f s%s]%s\n", id, pass ? "PASS" : "FAIL", title, out.detail.c_str(), secs, limit.c_str(),
        in_time ? "" : " over time limit");
    std::fflush(stdout);
}


BlockDist random_spectrum(std::mt19937_64 &rng, size_t nonzero) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::array<size_t, 4> order{0, 1, 2, 3};
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<double> w(4, 0.0);
    for (size_t k = 0; k < nonzero; k++) {
        w[order[k]] = 1e-3 + u(rng);
    }
    return BlockDist::from_weights(1, w);
}

double s_of(const std::vector<double> &w) {
    double total = 0;
    for (double v : w) {
        total += v;
    }
    if (total <= 0) {
        return 0;
    }
    return normalized_entropy(w);
}

Outcome ac1() {
    // (i, j) (k, l) -> (i, j + l) (k + i, l) written out for every input.
    int matches = 0;
    for (unsigned i = 0; i < 2; i++) {
        for (unsigned j = 0; j < 2; j++) {
            for (unsigned k = 0; k < 2; k++) {
                for (unsigned l = 0; l < 2; l++) {
                    std::string in = {char('0' + i), char('0' + j), char('0' + k), char('0' + l)};
                    std::string want = {char('0' + i), char('0' + (j ^ l)), char('0' + (k ^ i)), char('0' + l)};
                    auto got = bcnot(0, 1, LabelString::parse(in));
                    auto packed = LabelString::from_index(2, bcnot(2, 0, 1, LabelString::parse(in).index()));
                    matches += got.str() == want && packed.str() == want;
                }
            }
        }
    }
    return {matches == 16, std::to_string(matches) + "/16 inputs match"};
}

Outcome ac2() {
    double f = werner_hashing_threshold(1e-10);
    double lo = hashing_yield(werner_dist(f - 1e-10));
    double hi = hashing_yield(werner_dist(f + 1e-10));
    double extra = rate_2copy(werner_dist(f));
    bool bracketed = lo < 0 && hi > 0;
    return {bracketed && extra > 0,
            "root f* = " + std::to_string(f) + ", sign change across +-1e-10: " + (bracketed ? "yes" : "no") +
                ", rate_2copy(f*) = " + num(extra)};
}

Outcome ac3() {
    std::mt19937_64 rng(2003);
    double worst = 0;
    for (int t = 0; t < 1000; t++) {
        auto l = random_spectrum(rng, 1 + t % 4);
        auto d = tensor(l, l);
        worst = std::max(worst, std::abs(rate_asymptotic_recurrence(l) -
                                         evaluate(asymptotic_recurrence_tree(), d).rate_per_copy));
        worst = std::max(worst, std::abs(rate_2copy(l) - evaluate(two_copy_tree(), d).rate_per_copy));
    }
    return {worst <= 1e-12, "max |closed form - evaluate| = " + num(worst) + " over 1000 spectra"};
}

Outcome ac4() {
    std::mt19937_64 rng(2004);
    int below = 0;
    int not_strict = 0;
    int not_equal = 0;
    int strict_cases = 0;
    int equal_cases = 0;
    for (int t = 0; t < 10000; t++) {
        auto l = random_spectrum(rng, 1 + t % 4);
        double gap = rate_2copy(l) - hashing_yield(l);
        size_t big = 0;
        size_t nonzero = 0;
        for (double v : l.probs()) {
            big += v > 1e-6;
            nonzero += v > 0;
        }
        below += gap < 0;
        if (big >= 3) {
            strict_cases++;
            not_strict += !(gap > 0);
        }
        if (nonzero <= 2) {
            equal_cases++;
            not_equal += std::abs(gap) > 1e-12;
        }
    }
    return {below == 0 && not_strict == 0 && not_equal == 0,
            std::to_string(below) + " below hashing, " + std::to_string(not_strict) + "/" +
                std::to_string(strict_cases) + " rank>=3 not strict, " + std::to_string(not_equal) + "/" +
                std::to_string(equal_cases) + " rank<=2 unequal"};
}

Outcome ac5() {
    std::mt19937_64 rng(2005);
    std::exponential_distribution<double> e(1.0);
    double worst = 0;
    for (int t = 0; t < 1000; t++) {
        size_t n = size_t{4} << (2 * (t % 3));
        std::vector<double> lambda(n);
        double total = 0;
        for (auto &v : lambda) {
            v = e(rng);
            total += v;
        }
        for (auto &v : lambda) {
            v /= total;
        }
        std::vector<double> a;
        std::vector<double> b;
        for (double v : lambda) {
            (rng() & 1 ? a : b).push_back(v);
        }
        double wa = 0;
        double wb = 0;
        for (double v : a) {
            wa += v;
        }
        for (double v : b) {
            wb += v;
        }
        double staged = wa * s_of(a) + wb * s_of(b) + binary_entropy(wa, wb);
        worst = std::max(worst, std::abs(staged - entropy(lambda)));
    }
    return {worst <= 1e-12, "max |S - staged S| = " + num(worst) + " over 1000 spectra"};
}

Outcome ac6() {
    std::string detail;
    bool ok = true;
    double worst_high = 0;
    for (int step = 0; step <= 8; step++) {
        double f = 0.55 + 0.05 * step;
        auto w = werner_dist(f);
        double rate = optimize(tensor(w, w)).best_rate;
        double rec = std::max(
            best_recurrence_then_hash(w, 1, RecurrenceVariant::plain).rate,
            best_recurrence_then_hash(w, 1, RecurrenceVariant::twirl).rate);
        double floor = std::max({hashing_yield(w), rate_2copy(w), rec});
        if (rate < floor - 1e-12) {
            ok = false;
            detail += " below reference at f=" + num(f) + ";";
        }
        if (f >= 0.9 - 1e-9) {
            double diff = std::abs(rate - rate_2copy(w));
            worst_high = std::max(worst_high, diff);
            ok = ok && diff <= 1e-9;
        }
    }
    return {ok, "9 grid points, max |opt - rate_2copy| for f >= 0.9 = " + num(worst_high) + detail};
}

Outcome ac7() {
    double worst = -1e300;
    for (int k = 1; k <= 100; k++) {
        double f = 0.5 + 0.5 * k / 101.0;
        auto split = parity_split(tensor_power(werner_dist(f), 2), ParityMask::parse("1010"));
        worst = std::max(worst, hashing_yield(*split.d1));
    }
    return {worst < 0, "max over 100 fidelities of 2 - S(rho_odd) = " + num(worst)};
}

Outcome ac8() {
    size_t closure = label_map_closure(2).size();
    size_t brute = brute_force_symplectic_maps(2).size();
    size_t enumerated = enumerate_label_maps(2).size();
    return {closure == brute && enumerated == brute,
            "closure " + std::to_string(closure) + ", brute force " + std::to_string(brute) + ", enumerated " +
                std::to_string(enumerated)};
}

Outcome ac9() {
    std::mt19937_64 rng(2009);
    int mismatches = 0;
    int disturbed = 0;
    auto w = werner_dist(0.75);
    for (int t = 0; t < 10000; t++) {
        size_t n = 1 + rng() % kMaxPackedPairs;
        auto e = sample_ensemble(w, n, rng());
        LabelIndex bits = 0;
        while (bits == 0) {
            bits = static_cast<LabelIndex>(rng() & ((uint64_t{1} << (2 * n)) - 1));
        }
        ParityMask mask(n, bits);
        auto before = e.labels;
        mismatches += simulate_parity_check(e, mask) != direct_parity(e.labels, mask);
        disturbed += !(e.labels == before);
    }
    return {mismatches == 0 && disturbed == 0,
            std::to_string(mismatches) + " mismatches, " + std::to_string(disturbed) + " disturbed ensembles in 10^4"};
}

Outcome ac10() {
    auto curve = residual_entropy_curve(werner_dist(0.8), 8, 16, 200, 2010);
    size_t k = 0;
    while (k + 1 < curve.size() && curve[k + 1].mean_bits > 2.0) {
        k++;
    }
    double avg = k > 0 ? (curve[0].mean_bits - curve[k].mean_bits) / static_cast<double>(k) : 0.0;
    double lo = 1e300;
    double hi = -1e300;
    for (size_t j = 1; j <= k; j++) {
        double d = curve[j - 1].mean_bits - curve[j].mean_bits;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    double final_bits = curve.back().mean_bits;
    bool ok = k > 0 && avg >= 0.8 && avg <= 1.0 && std::abs(final_bits) < 1e-12;
    return {ok, "start " + num(curve[0].mean_bits) + " bits, mean drop " + num(avg) + " bits/check over " +
                    std::to_string(k) + " checks (single drops " + num(lo) + ".." + num(hi) + "), after 16 checks " +
                    num(final_bits) + " bits"};
}

Outcome ac11() {
    auto one = [](double) { return 1.0; };
    uint64_t reached = 0;
    for (uint64_t n = 1024; n <= (uint64_t{1} << 60); n *= 2) {
        if (success_bound(n, one, 2, 0.01) > 0.999) {
            reached = n;
            break;
        }
    }
    auto plan = make_plan(1000000000000ull, 0.05, 0.3);
    double gap = std::abs(plan.effective_rate - 0.3);
    return {reached > 0 && gap <= 1e-2,
            "bound > 0.999 first at n = " + std::to_string(reached) + ", effective rate at n = 1e12: " +
                num(plan.effective_rate) + " (r = 0.3)"};
}

Outcome ac12() {
    std::mt19937_64 rng(2012);
    SearchConfig cfg;
    cfg.canonicalize = false;
    double worst = 0;
    size_t runs = 0;
    for (int input = 0; input < 2; input++) {
        auto l = random_spectrum(rng, 4);
        auto d = tensor(l, l);
        double v = optimize(d, cfg).best_rate;
        for (const auto &g : enumerate_label_maps(2)) {
            auto t = LabelMap::shift(2, static_cast<LabelIndex>(rng() & 15)).after(g);
            worst = std::max(worst, std::abs(optimize(apply_label_map(t, d), cfg).best_rate - v));
            runs++;
        }
    }
    return {worst <= 1e-9, "max |value change| = " + num(worst) + " over " + std::to_string(runs) + " relabeled inputs"};
}

}  // namespace

int main() {
    criterion("AC1", "BCNOT label table", 1e-3, ac1);
    criterion("AC2", "hashing threshold and two-copy gain", 1, ac2);
    criterion("AC3", "closed forms vs tree evaluation", 10, ac3);
    criterion("AC4", "two-copy dominance over hashing", 10, ac4);
    criterion("AC5", "entropy chain rule", 0, ac5);
    criterion("AC6", "exhaustive two-copy search on Werner grid", 300, ac6);
    criterion("AC7", "odd-parity branch breeds negatively", 0, ac7);
    criterion("AC8", "label-map group order", 30, ac8);
    criterion("AC9", "Monte Carlo parity checks", 0, ac9);
    criterion("AC10", "posterior entropy drop per check", 120, ac10);
    criterion("AC11", "bootstrap limits", 0, ac11);
    criterion("AC12", "search value invariance under label maps", 0, ac12);
    std::printf("%d of 12 criteria failed\n", failures);
    return failures;
}
