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

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "bellrate/bootstrap.h"
#include "bellrate/curve.h"
#include "bellrate/format.h"
#include "bellrate/montecarlo.h"
#include "bellrate/protocol_text.h"
#include "bellrate/reference_protocols.h"
#include "bellrate/search.h"

namespace bellrate::cli {

namespace {

constexpr double kSpectrumTolerance = 1e-9;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        out.push_back(item);
    }
    if (!text.empty() && text.back() == sep) {
        out.emplace_back();
    }
    return out;
}

double number(const std::string &text, const std::string &flag) {
    try {
        return parse_number(text);
    } catch (const std::invalid_argument &) {
        throw UsageError(flag + ": not a number: '" + text + "'.");
    }
}

uint64_t count(const std::string &text, const std::string &flag) {
    double v = number(text, flag);
    if (!(v >= 0) || v != std::floor(v) || v > 1.8e19) {
        throw UsageError(flag + ": expected a nonnegative integer, got '" + text + "'.");
    }
    return static_cast<uint64_t>(v);
}

/// Spectrum in the order l00,l01,l10,l11; renormalized after validation.
BlockDist parse_spectrum(const std::string &text) {
    auto parts = split(text, ',');
    if (parts.size() != 4) {
        throw UsageError("--spectrum needs four comma-separated values l00,l01,l10,l11.");
    }
    std::vector<double> w;
    double total = 0;
    for (const auto &p : parts) {
        double v = number(p, "--spectrum");
        if (v < 0) {
            throw UsageError("--spectrum entries must be nonnegative.");
        }
        w.push_back(v);
        total += v;
    }
    if (std::abs(total - 1) > kSpectrumTolerance) {
        throw UsageError("--spectrum must sum to 1 (got " + format_number(total) + ").");
    }
    return BlockDist::from_weights(1, w);
}

/// Werner spectrum for any f in [0, 1], built directly.
BlockDist werner_any(double f) {
    if (!(f >= 0 && f <= 1)) {
        throw UsageError("--werner must be in [0, 1].");
    }
    double rest = (1 - f) / 3;
    return BlockDist::from_weights(1, {f, rest, rest, rest});
}

struct StateOptions {
    std::string spectrum;
    std::optional<double> werner;
    std::string dist_file;
};

void add_state_options(CLI::App *cmd, StateOptions &s, bool with_dist_file) {
    auto *spectrum = cmd->add_option("--spectrum", s.spectrum, "One-pair spectrum l00,l01,l10,l11");
    auto *wer = cmd->add_option("--werner", s.werner, "Werner fidelity f");
    spectrum->excludes(wer);
    if (with_dist_file) {
        auto *file = cmd->add_option("--dist", s.dist_file, "Block distribution file (m=<pairs> then label<TAB>prob)");
        file->excludes(spectrum)->excludes(wer);
    }
}

std::optional<BlockDist> single_pair_state(const StateOptions &s) {
    if (!s.spectrum.empty()) {
        return parse_spectrum(s.spectrum);
    }
    if (s.werner) {
        return werner_any(*s.werner);
    }
    return std::nullopt;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("Cannot open '" + path + "'.");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &data) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("Cannot write '" + path + "'.");
    }
    f << data;
    if (!f) {
        throw std::runtime_error("Failed writing '" + path + "'.");
    }
}

void emit(const std::string &out_path, const std::string &data, std::ostream &out) {
    if (out_path.empty()) {
        out << data;
    } else {
        write_file(out_path, data);
    }
}

struct SearchOptions {
    size_t max_depth = 0;
    size_t beam_width = 0;
    bool no_canonical = false;
    bool no_memo = false;
    bool no_relabel = false;
    double memo_tolerance = 1e-10;
};

void add_search_options(CLI::App *cmd, SearchOptions &o) {
    cmd->add_option("--max-depth", o.max_depth, "Cap on operations along any path (0 = none)");
    cmd->add_option("--beam-width", o.beam_width, "Actions kept per state (0 = exhaustive up to 4 pairs)");
    cmd->add_flag("--no-canonical", o.no_canonical, "Memoize exact distributions instead of label-map orbits");
    cmd->add_flag("--no-memo", o.no_memo, "Disable memoization");
    cmd->add_flag("--no-relabel", o.no_relabel, "Only measure single amp or phase bits");
    cmd->add_option("--memo-tolerance", o.memo_tolerance, "Resolution of memo keys");
}

SearchConfig search_config(const SearchOptions &o, size_t pairs) {
    SearchConfig cfg;
    cfg.max_pairs = std::max<size_t>(pairs, 1);
    cfg.max_depth = o.max_depth;
    cfg.beam_width = o.beam_width;
    cfg.canonicalize = !o.no_canonical;
    cfg.memoize = !o.no_memo;
    cfg.relabelings = !o.no_relabel;
    cfg.memo_tolerance = o.memo_tolerance;
    return cfg;
}

int cmd_rate(const StateOptions &state, const std::string &out_path, std::ostream &out) {
    auto d = single_pair_state(state);
    if (!d) {
        throw UsageError("rate needs --spectrum or --werner.");
    }
    double rec = std::max(
        best_recurrence_then_hash(*d, kCurveRecurrenceRounds, RecurrenceVariant::plain).rate,
        best_recurrence_then_hash(*d, kCurveRecurrenceRounds, RecurrenceVariant::twirl).rate);
    std::string data = "hash,asym_rec,two_copy,rec_hash\n" + format_number(hashing_yield(*d)) + "," +
                       format_number(rate_asymptotic_recurrence(*d)) + "," + format_number(rate_2copy(*d)) + "," +
                       format_number(rec) + "\n";
    emit(out_path, data, out);
    return kExitOk;
}

int cmd_curve(
    const std::string &grid_text, size_t copies, const SearchOptions &so, const std::string &out_path,
    const std::string &trees_dir, std::ostream &out, std::ostream &err) {
    std::vector<double> grid;
    try {
        grid = parse_grid(grid_text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--grid: ") + e.what());
    }
    for (double f : grid) {
        if (!(f > 0.5 && f <= 1)) {
            throw UsageError("--grid point " + format_number(f) + " is outside (1/2, 1].");
        }
    }
    if (copies == 0 || copies > kMaxSearchPairs) {
        throw UsageError("--copies must be in 1.." + std::to_string(kMaxSearchPairs) + ".");
    }
    WernerCurve curve = werner_curve(grid, copies, search_config(so, copies));
    emit(out_path, curve_csv(curve), out);
    if (!trees_dir.empty()) {
        std::filesystem::create_directories(trees_dir);
        for (const auto &row : curve.rows) {
            auto path = std::filesystem::path(trees_dir) / ("tree_f" + format_number(row.f) + ".txt");
            write_file(path.string(), to_text(row.tree));
        }
    }
    for (const auto &v : curve.violations) {
        err << "warning: column " << v.column << " decreases by " << format_number(v.drop) << " at f="
            << format_number(curve.rows[v.row].f) << "\n";
    }
    return kExitOk;
}

int cmd_search(
    const StateOptions &state, size_t copies, const SearchOptions &so, const std::string &out_path,
    std::ostream &out) {
    BlockDist d = BlockDist::delta(1, 0);
    if (!state.dist_file.empty()) {
        try {
            d = block_dist_from_text(read_file(state.dist_file));
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("--dist: ") + e.what());
        }
    } else {
        auto single = single_pair_state(state);
        if (!single) {
            throw UsageError("search needs --spectrum, --werner or --dist.");
        }
        if (copies == 0 || copies > kMaxSearchPairs) {
            throw UsageError("--copies must be in 1.." + std::to_string(kMaxSearchPairs) + ".");
        }
        d = tensor_power(*single, copies);
    }
    if (d.pairs() == 0 || d.pairs() > kMaxSearchPairs) {
        throw UsageError("search supports 1.." + std::to_string(kMaxSearchPairs) + " pairs.");
    }
    SearchResult r = optimize(d, search_config(so, d.pairs()));
    std::string tree = to_text(r.best_tree);
    out << "pairs,rate,yield,states_expanded,memo_hits\n"
        << d.pairs() << "," << format_number(r.best_rate) << "," << format_number(r.best_yield) << ","
        << r.stats.states_expanded << "," << r.stats.memo_hits << "\n";
    if (out_path.empty()) {
        out << tree;
    } else {
        write_file(out_path, tree);
    }
    return kExitOk;
}

int cmd_simulate(
    const StateOptions &state, size_t n, size_t checks, const std::string &trials_text, uint64_t seed,
    const std::string &mask_text, size_t copies, const std::string &out_path, std::ostream &out) {
    auto single = single_pair_state(state);
    BlockDist spectrum = single ? *single : werner_any(0.8);
    uint64_t trials = count(trials_text, "--trials");
    if (trials == 0) {
        throw UsageError("--trials must be at least 1.");
    }
    if (!mask_text.empty()) {
        ParityMask mask(1, 1);
        try {
            mask = ParityMask::parse(mask_text);
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("--mask: ") + e.what());
        }
        if (copies == 0 || copies > kMaxBlockPairs) {
            throw UsageError("--copies must be in 1.." + std::to_string(kMaxBlockPairs) + ".");
        }
        if (mask.pairs() != copies) {
            throw UsageError("--mask must have 2 bits per copy.");
        }
        auto [mu0, mu1] = empirical_branch_probabilities(tensor_power(spectrum, copies), mask, trials, seed);
        emit(out_path, "mu0,mu1\n" + format_number(mu0) + "," + format_number(mu1) + "\n", out);
        return kExitOk;
    }
    if (n == 0 || n > kMaxEnumeratedPairs) {
        throw UsageError("--n must be in 1.." + std::to_string(kMaxEnumeratedPairs) + ".");
    }
    if (checks > 2 * n) {
        throw UsageError("--checks may not exceed 2n.");
    }
    auto curve = residual_entropy_curve(spectrum, n, checks, trials, seed);
    emit(out_path, residual_entropy_csv(curve), out);
    return kExitOk;
}

int cmd_bootstrap(
    const std::string &n_text, double r, double k, double c, double k_err, double p_fail_scale,
    const std::string &out_path, std::ostream &out) {
    if (!(r > 0) || !(k > 0)) {
        throw UsageError("--r and --k must be positive.");
    }
    if (!(c > 0) || !(k_err > 0)) {
        throw UsageError("--c and --kerr must be positive.");
    }
    if (!(p_fail_scale >= 0)) {
        throw UsageError("--p-fail-scale must be nonnegative.");
    }
    auto p_activating = [p_fail_scale](double m) { return std::max(0.0, 1 - p_fail_scale / m); };
    std::string data = std::string(kBootstrapCsvHeader) + "\n";
    for (const auto &item : split(n_text, ',')) {
        uint64_t n = count(item, "--n");
        if (n == 0) {
            throw UsageError("--n must be at least 1.");
        }
        BootstrapPlan plan = make_plan(n, k, r);
        data += bootstrap_csv_row(plan, success_bound(n, p_activating, k_err, c)) + "\n";
    }
    emit(out_path, data, out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement distillation rates for Bell-diagonal states", "bellrate"};
    app.require_subcommand(1);

    std::string out_path;
    StateOptions state;
    SearchOptions search;

    auto *rate = app.add_subcommand("rate", "Closed-form rates for one spectrum");
    add_state_options(rate, state, false);
    rate->add_option("--out", out_path, "Write CSV here instead of stdout");

    std::string grid;
    size_t copies = 2;
    std::string trees_dir;
    auto *curve = app.add_subcommand("curve", "Werner rate table over a fidelity grid");
    curve->add_option("--grid", grid, "lo:hi:step or a single fidelity")->required();
    curve->add_option("--copies", copies, "Copies per searched block")->capture_default_str();
    curve->add_option("--out", out_path, "Write CSV here instead of stdout");
    curve->add_option("--trees-dir", trees_dir, "Write the best tree of each grid point into this directory");
    add_search_options(curve, search);

    auto *srch = app.add_subcommand("search", "Optimize a protocol tree on a block");
    add_state_options(srch, state, true);
    srch->add_option("--copies", copies, "Copies of the one-pair state")->capture_default_str();
    srch->add_option("--out", out_path, "Write the best tree here instead of stdout");
    add_search_options(srch, search);

    size_t n = 8;
    size_t checks = 16;
    std::string trials = "200";
    uint64_t seed = 1;
    std::string mask;
    size_t mask_copies = 2;
    auto *sim = app.add_subcommand("simulate", "Sampled parity checks and posterior entropy");
    add_state_options(sim, state, false);
    sim->add_option("--n", n, "Pairs per sampled string")->capture_default_str();
    sim->add_option("--checks", checks, "Random independent parity checks")->capture_default_str();
    sim->add_option("--trials", trials, "Number of trials")->capture_default_str();
    sim->add_option("--seed", seed, "RNG seed")->capture_default_str();
    sim->add_option("--mask", mask, "Estimate branch probabilities of this mask instead");
    sim->add_option("--copies", mask_copies, "Copies per block for --mask")->capture_default_str();
    sim->add_option("--out", out_path, "Write CSV here instead of stdout");

    std::string n_list;
    double r = 0;
    double k = 0;
    double c = 0.01;
    double k_err = 2;
    double p_fail_scale = 0;
    auto *boot = app.add_subcommand("bootstrap", "Schedule without pre-shared ebits and its success bound");
    boot->add_option("--n", n_list, "Copies, or a comma-separated list")->required();
    boot->add_option("--r", r, "Assisted rate")->required();
    boot->add_option("--k", k, "Activating protocol rate")->required();
    boot->add_option("--c", c, "Typicality exponent")->capture_default_str();
    boot->add_option("--kerr", k_err, "Typicality prefactor")->capture_default_str();
    boot->add_option("--p-fail-scale", p_fail_scale, "Activating success p(m) = max(0, 1 - a/m)")
        ->capture_default_str();
    boot->add_option("--out", out_path, "Write CSV here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*rate) {
            return cmd_rate(state, out_path, out);
        }
        if (*curve) {
            return cmd_curve(grid, copies, search, out_path, trees_dir, out, err);
        }
        if (*srch) {
            return cmd_search(state, copies, search, out_path, out);
        }
        if (*sim) {
            return cmd_simulate(state, n, checks, trials, seed, mask, mask_copies, out_path, out);
        }
        return cmd_bootstrap(n_list, r, k, c, k_err, p_fail_scale, out_path, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}

}  // namespace bellrate::cli
