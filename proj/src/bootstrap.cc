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

#include "bellrate/bootstrap.h"

#include <cmath>
#include <stdexcept>

#include "bellrate/format.h"

namespace bellrate {

namespace {

uint64_t floor_sqrt(uint64_t n) {
    auto s = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (s * s > n) {
        s--;
    }
    while ((s + 1) * (s + 1) <= n) {
        s++;
    }
    return s;
}

}  // namespace

BootstrapPlan make_plan(uint64_t n, double k, double r) {
    if (n == 0) {
        throw std::invalid_argument("n must be at least 1.");
    }
    if (!(k > 0) || !std::isfinite(k)) {
        throw std::invalid_argument("Activating rate k must be positive.");
    }
    if (!(r > 0) || !std::isfinite(r)) {
        throw std::invalid_argument("Assisted rate r must be positive.");
    }
    BootstrapPlan plan;
    plan.n = n;
    plan.k = k;
    plan.r = r;
    plan.sqrt_n = floor_sqrt(n);
    plan.activating_copies = static_cast<uint64_t>(std::ceil(static_cast<double>(plan.sqrt_n) / k));

    double pool = static_cast<double>(plan.sqrt_n);
    double geometric = pool;
    uint64_t remaining = n;
    plan.min_pool = pool;
    while (remaining > 0) {
        auto b = static_cast<uint64_t>(std::floor(geometric));
        auto next = static_cast<uint64_t>(std::floor(geometric * (1 + r)));
        if (b >= remaining || remaining - b < next) {
            b = remaining;
        }
        b = std::min(b, static_cast<uint64_t>(std::floor(pool)));
        if (b == 0) {
            throw std::domain_error("Pool is empty; the schedule cannot start.");
        }
        pool -= static_cast<double>(b);
        plan.min_pool = std::min(plan.min_pool, pool);
        pool += (1 + r) * static_cast<double>(b);
        plan.blocks.push_back(b);
        remaining -= b;
        geometric *= 1 + r;
    }
    plan.final_pool = pool;
    plan.effective_rate =
        (pool - static_cast<double>(plan.sqrt_n)) / static_cast<double>(n + plan.activating_copies);
    return plan;
}

double replay_pool(const BootstrapPlan &plan) {
    double pool = static_cast<double>(plan.sqrt_n);
    for (uint64_t b : plan.blocks) {
        pool -= static_cast<double>(b);
        if (pool < 0) {
            throw std::logic_error("Pool went negative during replay.");
        }
        pool += (1 + plan.r) * static_cast<double>(b);
    }
    return pool;
}

double success_bound(uint64_t n, const std::function<double(double)> &p_activating, double k_err, double c) {
    if (n == 0) {
        throw std::invalid_argument("n must be at least 1.");
    }
    if (!(k_err > 0) || !std::isfinite(k_err)) {
        throw std::invalid_argument("k_err must be positive.");
    }
    if (!(c > 0) || !std::isfinite(c)) {
        throw std::invalid_argument("c must be positive.");
    }
    if (!p_activating) {
        throw std::invalid_argument("p_activating is empty.");
    }
    auto s = static_cast<double>(floor_sqrt(n));
    double p = p_activating(s);
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("p_activating returned " + format_number(p) + ", outside [0, 1].");
    }
    double failure = k_err * std::exp(-c * s);
    if (p == 0 || failure >= 1) {
        return 0.0;
    }
    return std::exp(std::log(p) + s * std::log1p(-failure));
}

std::string bootstrap_csv_row(const BootstrapPlan &plan, double bound) {
    return std::to_string(plan.n) + "," + std::to_string(plan.activating_copies) + "," +
           std::to_string(plan.blocks.size()) + "," + format_number(plan.effective_rate) + "," + format_number(bound);
}

}  // namespace bellrate
