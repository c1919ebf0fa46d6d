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

#include "bellrate/entropy.h"

#include <cmath>
#include <stdexcept>

namespace bellrate {

namespace {

double unchecked_entropy(std::span<const double> p, double total) {
    double s = 0;
    for (double x : p) {
        if (x > 0) {
            double q = x / total;
            s -= q * std::log2(q);
        }
    }
    return s;
}

double checked_total(std::span<const double> p) {
    double total = 0;
    for (double x : p) {
        if (!(x >= 0)) {
            throw std::invalid_argument("Probability entries must be nonnegative.");
        }
        total += x;
    }
    return total;
}

}  // namespace

double entropy(std::span<const double> p) {
    double total = checked_total(p);
    if (std::abs(total - 1) > kProbabilityTolerance) {
        throw std::invalid_argument("Probability entries must sum to 1.");
    }
    return unchecked_entropy(p, 1.0);
}

double normalized_entropy(std::span<const double> p) {
    double total = checked_total(p);
    if (!(total > 0)) {
        throw std::invalid_argument("normalized_entropy needs at least one positive entry.");
    }
    return unchecked_entropy(p, total);
}

double binary_entropy(double a, double b) {
    double p[2] = {a, b};
    return normalized_entropy(p);
}

}  // namespace bellrate
