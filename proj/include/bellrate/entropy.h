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

#ifndef BELLRATE_ENTROPY_H
#define BELLRATE_ENTROPY_H

#include <span>

namespace bellrate {

/// Tolerance on the total mass of a probability vector.
inline constexpr double kProbabilityTolerance = 1e-12;

/// Shannon entropy in bits, with 0 log 0 = 0.
///
/// Throws std::invalid_argument on a negative entry or when the entries do
/// not sum to one within kProbabilityTolerance.
double entropy(std::span<const double> p);

/// Entropy of p / sum(p). Throws when no entry is positive or one is negative.
double normalized_entropy(std::span<const double> p);

/// Entropy of the two-outcome distribution (a, b) after normalization.
double binary_entropy(double a, double b);

}  // namespace bellrate

#endif
