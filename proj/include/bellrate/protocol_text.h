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

#ifndef BELLRATE_PROTOCOL_TEXT_H
#define BELLRATE_PROTOCOL_TEXT_H

#include <string>
#include <string_view>

#include "bellrate/protocol.h"

namespace bellrate {

/// One node per line, indented two spaces per level, children in branch order:
///
///     PC <mask bits>
///     MEAS <pair> <amp|phase>
///     RELABEL <row-major linear bits>:<translation bits>
///     HASH
///     DISCARD
///
/// Pair indices are 0-based. Every line, including the last, ends in '\n'.
std::string to_text(const ProtocolTree &tree);

/// Inverse of to_text; throws std::invalid_argument on malformed input.
ProtocolTree tree_from_text(std::string_view text);

}  // namespace bellrate

#endif
