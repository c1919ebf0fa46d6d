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

#ifndef BELLRATE_FORMAT_H
#define BELLRATE_FORMAT_H

#include <string>
#include <string_view>

namespace bellrate {

/// Shortest general-format text with at most 12 significant digits.
/// Independent of the global locale.
std::string format_number(double v);

/// Parses a finite decimal number, rejecting trailing characters.
double parse_number(std::string_view text);

}  // namespace bellrate

#endif
