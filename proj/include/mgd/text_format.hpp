// Copyright 2026 The mgdiscord Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mgd {

/// Shortest round-trip decimal form, '.' separator, no grouping.
std::string format_real(double value);

/// Fixed significant-digit form used in CSV output (15 significant digits,
/// trailing zeros trimmed).
std::string format_csv(double value);

/// Parses exactly `count` comma-separated decimals. Throws ParameterError.
std::vector<double> parse_reals(std::string_view text, std::size_t count);

}  // namespace mgd
