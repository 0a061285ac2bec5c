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

#include "mgd/text_format.hpp"

#include <charconv>
#include <system_error>

#include "mgd/errors.hpp"

namespace mgd {

namespace {

std::string finish(char *begin, std::to_chars_result r) {
  if (r.ec != std::errc()) return "nan";
  std::string out(begin, r.ptr);
  if (out == "-0") out = "0";
  return out;
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  return finish(buf, std::to_chars(buf, buf + sizeof buf, value));
}

std::string format_csv(double value) {
  char buf[64];
  return finish(buf, std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 15));
}

std::vector<double> parse_reals(std::string_view text, std::size_t count) {
  std::vector<double> out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t end = (i + 1 < count) ? text.find(',', pos) : text.size();
    if (end == std::string_view::npos || pos > text.size()) {
      throw ParameterError("expected " + std::to_string(count) +
                           " comma-separated numbers, got '" + std::string(text) + "'");
    }
    std::string_view field = text.substr(pos, end - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParameterError("malformed number '" + std::string(field) + "' in '" +
                           std::string(text) + "'");
    }
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

}  // namespace mgd
