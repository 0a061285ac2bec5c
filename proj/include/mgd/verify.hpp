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

// Self-check suites behind `mgdiscord verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace mgd {

struct SuiteReport {
  std::string name;
  int passed = 0;
  int total = 0;
  std::string first_failure;

  bool ok() const { return passed == total; }
};

struct VerificationReport {
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<SuiteReport> suites;

  bool ok() const;
};

/// Runs every suite with `samples` random cases per suite and qubit count
/// (the optimizer suite uses samples / 20, at least one). Deterministic in
/// (seed, samples).
VerificationReport run_verification(std::uint64_t seed, int samples);

std::string format_report(const VerificationReport &report);

}  // namespace mgd
