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

// Nelder-Mead downhill simplex with dimension-adaptive coefficients
// (reflection 1, expansion 1 + 2/n, contraction 3/4 - 1/(2n), shrink 1 - 1/n),
// which keeps the method usable past ~10 parameters.

#include <functional>
#include <span>
#include <vector>

namespace mgd {

struct SimplexOptions {
  int max_iterations = 2000;
  /// Stop when max - min over the simplex vertices drops below this.
  double tolerance = 1e-10;
  double initial_step = 0.25;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  /// Best vertex value after each iteration; nonincreasing.
  std::vector<double> best_history;
};

using Objective = std::function<double(std::span<const double>)>;

SimplexResult nelder_mead(const Objective &f, std::vector<double> start,
                          const SimplexOptions &options);

}  // namespace mgd
