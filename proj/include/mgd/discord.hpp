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

#include <cstdint>
#include <random>
#include <vector>

#include "mgd/family.hpp"
#include "mgd/measurement.hpp"
#include "mgd/qcore.hpp"

namespace mgd {

/// (1/2^N)(c1^2 + c2^2 + c3^2 - max_j c_j^2), evaluated as the sum of the two
/// smaller squares so the result is exactly invariant under permutations and
/// sign flips of c. No physicality check.
double closed_form(int n_qubits, const Coefficients &c);

/// Closed-form geometric discord of a family state.
double closed_form(const PauliFamilyState &s);

struct OptimizerConfig {
  int restarts = 64;
  int max_iterations_per_restart = 2000;
  double convergence_tolerance = 1e-10;
  std::uint64_t seed = 0;
  /// Seed restarts 0, 1, 2 with the three equality-case trees.
  bool seed_equality_cases = true;
  double initial_step = 0.25;

  /// Throws ParameterError unless restarts >= 1 and tolerances > 0.
  void validate() const;
};

struct DiscordResult {
  double value = 0.0;
  MeasurementTree arg_tree = MeasurementTree::uniform(1, canonical_node(3));
  int restarts_used = 0;
  bool converged = false;
  /// Running best after each restart, in restart order.
  std::vector<double> best_residual_history;
  /// Final residual of each restart.
  std::vector<double> restart_minima;
};

/// Minimizes ||rho - chi||^2 over measurement trees by multi-start
/// Nelder-Mead. Each node is parametrized by p in R^3 as (1, p)/|(1, p)|, so
/// a restart searches 3(2^{N-1} - 1) parameters. Restarts run in parallel;
/// the winner is the first restart (in index order) attaining the minimum.
DiscordResult minimize_numeric(const DensityMatrix &rho, const OptimizerConfig &cfg);

/// Per-restart pieces, exposed for the serial reference and the tests.
struct RestartOutcome {
  double value = 0.0;
  std::vector<double> params;
  bool converged = false;
  std::vector<double> history;
};

/// Starting parameters for a restart: equality-case trees first, then
/// random unit 4-vectors per node from an RNG keyed on (seed, index).
std::vector<double> restart_start(int depth, const OptimizerConfig &cfg, int index);

RestartOutcome run_restart(const DensityMatrix &rho, const OptimizerConfig &cfg, int index);

MeasurementTree tree_from_params(int depth, const std::vector<double> &params);

/// Deterministic argmin reduction in restart order.
DiscordResult reduce_restarts(const DensityMatrix &rho, const std::vector<RestartOutcome> &outcomes);

}  // namespace mgd
