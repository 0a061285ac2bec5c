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

#include "mgd/discord.hpp"

#include <algorithm>
#include <cmath>

#include "mgd/errors.hpp"
#include "mgd/simplex.hpp"

namespace mgd {

double closed_form(int n_qubits, const Coefficients &c) {
  std::array<double, 3> sq{c[0] * c[0], c[1] * c[1], c[2] * c[2]};
  std::sort(sq.begin(), sq.end());
  return std::ldexp(sq[0] + sq[1], -n_qubits);
}

double closed_form(const PauliFamilyState &s) { return closed_form(s.qubits(), s.c()); }

void OptimizerConfig::validate() const {
  if (restarts < 1) throw ParameterError("optimizer needs at least one restart");
  if (max_iterations_per_restart < 0) throw ParameterError("max iterations must be >= 0");
  if (!(convergence_tolerance > 0.0)) throw ParameterError("convergence tolerance must be > 0");
  if (!(initial_step > 0.0)) throw ParameterError("initial simplex step must be > 0");
}

namespace {

void node_to_params(const MeasurementNode &node, double *p) {
  // (t, y) and (-t, -y) give the same projectors.
  const double t = node.t();
  for (int k = 0; k < 3; ++k) p[k] = node.y()[k] / t;
}

}  // namespace

MeasurementTree tree_from_params(int depth, const std::vector<double> &params) {
  const std::size_t count = tree_node_count(depth);
  if (params.size() != 3 * count) throw ParameterError("parameter vector has the wrong length");
  std::vector<MeasurementNode> nodes;
  nodes.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    nodes.push_back(MeasurementNode::normalized(1.0, {params[3 * i], params[3 * i + 1], params[3 * i + 2]}));
  }
  return MeasurementTree(depth, std::move(nodes));
}

std::vector<double> restart_start(int depth, const OptimizerConfig &cfg, int index) {
  const std::size_t count = tree_node_count(depth);
  std::vector<double> params(3 * count);
  if (cfg.seed_equality_cases && index < 3) {
    const MeasurementNode node = canonical_node(index + 1);
    for (std::size_t i = 0; i < count; ++i) node_to_params(node, &params[3 * i]);
    return params;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  for (std::size_t i = 0; i < count; ++i) {
    MeasurementNode node = MeasurementNode::random(rng);
    while (std::abs(node.t()) < 1e-3) node = MeasurementNode::random(rng);
    node_to_params(node, &params[3 * i]);
  }
  return params;
}

RestartOutcome run_restart(const DensityMatrix &rho, const OptimizerConfig &cfg, int index) {
  const int depth = rho.qubits() - 1;
  const Matrix &m = rho.matrix();
  const std::size_t count = tree_node_count(depth);
  Objective objective = [&](std::span<const double> p) {
    std::vector<MeasurementNode> nodes;
    nodes.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      nodes.push_back(MeasurementNode::normalized(1.0, {p[3 * i], p[3 * i + 1], p[3 * i + 2]}));
    }
    return measured_residual(m, MeasurementTree(depth, std::move(nodes)));
  };
  SimplexOptions options;
  options.max_iterations = cfg.max_iterations_per_restart;
  options.tolerance = cfg.convergence_tolerance;
  options.initial_step = cfg.initial_step;
  SimplexResult r = nelder_mead(objective, restart_start(depth, cfg, index), options);
  return {r.value, std::move(r.x), r.converged, std::move(r.best_history)};
}

DiscordResult reduce_restarts(const DensityMatrix &rho, const std::vector<RestartOutcome> &outcomes) {
  if (outcomes.empty()) throw ParameterError("no restarts to reduce");
  const int depth = rho.qubits() - 1;
  DiscordResult result;
  std::size_t best = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].value < outcomes[best].value) best = i;
    result.restart_minima.push_back(outcomes[i].value);
    result.best_residual_history.push_back(outcomes[best].value);
  }
  result.arg_tree = tree_from_params(depth, outcomes[best].params);
  result.value = measured_residual(rho.matrix(), result.arg_tree);
  result.restarts_used = static_cast<int>(outcomes.size());
  result.converged = outcomes[best].converged;
  return result;
}

DiscordResult minimize_numeric(const DensityMatrix &rho, const OptimizerConfig &cfg) {
  cfg.validate();
  if (rho.qubits() < 2) throw ParameterError("geometric discord needs N >= 2 qubits");
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < cfg.restarts; ++i) outcomes[i] = run_restart(rho, cfg, i);
  return reduce_restarts(rho, outcomes);
}

}  // namespace mgd
