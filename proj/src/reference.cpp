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

#include "mgd/reference.hpp"

#include "kernel_detail.hpp"
#include "mgd/errors.hpp"

namespace mgd::reference {

PostMeasurementState apply_chain(const DensityMatrix &rho, const MeasurementTree &tree) {
  if (tree.depth() != rho.qubits() - 1) throw ParameterError("tree depth does not match N - 1");
  std::vector<Matrix> branches;
  branches.reserve(tree.branch_count());
  for (std::size_t b = 0; b < tree.branch_count(); ++b) {
    branches.push_back(chain_branch(rho.matrix(), tree, b));
  }
  return detail::assemble_post_measurement(rho, branches);
}

DiscordResult minimize_numeric(const DensityMatrix &rho, const OptimizerConfig &cfg) {
  cfg.validate();
  if (rho.qubits() < 2) throw ParameterError("geometric discord needs N >= 2 qubits");
  std::vector<RestartOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(cfg.restarts));
  for (int i = 0; i < cfg.restarts; ++i) outcomes.push_back(run_restart(rho, cfg, i));
  return reduce_restarts(rho, outcomes);
}

std::vector<SurfacePoint> level_surface(const SurfaceGridSpec &spec) {
  spec.validate();
  std::vector<SurfacePoint> out;
  for (int i1 = 0; i1 < spec.grid_resolution; ++i1) {
    auto slab = level_surface_slab(spec, i1);
    out.insert(out.end(), slab.begin(), slab.end());
  }
  return out;
}

}  // namespace mgd::reference
