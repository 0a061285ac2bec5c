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

// Serial reference implementations of the OpenMP kernels. They share the
// per-item code with the parallel versions and reduce in the same order, so
// outputs must match bit for bit.

#include <vector>

#include "mgd/discord.hpp"
#include "mgd/measurement.hpp"
#include "mgd/surface.hpp"

namespace mgd::reference {

PostMeasurementState apply_chain(const DensityMatrix &rho, const MeasurementTree &tree);

DiscordResult minimize_numeric(const DensityMatrix &rho, const OptimizerConfig &cfg);

std::vector<SurfacePoint> level_surface(const SurfaceGridSpec &spec);

}  // namespace mgd::reference
