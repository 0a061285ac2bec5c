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

#include "mgd/surface.hpp"

#include <cmath>

#include "mgd/discord.hpp"
#include "mgd/errors.hpp"

namespace mgd {

void SurfaceGridSpec::validate() const {
  if (n_qubits < 2 || n_qubits > kMaxQubits) throw ParameterError("surface: N out of range");
  if (grid_resolution < 2) throw ParameterError("surface: resolution must be >= 2");
  if (!(tolerance_band > 0.0)) throw ParameterError("surface: band must be > 0");
  if (!(target_discord >= 0.0)) throw ParameterError("surface: target must be >= 0");
}

double grid_coordinate(int i, int resolution) {
  const int span = resolution - 1;
  return static_cast<double>(2 * i - span) / static_cast<double>(span);
}

std::vector<SurfacePoint> level_surface_slab(const SurfaceGridSpec &spec, int i1) {
  std::vector<SurfacePoint> out;
  const int r = spec.grid_resolution;
  for (int i2 = 0; i2 < r; ++i2) {
    for (int i3 = 0; i3 < r; ++i3) {
      const Coefficients c{grid_coordinate(i1, r), grid_coordinate(i2, r), grid_coordinate(i3, r)};
      const double d = closed_form(spec.n_qubits, c);
      if (std::abs(d - spec.target_discord) > spec.tolerance_band) continue;
      if (spec.domain == SurfaceDomain::kPhysical && !is_physical(spec.n_qubits, c).physical) continue;
      out.push_back({{i1, i2, i3}, c, d});
    }
  }
  return out;
}

std::vector<SurfacePoint> level_surface(const SurfaceGridSpec &spec) {
  spec.validate();
  const int r = spec.grid_resolution;
  std::vector<std::vector<SurfacePoint>> slabs(static_cast<std::size_t>(r));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i1 = 0; i1 < r; ++i1) slabs[i1] = level_surface_slab(spec, i1);
  std::vector<SurfacePoint> out;
  for (auto &slab : slabs) out.insert(out.end(), slab.begin(), slab.end());
  return out;
}

}  // namespace mgd
