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

// Level surfaces of the closed-form discord over a coefficient grid.

#include <array>
#include <vector>

#include "mgd/family.hpp"

namespace mgd {

enum class SurfaceDomain {
  /// Every grid point of [-1, 1]^3.
  kCube,
  /// Only points whose family operator is positive semidefinite.
  kPhysical,
};

struct SurfaceGridSpec {
  int n_qubits = 3;
  double target_discord = 0.1;
  double tolerance_band = 0.005;
  int grid_resolution = 81;
  SurfaceDomain domain = SurfaceDomain::kCube;

  void validate() const;
};

struct SurfacePoint {
  std::array<int, 3> index{};
  Coefficients c{};
  double discord = 0.0;
};

/// Grid coordinate (2i - (r - 1)) / (r - 1); exactly antisymmetric in i.
double grid_coordinate(int i, int resolution);

/// Points with |closed_form - target| <= band, in lexicographic (c1, c2, c3)
/// grid order. Parallel over c1 slabs.
std::vector<SurfacePoint> level_surface(const SurfaceGridSpec &spec);

/// Matching points with c1 = grid_coordinate(i1).
std::vector<SurfacePoint> level_surface_slab(const SurfaceGridSpec &spec, int i1);

}  // namespace mgd
