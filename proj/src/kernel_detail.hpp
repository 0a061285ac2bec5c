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

// Pieces shared by the OpenMP kernels and their serial references. Both
// paths call the same per-item functions and reduce in the same order, so
// their results are bit-identical.

#include <vector>

#include "mgd/measurement.hpp"

namespace mgd::detail {

PostMeasurementState assemble_post_measurement(const DensityMatrix &rho,
                                               const std::vector<Matrix> &branches);

}  // namespace mgd::detail
