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

// Phase-flip decoherence on qubit 1 of a family state.
//
// Kraus operators diag(1, g) ⊗ I and diag(0, sqrt(1 - g^2)) ⊗ I with
// g = exp(-tau t / 2) map (c1, c2, c3) to (g c1, g c2, c3), so the state stays
// in the family and its discord follows from the closed form.

#include <optional>
#include <span>
#include <vector>

#include "mgd/family.hpp"
#include "mgd/qcore.hpp"

namespace mgd {

/// exp(-tau t / 2)
double decay_factor(double tau, double t);

/// Throws ParameterError for gamma outside [0, 1].
KrausSet phase_flip_kraus(int n_qubits, double gamma);

Coefficients dephased_coefficients(const Coefficients &c, double gamma);

/// closed_form at (gamma c1, gamma c2, c3).
double evolved_discord(const PauliFamilyState &s, double gamma);

/// Time of the slope discontinuity: the positive root of
/// g(t) max(|c1|, |c2|) = |c3|, i.e. (2/tau) ln(max(|c1|, |c2|) / |c3|).
/// Returns 0 when max(|c1|, |c2|) = |c3| != 0 and nothing when the discord
/// decays smoothly (|c3| = 0 or |c3| dominates). Independent of N.
std::optional<double> sudden_change_time(const Coefficients &c, double tau);
std::optional<double> sudden_change_time(const PauliFamilyState &s, double tau);

struct PhaseFlipParams {
  double tau = 1.0;
  double t_max = 1.0;
  int steps = 2;

  void validate() const;
};

struct TrajectoryPoint {
  double t = 0.0;
  double gamma = 1.0;
  Coefficients c_effective{};
  double discord = 0.0;
};

/// `steps` uniform samples on [0, t_max], plus the sudden-change time as an
/// extra sample when it falls strictly inside and insert_sudden_change is set.
std::vector<TrajectoryPoint> trajectory(const PauliFamilyState &s, const PhaseFlipParams &p,
                                        bool insert_sudden_change = true);

/// Finds slope discontinuities in sampled data. A sample is flagged when its
/// change of slope exceeds `ratio` times the slope changes two samples away on
/// both sides; the location is the intersection of the secant lines through
/// the two clean segments on either side.
std::vector<double> detect_slope_discontinuities(std::span<const TrajectoryPoint> points,
                                                 double ratio = 10.0);

}  // namespace mgd
