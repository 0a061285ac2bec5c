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

#include "mgd/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "mgd/discord.hpp"
#include "mgd/errors.hpp"

namespace mgd {

double decay_factor(double tau, double t) { return std::exp(-0.5 * tau * t); }

KrausSet phase_flip_kraus(int n_qubits, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ParameterError("phase-flip gamma must lie in [0, 1], got " + std::to_string(gamma));
  }
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw ParameterError("qubit count out of range");
  Matrix k0 = Matrix::Zero(2, 2);
  Matrix k1 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = gamma;
  k1(1, 1) = std::sqrt(1.0 - gamma * gamma);
  const Eigen::Index rest = Eigen::Index{1} << (n_qubits - 1);
  const Matrix id = Matrix::Identity(rest, rest);
  return KrausSet({kron(k0, id), kron(k1, id)});
}

Coefficients dephased_coefficients(const Coefficients &c, double gamma) {
  return {gamma * c[0], gamma * c[1], c[2]};
}

double evolved_discord(const PauliFamilyState &s, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ParameterError("gamma must lie in [0, 1]");
  return closed_form(s.qubits(), dephased_coefficients(s.c(), gamma));
}

std::optional<double> sudden_change_time(const Coefficients &c, double tau) {
  if (!(tau > 0.0)) throw ParameterError("decay rate tau must be > 0");
  const double transverse = std::max(std::abs(c[0]), std::abs(c[1]));
  const double longitudinal = std::abs(c[2]);
  if (longitudinal == 0.0) return std::nullopt;
  if (std::abs(transverse - longitudinal) <= 1e-12) return 0.0;
  if (transverse < longitudinal) return std::nullopt;
  return (2.0 / tau) * std::log(transverse / longitudinal);
}

std::optional<double> sudden_change_time(const PauliFamilyState &s, double tau) {
  return sudden_change_time(s.c(), tau);
}

void PhaseFlipParams::validate() const {
  if (!(tau > 0.0)) throw ParameterError("tau must be > 0");
  if (!(t_max > 0.0)) throw ParameterError("t_max must be > 0");
  if (steps < 2) throw ParameterError("steps must be >= 2");
}

std::vector<TrajectoryPoint> trajectory(const PauliFamilyState &s, const PhaseFlipParams &p,
                                        bool insert_sudden_change) {
  p.validate();
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(p.steps) + 1);
  for (int i = 0; i < p.steps; ++i) times.push_back(p.t_max * i / (p.steps - 1));
  if (insert_sudden_change) {
    const auto t0 = sudden_change_time(s, p.tau);
    if (t0 && *t0 > 0.0 && *t0 < p.t_max &&
        std::find(times.begin(), times.end(), *t0) == times.end()) {
      times.insert(std::upper_bound(times.begin(), times.end(), *t0), *t0);
    }
  }
  std::vector<TrajectoryPoint> out;
  out.reserve(times.size());
  for (double t : times) {
    TrajectoryPoint pt;
    pt.t = t;
    pt.gamma = decay_factor(p.tau, t);
    pt.c_effective = dephased_coefficients(s.c(), pt.gamma);
    pt.discord = closed_form(s.qubits(), pt.c_effective);
    out.push_back(pt);
  }
  return out;
}

std::vector<double> detect_slope_discontinuities(std::span<const TrajectoryPoint> points,
                                                 double ratio) {
  std::vector<double> kinks;
  const std::size_t n = points.size();
  if (n < 7) return kinks;
  std::vector<double> slope(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    slope[i] = (points[i + 1].discord - points[i].discord) / (points[i + 1].t - points[i].t);
  }
  // change[i] is the slope change at sample i + 1.
  std::vector<double> change(n - 2);
  for (std::size_t i = 0; i + 2 < n; ++i) change[i] = std::abs(slope[i + 1] - slope[i]);

  const double floor = 1e-13;
  for (std::size_t i = 2; i + 2 < change.size(); ++i) {
    const double here = change[i];
    if (here <= floor) continue;
    if (here < change[i - 1] || here < change[i + 1]) continue;
    if (here == change[i - 1]) continue;  // plateau: report its first sample only
    const double background = std::max({change[i - 2], change[i + 2], floor});
    if (here <= ratio * background) continue;
    // Sample j = i + 1 is the flagged one; segments (j-2, j-1) and (j+1, j+2)
    // are clean whichever side of j the kink lies on.
    const std::size_t j = i + 1;
    const double sl = slope[j - 2];
    const double sr = slope[j + 1];
    const double tl = points[j - 1].t, dl = points[j - 1].discord;
    const double tr = points[j + 1].t, dr = points[j + 1].discord;
    double where = points[j].t;
    if (std::abs(sl - sr) > 0.0) {
      const double cross = (dr - dl + sl * tl - sr * tr) / (sl - sr);
      if (cross >= points[j - 1].t && cross <= points[j + 1].t) where = cross;
    }
    kinks.push_back(where);
  }
  return kinks;
}

}  // namespace mgd
