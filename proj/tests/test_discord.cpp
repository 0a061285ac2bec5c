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
#include <random>

#include <gtest/gtest.h>

#include "mgd/errors.hpp"
#include "oracle.hpp"

using namespace mgd;

namespace {

OptimizerConfig quick_config(std::uint64_t seed = 0) {
  OptimizerConfig cfg;
  cfg.restarts = 16;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST(ClosedForm, ReferenceTriple) {
  const Coefficients c{0.8, 0.4, 0.5};
  EXPECT_NEAR(closed_form(2, c), 0.1025, 1e-15);
  EXPECT_NEAR(closed_form(3, c), 0.05125, 1e-15);
  EXPECT_NEAR(closed_form(4, c), 0.025625, 1e-15);
  EXPECT_EQ(closed_form(2, {0, 0, 0}), 0.0);
  EXPECT_NEAR(closed_form(PauliFamilyState::make(4, c)), 0.025625, 1e-15);
}

TEST(ClosedForm, HalvingLawIsExact) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> coord(-1, 1);
  for (int i = 0; i < 500; ++i) {
    const Coefficients c{coord(rng), coord(rng), coord(rng)};
    for (int n = 2; n < 10; ++n) EXPECT_EQ(closed_form(n + 1, c), closed_form(n, c) / 2);
  }
}

TEST(ClosedForm, ScalingIsQuadratic) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int i = 0; i < 500; ++i) {
    const Coefficients c = random_physical_coefficients(3, rng);
    const double l = unit(rng);
    EXPECT_NEAR(closed_form(3, {l * c[0], l * c[1], l * c[2]}), l * l * closed_form(3, c), 1e-15);
  }
}

TEST(ClosedForm, PermutationAndSignInvariance) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coord(-1, 1);
  for (int i = 0; i < 200; ++i) {
    Coefficients c{coord(rng), coord(rng), coord(rng)};
    const double d = closed_form(2, c);
    std::sort(c.begin(), c.end());
    do {
      for (int mask = 0; mask < 8; ++mask) {
        Coefficients s = c;
        for (int j = 0; j < 3; ++j)
          if (mask >> j & 1) s[j] = -s[j];
        EXPECT_EQ(closed_form(2, s), d);
      }
    } while (std::next_permutation(c.begin(), c.end()));
  }
}

TEST(ClosedForm, ZeroExactlyOnAxes) {
  EXPECT_EQ(closed_form(3, {0.7, 0, 0}), 0.0);
  EXPECT_EQ(closed_form(3, {0, -1, 0}), 0.0);
  EXPECT_EQ(closed_form(3, {0, 0, 0.2}), 0.0);
  EXPECT_GT(closed_form(3, {1e-8, 0, 0.2}), 0.0);
  EXPECT_GT(closed_form(3, {0.3, 0.3, 0}), 0.0);
}

TEST(ClosedForm, IsTheCanonicalTreeResidualForTheDominantAxis) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + i % 4;
    const auto s = PauliFamilyState::make(n, random_physical_coefficients(n, rng));
    const Coefficients &c = s.c();
    const int axis = 1 + static_cast<int>(std::max_element(c.begin(), c.end(), [](double a, double b) {
                                            return std::abs(a) < std::abs(b);
                                          }) - c.begin());
    EXPECT_NEAR(residual_analytic(s, MeasurementTree::canonical(axis, n - 1)), closed_form(s), 1e-12);
  }
}

TEST(OptimizerConfig, Validation) {
  OptimizerConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.restarts = 0;
  EXPECT_THROW(cfg.validate(), ParameterError);
  cfg = {};
  cfg.convergence_tolerance = 0;
  EXPECT_THROW(cfg.validate(), ParameterError);
  cfg = {};
  cfg.initial_step = -1;
  EXPECT_THROW(cfg.validate(), ParameterError);
}

TEST(MinimizeNumeric, MaximallyMixedIsZero) {
  for (int n = 2; n <= 4; ++n) {
    const auto r = minimize_numeric(DensityMatrix::maximally_mixed(n), quick_config());
    EXPECT_NEAR(r.value, 0.0, 1e-9);
  }
}

TEST(MinimizeNumeric, TwoQubitReference) {
  const auto s = PauliFamilyState::formal(2, {0.8, 0.4, 0.5});
  const auto r = minimize_numeric(to_density_matrix(s), quick_config());
  EXPECT_NEAR(r.value, 0.1025, 1e-6);
  EXPECT_TRUE(r.converged);
}

TEST(MinimizeNumeric, ThreeQubitReferenceFindsSigmaOneTree) {
  const auto s = PauliFamilyState::formal(3, {0.8, 0.4, 0.5});
  const auto r = minimize_numeric(to_density_matrix(s), quick_config());
  EXPECT_NEAR(r.value, 0.05125, 1e-6);
  const Vec3 d = direction_coeffs(r.arg_tree.node(1, 0));
  EXPECT_NEAR(std::abs(d[0]), 1.0, 1e-3);
  EXPECT_NEAR(d[1], 0.0, 1e-3);
  EXPECT_NEAR(d[2], 0.0, 1e-3);
}

TEST(MinimizeNumeric, ValueIsResidualOfArgTree) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 4; ++n) {
    const auto s = PauliFamilyState::make(n, random_physical_coefficients(n, rng));
    const auto r = minimize_numeric(to_density_matrix(s), quick_config());
    EXPECT_NEAR(r.value, residual_analytic(s, r.arg_tree), 1e-10);
    const Matrix rho = oracle::family(n, s.c());
    std::vector<oracle::Node> nodes;
    for (const auto &nd : r.arg_tree.nodes()) nodes.push_back({nd.t(), nd.y()});
    EXPECT_NEAR(r.value, oracle::frobenius_sq(rho - oracle::post_measurement(rho, nodes, n - 1)),
                1e-10);
    EXPECT_GE(r.value, 0.0);
  }
}

TEST(MinimizeNumeric, BoundedByEqualityCaseTrees) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 12; ++i) {
    const int n = 2 + i % 3;
    const auto s = PauliFamilyState::make(n, random_physical_coefficients(n, rng));
    const auto r = minimize_numeric(to_density_matrix(s), quick_config(i));
    for (int axis = 1; axis <= 3; ++axis) {
      EXPECT_LE(r.value, residual_analytic(s, MeasurementTree::canonical(axis, n - 1)) + 1e-12);
    }
  }
}

TEST(MinimizeNumeric, AgreesWithClosedFormOnRandomStates) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 15; ++i) {
    const int n = 2 + i % 3;
    const auto s = PauliFamilyState::make(n, random_physical_coefficients(n, rng));
    EXPECT_NEAR(minimize_numeric(to_density_matrix(s), quick_config(i)).value, closed_form(s), 1e-6);
  }
}

TEST(MinimizeNumeric, RandomStartsAloneStillReachTheMinimum) {
  std::mt19937_64 rng(8);
  OptimizerConfig cfg = quick_config(99);
  cfg.seed_equality_cases = false;
  for (int n = 2; n <= 3; ++n) {
    const auto s = PauliFamilyState::make(n, random_physical_coefficients(n, rng));
    EXPECT_NEAR(minimize_numeric(to_density_matrix(s), cfg).value, closed_form(s), 1e-6);
  }
}

TEST(MinimizeNumeric, DiagnosticsAreConsistent) {
  const auto s = PauliFamilyState::make(3, {0.3, 0.6, 0.2});
  const auto r = minimize_numeric(to_density_matrix(s), quick_config(3));
  EXPECT_EQ(r.restarts_used, 16);
  ASSERT_EQ(r.best_residual_history.size(), 16u);
  ASSERT_EQ(r.restart_minima.size(), 16u);
  for (std::size_t i = 1; i < r.best_residual_history.size(); ++i) {
    EXPECT_LE(r.best_residual_history[i], r.best_residual_history[i - 1]);
    EXPECT_LE(r.best_residual_history[i], r.restart_minima[i]);
  }
}

TEST(MinimizeNumeric, PerRestartHistoryIsNonIncreasing) {
  const auto s = PauliFamilyState::make(4, {0.3, 0.6, 0.2});
  const auto rho = to_density_matrix(s);
  for (int i = 0; i < 5; ++i) {
    const auto out = run_restart(rho, quick_config(1), i);
    for (std::size_t k = 1; k < out.history.size(); ++k) EXPECT_LE(out.history[k], out.history[k - 1]);
  }
}

TEST(MinimizeNumeric, DeterministicForFixedSeed) {
  const auto s = PauliFamilyState::make(4, {0.5, 0.2, 0.4});
  const auto a = minimize_numeric(to_density_matrix(s), quick_config(42));
  const auto b = minimize_numeric(to_density_matrix(s), quick_config(42));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.arg_tree.serialize(), b.arg_tree.serialize());
  EXPECT_EQ(a.restart_minima, b.restart_minima);
}

TEST(MinimizeNumeric, RejectsBadInput) {
  OptimizerConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(minimize_numeric(DensityMatrix::maximally_mixed(2), cfg), ParameterError);
  EXPECT_THROW(minimize_numeric(DensityMatrix::maximally_mixed(1), quick_config()), ParameterError);
}
