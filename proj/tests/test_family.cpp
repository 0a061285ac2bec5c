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

#include "mgd/family.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "mgd/discord.hpp"
#include "mgd/errors.hpp"
#include "oracle.hpp"

using namespace mgd;

TEST(Family, FullyMixed) {
  const DensityMatrix rho = to_density_matrix(PauliFamilyState::make(2, {0, 0, 0}));
  EXPECT_EQ(rho.matrix(), Matrix(Matrix::Identity(4, 4) / 4.0));
}

TEST(Family, SingletProjector) {
  // |psi-> = (|01> - |10>)/sqrt 2 built directly.
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  const Matrix singlet = psi * psi.adjoint();
  const DensityMatrix rho = to_density_matrix(PauliFamilyState::make(2, {-1, -1, -1}));
  EXPECT_LT((rho.matrix() - singlet).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Family, MatchesIndexFormulaOracle) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    const Coefficients c = random_physical_coefficients(n, rng);
    EXPECT_LT((family_matrix(n, c) - oracle::family(n, c)).cwiseAbs().maxCoeff(), 1e-16);
  }
}

TEST(Family, PurityExamples) {
  EXPECT_DOUBLE_EQ(purity(PauliFamilyState::make(2, {0, 0, 0})), 0.25);
  EXPECT_NEAR(purity(PauliFamilyState::formal(3, {0.8, 0.4, 0.5})), 0.25625, 1e-15);
  EXPECT_NEAR(purity(PauliFamilyState::make(4, {0.8, 0.4, 0.5})), 0.128125, 1e-15);
  const Matrix rho = oracle::family(4, {0.8, 0.4, 0.5});
  EXPECT_NEAR(oracle::frobenius_sq(rho), 0.128125, 1e-15);
}

TEST(Family, PurityEqualsHsNormForPhysicalStates) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const int n = 2 + i % 3;
    const auto s = PauliFamilyState::make(n, random_physical_coefficients(n, rng));
    const Matrix rho = to_density_matrix(s).matrix();
    EXPECT_NEAR(purity(s), hs_inner(rho, rho).real(), 1e-12);
  }
}

TEST(Family, IsPhysicalExamples) {
  auto p = is_physical(2, {0, 0, 0});
  EXPECT_TRUE(p.physical);
  EXPECT_NEAR(p.min_eigenvalue, 0.25, 1e-15);
  p = is_physical(2, {1, 1, 1});
  EXPECT_FALSE(p.physical);
  EXPECT_NEAR(p.min_eigenvalue, -0.5, 1e-12);
  p = is_physical(3, {0, 0, 1});
  EXPECT_TRUE(p.physical);
  EXPECT_NEAR(p.min_eigenvalue, 0.0, 1e-12);
}

TEST(Family, ReferenceTripleIsOnlyPhysicalAtFourQubits) {
  // (0.8, 0.4, 0.5) fails positivity for N = 2 and for N = 3 (where the three
  // Pauli strings anticommute and the spectrum is (1 ± |c|)/8).
  EXPECT_NEAR(is_physical(2, {0.8, 0.4, 0.5}).min_eigenvalue, -0.175, 1e-12);
  EXPECT_NEAR(is_physical(3, {0.8, 0.4, 0.5}).min_eigenvalue, -0.0030868845744949913, 1e-12);
  EXPECT_NEAR(is_physical(4, {0.8, 0.4, 0.5}).min_eigenvalue, 0.00625, 1e-12);
  EXPECT_TRUE(is_physical(4, {0.8, 0.4, 0.5}).physical);
}

TEST(Family, UnphysicalMakeNamesTheEigenvalue) {
  try {
    PauliFamilyState::make(2, {1, 1, 1});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("-0.5"), std::string::npos) << e.what();
  }
}

TEST(Family, OutOfRangeCoefficientsRejectedEvenWhenFormal) {
  EXPECT_THROW(PauliFamilyState::make(2, {1.2, 0, 0}), ValidationError);
  EXPECT_THROW(PauliFamilyState::formal(2, {0, -1.01, 0}), ValidationError);
  EXPECT_THROW(PauliFamilyState::make(1, {0, 0, 0}), ParameterError);
  EXPECT_FALSE(is_physical(2, {1.2, 0, 0}).physical);
}

TEST(Family, FormalStateCarriesWaivedPositivity) {
  const auto s = PauliFamilyState::formal(2, {0.8, 0.4, 0.5});
  EXPECT_TRUE(s.is_formal());
  EXPECT_TRUE(to_density_matrix(s).positivity_waived());
}

TEST(Family, ExtractCoefficientsInvertsConstruction) {
  std::mt19937_64 rng(21);
  for (int n = 2; n <= 5; ++n) {
    const Coefficients c = random_physical_coefficients(n, rng);
    const Coefficients back = extract_coefficients(family_matrix(n, c));
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(back[j], c[j], 1e-14);
  }
}

TEST(Family, PermutationLeavesPurityAndDiscordUnchanged) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + i % 3;
    Coefficients c = random_physical_coefficients(n, rng);
    const double p0 = purity(PauliFamilyState::make(n, c));
    const double d0 = closed_form(n, c);
    std::sort(c.begin(), c.end());
    do {
      EXPECT_NEAR(purity(PauliFamilyState::formal(n, c)), p0, 1e-15);
      EXPECT_EQ(closed_form(n, c), d0);
    } while (std::next_permutation(c.begin(), c.end()));
  }
}

TEST(Family, EvenSignFlipsPreservePhysicalityForEvenN) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  const std::array<std::array<double, 3>, 3> flips{{{-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}}};
  for (int n : {2, 4}) {
    for (int i = 0; i < 300; ++i) {
      const Coefficients c{coord(rng), coord(rng), coord(rng)};
      const bool base = is_physical(n, c).physical;
      for (const auto &f : flips) {
        EXPECT_EQ(is_physical(n, {f[0] * c[0], f[1] * c[1], f[2] * c[2]}).physical, base);
      }
    }
  }
}

TEST(Family, PhysicalRegionIsStarShaped) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n : {2, 3, 4}) {
    for (int i = 0; i < 100; ++i) {
      const Coefficients c = random_physical_coefficients(n, rng);
      const double lambda = unit(rng);
      EXPECT_TRUE(is_physical(n, {lambda * c[0], lambda * c[1], lambda * c[2]}).physical);
    }
  }
}

TEST(Family, ParseCoefficients) {
  const Coefficients c = parse_coefficients("0.8,0.4,-0.5");
  EXPECT_EQ(c, (Coefficients{0.8, 0.4, -0.5}));
  EXPECT_EQ(parse_coefficients(" 1e-1, +0.2 ,0"), (Coefficients{0.1, 0.2, 0.0}));
  EXPECT_THROW(parse_coefficients("0.8,0.4"), ParameterError);
  EXPECT_THROW(parse_coefficients("0.8,0.4,0.5,0.1"), ParameterError);
  EXPECT_THROW(parse_coefficients("0.8;0.4;0.5"), ParameterError);
  EXPECT_THROW(parse_coefficients("a,b,c"), ParameterError);
  EXPECT_THROW(parse_coefficients("0.8,,0.5"), ParameterError);
}

TEST(Family, FormatRoundTrips) {
  const Coefficients c{3.0 / 7.0, -3.0 / 14.0, 0.8};
  EXPECT_EQ(parse_coefficients(format_coefficients(c)), c);
}
