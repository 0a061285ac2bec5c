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

// Conditional von Neumann measurement chains A1 -> A2 -> ... -> A_{N-1}.
//
// A local measurement is fixed by a unit quaternion (t, y): V = t I + i y·sigma
// and the projectors V|k><k|V†. The measurement on qubit k may depend on all
// earlier outcomes, so a chain over N qubits is a complete binary tree of depth
// N - 1 with one node per outcome prefix. Qubit N is never measured.
//
// Outcome strings j1...j_{N-1} are packed into a branch index with j1 as the
// most significant bit.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mgd/family.hpp"
#include "mgd/qcore.hpp"

namespace mgd {

using Vec3 = std::array<double, 3>;

inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kEmptyBranchProbability = 1e-14;

class MeasurementNode {
 public:
  /// Throws ValidationError unless t^2 + |y|^2 = 1 within 1e-12.
  MeasurementNode(double t, const Vec3 &y);

  /// Scales (t, y) onto the unit sphere. Throws ParameterError for a zero vector.
  static MeasurementNode normalized(double t, const Vec3 &y);

  /// Uniformly distributed on the unit 3-sphere.
  static MeasurementNode random(std::mt19937_64 &rng);

  double t() const { return t_; }
  const Vec3 &y() const { return y_; }

  /// V|outcome>, the eigenvector of projector(node, outcome).
  std::array<Complex, 2> basis_vector(int outcome) const;

 private:
  double t_;
  Vec3 y_;
};

/// V Pi_outcome V†, a rank-one 2x2 projector.
Matrix projector(const MeasurementNode &node, int outcome);

/// (d1, d2, d3): the Bloch vector of projector(node, 0).
///   d1 = 2(-t y2 + y1 y3), d2 = 2(t y1 + y2 y3), d3 = t^2 - y1^2 - y2^2 + y3^2
Vec3 direction_coeffs(const MeasurementNode &node);

/// Representative nodes of the three equality cases: the projector aligned
/// with the given Pauli axis (1, 2 or 3).
MeasurementNode canonical_node(int axis);

class MeasurementTree {
 public:
  /// nodes in level order; level k (1-based) holds 2^{k-1} nodes.
  MeasurementTree(int depth, std::vector<MeasurementNode> nodes);

  static MeasurementTree uniform(int depth, const MeasurementNode &node);
  static MeasurementTree canonical(int axis, int depth);
  static MeasurementTree random(int depth, std::mt19937_64 &rng);

  int depth() const { return depth_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t branch_count() const { return std::size_t{1} << depth_; }
  const std::vector<MeasurementNode> &nodes() const { return nodes_; }

  /// Node measuring qubit `level` (1-based) after the outcomes `prefix`
  /// (level - 1 bits) on the earlier qubits.
  const MeasurementNode &node(int level, std::size_t prefix) const;

  /// The node applied at `level` on the way to a full outcome string.
  const MeasurementNode &node_on_branch(int level, std::size_t branch) const;

  /// One "t,y1,y2,y3" row per node, level order, round-trip precision.
  std::string serialize() const;

  /// Inverse of serialize. Blank lines and '#' comments are skipped.
  static MeasurementTree parse(std::string_view text);

 private:
  int depth_;
  std::vector<MeasurementNode> nodes_;
};

inline std::size_t tree_node_count(int depth) { return (std::size_t{1} << depth) - 1; }

struct PostMeasurementState {
  DensityMatrix chi;
  std::vector<double> branch_probabilities;
};

/// Unnormalized branch (P_b ⊗ I) rho (P_b ⊗ I) for one outcome string; the
/// zero matrix if its trace is below kEmptyBranchProbability.
Matrix chain_branch(const Matrix &rho, const MeasurementTree &tree, std::size_t branch);

/// Measures qubits 1..N-1 along the tree and sums the branches into chi.
/// Branches are evaluated in parallel and summed in branch order.
PostMeasurementState apply_chain(const DensityMatrix &rho, const MeasurementTree &tree);

/// ||rho - chi||^2 via the 2x2 conditional blocks of rho:
///   Tr(rho^2) - sum_b ||<v_b| rho |v_b>||^2
/// Valid for any Hermitian rho; this is the optimizer's objective.
double measured_residual(const Matrix &rho, const MeasurementTree &tree);

/// ||rho - chi||^2 for a family state from the direction coefficients alone:
///   (1/2^N) [ sum_j c_j^2 - 2^{2-N} sum_{last-level nodes} sum_j c_j^2 prod_path d_j^2 ]
double residual_analytic(const PauliFamilyState &s, const MeasurementTree &tree);

}  // namespace mgd
