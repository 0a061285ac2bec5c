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

#include "mgd/measurement.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kernel_detail.hpp"
#include "mgd/errors.hpp"
#include "mgd/text_format.hpp"

namespace mgd {

MeasurementNode::MeasurementNode(double t, const Vec3 &y) : t_(t), y_(y) {
  const double norm_sq = t * t + y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
  if (!std::isfinite(norm_sq) || std::abs(norm_sq - 1.0) > kUnitNormTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "measurement node (t, y) must be a unit 4-vector, |.|^2 = " << norm_sq;
    throw ValidationError(msg.str());
  }
}

MeasurementNode MeasurementNode::normalized(double t, const Vec3 &y) {
  const double norm = std::sqrt(t * t + y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ParameterError("cannot normalize a zero or non-finite measurement 4-vector");
  }
  return MeasurementNode(t / norm, {y[0] / norm, y[1] / norm, y[2] / norm});
}

MeasurementNode MeasurementNode::random(std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const double t = gauss(rng);
    const Vec3 y{gauss(rng), gauss(rng), gauss(rng)};
    if (t * t + y[0] * y[0] + y[1] * y[1] + y[2] * y[2] > 1e-12) return normalized(t, y);
  }
}

std::array<Complex, 2> MeasurementNode::basis_vector(int outcome) const {
  // V = [[t + i y3, y2 + i y1], [-y2 + i y1, t - i y3]]
  if (outcome == 0) return {Complex(t_, y_[2]), Complex(-y_[1], y_[0])};
  if (outcome == 1) return {Complex(y_[1], y_[0]), Complex(t_, -y_[2])};
  throw ParameterError("measurement outcome must be 0 or 1");
}

Matrix projector(const MeasurementNode &node, int outcome) {
  const auto v = node.basis_vector(outcome);
  Matrix p(2, 2);
  p << v[0] * std::conj(v[0]), v[0] * std::conj(v[1]), v[1] * std::conj(v[0]),
      v[1] * std::conj(v[1]);
  return p;
}

Vec3 direction_coeffs(const MeasurementNode &node) {
  const double t = node.t();
  const Vec3 &y = node.y();
  return {2.0 * (-t * y[1] + y[0] * y[2]), 2.0 * (t * y[0] + y[1] * y[2]),
          t * t - y[0] * y[0] - y[1] * y[1] + y[2] * y[2]};
}

MeasurementNode canonical_node(int axis) {
  constexpr double h = std::numbers::sqrt2 / 2.0;
  switch (axis) {
    case 1:
      return MeasurementNode(h, {0.0, h, 0.0});
    case 2:
      return MeasurementNode(h, {h, 0.0, 0.0});
    case 3:
      return MeasurementNode(1.0, {0.0, 0.0, 0.0});
    default:
      throw ParameterError("equality-case axis must be 1, 2 or 3");
  }
}

MeasurementTree::MeasurementTree(int depth, std::vector<MeasurementNode> nodes)
    : depth_(depth), nodes_(std::move(nodes)) {
  if (depth < 1 || depth >= kMaxQubits) {
    throw ParameterError("tree depth must be in [1, " + std::to_string(kMaxQubits - 1) + "]");
  }
  if (nodes_.size() != tree_node_count(depth)) {
    throw ParameterError("a depth-" + std::to_string(depth) + " tree needs " +
                         std::to_string(tree_node_count(depth)) + " nodes, got " +
                         std::to_string(nodes_.size()));
  }
}

MeasurementTree MeasurementTree::uniform(int depth, const MeasurementNode &node) {
  if (depth < 1 || depth >= kMaxQubits) throw ParameterError("tree depth out of range");
  return MeasurementTree(depth, std::vector<MeasurementNode>(tree_node_count(depth), node));
}

MeasurementTree MeasurementTree::canonical(int axis, int depth) {
  return uniform(depth, canonical_node(axis));
}

MeasurementTree MeasurementTree::random(int depth, std::mt19937_64 &rng) {
  if (depth < 1 || depth >= kMaxQubits) throw ParameterError("tree depth out of range");
  std::vector<MeasurementNode> nodes;
  nodes.reserve(tree_node_count(depth));
  for (std::size_t i = 0; i < tree_node_count(depth); ++i) nodes.push_back(MeasurementNode::random(rng));
  return MeasurementTree(depth, std::move(nodes));
}

const MeasurementNode &MeasurementTree::node(int level, std::size_t prefix) const {
  if (level < 1 || level > depth_) throw ParameterError("tree level out of range");
  const std::size_t width = std::size_t{1} << (level - 1);
  if (prefix >= width) throw ParameterError("outcome prefix out of range for level");
  return nodes_[width - 1 + prefix];
}

const MeasurementNode &MeasurementTree::node_on_branch(int level, std::size_t branch) const {
  return node(level, branch >> (depth_ - level + 1));
}

std::string MeasurementTree::serialize() const {
  std::string out;
  for (const MeasurementNode &n : nodes_) {
    out += format_real(n.t());
    for (double v : n.y()) out += "," + format_real(v);
    out += '\n';
  }
  return out;
}

MeasurementTree MeasurementTree::parse(std::string_view text) {
  std::vector<MeasurementNode> nodes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::vector<double> row = parse_reals(line, 4);
    nodes.emplace_back(row[0], Vec3{row[1], row[2], row[3]});
  }
  int depth = 0;
  while (depth < kMaxQubits && tree_node_count(depth) < nodes.size()) ++depth;
  if (nodes.empty() || tree_node_count(depth) != nodes.size()) {
    throw ParameterError("tree file has " + std::to_string(nodes.size()) +
                         " rows, which is not 2^d - 1 for any depth");
  }
  return MeasurementTree(depth, std::move(nodes));
}

Matrix chain_branch(const Matrix &rho, const MeasurementTree &tree, std::size_t branch) {
  const int depth = tree.depth();
  // v = u_1 ⊗ ... ⊗ u_depth over the measured qubits.
  Eigen::VectorXcd v(1);
  v(0) = 1.0;
  for (int level = 1; level <= depth; ++level) {
    const int bit = static_cast<int>((branch >> (depth - level)) & 1U);
    const auto u = tree.node_on_branch(level, branch).basis_vector(bit);
    Eigen::VectorXcd next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next(2 * i) = v(i) * u[0];
      next(2 * i + 1) = v(i) * u[1];
    }
    v = std::move(next);
  }
  const Matrix measured_proj = v * v.adjoint();
  const Matrix p = kron(measured_proj, Matrix::Identity(2, 2));
  Matrix out = p * rho * p;
  if (out.trace().real() < kEmptyBranchProbability) out.setZero();
  return out;
}

namespace detail {

PostMeasurementState assemble_post_measurement(const DensityMatrix &rho,
                                               const std::vector<Matrix> &branches) {
  Matrix chi = Matrix::Zero(rho.dim(), rho.dim());
  std::vector<double> probabilities;
  probabilities.reserve(branches.size());
  for (const Matrix &b : branches) {
    chi += b;
    probabilities.push_back(b.trace().real());
  }
  return {DensityMatrix(std::move(chi), rho.positivity()), std::move(probabilities)};
}

}  // namespace detail

namespace {

void check_chain_shape(Eigen::Index dim, const MeasurementTree &tree) {
  const int n = qubit_count(dim);
  if (n < 2) throw ParameterError("measurement chains need N >= 2");
  if (tree.depth() != n - 1) {
    throw ParameterError("tree depth " + std::to_string(tree.depth()) + " does not match N - 1 = " +
                         std::to_string(n - 1));
  }
}

}  // namespace

PostMeasurementState apply_chain(const DensityMatrix &rho, const MeasurementTree &tree) {
  check_chain_shape(rho.dim(), tree);
  const auto count = static_cast<std::int64_t>(tree.branch_count());
  std::vector<Matrix> branches(tree.branch_count());
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < count; ++b) {
    branches[b] = chain_branch(rho.matrix(), tree, static_cast<std::size_t>(b));
  }
  return detail::assemble_post_measurement(rho, branches);
}

namespace {

// Sums ||M_b||^2 over the branches below one node. `r` is the conditional
// operator on qubits level..N (dimension 2m), row-major; scratch[level] holds
// the contraction onto the remaining qubits.
double captured_weight(const Complex *r, Eigen::Index dim, const MeasurementTree &tree, int level,
                       std::size_t prefix, std::vector<std::vector<Complex>> &scratch) {
  const Eigen::Index m = dim / 2;
  const MeasurementNode &node = tree.node(level, prefix);
  std::vector<Complex> &out = scratch[level];
  double total = 0.0;
  for (int bit = 0; bit < 2; ++bit) {
    const auto u = node.basis_vector(bit);
    const Complex w00 = std::conj(u[0]) * u[0], w01 = std::conj(u[0]) * u[1];
    const Complex w10 = std::conj(u[1]) * u[0], w11 = std::conj(u[1]) * u[1];
    for (Eigen::Index i = 0; i < m; ++i) {
      const Complex *top = r + i * dim;
      const Complex *bottom = r + (m + i) * dim;
      Complex *dst = out.data() + i * m;
      for (Eigen::Index j = 0; j < m; ++j) {
        dst[j] = w00 * top[j] + w01 * top[m + j] + w10 * bottom[j] + w11 * bottom[m + j];
      }
    }
    if (level == tree.depth()) {
      for (Eigen::Index k = 0; k < m * m; ++k) total += std::norm(out[k]);
    } else {
      total += captured_weight(out.data(), m, tree, level + 1, 2 * prefix + bit, scratch);
    }
  }
  return total;
}

}  // namespace

double measured_residual(const Matrix &rho, const MeasurementTree &tree) {
  check_chain_shape(rho.rows(), tree);
  std::vector<std::vector<Complex>> scratch(static_cast<std::size_t>(tree.depth()) + 1);
  for (int level = 1; level <= tree.depth(); ++level) {
    const Eigen::Index m = rho.rows() >> level;
    scratch[level].resize(static_cast<std::size_t>(m * m));
  }
  const double captured = captured_weight(rho.data(), rho.rows(), tree, 1, 0, scratch);
  return std::max(0.0, rho.squaredNorm() - captured);
}

double residual_analytic(const PauliFamilyState &s, const MeasurementTree &tree) {
  const int n = s.qubits();
  if (tree.depth() != n - 1) {
    throw ParameterError("tree depth " + std::to_string(tree.depth()) + " does not match N - 1 = " +
                         std::to_string(n - 1));
  }
  const Coefficients &c = s.c();
  // Path products of squared direction coefficients, one triple per prefix.
  std::vector<Vec3> weights(1, Vec3{1.0, 1.0, 1.0});
  for (int level = 1; level <= tree.depth(); ++level) {
    std::vector<Vec3> next(weights.size());
    for (std::size_t prefix = 0; prefix < weights.size(); ++prefix) {
      const Vec3 d = direction_coeffs(tree.node(level, prefix));
      for (int j = 0; j < 3; ++j) next[prefix][j] = weights[prefix][j] * d[j] * d[j];
    }
    if (level < tree.depth()) {
      // Both outcomes of this node lead to their own child.
      std::vector<Vec3> expanded(next.size() * 2);
      for (std::size_t p = 0; p < next.size(); ++p) expanded[2 * p] = expanded[2 * p + 1] = next[p];
      weights = std::move(expanded);
    } else {
      weights = std::move(next);
    }
  }
  double retained = 0.0;
  for (const Vec3 &w : weights) retained += c[0] * c[0] * w[0] + c[1] * c[1] * w[1] + c[2] * c[2] * w[2];
  const double total = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
  return std::ldexp(total - std::ldexp(retained, 2 - n), -n);
}

}  // namespace mgd
