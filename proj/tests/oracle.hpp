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

// Test-only brute-force oracles. Nothing here calls into the library's
// kron/pauli_tensor/chain code; every matrix is built from index formulas.

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "mgd/qcore.hpp"

namespace oracle {

using mgd::Complex;
using mgd::Matrix;

inline Complex pauli_entry(int axis, int row, int col) {
  switch (axis) {
    case 1:
      return row != col ? Complex(1.0) : Complex(0.0);
    case 2:
      if (row == col) return 0.0;
      return row == 0 ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
    default:
      return row == col ? Complex(row == 0 ? 1.0 : -1.0) : Complex(0.0);
  }
}

/// (sigma^{⊗n})_{xy} = prod_k sigma[x_k][y_k], qubit 1 = most significant bit.
inline Matrix pauli_string(int axis, int n) {
  const int dim = 1 << n;
  Matrix m(dim, dim);
  for (int x = 0; x < dim; ++x) {
    for (int y = 0; y < dim; ++y) {
      Complex v = 1.0;
      for (int k = 0; k < n; ++k) v *= pauli_entry(axis, (x >> k) & 1, (y >> k) & 1);
      m(x, y) = v;
    }
  }
  return m;
}

inline Matrix family(int n, const std::array<double, 3> &c) {
  const int dim = 1 << n;
  Matrix m = Matrix::Identity(dim, dim);
  for (int j = 0; j < 3; ++j) m += c[j] * pauli_string(j + 1, n);
  return m / static_cast<double>(dim);
}

inline Matrix tensor(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

/// V Pi_k V† with V = t I + i (y1 X + y2 Y + y3 Z) as an explicit matrix product.
inline Matrix projector(double t, const std::array<double, 3> &y, int outcome) {
  Matrix v(2, 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Complex e = (r == c) ? Complex(t) : Complex(0.0);
      for (int j = 0; j < 3; ++j) e += Complex(0.0, y[j]) * pauli_entry(j + 1, r, c);
      v(r, c) = e;
    }
  }
  Matrix pi = Matrix::Zero(2, 2);
  pi(outcome, outcome) = 1.0;
  return v * pi * v.adjoint();
}

struct Node {
  double t;
  std::array<double, 3> y;
};

/// chi = sum over outcome strings of P rho P with P = P1 ⊗ P2|j1 ⊗ ... ⊗ I.
/// nodes in level order, as in MeasurementTree.
inline Matrix post_measurement(const Matrix &rho, const std::vector<Node> &nodes, int depth) {
  Matrix chi = Matrix::Zero(rho.rows(), rho.cols());
  for (int b = 0; b < (1 << depth); ++b) {
    Matrix p = Matrix::Identity(1, 1);
    for (int level = 1; level <= depth; ++level) {
      const int bit = (b >> (depth - level)) & 1;
      const int prefix = b >> (depth - level + 1);
      const Node &nd = nodes[(1 << (level - 1)) - 1 + prefix];
      p = tensor(p, projector(nd.t, nd.y, bit));
    }
    p = tensor(p, Matrix::Identity(2, 2));
    chi += p * rho * p;
  }
  return chi;
}

inline double frobenius_sq(const Matrix &m) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
  }
  return s;
}

}  // namespace oracle
