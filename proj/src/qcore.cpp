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

#include "mgd/qcore.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "mgd/errors.hpp"

namespace mgd {

namespace {

void require_same_shape(const Matrix &a, const Matrix &b, const char *op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << a.rows() << "x" << a.cols() << " vs "
        << b.rows() << "x" << b.cols() << ")";
    throw ParameterError(msg.str());
  }
}

}  // namespace

int qubit_count(Eigen::Index dim) {
  for (int n = 1; n <= kMaxQubits; ++n) {
    if (dim == (Eigen::Index{1} << n)) return n;
  }
  throw ParameterError("dimension " + std::to_string(dim) +
                       " is not a power of two in [2, 2^" + std::to_string(kMaxQubits) + "]");
}

Matrix pauli(int axis) {
  Matrix s(2, 2);
  switch (axis) {
    case 1:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case 2:
      s << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
      break;
    case 3:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      throw ParameterError("Pauli axis must be 1, 2 or 3, got " + std::to_string(axis));
  }
  return s;
}

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix pauli_tensor(int axis, int n) {
  if (n < 1 || n > kMaxQubits) {
    throw ParameterError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                         "], got " + std::to_string(n));
  }
  const Matrix s = pauli(axis);
  Matrix out = s;
  for (int k = 1; k < n; ++k) out = kron(out, s);
  return out;
}

Complex hs_inner(const Matrix &a, const Matrix &b) {
  require_same_shape(a, b, "hs_inner");
  return a.conjugate().cwiseProduct(b).sum();
}

double hermiticity_defect(const Matrix &m) {
  if (m.rows() != m.cols()) throw ParameterError("matrix is not square");
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

double min_eigenvalue(const Matrix &m) {
  const double defect = hermiticity_defect(m);
  if (defect > kEigenTol) {
    std::ostringstream msg;
    msg << "min_eigenvalue: matrix is not Hermitian (defect " << defect << ")";
    throw ParameterError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("min_eigenvalue: eigen-solver did not converge");
  }
  return solver.eigenvalues()(0);
}

DensityMatrix::DensityMatrix(Matrix m, Positivity positivity)
    : m_(std::move(m)), positivity_(positivity) {
  if (m_.rows() != m_.cols()) throw ParameterError("density matrix must be square");
  qubits_ = qubit_count(m_.rows());
  const double defect = hermiticity_defect(m_);
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (defect " << defect << ")";
    throw ValidationError(msg.str());
  }
  const double trace = m_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density matrix trace is " << trace << ", expected 1";
    throw ValidationError(msg.str());
  }
  if (positivity_ == Positivity::kRequired) {
    const double lowest = min_eigenvalue(m_);
    if (lowest < -kEigenTol) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "density matrix is not positive semidefinite (minimal eigenvalue " << lowest << ")";
      throw ValidationError(msg.str());
    }
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw ParameterError("qubit count out of range");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

KrausSet::KrausSet(std::vector<Matrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw ValidationError("Kraus set is empty");
  const Eigen::Index dim = ops_.front().rows();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix &k : ops_) {
    if (k.rows() != dim || k.cols() != dim) {
      throw ParameterError("Kraus operators must all be square of the same dimension");
    }
    sum.noalias() += k.adjoint() * k;
  }
  const double defect = (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (defect > kCompletenessTol) {
    std::ostringstream msg;
    msg << "Kraus set is not complete (max |sum K†K - I| = " << defect << ")";
    throw ValidationError(msg.str());
  }
}

double hs_distance_sq(const Matrix &a, const Matrix &b) {
  require_same_shape(a, b, "hs_distance_sq");
  return (a - b).squaredNorm();
}

double hs_distance_sq(const DensityMatrix &rho, const DensityMatrix &chi) {
  return hs_distance_sq(rho.matrix(), chi.matrix());
}

DensityMatrix apply_kraus(const DensityMatrix &rho, const KrausSet &k) {
  if (k.dim() != rho.dim()) {
    throw ParameterError("apply_kraus: Kraus dimension " + std::to_string(k.dim()) +
                         " does not match state dimension " + std::to_string(rho.dim()));
  }
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix &op : k.ops()) out.noalias() += op * rho.matrix() * op.adjoint();
  return DensityMatrix(std::move(out), rho.positivity());
}

}  // namespace mgd
