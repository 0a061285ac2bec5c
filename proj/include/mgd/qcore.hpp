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

// Dense complex-matrix kernel for small qubit registers.
//
// Qubit 1 is the leftmost tensor factor, i.e. the most significant bit of a
// basis index. Matrices are stored row-major.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace mgd {

using Complex = std::complex<double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr int kMaxQubits = 10;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenTol = 1e-10;
inline constexpr double kCompletenessTol = 1e-12;

/// Number of qubits for a 2^n dimension. Throws ParameterError for anything
/// that is not a power of two in [2, 2^kMaxQubits].
int qubit_count(Eigen::Index dim);

/// Single-qubit Pauli matrix, axis in {1, 2, 3}.
Matrix pauli(int axis);

/// sigma_axis ⊗ ... ⊗ sigma_axis with n factors.
Matrix pauli_tensor(int axis, int n);

/// Kronecker product a ⊗ b.
Matrix kron(const Matrix &a, const Matrix &b);

/// Hilbert-Schmidt inner product Tr(a† b).
Complex hs_inner(const Matrix &a, const Matrix &b);

/// Largest |m(i,j) - conj(m(j,i))|.
double hermiticity_defect(const Matrix &m);

/// Smallest eigenvalue of a Hermitian matrix (Hermitian within 1e-10).
double min_eigenvalue(const Matrix &m);

/// Whether the positive-semidefinite invariant is enforced at construction.
/// kWaived is only for formal evaluation of coefficient formulas on
/// Hermitian unit-trace operators that are not states.
enum class Positivity { kRequired, kWaived };

/// Hermitian, unit-trace, positive-semidefinite 2^N x 2^N matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m, Positivity positivity = Positivity::kRequired);

  static DensityMatrix maximally_mixed(int n_qubits);

  const Matrix &matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  int qubits() const { return qubits_; }
  bool positivity_waived() const { return positivity_ == Positivity::kWaived; }
  Positivity positivity() const { return positivity_; }

 private:
  Matrix m_;
  int qubits_ = 0;
  Positivity positivity_ = Positivity::kRequired;
};

/// Complete set of Kraus operators: sum_k K_k† K_k = I within 1e-12.
class KrausSet {
 public:
  explicit KrausSet(std::vector<Matrix> ops);

  const std::vector<Matrix> &ops() const { return ops_; }
  Eigen::Index dim() const { return ops_.front().rows(); }

 private:
  std::vector<Matrix> ops_;
};

/// ||a - b||^2 in the Hilbert-Schmidt norm.
double hs_distance_sq(const Matrix &a, const Matrix &b);
double hs_distance_sq(const DensityMatrix &rho, const DensityMatrix &chi);

/// sum_k K rho K†. The positivity mode of rho carries over.
DensityMatrix apply_kraus(const DensityMatrix &rho, const KrausSet &k);

}  // namespace mgd
