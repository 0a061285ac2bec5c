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

#include <cmath>
#include <sstream>

#include "mgd/errors.hpp"
#include "mgd/text_format.hpp"

namespace mgd {

namespace {

void check_qubits(int n) {
  if (n < 2 || n > kMaxQubits) {
    throw ParameterError("family states need 2 <= N <= " + std::to_string(kMaxQubits) +
                         ", got " + std::to_string(n));
  }
}

void check_range(const Coefficients &c) {
  for (int j = 0; j < 3; ++j) {
    if (!std::isfinite(c[j]) || std::abs(c[j]) > 1.0) {
      std::ostringstream msg;
      msg << "coefficient c" << (j + 1) << " = " << c[j] << " is outside [-1, 1]";
      throw ValidationError(msg.str());
    }
  }
}

}  // namespace

Coefficients parse_coefficients(std::string_view text) {
  const std::vector<double> v = parse_reals(text, 3);
  return {v[0], v[1], v[2]};
}

double max_abs(const Coefficients &c) {
  return std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
}

Matrix family_matrix(int n_qubits, const Coefficients &c) {
  check_qubits(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix rho = Matrix::Identity(dim, dim);
  for (int j = 0; j < 3; ++j) {
    if (c[j] != 0.0) rho += c[j] * pauli_tensor(j + 1, n_qubits);
  }
  return rho / static_cast<double>(dim);
}

Physicality is_physical(int n_qubits, const Coefficients &c) {
  const double lowest = min_eigenvalue(family_matrix(n_qubits, c));
  const bool in_range = std::abs(c[0]) <= 1.0 && std::abs(c[1]) <= 1.0 && std::abs(c[2]) <= 1.0;
  return {in_range && lowest >= -kEigenTol, lowest};
}

PauliFamilyState PauliFamilyState::make(int n_qubits, const Coefficients &c) {
  check_qubits(n_qubits);
  check_range(c);
  const Physicality p = is_physical(n_qubits, c);
  if (!p.physical) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "coefficients (" << format_coefficients(c) << ") are unphysical for N = " << n_qubits
        << ": minimal eigenvalue " << p.min_eigenvalue;
    throw ValidationError(msg.str());
  }
  return PauliFamilyState(n_qubits, c, false);
}

PauliFamilyState PauliFamilyState::formal(int n_qubits, const Coefficients &c) {
  check_qubits(n_qubits);
  check_range(c);
  return PauliFamilyState(n_qubits, c, true);
}

DensityMatrix to_density_matrix(const PauliFamilyState &s) {
  return DensityMatrix(family_matrix(s.qubits(), s.c()),
                       s.is_formal() ? Positivity::kWaived : Positivity::kRequired);
}

double purity(const PauliFamilyState &s) {
  const Coefficients &c = s.c();
  return (1.0 + c[0] * c[0] + c[1] * c[1] + c[2] * c[2]) / std::ldexp(1.0, s.qubits());
}

Coefficients extract_coefficients(const Matrix &rho) {
  const int n = qubit_count(rho.rows());
  Coefficients c{};
  for (int j = 0; j < 3; ++j) c[j] = hs_inner(pauli_tensor(j + 1, n), rho).real();
  return c;
}

std::string format_coefficients(const Coefficients &c) {
  return format_real(c[0]) + "," + format_real(c[1]) + "," + format_real(c[2]);
}

Coefficients random_physical_coefficients(int n_qubits, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (;;) {
    const Coefficients c{coord(rng), coord(rng), coord(rng)};
    if (is_physical(n_qubits, c).physical) return c;
  }
}

}  // namespace mgd
