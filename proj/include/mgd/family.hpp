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

// The N-qubit Pauli-diagonal family
//
//   rho = (I + c1 X^{⊗N} + c2 Y^{⊗N} + c3 Z^{⊗N}) / 2^N
//
// For N = 2 these are the Bell-diagonal states.

#include <array>
#include <random>
#include <string>
#include <string_view>

#include "mgd/qcore.hpp"

namespace mgd {

using Coefficients = std::array<double, 3>;

/// Parses "c1,c2,c3". Throws ParameterError on anything else.
Coefficients parse_coefficients(std::string_view text);

/// max(|c1|, |c2|, |c3|)
double max_abs(const Coefficients &c);

/// The family operator for arbitrary real c; no validation beyond n.
Matrix family_matrix(int n_qubits, const Coefficients &c);

struct Physicality {
  bool physical = false;
  double min_eigenvalue = 0.0;
};

/// Decided numerically: smallest eigenvalue of family_matrix >= -1e-10.
Physicality is_physical(int n_qubits, const Coefficients &c);

class PauliFamilyState {
 public:
  /// Validated state. Throws ValidationError for |c_j| > 1 or for a
  /// negative eigenvalue (the message carries the eigenvalue).
  static PauliFamilyState make(int n_qubits, const Coefficients &c);

  /// Range-checked only. Used to evaluate the family formulas on coefficient
  /// triples whose operator is not positive semidefinite.
  static PauliFamilyState formal(int n_qubits, const Coefficients &c);

  int qubits() const { return n_; }
  const Coefficients &c() const { return c_; }
  bool is_formal() const { return formal_; }

 private:
  PauliFamilyState(int n, const Coefficients &c, bool formal) : n_(n), c_(c), formal_(formal) {}

  int n_;
  Coefficients c_;
  bool formal_;
};

DensityMatrix to_density_matrix(const PauliFamilyState &s);

/// Tr(rho^2) = (1 + c1^2 + c2^2 + c3^2) / 2^N
double purity(const PauliFamilyState &s);

/// c_j = Tr(rho sigma_j^{⊗N}).
Coefficients extract_coefficients(const Matrix &rho);

std::string format_coefficients(const Coefficients &c);

/// Uniform on the physical region: rejection sampling from [-1, 1]^3.
Coefficients random_physical_coefficients(int n_qubits, std::mt19937_64 &rng);

}  // namespace mgd
