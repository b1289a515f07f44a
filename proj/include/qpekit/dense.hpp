// Copyright 2026 qpekit contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qpekit/pauli.hpp"

namespace qpekit {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// 2x2 matrix of a single Pauli.
Matrix pauli_matrix(Pauli p);

/// Dense matrix of a Pauli string; qubit 0 is the most significant tensor
/// factor, so basis index b has qubit q's bit at position (n-1-q).
Matrix pauli_string_matrix(const PauliString& p);

/// Dense Hermitian matrix of the sum (terms plus offset * identity).
/// Guarded at n_qubits <= 12.
Matrix to_matrix(const PauliSum& h);

/// Ascending real eigenvalues of to_matrix(h).
std::vector<double> exact_eigs(const PauliSum& h);

/// Dense unitary with a recorded unitarity defect ||U†U - I||_F.
/// Construction throws if the defect exceeds 1e-8.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m);

  const Matrix& mat() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  double unitarity_defect() const { return defect_; }

 private:
  Matrix m_;
  double defect_;
};

/// Block-diagonal diag(I, u): the controlled version of u with the control
/// as the most significant qubit. Accepts dim 2 or 4.
UnitaryMatrix controlled_block(const UnitaryMatrix& u);

}  // namespace qpekit
