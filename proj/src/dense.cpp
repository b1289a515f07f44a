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

#include "qpekit/dense.hpp"

#include <stdexcept>

namespace qpekit {

Matrix pauli_matrix(Pauli p) {
  Matrix m(2, 2);
  const std::complex<double> im(0.0, 1.0);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -im, im, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix pauli_string_matrix(const PauliString& p) {
  Matrix m = pauli_matrix(p.op(0));
  for (std::size_t q = 1; q < p.size(); ++q) {
    Matrix next = pauli_matrix(p.op(q));
    Matrix out(m.rows() * 2, m.cols() * 2);
    out.setZero();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        out.block(2 * i, 2 * j, 2, 2) = m(i, j) * next;
    m = std::move(out);
  }
  return m;
}

Matrix to_matrix(const PauliSum& h) {
  if (h.n_qubits() > 12)
    throw std::invalid_argument("to_matrix limited to 12 qubits");
  const Eigen::Index dim = Eigen::Index(1) << h.n_qubits();
  Matrix m = Matrix::Identity(dim, dim) * h.offset();
  for (const auto& [p, c] : h.terms()) m += c * pauli_string_matrix(p);
  return m;
}

std::vector<double> exact_eigs(const PauliSum& h) {
  Matrix m = to_matrix(h);
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

UnitaryMatrix::UnitaryMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("matrix not square");
  Matrix d = m_.adjoint() * m_ - Matrix::Identity(m_.rows(), m_.cols());
  defect_ = d.norm();
  if (defect_ > 1e-8)
    throw std::invalid_argument("matrix is not unitary (defect " +
                                std::to_string(defect_) + ")");
}

UnitaryMatrix controlled_block(const UnitaryMatrix& u) {
  const auto d = u.dim();
  if (d != 2 && d != 4)
    throw std::invalid_argument("controlled_block supports dim 2 or 4 only");
  Matrix out = Matrix::Identity(2 * d, 2 * d);
  out.block(d, d, d, d) = u.mat();
  return UnitaryMatrix(out);
}

}  // namespace qpekit
