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

#include "qpekit/circuit.hpp"
#include "qpekit/kak.hpp"

namespace qpekit {

/// ZYZ synthesis of a 1-qubit unitary: at most three rotations plus a
/// global phase, with zero-angle rotations dropped.
Circuit synth_1q(const Matrix2& u);

/// KAK synthesis of a 2-qubit unitary: at most 3 CX. Unitaries whose
/// canonical interaction coordinates sit on special Weyl-chamber points
/// get 0, 1 or 2 CX.
Circuit synth_2q(const Matrix4& u);

/// Quantum Shannon decomposition of a 3-qubit unitary: cosine-sine split,
/// demultiplexed block factors and Gray-code rotation multiplexors.
/// At most 20 CX plus one CPHASE(pi).
Circuit synth_3q(const Matrix& u);

/// Dispatch on dimension 2/4/8.
Circuit synth_unitary(const UnitaryMatrix& u);

/// Splits u = diag(d) * c where c is locally equivalent to a circuit with
/// two CX (its canonical z coordinate vanishes). Used to migrate leaf
/// diagonals through multiplexor stages in the Shannon recursion.
std::pair<Eigen::Vector4cd, Matrix4> split_off_diagonal(const Matrix4& u);

/// Circuit preparing the given amplitude vector from |0...0>; the vector
/// length must be 2 or 4 and normalized within 1e-10.
Circuit state_prep(const Vector& amplitudes);

namespace detail {

/// Cosine-sine decomposition of a 2n x 2n unitary into n x n blocks:
///   u = (l1 ⊕ l2) · [[C, -S], [S, C]] · (r1d ⊕ r2d)
/// with C = diag(cos θ_j), S = diag(sin θ_j).
struct Csd {
  Matrix l1, l2, r1d, r2d;
  Eigen::VectorXd theta;
};
Csd cosine_sine(const Matrix& u);

/// Demultiplexes (a1 ⊕ a2) = (I ⊗ v) · diag-mux · (I ⊗ w); returns v, w
/// and the multiplexed-RZ angles on the block qubit.
struct Demux {
  Matrix v, w;
  Eigen::VectorXd rz_angles;
};
Demux demultiplex(const Matrix& a1, const Matrix& a2);

/// Multiplexed rotation on pivot qubit 0 controlled by qubits 1..m with
/// Gray-code CX ladders; angles indexed by the control-register value.
Circuit mux_rz(const Eigen::VectorXd& angles, int n_qubits);
/// Same for RY but with the closing entangler emitted as CPHASE(pi),
/// which costs one CX less after lowering.
Circuit mux_ry_cz(const Eigen::VectorXd& angles, int n_qubits);

}  // namespace detail

}  // namespace qpekit
