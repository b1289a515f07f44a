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

#include "qpekit/dense.hpp"

namespace qpekit {

using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

/// Cartan decomposition of a two-qubit unitary in the magic basis:
///   u = e^{i phase} (k1l ⊗ k1r) · N(x,y,z) · (k2l ⊗ k2r)
/// with N(x,y,z) = exp(i (x XX + y YY + z ZZ)) and the interaction
/// coordinates canonicalized to the Weyl chamber
///   pi/4 >= x >= y >= |z|, and z >= 0 whenever x = pi/4.
struct KakDecomposition {
  Matrix2 k1l, k1r;  // applied after the interaction
  Matrix2 k2l, k2r;  // applied before the interaction
  double x = 0, y = 0, z = 0;
  double phase = 0;
};

KakDecomposition kak_decompose(const Matrix4& u);

/// N(x,y,z) as a dense matrix (test oracle and assembly helper).
Matrix4 canonical_interaction(double x, double y, double z);

/// Splits a 4x4 tensor product g (x) h into its factors; throws if the
/// input is further than `tol` from any tensor product.
std::pair<Matrix2, Matrix2> kron_split(const Matrix4& m, double tol = 1e-6);

}  // namespace qpekit
