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

#include "qpekit/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpekit {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

// Angles at exactly zero are dropped when emitting rotations.
void emit_rot(Circuit& c, GateKind kind, int q, double angle) {
  if (angle == 0.0) return;
  c.add({kind, q, -1, angle});
}

Matrix polar_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

// Gate list for N(x,y,z) with three CX; derived by conjugating the
// commuting XX/YY/ZZ exponentials through CX(0,1) and folding the
// trailing CZ into the entangler. Exact including global phase.
Circuit interaction_3cx(double x, double y, double z) {
  Circuit c(2);
  c.add_global_phase(kPi / 4);
  c.rz(1, -kPi / 2);
  c.cx(0, 1);
  c.rz(0, kPi / 2);
  c.rz(1, kPi / 2);
  emit_rot(c, GateKind::RX, 0, 2 * y);
  c.h(1);
  c.cx(0, 1);
  c.h(1);
  emit_rot(c, GateKind::RX, 0, -2 * x);
  emit_rot(c, GateKind::RZ, 1, -2 * z);
  c.cx(0, 1);
  return c;
}

// N(x,y,0) with two CX: exp(i(x XX + y ZZ)) between CX(0,1) pairs,
// conjugated by RX(pi/2) on both wires to turn ZZ into YY.
Circuit interaction_2cx(double x, double y) {
  Circuit c(2);
  c.rx(0, -kPi / 2);
  c.rx(1, -kPi / 2);
  c.cx(0, 1);
  emit_rot(c, GateKind::RX, 0, -2 * x);
  emit_rot(c, GateKind::RZ, 1, -2 * y);
  c.cx(0, 1);
  c.rx(0, kPi / 2);
  c.rx(1, kPi / 2);
  return c;
}

// N(pi/4,0,0) = exp(i pi/4 XX) with a single CX.
Circuit interaction_1cx() {
  Circuit c(2);
  c.add_global_phase(-kPi / 4);
  c.h(0);
  c.cx(0, 1);
  c.rx(1, -kPi / 2);
  c.rz(0, -kPi / 2);
  c.h(0);
  return c;
}

void append_1q(Circuit& c, const Matrix2& u, int qubit) {
  Circuit s = synth_1q(u);
  c.append_mapped(s, {qubit});
}

Circuit synth_2q_impl(const Matrix4& u, bool force_z0) {
  KakDecomposition kak = kak_decompose(u);
  const double tol = 1e-11;
  double z = kak.z;
  if (force_z0) {
    if (std::abs(z) > 1e-6)
      throw std::logic_error("expected a vanishing interaction z coordinate");
    z = 0.0;
  }

  Circuit c(2);
  if (kak.x < tol) {
    // Purely local: merge the one-qubit layers.
    append_1q(c, kak.k1l * kak.k2l, 0);
    append_1q(c, kak.k1r * kak.k2r, 1);
    c.add_global_phase(kak.phase);
    return c;
  }
  append_1q(c, kak.k2l, 0);
  append_1q(c, kak.k2r, 1);
  if (std::abs(kak.x - kPi / 4) < tol && kak.y < tol && std::abs(z) < tol) {
    c.append(interaction_1cx());
  } else if (std::abs(z) < tol) {
    c.append(interaction_2cx(kak.x, kak.y));
  } else {
    c.append(interaction_3cx(kak.x, kak.y, z));
  }
  append_1q(c, kak.k1l, 0);
  append_1q(c, kak.k1r, 1);
  c.add_global_phase(kak.phase);
  return c;
}

// Gray-code sign matrix: sign(i,j) = (-1)^<gray(i-1), j> for the rotation
// following the (i-1)-th entangler.
Eigen::MatrixXd gray_sign_matrix(int m) {
  const int n = 1 << m;
  Eigen::MatrixXd s(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      int g = (i) ^ (i >> 1);
      s(j, i) = (std::popcount(static_cast<unsigned>(g & j)) % 2) ? -1.0 : 1.0;
    }
  return s;
}

// Control qubit (1-based offset into the controls) flipped at gray step i.
int gray_ctrl_bit(int i, int m) {
  int g1 = (i - 1) ^ ((i - 1) >> 1);
  int g2 = (i % (1 << m)) ^ ((i % (1 << m)) >> 1);
  int diff = g1 ^ g2;
  int bit = 0;
  while (!((diff >> bit) & 1)) ++bit;
  return bit;  // bit b of the control index; b=0 is the last control qubit
}

Eigen::VectorXd solve_mux_angles(const Eigen::VectorXd& targets, int m) {
  Eigen::MatrixXd s = gray_sign_matrix(m);
  return s.transpose() * targets / double(1 << m);
}

}  // namespace

namespace detail {

Circuit mux_rz(const Eigen::VectorXd& angles, int n_qubits) {
  const int m = n_qubits - 1;
  const int n = 1 << m;
  if (angles.size() != n) throw std::invalid_argument("mux angle count");
  Eigen::VectorXd a = solve_mux_angles(angles, m);
  Circuit c(n_qubits);
  for (int i = 1; i <= n; ++i) {
    emit_rot(c, GateKind::RZ, 0, a[i - 1]);
    int bit = gray_ctrl_bit(i, m);
    c.cx(m - bit, 0);  // control index bit 0 lives on the last control qubit
  }
  return c;
}

Circuit mux_ry_cz(const Eigen::VectorXd& angles, int n_qubits) {
  const int m = n_qubits - 1;
  const int n = 1 << m;
  if (angles.size() != n) throw std::invalid_argument("mux angle count");
  // The closing CX is emitted as a CZ; it contributes an extra RY(pi)
  // on branches where the closing control bit is set, plus a Z there.
  const int close_bit = gray_ctrl_bit(n, m);
  Eigen::VectorXd shifted = angles;
  for (int j = 0; j < n; ++j)
    if ((j >> close_bit) & 1) shifted[j] -= kPi;
  Eigen::VectorXd a = solve_mux_angles(shifted, m);
  Circuit c(n_qubits);
  for (int i = 1; i < n; ++i) {
    emit_rot(c, GateKind::RY, 0, a[i - 1]);
    c.cx(m - gray_ctrl_bit(i, m), 0);
  }
  emit_rot(c, GateKind::RY, 0, a[n - 1]);
  const int close_q = m - close_bit;
  c.cphase(close_q, 0, kPi);
  c.rz(close_q, kPi);
  c.add_global_phase(kPi / 2);
  return c;
}

Demux demultiplex(const Matrix& a1, const Matrix& a2) {
  Matrix m = a1 * a2.adjoint();
  Eigen::ComplexSchur<Matrix> schur(m);
  const Matrix& t = schur.matrixT();
  Demux out;
  out.v = schur.matrixU();
  const Eigen::Index n = m.rows();
  Matrix d = Matrix::Zero(n, n);
  out.rz_angles.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    std::complex<double> lam = t(j, j);
    lam /= std::abs(lam);
    double half = std::arg(lam) / 2.0;
    d(j, j) = std::exp(kI * half);
    out.rz_angles[j] = -2.0 * half;
  }
  out.w = d * out.v.adjoint() * a2;
  return out;
}

Csd cosine_sine(const Matrix& u) {
  const Eigen::Index p = u.rows() / 2;
  Matrix u00 = u.topLeftCorner(p, p), u01 = u.topRightCorner(p, p);
  Matrix u10 = u.bottomLeftCorner(p, p), u11 = u.bottomRightCorner(p, p);

  Eigen::JacobiSVD<Matrix> svd(u00, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Csd out;
  out.l1 = svd.matrixU();
  Matrix r1 = svd.matrixV();
  out.r1d = r1.adjoint();
  Eigen::VectorXd cvals = svd.singularValues();
  for (Eigen::Index j = 0; j < p; ++j) cvals[j] = std::min(cvals[j], 1.0);

  // u10 * r1 has orthogonal columns with norms sin(theta_j).
  Matrix t = u10 * r1;
  out.theta.resize(p);
  out.l2 = Matrix::Zero(p, p);
  std::vector<Eigen::Index> deferred;
  for (Eigen::Index j = 0; j < p; ++j) {
    double s = t.col(j).norm();
    out.theta[j] = std::atan2(s, cvals[j]);
    if (s >= 1e-7)
      out.l2.col(j) = t.col(j) / s;
    else
      deferred.push_back(j);
  }
  // Orthonormal completion for vanishing sine sectors.
  for (Eigen::Index j : deferred) {
    Vector best = Vector::Zero(p);
    double best_norm = -1;
    for (Eigen::Index k = 0; k < p; ++k) {
      Vector cand = Vector::Zero(p);
      cand[k] = 1.0;
      for (Eigen::Index jj = 0; jj < p; ++jj) {
        if (out.l2.col(jj).norm() > 0.5)
          cand -= (out.l2.col(jj).adjoint() * cand).value() * out.l2.col(jj);
      }
      if (cand.norm() > best_norm) {
        best_norm = cand.norm();
        best = cand;
      }
    }
    out.l2.col(j) = best / best.norm();
  }
  out.l2 = polar_unitary(out.l2);

  // Rows of r2d from whichever block is well conditioned.
  Matrix top = out.l1.adjoint() * u01;     // = -S * r2d
  Matrix bottom = out.l2.adjoint() * u11;  // =  C * r2d
  out.r2d.resize(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    double cj = std::cos(out.theta[j]), sj = std::sin(out.theta[j]);
    if (sj >= cj)
      out.r2d.row(j) = -top.row(j) / sj;
    else
      out.r2d.row(j) = bottom.row(j) / cj;
  }
  out.r2d = polar_unitary(out.r2d);

  // Verify and fail loudly on numerically degenerate input.
  Matrix rec(u.rows(), u.cols());
  Matrix c = Matrix::Zero(p, p), s = Matrix::Zero(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    c(j, j) = std::cos(out.theta[j]);
    s(j, j) = std::sin(out.theta[j]);
  }
  rec.topLeftCorner(p, p) = out.l1 * c * out.r1d;
  rec.topRightCorner(p, p) = -out.l1 * s * out.r2d;
  rec.bottomLeftCorner(p, p) = out.l2 * s * out.r1d;
  rec.bottomRightCorner(p, p) = out.l2 * c * out.r2d;
  if ((rec - u).norm() > 1e-7)
    throw std::runtime_error("cosine-sine decomposition failed");
  return out;
}

}  // namespace detail

Circuit synth_1q(const Matrix2& u) {
  UnitaryMatrix check(u);
  double alpha = std::arg(u.determinant()) / 2.0;
  Matrix2 v = std::exp(-kI * alpha) * u;
  double theta, phi, lam;
  if (std::abs(v(1, 0)) < 1e-12) {
    theta = 0.0;
    phi = -2.0 * std::arg(v(0, 0));
    lam = 0.0;
  } else if (std::abs(v(0, 0)) < 1e-12) {
    theta = kPi;
    phi = 2.0 * std::arg(v(1, 0));
    lam = 0.0;
  } else {
    theta = 2.0 * std::atan2(std::abs(v(1, 0)), std::abs(v(0, 0)));
    phi = std::arg(v(1, 0)) - std::arg(v(0, 0));
    lam = -std::arg(v(1, 0)) - std::arg(v(0, 0));
  }
  Circuit c(1);
  emit_rot(c, GateKind::RZ, 0, lam);
  emit_rot(c, GateKind::RY, 0, theta);
  emit_rot(c, GateKind::RZ, 0, phi);
  c.add_global_phase(alpha);
  return c;
}

Circuit synth_2q(const Matrix4& u) { return synth_2q_impl(u, false); }

std::pair<Eigen::Vector4cd, Matrix4> split_off_diagonal(const Matrix4& u) {
  // Zero the imaginary part of tr[g(C)] with C = diag(d)^dagger u, where
  // g(C) = C (Y⊗Y) C^T (Y⊗Y); that puts C's canonical z coordinate at 0,
  // i.e. within reach of two CX.
  Matrix4 un = u / std::pow(u.determinant(), 0.25);
  Matrix4 yy = Matrix4::Zero();
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;
  Matrix4 g = un * yy * un.transpose() * yy;
  std::complex<double> g12 = g(1, 2), g03 = g(0, 3);
  double w = std::atan2(g03.imag() - g12.imag(), g12.real() + g03.real());
  Eigen::Vector4cd d;
  d << 1.0, std::exp(-kI * w), 1.0, std::exp(kI * w);
  Matrix4 c = d.conjugate().asDiagonal() * u;
  return {d, c};
}

Circuit synth_3q(const Matrix& u) {
  if (u.rows() != 8 || u.cols() != 8)
    throw std::invalid_argument("synth_3q expects an 8x8 unitary");
  UnitaryMatrix check(u);

  detail::Csd csd = detail::cosine_sine(u);

  // u = (a1 ⊕ a2) · muxRX(-2θ) · (b1 ⊕ b2) with the CS stage folded into
  // an X-axis multiplexor on the block qubit.
  Matrix a1 = csd.l1, a2 = -kI * csd.l2;
  Matrix b1 = csd.r1d, b2 = kI * csd.r2d;
  detail::Demux da = detail::demultiplex(a1, a2);
  detail::Demux db = detail::demultiplex(b1, b2);

  // Migrate leaf diagonals toward the final leaf: every inner leaf then
  // needs only two CX.
  auto [d1, c_wb] = split_off_diagonal(db.w);
  Matrix4 vb_t = Matrix4(db.v) * Matrix4(d1.asDiagonal());
  auto [d2, c_vb] = split_off_diagonal(vb_t);
  Matrix4 wa_t = Matrix4(da.w) * Matrix4(d2.asDiagonal());
  auto [d3, c_wa] = split_off_diagonal(wa_t);
  Matrix4 va_t = Matrix4(da.v) * Matrix4(d3.asDiagonal());

  Eigen::VectorXd mux_angles = -2.0 * csd.theta;

  Circuit c(3);
  const std::vector<int> on_12 = {1, 2};
  c.append_mapped(synth_2q_impl(c_wb, true), on_12);
  c.append(detail::mux_rz(db.rz_angles, 3));
  c.append_mapped(synth_2q_impl(c_vb, true), on_12);
  // Central multiplexed RX: conjugate an RY multiplexor by S on the pivot.
  c.rz(0, kPi / 2);
  c.append(detail::mux_ry_cz(mux_angles, 3));
  c.rz(0, -kPi / 2);
  c.append_mapped(synth_2q_impl(c_wa, true), on_12);
  c.append(detail::mux_rz(da.rz_angles, 3));
  c.append_mapped(synth_2q(va_t), on_12);
  return c;
}

Circuit synth_unitary(const UnitaryMatrix& u) {
  switch (u.dim()) {
    case 2: return synth_1q(u.mat().topLeftCorner<2, 2>());
    case 4: return synth_2q(u.mat().topLeftCorner<4, 4>());
    case 8: return synth_3q(u.mat());
    default:
      throw std::invalid_argument("synthesis supports 1-3 qubits");
  }
}

Circuit state_prep(const Vector& amplitudes) {
  const Eigen::Index dim = amplitudes.size();
  if (std::abs(amplitudes.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("initial state not normalized");
  if (dim == 2) {
    Matrix2 u;
    u << amplitudes[0], -std::conj(amplitudes[1]),
         amplitudes[1], std::conj(amplitudes[0]);
    return synth_1q(u);
  }
  if (dim == 4) {
    Matrix4 u = Matrix4::Zero();
    u.col(0) = amplitudes;
    Eigen::Index filled = 1;
    for (Eigen::Index k = 0; k < 4 && filled < 4; ++k) {
      Eigen::Vector4cd cand = Eigen::Vector4cd::Zero();
      cand[k] = 1.0;
      for (Eigen::Index j = 0; j < filled; ++j)
        cand -= (u.col(j).adjoint() * cand).value() * u.col(j);
      if (cand.norm() > 1e-6) u.col(filled++) = cand / cand.norm();
    }
    if (filled < 4) throw std::runtime_error("state completion failed");
    return synth_2q(u);
  }
  throw std::invalid_argument("state_prep supports 1 or 2 qubits");
}

}  // namespace qpekit
