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

#include "qpekit/kak.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpekit {

namespace {

using Eigen::Matrix4d;
using Eigen::Vector4d;
constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

Matrix4 magic_basis() {
  Matrix4 b;
  const double r = 1.0 / std::sqrt(2.0);
  b << r, 0, 0, kI * r,
       0, kI * r, r, 0,
       0, kI * r, -r, 0,
       r, 0, 0, -kI * r;
  return b;
}

Matrix2 pauli2(Pauli p) { return pauli_matrix(p).topLeftCorner<2, 2>(); }

Matrix4 kron22(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

// Signs s with B†(P⊗P)B = diag(s) for P in {X, Y, Z}; computed once.
struct MagicSigns {
  Vector4d sx, sy, sz;
};

const MagicSigns& magic_signs() {
  static const MagicSigns signs = [] {
    MagicSigns s;
    Matrix4 b = magic_basis();
    auto diag_of = [&](Pauli p) {
      Matrix4 d = b.adjoint() * kron22(pauli2(p), pauli2(p)) * b;
      Vector4d v;
      for (int i = 0; i < 4; ++i) {
        v[i] = std::round(d(i, i).real());
        d(i, i) = 0.0;
      }
      if (d.norm() > 1e-12)
        throw std::logic_error("magic basis does not diagonalize P⊗P");
      return v;
    };
    s.sx = diag_of(Pauli::X);
    s.sy = diag_of(Pauli::Y);
    s.sz = diag_of(Pauli::Z);
    return s;
  }();
  return signs;
}

// Real orthogonal diagonalization of a complex symmetric unitary m:
// returns P with Pᵀ m P diagonal. Re(m) and Im(m) are commuting real
// symmetric matrices and are diagonalized simultaneously.
Matrix4d simultaneous_diagonalize(const Matrix4& m) {
  Eigen::Matrix4d a = m.real(), b = m.imag();
  for (double cluster_tol : {1e-7, 1e-5, 1e-3}) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> esa(a);
    Matrix4d p = esa.eigenvectors();
    Vector4d ev = esa.eigenvalues();
    int start = 0;
    while (start < 4) {
      int end = start + 1;
      while (end < 4 && std::abs(ev[end] - ev[start]) <= cluster_tol) ++end;
      if (end - start > 1) {
        Eigen::MatrixXd qc = p.middleCols(start, end - start);
        Eigen::MatrixXd bc = qc.transpose() * b * qc;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esb(bc);
        p.middleCols(start, end - start) = qc * esb.eigenvectors();
      }
      start = end;
    }
    Matrix4 check = p.transpose() * m * p;
    double offdiag = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) offdiag += std::norm(check(i, j));
    if (std::sqrt(offdiag) < 1e-9) {
      // Canonical column signs: largest-magnitude entry made positive.
      for (int j = 0; j < 4; ++j) {
        int imax = 0;
        for (int i = 1; i < 4; ++i)
          if (std::abs(p(i, j)) > std::abs(p(imax, j))) imax = i;
        if (p(imax, j) < 0) p.col(j) = -p.col(j);
      }
      return p;
    }
  }
  throw std::runtime_error("simultaneous diagonalization failed");
}

struct CanonicalState {
  Matrix2 k1l, k1r, k2l, k2r;
  double w[3];
  double phase;
};

// Move set maintaining u = e^{i phase}(k1l⊗k1r) N(w) (k2l⊗k2r).
// Shifting w[c] by n*pi/2 multiplies N by (i Pc⊗Pc)^n which folds into
// k1 and the phase; negating a pair conjugates by the third Pauli on the
// left qubit; swapping two axes conjugates both qubits by a Clifford.
void shift(CanonicalState& s, int c, int n) {
  if (n == 0) return;
  s.w[c] += n * kPi / 2;
  s.phase -= n * kPi / 2;
  if (((n % 2) + 2) % 2 == 1) {
    Matrix2 p = pauli2(static_cast<Pauli>(c + 1));
    s.k1l = s.k1l * p;
    s.k1r = s.k1r * p;
  }
}

void negate_pair(CanonicalState& s, int c1, int c2) {
  int c3 = 3 - c1 - c2;
  Matrix2 q = pauli2(static_cast<Pauli>(c3 + 1));
  s.w[c1] = -s.w[c1];
  s.w[c2] = -s.w[c2];
  s.k1l = s.k1l * q;
  s.k2l = q * s.k2l;
}

void swap_axes(CanonicalState& s, int c1, int c2) {
  // Single-qubit Clifford exchanging axes c1 and c2 (up to signs that
  // cancel on both factors).
  Matrix2 c;
  int c3 = 3 - c1 - c2;
  const double r = 1.0 / std::sqrt(2.0);
  if (c3 == 2) {  // swap x,y : S gate
    c << 1, 0, 0, kI;
  } else if (c3 == 0) {  // swap y,z : RX(pi/2)
    c << r, -kI * r, -kI * r, r;
  } else {  // swap x,z : RY(pi/2)
    c << r, -r, r, r;
  }
  std::swap(s.w[c1], s.w[c2]);
  Matrix2 cd = c.adjoint();
  s.k1l = s.k1l * cd;
  s.k1r = s.k1r * cd;
  s.k2l = c * s.k2l;
  s.k2r = c * s.k2r;
}

void canonicalize(CanonicalState& s) {
  const double tol = 1e-13;
  for (int iter = 0; iter < 20; ++iter) {
    // Reduce each coordinate to [-pi/4, pi/4).
    for (int c = 0; c < 3; ++c) {
      int n = static_cast<int>(std::floor(s.w[c] / (kPi / 2) + 0.5));
      shift(s, c, -n);
    }
    // At most one negative coordinate.
    int negs[3], nneg = 0;
    for (int c = 0; c < 3; ++c)
      if (s.w[c] < -tol) negs[nneg++] = c;
    if (nneg >= 2) negate_pair(s, negs[0], negs[1]);
    // Sort by |w| descending (stable bubble over 3 entries).
    for (int pass = 0; pass < 2; ++pass)
      for (int c = 0; c < 2; ++c)
        if (std::abs(s.w[c]) + tol < std::abs(s.w[c + 1])) swap_axes(s, c, c + 1);
    // Any remaining negative belongs in the z slot.
    if (s.w[0] < -tol) negate_pair(s, 0, 2);
    if (s.w[1] < -tol) negate_pair(s, 1, 2);
    bool ordered = std::abs(s.w[0]) + tol >= std::abs(s.w[1]) &&
                   std::abs(s.w[1]) + tol >= std::abs(s.w[2]);
    bool in_range = s.w[0] >= -tol && s.w[0] <= kPi / 4 + tol &&
                    s.w[1] >= -tol;
    if (ordered && in_range) break;
  }
  // Boundary rule: at x = pi/4 the classes with ±z coincide; pick z >= 0.
  if (std::abs(s.w[0] - kPi / 4) < 1e-10 && s.w[2] < -tol) {
    negate_pair(s, 0, 2);
    shift(s, 0, 1);
  }
  for (int c = 0; c < 3; ++c)
    if (std::abs(s.w[c]) < 1e-15) s.w[c] = 0.0;
}

}  // namespace

Matrix4 canonical_interaction(double x, double y, double z) {
  const auto& sg = magic_signs();
  Matrix4 b = magic_basis();
  Matrix4 e = Matrix4::Zero();
  for (int j = 0; j < 4; ++j) {
    double th = sg.sx[j] * x + sg.sy[j] * y + sg.sz[j] * z;
    e(j, j) = std::exp(kI * th);
  }
  return b * e * b.adjoint();
}

std::pair<Matrix2, Matrix2> kron_split(const Matrix4& m, double tol) {
  // Pick the 2x2 block with the largest norm as a scaled copy of h.
  int bi = 0, bj = 0;
  double best = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double n = m.block<2, 2>(2 * i, 2 * j).norm();
      if (n > best) {
        best = n;
        bi = i;
        bj = j;
      }
    }
  Matrix2 hb = m.block<2, 2>(2 * bi, 2 * bj);
  std::complex<double> g_entry = std::sqrt(hb.determinant());
  if (std::abs(g_entry) < 1e-12)
    throw std::runtime_error("kron_split: degenerate block");
  Matrix2 h = hb / g_entry;
  Matrix2 g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      g(i, j) = (m.block<2, 2>(2 * i, 2 * j) * h.adjoint()).trace() / 2.0;
  if ((kron22(g, h) - m).norm() > tol)
    throw std::runtime_error("kron_split: input is not a tensor product");
  // Canonical sign: first entry of g with significant magnitude gets a
  // non-negative real part (ties by imaginary part).
  for (int i = 0; i < 4; ++i) {
    std::complex<double> v = g(i / 2, i % 2);
    if (std::abs(v) > 1e-8) {
      if (v.real() < 0 || (std::abs(v.real()) < 1e-14 && v.imag() < 0)) {
        g = -g;
        h = -h;
      }
      break;
    }
  }
  return {g, h};
}

KakDecomposition kak_decompose(const Matrix4& u) {
  UnitaryMatrix check(u);  // validates unitarity

  // SU(4) normalization.
  std::complex<double> det = u.determinant();
  double alpha = std::arg(det) / 4.0;
  Matrix4 v = std::exp(-kI * alpha) * u;

  Matrix4 b = magic_basis();
  Matrix4 mm = b.adjoint() * v * b;
  Matrix4 m2 = mm.transpose() * mm;

  Matrix4d p = simultaneous_diagonalize(m2);
  Matrix4 diag = p.transpose() * m2 * p;
  double theta[4];
  for (int j = 0; j < 4; ++j) theta[j] = std::arg(diag(j, j)) / 2.0;

  // det E must be ±1 (sum of 2θ is 0 mod 2π); make the parity even so the
  // orthogonal factors can both be rotations.
  double tsum = theta[0] + theta[1] + theta[2] + theta[3];
  int msum = static_cast<int>(std::llround(tsum / kPi));
  if (((msum % 2) + 2) % 2 == 1) {
    theta[0] -= kPi;
    msum -= 1;
  }

  Matrix4 einv = Matrix4::Zero();
  for (int j = 0; j < 4; ++j) einv(j, j) = std::exp(-kI * theta[j]);
  Matrix4 o1c = mm * p.cast<std::complex<double>>() * einv;
  if (o1c.imag().norm() > 1e-6)
    throw std::runtime_error("kak: orthogonal factor not real");
  Matrix4d o1 = o1c.real();
  Matrix4d o2 = p.transpose();

  if (o1.determinant() < 0) {
    // det o1 = det o2 here; flip a matched column/row pair.
    o1.col(0) = -o1.col(0);
    o2.row(0) = -o2.row(0);
  }

  // Interaction coordinates from the eigenphases (orthogonal sign basis),
  // with the residual along (1,1,1,1) contributing a global phase.
  const auto& sg = magic_signs();
  Vector4d th(theta[0], theta[1], theta[2], theta[3]);
  double x = sg.sx.dot(th) / 4.0;
  double y = sg.sy.dot(th) / 4.0;
  double z = sg.sz.dot(th) / 4.0;
  double phase_extra = th.sum() / 4.0;

  Matrix4 k1 = b * o1.cast<std::complex<double>>() * b.adjoint();
  Matrix4 k2 = b * o2.cast<std::complex<double>>() * b.adjoint();

  CanonicalState s;
  std::tie(s.k1l, s.k1r) = kron_split(k1);
  std::tie(s.k2l, s.k2r) = kron_split(k2);
  s.w[0] = x;
  s.w[1] = y;
  s.w[2] = z;
  s.phase = alpha + phase_extra;
  canonicalize(s);

  KakDecomposition out;
  out.k1l = s.k1l;
  out.k1r = s.k1r;
  out.k2l = s.k2l;
  out.k2r = s.k2r;
  out.x = s.w[0];
  out.y = s.w[1];
  out.z = s.w[2];
  out.phase = s.phase;
  return out;
}

}  // namespace qpekit
