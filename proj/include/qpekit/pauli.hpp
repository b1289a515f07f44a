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

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpekit {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// A tensor product of single-qubit Paulis. Index 0 is qubit 0, which is
/// the leftmost character in the string form and the most significant
/// qubit in dense-matrix conventions.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : ops_(n, Pauli::I) {}
  explicit PauliString(const std::string& s);

  std::size_t size() const { return ops_.size(); }
  Pauli op(std::size_t q) const { return ops_.at(q); }
  void set(std::size_t q, Pauli p) { ops_.at(q) = p; }

  bool is_identity() const;
  std::string str() const;

  /// True iff this string commutes with `other` (same length required).
  bool commutes_with(const PauliString& other) const;

  auto operator<=>(const PauliString& other) const = default;

 private:
  std::vector<Pauli> ops_;
};

/// Product of two Pauli strings: returns the resulting string and the
/// accumulated phase in {1, i, -1, -i}.
std::pair<std::complex<double>, PauliString> multiply(const PauliString& a,
                                                      const PauliString& b);

/// Hermitian operator as a real-weighted sum of Pauli strings plus a
/// scalar offset (the identity component, e.g. nuclear repulsion).
/// The identity string never appears in `terms`.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  std::size_t n_qubits() const { return n_qubits_; }
  double offset() const { return offset_; }
  void set_offset(double v) { offset_ = v; }

  const std::map<PauliString, double>& terms() const { return terms_; }

  /// Adds `coeff * p` to the sum. Identity strings fold into the offset;
  /// terms that cancel to zero are erased.
  void add_term(const PauliString& p, double coeff);

  std::string str() const;

 private:
  std::size_t n_qubits_ = 0;
  double offset_ = 0.0;
  std::map<PauliString, double> terms_;
};

/// Parses the Hamiltonian file format:
///   {"n_qubits":N,"offset":R,"terms":[{"pauli":"<IXYZ>","coeff":R},...]}
/// Throws std::runtime_error on malformed input, non-real coefficients or
/// inconsistent qubit counts.
PauliSum parse_pauli_sum(const std::string& text);

/// Serializes in the same format; coefficients round-trip bit-exactly.
std::string serialize_pauli_sum(const PauliSum& h);

/// The tapered 1-qubit H2/STO-3G Hamiltonian at equilibrium geometry:
/// 0.16814576933537334 X + 1.1973374204075313 Z, offset 0.
PauliSum preset_h2();

}  // namespace qpekit
