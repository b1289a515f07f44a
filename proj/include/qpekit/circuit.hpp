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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpekit/dense.hpp"

namespace qpekit {

enum class GateKind : std::uint8_t { RX, RY, RZ, H, CX, CPHASE, MEASURE };

std::string gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& s);

struct Gate {
  GateKind kind;
  int q0 = 0;        // target for 1q kinds; control for CX/CPHASE
  int q1 = -1;       // target for 2q kinds, else unused
  double angle = 0.0;

  bool is_two_qubit() const { return kind == GateKind::CX || kind == GateKind::CPHASE; }
  bool has_angle() const {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ ||
           kind == GateKind::CPHASE;
  }
};

struct RegisterRange {
  int start = 0;
  int size = 0;
};

struct ResourceReport {
  std::size_t total_gates = 0;
  std::size_t two_qubit_gates = 0;
  std::size_t depth = 0;
};

/// Ordered gate list over named qubit registers. Gates apply in list
/// order; the unitary of the circuit is the product of the gate matrices
/// right-to-left in time order. The global phase is tracked explicitly.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_qubits) : n_qubits_(n_qubits) {}

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  double global_phase() const { return global_phase_; }
  void add_global_phase(double p) { global_phase_ += p; }

  const std::map<std::string, RegisterRange>& registers() const { return registers_; }
  void set_register(const std::string& name, RegisterRange r);

  void add(Gate g);
  void rx(int q, double a) { add({GateKind::RX, q, -1, a}); }
  void ry(int q, double a) { add({GateKind::RY, q, -1, a}); }
  void rz(int q, double a) { add({GateKind::RZ, q, -1, a}); }
  void h(int q) { add({GateKind::H, q, -1, 0.0}); }
  void cx(int c, int t) { add({GateKind::CX, c, t, 0.0}); }
  void cphase(int c, int t, double a) { add({GateKind::CPHASE, c, t, a}); }
  void measure(int q) { add({GateKind::MEASURE, q, -1, 0.0}); }

  bool has_measurements() const;

  /// Appends `other`'s gates (same qubit count and registers required).
  /// Global phases add.
  void append(const Circuit& other);

  /// Appends `other` with its qubit i mapped to mapping[i]. Registers of
  /// `other` are ignored.
  void append_mapped(const Circuit& other, const std::vector<int>& mapping);

  std::string to_json() const;
  static Circuit from_json(const std::string& text);

 private:
  int n_qubits_ = 0;
  double global_phase_ = 0.0;
  std::vector<Gate> gates_;
  std::map<std::string, RegisterRange> registers_;
};

/// compose(a, b): gates of b follow the gates of a.
Circuit compose(const Circuit& a, const Circuit& b);

/// Adjoint circuit: gate order reversed, angles negated. Rejects circuits
/// containing measurements.
Circuit dagger(const Circuit& c);

/// Greedy as-soon-as-possible layering; a gate enters the earliest layer
/// in which all its qubits are free. MEASURE counts toward total_gates and
/// depth but never toward two_qubit_gates.
ResourceReport resource_report(const Circuit& c);

/// Dense unitary of the circuit including global phase. Rejects
/// measurements and circuits over 12 qubits.
UnitaryMatrix unitary_of(const Circuit& c);

/// Applies the circuit's gates (no measurements) to a state in place.
/// The basis index carries qubit q at bit position (n-1-q).
void apply_to_state(const Circuit& c, Vector& state);

}  // namespace qpekit
