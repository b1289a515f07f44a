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

#include "qpekit/pauli.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace qpekit {

namespace {
constexpr double kCoeffCutoff = 1e-12;
}

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw std::runtime_error(std::string("invalid Pauli symbol '") + c + "'");
  }
}

PauliString::PauliString(const std::string& s) {
  if (s.empty()) throw std::runtime_error("empty Pauli string");
  ops_.reserve(s.size());
  for (char c : s) ops_.push_back(pauli_from_char(c));
}

bool PauliString::is_identity() const {
  for (Pauli p : ops_)
    if (p != Pauli::I) return false;
  return true;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(ops_.size());
  for (Pauli p : ops_) s.push_back(pauli_char(p));
  return s;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (size() != other.size())
    throw std::invalid_argument("Pauli strings of different length");
  // Symplectic criterion: strings commute iff they anticommute on an even
  // number of qubits.
  int anti = 0;
  for (std::size_t q = 0; q < size(); ++q) {
    Pauli a = ops_[q], b = other.op(q);
    if (a != Pauli::I && b != Pauli::I && a != b) ++anti;
  }
  return (anti % 2) == 0;
}

std::pair<std::complex<double>, PauliString> multiply(const PauliString& a,
                                                      const PauliString& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("Pauli strings of different length");
  const std::complex<double> im(0.0, 1.0);
  std::complex<double> phase(1.0, 0.0);
  PauliString out(a.size());
  for (std::size_t q = 0; q < a.size(); ++q) {
    int pa = static_cast<int>(a.op(q));
    int pb = static_cast<int>(b.op(q));
    if (pa == 0) {
      out.set(q, static_cast<Pauli>(pb));
    } else if (pb == 0) {
      out.set(q, static_cast<Pauli>(pa));
    } else if (pa == pb) {
      out.set(q, Pauli::I);
    } else {
      int pc = 6 - pa - pb;  // the third non-identity Pauli
      // Cyclic XY=iZ, YZ=iX, ZX=iY; anticyclic pick up -i.
      bool cyclic = (pa == 1 && pb == 2) || (pa == 2 && pb == 3) ||
                    (pa == 3 && pb == 1);
      phase *= cyclic ? im : -im;
      out.set(q, static_cast<Pauli>(pc));
    }
  }
  return {phase, out};
}

void PauliSum::add_term(const PauliString& p, double coeff) {
  if (p.size() != n_qubits_)
    throw std::invalid_argument("term qubit count mismatch");
  if (p.is_identity()) {
    offset_ += coeff;
    return;
  }
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (std::abs(coeff) > kCoeffCutoff) terms_.emplace(p, coeff);
  } else {
    it->second += coeff;
    if (std::abs(it->second) <= kCoeffCutoff) terms_.erase(it);
  }
}

std::string PauliSum::str() const {
  std::ostringstream os;
  os.precision(17);
  os << offset_;
  for (const auto& [p, c] : terms_) os << " + " << c << " " << p.str();
  return os.str();
}

PauliSum parse_pauli_sum(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("Hamiltonian file is not valid JSON: ") + e.what());
  }
  if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer())
    throw std::runtime_error("Hamiltonian file missing integer n_qubits");
  const auto n = j["n_qubits"].get<std::int64_t>();
  if (n < 1) throw std::runtime_error("n_qubits must be >= 1");
  PauliSum h(static_cast<std::size_t>(n));
  if (j.contains("offset")) {
    if (!j["offset"].is_number())
      throw std::runtime_error("offset must be a real number");
    h.set_offset(j["offset"].get<double>());
  }
  if (j.contains("terms")) {
    if (!j["terms"].is_array()) throw std::runtime_error("terms must be an array");
    for (const auto& t : j["terms"]) {
      if (!t.contains("pauli") || !t["pauli"].is_string())
        throw std::runtime_error("term missing pauli string");
      if (!t.contains("coeff") || !t["coeff"].is_number())
        throw std::runtime_error("term coefficient missing or not real");
      PauliString p(t["pauli"].get<std::string>());
      if (p.size() != static_cast<std::size_t>(n))
        throw std::runtime_error("term '" + p.str() + "' has inconsistent qubit count");
      h.add_term(p, t["coeff"].get<double>());
    }
  }
  return h;
}

std::string serialize_pauli_sum(const PauliSum& h) {
  nlohmann::json j;
  j["n_qubits"] = h.n_qubits();
  j["offset"] = h.offset();
  j["terms"] = nlohmann::json::array();
  for (const auto& [p, c] : h.terms())
    j["terms"].push_back({{"pauli", p.str()}, {"coeff", c}});
  return j.dump();
}

PauliSum preset_h2() {
  PauliSum h(1);
  h.add_term(PauliString("X"), 0.16814576933537334);
  h.add_term(PauliString("Z"), 1.1973374204075313);
  return h;
}

}  // namespace qpekit
