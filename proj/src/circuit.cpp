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

#include "qpekit/circuit.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace qpekit {

namespace {

Matrix gate_matrix_1q(const Gate& g) {
  Matrix m(2, 2);
  const std::complex<double> im(0.0, 1.0);
  const double h = g.angle / 2.0;
  switch (g.kind) {
    case GateKind::RX:
      m << std::cos(h), -im * std::sin(h), -im * std::sin(h), std::cos(h);
      break;
    case GateKind::RY:
      m << std::cos(h), -std::sin(h), std::sin(h), std::cos(h);
      break;
    case GateKind::RZ:
      m << std::exp(-im * h), 0, 0, std::exp(im * h);
      break;
    case GateKind::H:
      m << 1, 1, 1, -1;
      m /= std::sqrt(2.0);
      break;
    default:
      throw std::logic_error("not a 1q gate");
  }
  return m;
}

}  // namespace

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::H: return "h";
    case GateKind::CX: return "cx";
    case GateKind::CPHASE: return "cphase";
    case GateKind::MEASURE: return "measure";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& s) {
  if (s == "rx") return GateKind::RX;
  if (s == "ry") return GateKind::RY;
  if (s == "rz") return GateKind::RZ;
  if (s == "h") return GateKind::H;
  if (s == "cx") return GateKind::CX;
  if (s == "cphase") return GateKind::CPHASE;
  if (s == "measure") return GateKind::MEASURE;
  throw std::runtime_error("unknown gate kind '" + s + "'");
}

void Circuit::set_register(const std::string& name, RegisterRange r) {
  if (r.start < 0 || r.size < 0 || r.start + r.size > n_qubits_)
    throw std::invalid_argument("register out of range");
  registers_[name] = r;
}

void Circuit::add(Gate g) {
  if (g.q0 < 0 || g.q0 >= n_qubits_)
    throw std::invalid_argument("gate qubit out of range");
  if (g.is_two_qubit()) {
    if (g.q1 < 0 || g.q1 >= n_qubits_ || g.q1 == g.q0)
      throw std::invalid_argument("two-qubit gate needs two distinct qubits");
  }
  if (g.has_angle() && !std::isfinite(g.angle))
    throw std::invalid_argument("gate angle not finite");
  gates_.push_back(g);
}

bool Circuit::has_measurements() const {
  for (const auto& g : gates_)
    if (g.kind == GateKind::MEASURE) return true;
  return false;
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_)
    throw std::invalid_argument("compose: qubit count mismatch");
  for (const auto& [name, r] : other.registers_) {
    auto it = registers_.find(name);
    if (it != registers_.end() &&
        (it->second.start != r.start || it->second.size != r.size))
      throw std::invalid_argument("compose: register map mismatch");
  }
  for (const auto& g : other.gates_) gates_.push_back(g);
  global_phase_ += other.global_phase_;
}

void Circuit::append_mapped(const Circuit& other, const std::vector<int>& mapping) {
  if (mapping.size() != static_cast<std::size_t>(other.n_qubits_))
    throw std::invalid_argument("mapping size mismatch");
  for (Gate g : other.gates_) {
    g.q0 = mapping.at(g.q0);
    if (g.is_two_qubit()) g.q1 = mapping.at(g.q1);
    add(g);
  }
  global_phase_ += other.global_phase_;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  for (const auto& [name, r] : b.registers())
    if (!out.registers().contains(name)) out.set_register(name, r);
  out.append(b);
  return out;
}

Circuit dagger(const Circuit& c) {
  if (c.has_measurements())
    throw std::invalid_argument("dagger of a measured circuit");
  Circuit out(c.n_qubits());
  for (const auto& [name, r] : c.registers()) out.set_register(name, r);
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    Gate g = *it;
    if (g.has_angle()) g.angle = -g.angle;
    out.add(g);
  }
  out.add_global_phase(-c.global_phase());
  return out;
}

ResourceReport resource_report(const Circuit& c) {
  ResourceReport r;
  r.total_gates = c.gates().size();
  std::vector<std::size_t> busy(c.n_qubits(), 0);
  for (const auto& g : c.gates()) {
    if (g.is_two_qubit()) ++r.two_qubit_gates;
    std::size_t layer = busy[g.q0] + 1;
    if (g.is_two_qubit()) layer = std::max(layer, busy[g.q1] + 1);
    busy[g.q0] = layer;
    if (g.is_two_qubit()) busy[g.q1] = layer;
    r.depth = std::max(r.depth, layer);
  }
  return r;
}

void apply_to_state(const Circuit& c, Vector& state) {
  const int n = c.n_qubits();
  if (state.size() != (Eigen::Index(1) << n))
    throw std::invalid_argument("state dimension mismatch");
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::MEASURE)
      throw std::invalid_argument("apply_to_state: measurement present");
    if (g.kind == GateKind::CX) {
      const Eigen::Index cbit = Eigen::Index(1) << (n - 1 - g.q0);
      const Eigen::Index tbit = Eigen::Index(1) << (n - 1 - g.q1);
      for (Eigen::Index i = 0; i < state.size(); ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(state[i], state[i | tbit]);
    } else if (g.kind == GateKind::CPHASE) {
      const Eigen::Index cbit = Eigen::Index(1) << (n - 1 - g.q0);
      const Eigen::Index tbit = Eigen::Index(1) << (n - 1 - g.q1);
      const std::complex<double> ph = std::exp(std::complex<double>(0, g.angle));
      for (Eigen::Index i = 0; i < state.size(); ++i)
        if ((i & cbit) && (i & tbit)) state[i] *= ph;
    } else {
      Matrix m = gate_matrix_1q(g);
      const Eigen::Index bit = Eigen::Index(1) << (n - 1 - g.q0);
      for (Eigen::Index i = 0; i < state.size(); ++i) {
        if (i & bit) continue;
        const std::complex<double> a = state[i], b = state[i | bit];
        state[i] = m(0, 0) * a + m(0, 1) * b;
        state[i | bit] = m(1, 0) * a + m(1, 1) * b;
      }
    }
  }
  state *= std::exp(std::complex<double>(0, c.global_phase()));
}

UnitaryMatrix unitary_of(const Circuit& c) {
  if (c.n_qubits() > 12)
    throw std::invalid_argument("unitary_of limited to 12 qubits");
  if (c.has_measurements())
    throw std::invalid_argument("unitary_of: measurement present");
  const Eigen::Index dim = Eigen::Index(1) << c.n_qubits();
  Matrix u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Vector v = Vector::Zero(dim);
    v[col] = 1.0;
    apply_to_state(c, v);
    u.col(col) = v;
  }
  return UnitaryMatrix(u);
}

std::string Circuit::to_json() const {
  nlohmann::json j;
  j["n_qubits"] = n_qubits_;
  j["global_phase"] = global_phase_;
  j["registers"] = nlohmann::json::object();
  for (const auto& [name, r] : registers_)
    j["registers"][name] = {{"start", r.start}, {"size", r.size}};
  j["gates"] = nlohmann::json::array();
  for (const auto& g : gates_) {
    nlohmann::json je;
    je["kind"] = gate_kind_name(g.kind);
    if (g.is_two_qubit())
      je["qubits"] = {g.q0, g.q1};
    else
      je["qubits"] = {g.q0};
    if (g.has_angle()) je["angle"] = g.angle;
    j["gates"].push_back(je);
  }
  return j.dump();
}

Circuit Circuit::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Circuit c(j.at("n_qubits").get<int>());
  if (j.contains("global_phase")) c.add_global_phase(j["global_phase"].get<double>());
  if (j.contains("registers"))
    for (auto it = j["registers"].begin(); it != j["registers"].end(); ++it)
      c.set_register(it.key(), {it.value().at("start").get<int>(),
                                it.value().at("size").get<int>()});
  for (const auto& je : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_name(je.at("kind").get<std::string>());
    auto qs = je.at("qubits").get<std::vector<int>>();
    g.q0 = qs.at(0);
    if (qs.size() > 1) g.q1 = qs[1];
    if (je.contains("angle")) g.angle = je["angle"].get<double>();
    c.add(g);
  }
  return c;
}

}  // namespace qpekit
