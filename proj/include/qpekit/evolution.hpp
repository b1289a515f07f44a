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

#include <vector>

#include "qpekit/dense.hpp"

namespace qpekit {

/// Time evolution recipe: first-order product formula over the
/// Hamiltonian terms with the convention U|E> = e^{2 pi i t E}|E> in the
/// infinite-Trotter-number limit (the identity offset is excluded here
/// and restored when phases are decoded to energies).
struct EvolutionSpec {
  PauliSum hamiltonian;
  double t = 0.5;
  int n_trotter = 1;
  /// Term application order; empty means the canonical (sorted) term
  /// order of the PauliSum.
  std::vector<PauliString> term_order;
};

/// [prod_j exp(2 pi i (t/n) c_j P_j)]^n over 1-2 qubit Hamiltonians.
UnitaryMatrix trotterized_unitary(const EvolutionSpec& spec);

/// Exact evolution exp(2 pi i t (H - offset)); reference for Trotter
/// error studies.
UnitaryMatrix exact_unitary(const PauliSum& h, double t);

struct PhaseEnergy {
  double phase;   // in [0, 1)
  double energy;  // hartree, offset included
};

/// Eigenphases of u as fractions of a full turn, decoded to energies
/// through the same branch rule as phase_to_energy.
std::vector<PhaseEnergy> eigenphase_table(const UnitaryMatrix& u, double t,
                                          double window_center,
                                          double offset = 0.0);

/// Unitary eigendecomposition u = q diag(e^{i phase}) q^dagger.
struct UnitaryEigensystem {
  Matrix q;
  std::vector<double> phases;  // radians in (-pi, pi]
};
UnitaryEigensystem diagonalize_unitary(const UnitaryMatrix& u);

/// u^(2^i) by doubling the eigenphases i times in compensated
/// double-double arithmetic (phases held as fractions of a turn, so the
/// mod-2pi reduction is an exact mod-1). Exponents up to 60 keep the full
/// double-precision phase accuracy that plain squaring would lose.
UnitaryMatrix power_phases(const UnitaryMatrix& u, int i);

/// The doubled eigenphases themselves (radians in [0, 2pi)), in the order
/// of diagonalize_unitary(u); exposed so precision checks can compare
/// against extended-precision references.
std::vector<double> power_eigenphases(const UnitaryMatrix& u, int i);

}  // namespace qpekit
