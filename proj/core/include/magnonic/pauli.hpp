// Copyright 2026 The magnonic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAGNONIC_PAULI_HPP
#define MAGNONIC_PAULI_HPP

#include <span>
#include <string_view>
#include <vector>

#include "magnonic/state.hpp"

namespace magnonic {

/// Single-site operators in the basis convention of StateVector:
///   sigma^z|1> = +|1>, sigma^z|0> = -|0>
///   sigma^+|0> = |1>,  sigma^+|1> = 0,   sigma^- = (sigma^+)^dagger
///   sigma^y|0> = -i|1>, sigma^y|1> = i|0>, so sigma^+ = (sigma^x + i sigma^y)/2.
enum class PauliAxis { X, Y, Z, Plus, Minus };

std::string_view to_string(PauliAxis axis) noexcept;

struct PauliFactor {
    int site;
    PauliAxis axis;
};

using PauliString = std::vector<PauliFactor>;

/// Exact linear action on the amplitudes. Site is 1-based.
StateVector apply_pauli(const StateVector &state, int site, PauliAxis axis);

/// Product of single-site operators on distinct sites (they commute, so order is irrelevant).
StateVector apply_pauli_string(const StateVector &state, std::span<const PauliFactor> factors);

/// <state| P |state> for a Pauli string P.
Complex expectation(const StateVector &state, std::span<const PauliFactor> factors);

/// <sigma^z_l> read off the diagonal.
double sigma_z_expectation(const StateVector &state, int site);

/// K_l = sigma^x_l prod_{m in C(l)} sigma^z_m.
PauliString cluster_stabilizer(const LatticeGraph &graph, int site);

/// All A_v (sigma^x stars) followed by all B_p (sigma^z plaquettes).
std::vector<PauliString> toric_stabilizers(const ToricLayout &layout);

/// Product of sigma^x over all sites, or of sigma^z over all sites.
PauliString global_flip(int n_sites, PauliAxis axis);

}  // namespace magnonic

#endif  // MAGNONIC_PAULI_HPP
