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

#ifndef MAGNONIC_MODELS_HPP
#define MAGNONIC_MODELS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "magnonic/config.hpp"
#include "magnonic/entanglement.hpp"
#include "magnonic/magnon.hpp"
#include "magnonic/pauli.hpp"
#include "magnonic/state.hpp"

namespace magnonic {

enum class Boundary { Periodic, Open };

std::string_view to_string(Boundary boundary) noexcept;

/// H = -sum_bonds [sx sx + sy sy + sz sz].
struct HeisenbergFerro {};

/// H = -sum_bonds sz sz - B sum_l sx. Coupling along z, field along x.
struct TransverseIsing {
    double field = 0.0;
};

/// H = -sum_bonds [(1+gamma)/2 sx sx + (1-gamma)/2 sy sy] - B sum_l sz.
/// Coupling in the xy plane, field along z; gamma = 1 is the Ising chain
/// rotated relative to TransverseIsing.
struct XYModel {
    double gamma = 1.0;
    double field = 0.0;
};

using ModelFamily = std::variant<HeisenbergFerro, TransverseIsing, XYModel>;

struct HamiltonianSpec {
    ModelFamily family;
    int n_sites = 2;
    Boundary boundary = Boundary::Periodic;

    /// N >= 2, B >= 0, gamma in [0,1]; throws DomainError otherwise.
    void validate() const;

    /// "heisenberg", "ising" or "xy".
    std::string family_name() const;
};

/// Bond list (l, l+1) for l = 1..N-1, plus (N, 1) when periodic. For N = 2
/// periodic the (2,1) bond repeats (1,2), as the literal ring sum does.
std::vector<std::pair<int, int>> bonds(const HamiltonianSpec &spec);

/// Matrix-free H|psi>.
StateVector apply_hamiltonian(const HamiltonianSpec &spec, const StateVector &state);
void apply_hamiltonian(const HamiltonianSpec &spec, std::span<const Complex> in, std::span<Complex> out);

/// <psi|H|psi>.
double energy(const HamiltonianSpec &spec, const StateVector &state);

/// Global Z2 symmetry used to split the Lanczos search: prod sigma^x for
/// the transverse Ising chain, prod sigma^z for the XY and Heisenberg chains.
PauliAxis conserved_parity(const HamiltonianSpec &spec);

struct GroundOptions {
    Tolerances tol{};
    int max_sites = kDefaultMaxSites;
    /// Cross-check against the dense spectrum when N <= kDenseOracleMaxSites.
    bool dense_oracle = true;
    std::uint64_t seed = 0x5eedULL;
};

struct GroundResult {
    double energy = 0.0;
    StateVector state;
    /// Distance to the next level: min(other sector's lowest, second level in this sector).
    double gap_to_next = 0.0;
    /// gap_to_next < tol.degeneracy; quantities derived from state then depend on the representative.
    bool degenerate = false;
    /// ||H psi - E psi||.
    double residual = 0.0;
    /// Eigenvalue (+1 or -1) of conserved_parity(spec) on the returned state.
    int parity = 1;
    std::optional<double> dense_energy;
    std::size_t iterations = 0;
};

/// Lowest eigenpair by sector-resolved Lanczos.
///
/// Each parity sector is searched separately; when the two sector minima lie
/// within tol.degeneracy of each other the +1 sector is returned. Throws
/// ConvergenceError if the residual exceeds tol.residual and ConsistencyError
/// if the dense oracle disagrees by more than tol.residual.
GroundResult ground_state(const HamiltonianSpec &spec, const GroundOptions &options = {});

/// All eigenvalues, ascending, from a dense diagonalization. Limited to 14 sites.
std::vector<double> dense_spectrum(const HamiltonianSpec &spec);

struct DispersionCheck {
    bool is_eigenstate = false;
    /// epsilon_k = <phi|H|phi>/<phi|phi> - E_vacuum for phi = M_k^dagger |0...0>.
    double excitation_energy = 0.0;
    double vacuum_energy = 0.0;
    /// ||H phi - (E_vacuum + epsilon_k) phi|| / ||phi||.
    double residual = 0.0;
};

/// One-magnon test on the periodic Heisenberg ferromagnet. Open boundaries
/// are rejected with DomainError.
DispersionCheck magnon_dispersion_check(int n_sites, const MagnonMode &mode, Boundary boundary = Boundary::Periodic,
                                        const Tolerances &tol = {});

struct XYSweepPoint {
    double gamma = 0.0;
    double field = 0.0;
    GroundResult ground;
    EntanglementReport report;
    BoundChain chain;
};

/// True at the fully polarized XX limit (gamma = 0, B >= 1), where the
/// ground state is a product state.
bool xy_is_separable_limit(double gamma, double field) noexcept;

/// Ground state, entanglement report and bound chain (mode k = 0) on every
/// (gamma, B) point, gamma-major. Throws ConsistencyError if a point away
/// from xy_is_separable_limit has min_l S_l <= tol.algebraic.
std::vector<XYSweepPoint> xy_sweep(int n_sites, std::span<const double> gammas, std::span<const double> fields,
                                   Boundary boundary = Boundary::Periodic, const GroundOptions &options = {});

}  // namespace magnonic

#endif  // MAGNONIC_MODELS_HPP
