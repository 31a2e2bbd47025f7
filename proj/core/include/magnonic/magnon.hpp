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

#ifndef MAGNONIC_MAGNON_HPP
#define MAGNONIC_MAGNON_HPP

#include <optional>

#include "magnonic/config.hpp"
#include "magnonic/state.hpp"

namespace magnonic {

/// A magnon wavenumber on an N-site ring.
///
/// Modes are normally quantized, k = 2 pi j / N. with_wavenumber() accepts an
/// arbitrary real k for exploration; such modes carry no index.
class MagnonMode {
  public:
    static MagnonMode quantized(int n_sites, int index);
    static MagnonMode with_wavenumber(int n_sites, double wavenumber);

    int n_sites() const noexcept { return n_sites_; }
    double wavenumber() const noexcept { return wavenumber_; }
    std::optional<int> index() const noexcept { return index_; }

  private:
    MagnonMode(int n_sites, double k, std::optional<int> index) : n_sites_(n_sites), wavenumber_(k), index_(index) {}

    int n_sites_;
    double wavenumber_;
    std::optional<int> index_;
};

/// M_k^dagger = N^{-1/2} sum_l e^{ikl} sigma^+_l. Output is unnormalized.
StateVector magnon_create(const StateVector &state, const MagnonMode &mode);

/// M_k = N^{-1/2} sum_l e^{-ikl} sigma^-_l. Output is unnormalized.
StateVector magnon_annihilate(const StateVector &state, const MagnonMode &mode);

/// Both evaluations of <psi|[M_k, M_k^dagger]|psi>.
struct CommutatorRoutes {
    /// <psi|M_k M_k^dagger|psi> - <psi|M_k^dagger M_k|psi> by operator application.
    Complex direct;
    /// -(1/N) sum_l <sigma^z_l>, from [sigma^-_l, sigma^+_l] = -sigma^z_l.
    double closed_form;
};

CommutatorRoutes commutator_routes(const StateVector &state, const MagnonMode &mode);

/// Signed <psi|[M_k, M_k^dagger]|psi>. Evaluates both routes and throws
/// ConsistencyError if they differ by more than tol.composed or the direct
/// route carries an imaginary part above tol.composed.
double commutator_expectation(const StateVector &state, const MagnonMode &mode, const Tolerances &tol = {});

/// |<psi|[M_k, M_k^dagger]|psi>|; 1 for ideal bosons.
double bosonic_indicator(const StateVector &state, const MagnonMode &mode, const Tolerances &tol = {});

struct CrossCommutators {
    /// <psi|[M_k, M_k']|psi>
    Complex annihilators;
    /// <psi|[M_k^dagger, M_k'^dagger]|psi>
    Complex creators;
};

CrossCommutators cross_commutators(const StateVector &state, const MagnonMode &first, const MagnonMode &second);

}  // namespace magnonic

#endif  // MAGNONIC_MAGNON_HPP
