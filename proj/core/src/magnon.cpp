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

#include "magnonic/magnon.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "magnonic/errors.hpp"
#include "magnonic/pauli.hpp"

namespace magnonic {

MagnonMode MagnonMode::quantized(int n_sites, int index) {
    if (n_sites < 1) {
        throw InvalidSizeError("magnon mode needs at least one site");
    }
    if (index < 0 || index >= n_sites) {
        throw DomainError("mode index " + std::to_string(index) + " outside 0.." + std::to_string(n_sites - 1));
    }
    return MagnonMode(n_sites, 2.0 * std::numbers::pi * index / n_sites, index);
}

MagnonMode MagnonMode::with_wavenumber(int n_sites, double wavenumber) {
    if (n_sites < 1) {
        throw InvalidSizeError("magnon mode needs at least one site");
    }
    if (!std::isfinite(wavenumber)) {
        throw DomainError("wavenumber must be finite");
    }
    return MagnonMode(n_sites, wavenumber, std::nullopt);
}

namespace {

void check_mode(const StateVector &state, const MagnonMode &mode) {
    if (mode.n_sites() != state.n_sites()) {
        throw DomainError("magnon mode defined on " + std::to_string(mode.n_sites()) + " sites applied to a " +
                          std::to_string(state.n_sites()) + "-site state");
    }
}

// Coefficients e^{+-ikl}/sqrt(N) for l = 1..N.
std::vector<Complex> fourier_weights(const MagnonMode &mode, double sign) {
    const int n = mode.n_sites();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Complex> w(n);
    for (int l = 1; l <= n; ++l) {
        w[l - 1] = std::polar(scale, sign * mode.wavenumber() * l);
    }
    return w;
}

}  // namespace

StateVector magnon_create(const StateVector &state, const MagnonMode &mode) {
    check_mode(state, mode);
    const auto weights = fourier_weights(mode, +1.0);
    const auto in = state.amplitudes();
    Amplitudes out(state.dim());
    for (int l = 1; l <= state.n_sites(); ++l) {
        const std::uint64_t mask = site_mask(l);
        const Complex w = weights[l - 1];
        for (std::size_t b = 0; b < in.size(); ++b) {
            if ((b & mask) == 0) {
                out[b | mask] += w * in[b];
            }
        }
    }
    return StateVector(state.n_sites(), std::move(out));
}

StateVector magnon_annihilate(const StateVector &state, const MagnonMode &mode) {
    check_mode(state, mode);
    const auto weights = fourier_weights(mode, -1.0);
    const auto in = state.amplitudes();
    Amplitudes out(state.dim());
    for (int l = 1; l <= state.n_sites(); ++l) {
        const std::uint64_t mask = site_mask(l);
        const Complex w = weights[l - 1];
        for (std::size_t b = 0; b < in.size(); ++b) {
            if (b & mask) {
                out[b ^ mask] += w * in[b];
            }
        }
    }
    return StateVector(state.n_sites(), std::move(out));
}

CommutatorRoutes commutator_routes(const StateVector &state, const MagnonMode &mode) {
    check_mode(state, mode);
    const Complex create_first = state.inner(magnon_annihilate(magnon_create(state, mode), mode));
    const Complex annihilate_first = state.inner(magnon_create(magnon_annihilate(state, mode), mode));

    double z_sum = 0.0;
    for (int l = 1; l <= state.n_sites(); ++l) {
        z_sum += sigma_z_expectation(state, l);
    }
    return {create_first - annihilate_first, -z_sum / state.n_sites()};
}

double commutator_expectation(const StateVector &state, const MagnonMode &mode, const Tolerances &tol) {
    const CommutatorRoutes routes = commutator_routes(state, mode);
    if (std::abs(routes.direct.imag()) > tol.composed) {
        throw ConsistencyError("commutator expectation has imaginary residue " +
                               std::to_string(routes.direct.imag()));
    }
    if (std::abs(routes.direct.real() - routes.closed_form) > tol.composed) {
        throw ConsistencyError("direct commutator " + std::to_string(routes.direct.real()) +
                               " disagrees with closed form " + std::to_string(routes.closed_form));
    }
    return routes.direct.real();
}

double bosonic_indicator(const StateVector &state, const MagnonMode &mode, const Tolerances &tol) {
    return std::abs(commutator_expectation(state, mode, tol));
}

CrossCommutators cross_commutators(const StateVector &state, const MagnonMode &first, const MagnonMode &second) {
    check_mode(state, first);
    check_mode(state, second);
    const Complex aa = state.inner(magnon_annihilate(magnon_annihilate(state, second), first)) -
                       state.inner(magnon_annihilate(magnon_annihilate(state, first), second));
    const Complex cc = state.inner(magnon_create(magnon_create(state, second), first)) -
                       state.inner(magnon_create(magnon_create(state, first), second));
    return {aa, cc};
}

}  // namespace magnonic
