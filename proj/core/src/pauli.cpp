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

#include "magnonic/pauli.hpp"

#include <string>

#include "magnonic/errors.hpp"

namespace magnonic {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_site(const StateVector &state, int site) {
    if (site < 1 || site > state.n_sites()) {
        throw DomainError("site " + std::to_string(site) + " outside 1.." + std::to_string(state.n_sites()));
    }
}

// Writes the image of 'in' into 'out'; the buffers must not alias.
void act(std::span<const Complex> in, std::span<Complex> out, int site, PauliAxis axis) {
    const std::uint64_t mask = site_mask(site);
    const std::size_t dim = in.size();
    switch (axis) {
    case PauliAxis::X:
        for (std::size_t b = 0; b < dim; ++b) {
            out[b ^ mask] = in[b];
        }
        break;
    case PauliAxis::Y:
        for (std::size_t b = 0; b < dim; ++b) {
            out[b ^ mask] = (b & mask) ? kI * in[b] : -kI * in[b];
        }
        break;
    case PauliAxis::Z:
        for (std::size_t b = 0; b < dim; ++b) {
            out[b] = (b & mask) ? in[b] : -in[b];
        }
        break;
    case PauliAxis::Plus:
        for (std::size_t b = 0; b < dim; ++b) {
            out[b] = (b & mask) ? in[b ^ mask] : Complex{};
        }
        break;
    case PauliAxis::Minus:
        for (std::size_t b = 0; b < dim; ++b) {
            out[b] = (b & mask) ? Complex{} : in[b ^ mask];
        }
        break;
    }
}

}  // namespace

std::string_view to_string(PauliAxis axis) noexcept {
    switch (axis) {
    case PauliAxis::X:
        return "X";
    case PauliAxis::Y:
        return "Y";
    case PauliAxis::Z:
        return "Z";
    case PauliAxis::Plus:
        return "+";
    case PauliAxis::Minus:
        return "-";
    }
    return "?";
}

StateVector apply_pauli(const StateVector &state, int site, PauliAxis axis) {
    check_site(state, site);
    Amplitudes out(state.dim());
    act(state.amplitudes(), out, site, axis);
    return StateVector(state.n_sites(), std::move(out));
}

StateVector apply_pauli_string(const StateVector &state, std::span<const PauliFactor> factors) {
    std::uint64_t seen = 0;
    for (const PauliFactor &f : factors) {
        check_site(state, f.site);
        if (seen & site_mask(f.site)) {
            throw DomainError("site " + std::to_string(f.site) + " repeated in Pauli string");
        }
        seen |= site_mask(f.site);
    }
    Amplitudes current(state.amplitudes().begin(), state.amplitudes().end());
    Amplitudes scratch(state.dim());
    for (const PauliFactor &f : factors) {
        act(current, scratch, f.site, f.axis);
        current.swap(scratch);
    }
    return StateVector(state.n_sites(), std::move(current));
}

Complex expectation(const StateVector &state, std::span<const PauliFactor> factors) {
    return state.inner(apply_pauli_string(state, factors));
}

double sigma_z_expectation(const StateVector &state, int site) {
    check_site(state, site);
    const std::uint64_t mask = site_mask(site);
    const auto amps = state.amplitudes();
    double sum = 0.0;
    for (std::size_t b = 0; b < amps.size(); ++b) {
        sum += (b & mask) ? std::norm(amps[b]) : -std::norm(amps[b]);
    }
    return sum;
}

PauliString cluster_stabilizer(const LatticeGraph &graph, int site) {
    PauliString out{{site, PauliAxis::X}};
    for (int m : graph.neighbors(site)) {
        out.push_back({m, PauliAxis::Z});
    }
    return out;
}

std::vector<PauliString> toric_stabilizers(const ToricLayout &layout) {
    std::vector<PauliString> out;
    for (const auto &star : layout.vertex_stars()) {
        PauliString p;
        for (int s : star) {
            p.push_back({s, PauliAxis::X});
        }
        out.push_back(std::move(p));
    }
    for (const auto &plaquette : layout.plaquettes()) {
        PauliString p;
        for (int s : plaquette) {
            p.push_back({s, PauliAxis::Z});
        }
        out.push_back(std::move(p));
    }
    return out;
}

PauliString global_flip(int n_sites, PauliAxis axis) {
    PauliString out;
    for (int l = 1; l <= n_sites; ++l) {
        out.push_back({l, axis});
    }
    return out;
}

}  // namespace magnonic
