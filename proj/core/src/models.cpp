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

#include "magnonic/models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "magnonic/errors.hpp"
#include "magnonic/lanczos.hpp"

namespace magnonic {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr int kDenseSpectrumMaxSites = 14;

bool same_spin(std::size_t b, std::uint64_t mask_a, std::uint64_t mask_b) {
    return ((b & mask_a) != 0) == ((b & mask_b) != 0);
}

void apply_heisenberg(const std::vector<std::pair<int, int>> &bond_list, std::span<const Complex> in,
                      std::span<Complex> out) {
    // Per bond: sz sz is diagonal (+1 aligned, -1 anti-aligned); sx sx + sy sy
    // moves an anti-aligned pair to its flipped partner with weight 2.
    for (const auto &[a, c] : bond_list) {
        const std::uint64_t ma = site_mask(a);
        const std::uint64_t mc = site_mask(c);
        const std::uint64_t pair = ma | mc;
        for (std::size_t b = 0; b < in.size(); ++b) {
            if (same_spin(b, ma, mc)) {
                out[b] -= in[b];
            } else {
                out[b] += in[b];
                out[b ^ pair] -= 2.0 * in[b];
            }
        }
    }
}

void apply_transverse_ising(double field, int n, const std::vector<std::pair<int, int>> &bond_list,
                            std::span<const Complex> in, std::span<Complex> out) {
    for (const auto &[a, c] : bond_list) {
        const std::uint64_t ma = site_mask(a);
        const std::uint64_t mc = site_mask(c);
        for (std::size_t b = 0; b < in.size(); ++b) {
            out[b] += same_spin(b, ma, mc) ? -in[b] : in[b];
        }
    }
    if (field != 0.0) {
        for (int l = 1; l <= n; ++l) {
            const std::uint64_t m = site_mask(l);
            for (std::size_t b = 0; b < in.size(); ++b) {
                out[b ^ m] -= field * in[b];
            }
        }
    }
}

void apply_xy(double gamma, double field, int n, const std::vector<std::pair<int, int>> &bond_list,
              std::span<const Complex> in, std::span<Complex> out) {
    // (1+g)/2 sx sx + (1-g)/2 sy sy flips both spins; sy sy contributes -1 on
    // aligned pairs and +1 on anti-aligned ones, so the flip weight is g or 1.
    for (const auto &[a, c] : bond_list) {
        const std::uint64_t ma = site_mask(a);
        const std::uint64_t mc = site_mask(c);
        const std::uint64_t pair = ma | mc;
        for (std::size_t b = 0; b < in.size(); ++b) {
            const double weight = same_spin(b, ma, mc) ? gamma : 1.0;
            out[b ^ pair] -= weight * in[b];
        }
    }
    if (field != 0.0) {
        for (int l = 1; l <= n; ++l) {
            const std::uint64_t m = site_mask(l);
            for (std::size_t b = 0; b < in.size(); ++b) {
                out[b] -= (b & m) ? field * in[b] : -field * in[b];
            }
        }
    }
}

double vector_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const Complex &x : v) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

// Projector onto the eigenvalue 'sector' of prod sigma^axis over all n sites.
Projector parity_projector(PauliAxis axis, int n, int sector) {
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    if (axis == PauliAxis::X) {
        return [all, sector](std::span<Complex> v) {
            for (std::size_t b = 0; b < v.size(); ++b) {
                const std::size_t partner = b ^ all;
                if (b < partner) {
                    const Complex even = 0.5 * (v[b] + static_cast<double>(sector) * v[partner]);
                    v[b] = even;
                    v[partner] = static_cast<double>(sector) * even;
                }
            }
        };
    }
    return [n, sector](std::span<Complex> v) {
        for (std::size_t b = 0; b < v.size(); ++b) {
            const int zeros = n - std::popcount(static_cast<std::uint64_t>(b));
            const int eigenvalue = (zeros % 2 == 0) ? 1 : -1;
            if (eigenvalue != sector) {
                v[b] = Complex{};
            }
        }
    };
}

}  // namespace

std::string_view to_string(Boundary boundary) noexcept {
    return boundary == Boundary::Periodic ? "periodic" : "open";
}

void HamiltonianSpec::validate() const {
    if (n_sites < 2) {
        throw DomainError("Hamiltonian needs at least two sites");
    }
    std::visit(Overloaded{
                   [](const HeisenbergFerro &) {},
                   [](const TransverseIsing &m) {
                       if (!(m.field >= 0.0) || !std::isfinite(m.field)) {
                           throw DomainError("transverse field must be finite and >= 0");
                       }
                   },
                   [](const XYModel &m) {
                       if (!(m.field >= 0.0) || !std::isfinite(m.field)) {
                           throw DomainError("XY field must be finite and >= 0");
                       }
                       if (!(m.gamma >= 0.0 && m.gamma <= 1.0)) {
                           throw DomainError("XY anisotropy gamma must lie in [0,1]");
                       }
                   },
               },
               family);
}

std::string HamiltonianSpec::family_name() const {
    return std::visit(Overloaded{
                          [](const HeisenbergFerro &) { return std::string("heisenberg"); },
                          [](const TransverseIsing &) { return std::string("ising"); },
                          [](const XYModel &) { return std::string("xy"); },
                      },
                      family);
}

std::vector<std::pair<int, int>> bonds(const HamiltonianSpec &spec) {
    std::vector<std::pair<int, int>> out;
    for (int l = 1; l < spec.n_sites; ++l) {
        out.emplace_back(l, l + 1);
    }
    if (spec.boundary == Boundary::Periodic) {
        out.emplace_back(spec.n_sites, 1);
    }
    return out;
}

void apply_hamiltonian(const HamiltonianSpec &spec, std::span<const Complex> in, std::span<Complex> out) {
    spec.validate();
    if (in.size() != (std::size_t{1} << spec.n_sites) || out.size() != in.size()) {
        throw DomainError("Hamiltonian on " + std::to_string(spec.n_sites) + " sites applied to a vector of length " +
                          std::to_string(in.size()));
    }
    std::fill(out.begin(), out.end(), Complex{});
    const auto bond_list = bonds(spec);
    std::visit(Overloaded{
                   [&](const HeisenbergFerro &) { apply_heisenberg(bond_list, in, out); },
                   [&](const TransverseIsing &m) { apply_transverse_ising(m.field, spec.n_sites, bond_list, in, out); },
                   [&](const XYModel &m) { apply_xy(m.gamma, m.field, spec.n_sites, bond_list, in, out); },
               },
               spec.family);
}

StateVector apply_hamiltonian(const HamiltonianSpec &spec, const StateVector &state) {
    if (state.n_sites() != spec.n_sites) {
        throw DomainError("Hamiltonian on " + std::to_string(spec.n_sites) + " sites applied to a " +
                          std::to_string(state.n_sites()) + "-site state");
    }
    Amplitudes out(state.dim());
    apply_hamiltonian(spec, state.amplitudes(), out);
    return StateVector(state.n_sites(), std::move(out));
}

double energy(const HamiltonianSpec &spec, const StateVector &state) {
    return state.inner(apply_hamiltonian(spec, state)).real();
}

PauliAxis conserved_parity(const HamiltonianSpec &spec) {
    return std::holds_alternative<TransverseIsing>(spec.family) ? PauliAxis::X : PauliAxis::Z;
}

std::vector<double> dense_spectrum(const HamiltonianSpec &spec) {
    spec.validate();
    if (spec.n_sites > kDenseSpectrumMaxSites) {
        throw ResourceError("dense diagonalization is limited to " + std::to_string(kDenseSpectrumMaxSites) +
                            " sites");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << spec.n_sites);
    Eigen::MatrixXcd h(dim, dim);
    Amplitudes unit(static_cast<std::size_t>(dim));
    Amplitudes column(static_cast<std::size_t>(dim));
    double max_imag = 0.0;
    for (Eigen::Index c = 0; c < dim; ++c) {
        unit[static_cast<std::size_t>(c)] = 1.0;
        apply_hamiltonian(spec, unit, column);
        unit[static_cast<std::size_t>(c)] = 0.0;
        for (Eigen::Index r = 0; r < dim; ++r) {
            h(r, c) = column[static_cast<std::size_t>(r)];
            max_imag = std::max(max_imag, std::abs(column[static_cast<std::size_t>(r)].imag()));
        }
    }
    Eigen::VectorXd values;
    if (max_imag == 0.0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.real(), Eigen::EigenvaluesOnly);
        values = solver.eigenvalues();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
        values = solver.eigenvalues();
    }
    return {values.data(), values.data() + values.size()};
}

GroundResult ground_state(const HamiltonianSpec &spec, const GroundOptions &options) {
    spec.validate();
    check_site_count(spec.n_sites, options.max_sites);
    const int n = spec.n_sites;
    const std::size_t dim = std::size_t{1} << n;
    const PauliAxis axis = conserved_parity(spec);
    const LinearMap op = [&spec](std::span<const Complex> in, std::span<Complex> out) {
        apply_hamiltonian(spec, in, out);
    };

    LanczosOptions lanczos;
    lanczos.tolerance = options.tol.residual;
    lanczos.seed = options.seed;

    const Projector even = parity_projector(axis, n, +1);
    const Projector odd = parity_projector(axis, n, -1);
    LanczosResult even_result = lanczos_lowest(dim, op, lanczos, even);
    LanczosResult odd_result = lanczos_lowest(dim, op, lanczos, odd);
    std::size_t iterations = even_result.iterations + odd_result.iterations;

    const double sector_split = std::abs(even_result.eigenvalue - odd_result.eigenvalue);
    const bool pick_even = sector_split < options.tol.degeneracy || even_result.eigenvalue <= odd_result.eigenvalue;
    LanczosResult &chosen = pick_even ? even_result : odd_result;
    const LanczosResult &other = pick_even ? odd_result : even_result;
    const int parity = pick_even ? 1 : -1;

    // Second level inside the chosen sector: Lanczos deflated against the ground vector.
    const Projector &sector = pick_even ? even : odd;
    const Amplitudes &ground_vec = chosen.eigenvector;
    const Projector deflated = [&sector, &ground_vec](std::span<Complex> v) {
        sector(v);
        Complex overlap{};
        for (std::size_t i = 0; i < v.size(); ++i) {
            overlap += std::conj(ground_vec[i]) * v[i];
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] -= overlap * ground_vec[i];
        }
    };
    LanczosOptions second_options = lanczos;
    second_options.seed = options.seed + 1;
    const LanczosResult second = lanczos_lowest(dim, op, second_options, deflated);
    iterations += second.iterations;

    const double gap = std::max(0.0, std::min(other.eigenvalue, second.eigenvalue) - chosen.eigenvalue);

    StateVector psi(n, std::move(chosen.eigenvector));
    Amplitudes h_psi(dim);
    apply_hamiltonian(spec, psi.amplitudes(), h_psi);
    for (std::size_t b = 0; b < dim; ++b) {
        h_psi[b] -= chosen.eigenvalue * psi[b];
    }
    const double residual = vector_norm(h_psi);
    if (residual > options.tol.residual) {
        throw ConvergenceError("ground-state residual " + std::to_string(residual) + " exceeds tolerance", residual);
    }

    GroundResult result{chosen.eigenvalue, std::move(psi), gap, gap < options.tol.degeneracy, residual, parity,
                        std::nullopt, iterations};
    if (options.dense_oracle && n <= kDenseOracleMaxSites) {
        const double dense = dense_spectrum(spec).front();
        result.dense_energy = dense;
        if (std::abs(dense - result.energy) > options.tol.residual) {
            throw ConsistencyError("Lanczos ground energy " + std::to_string(result.energy) +
                                   " disagrees with dense oracle " + std::to_string(dense));
        }
    }
    return result;
}

DispersionCheck magnon_dispersion_check(int n_sites, const MagnonMode &mode, Boundary boundary,
                                        const Tolerances &tol) {
    if (boundary != Boundary::Periodic) {
        throw DomainError("magnon dispersion is defined on the periodic chain only");
    }
    const HamiltonianSpec spec{HeisenbergFerro{}, n_sites, Boundary::Periodic};
    spec.validate();
    check_site_count(n_sites, kDefaultMaxSites);

    const std::vector<int> zeros(static_cast<std::size_t>(n_sites), 0);
    const StateVector vacuum = product_state(zeros);
    const StateVector phi = magnon_create(vacuum, mode);
    const StateVector h_phi = apply_hamiltonian(spec, phi);

    DispersionCheck out;
    out.vacuum_energy = energy(spec, vacuum);
    const double phi_norm_sq = phi.norm_squared();
    const double rayleigh = phi.inner(h_phi).real() / phi_norm_sq;
    out.excitation_energy = rayleigh - out.vacuum_energy;
    double r = 0.0;
    for (std::size_t b = 0; b < phi.dim(); ++b) {
        r += std::norm(h_phi[b] - rayleigh * phi[b]);
    }
    out.residual = std::sqrt(r / phi_norm_sq);
    out.is_eigenstate = out.residual <= tol.composed;
    return out;
}

bool xy_is_separable_limit(double gamma, double field) noexcept { return gamma == 0.0 && field >= 1.0; }

std::vector<XYSweepPoint> xy_sweep(int n_sites, std::span<const double> gammas, std::span<const double> fields,
                                   Boundary boundary, const GroundOptions &options) {
    std::vector<XYSweepPoint> out;
    out.reserve(gammas.size() * fields.size());
    const MagnonMode mode = MagnonMode::quantized(n_sites, 0);
    for (double gamma : gammas) {
        for (double field : fields) {
            const HamiltonianSpec spec{XYModel{gamma, field}, n_sites, boundary};
            GroundResult ground = ground_state(spec, options);
            EntanglementReport report = entanglement_report(ground.state);
            const BoundChain chain = check_bound_chain(ground.state, mode, report, options.tol);
            if (!xy_is_separable_limit(gamma, field) && report.min_S() <= options.tol.algebraic) {
                throw ConsistencyError("XY ground state at gamma=" + std::to_string(gamma) +
                                       ", B=" + std::to_string(field) + " has a separable site");
            }
            out.push_back(XYSweepPoint{gamma, field, std::move(ground), std::move(report), chain});
        }
    }
    return out;
}

}  // namespace magnonic
