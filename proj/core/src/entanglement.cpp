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

#include "magnonic/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "magnonic/errors.hpp"

namespace magnonic {

double SingleSiteDensity::purity() const {
    // Tr(rho^2) = sum_ij rho_ij rho_ji = sum_ij |rho_ij|^2 for Hermitian rho.
    const Complex t = entries_[0] * entries_[0] + entries_[1] * entries_[2] + entries_[2] * entries_[1] +
                      entries_[3] * entries_[3];
    return t.real();
}

double SingleSiteDensity::purity_excess() const {
    const double dz = entries_[3].real() - entries_[0].real();
    return dz * dz + 4.0 * std::norm(entries_[1]);
}

bool SingleSiteDensity::is_valid(double tol) const {
    if (std::abs(entries_[0].imag()) > tol || std::abs(entries_[3].imag()) > tol) {
        return false;
    }
    if (std::abs(entries_[1] - std::conj(entries_[2])) > tol) {
        return false;
    }
    if (std::abs(trace() - 1.0) > tol) {
        return false;
    }
    // Eigenvalues of a unit-trace Hermitian 2x2: 1/2 +- sqrt((a-d)^2/4 + |b|^2).
    const double half_gap = std::sqrt(0.25 * std::pow(entries_[0].real() - entries_[3].real(), 2) +
                                      std::norm(entries_[1]));
    return 0.5 + half_gap <= 1.0 + tol;
}

SingleSiteDensity reduce_to_site(const StateVector &state, int site) {
    if (site < 1 || site > state.n_sites()) {
        throw DomainError("site " + std::to_string(site) + " outside 1.." + std::to_string(state.n_sites()));
    }
    const std::uint64_t mask = site_mask(site);
    const auto amps = state.amplitudes();
    double p0 = 0.0;
    double p1 = 0.0;
    Complex coherence{};  // rho_01 = sum_rest psi(0,rest) conj(psi(1,rest))
    for (std::size_t b = 0; b < amps.size(); ++b) {
        if (b & mask) {
            p1 += std::norm(amps[b]);
        } else {
            p0 += std::norm(amps[b]);
            coherence += amps[b] * std::conj(amps[b | mask]);
        }
    }
    return SingleSiteDensity(p0, coherence, std::conj(coherence), p1);
}

double linear_entropy(const SingleSiteDensity &rho) { return std::clamp(1.0 - rho.purity_excess(), 0.0, 1.0); }

double lambda_term(const SingleSiteDensity &rho) { return std::sqrt(std::min(rho.purity_excess(), 1.0)); }

BlochVector bloch_vector(const SingleSiteDensity &rho) {
    // sigma^x = [[0,1],[1,0]], sigma^y = [[0,i],[-i,0]], sigma^z = diag(-1,1) in the (|0>,|1>) basis.
    const Complex r01 = rho(0, 1);
    const Complex r10 = rho(1, 0);
    return {(r01 + r10).real(), (Complex{0.0, -1.0} * r01 + Complex{0.0, 1.0} * r10).real(),
            (rho(1, 1) - rho(0, 0)).real()};
}

double site_entanglement(const StateVector &state, int site) { return linear_entropy(reduce_to_site(state, site)); }

BlochVector bloch_vector(const StateVector &state, int site) { return bloch_vector(reduce_to_site(state, site)); }

double lambda_bound(const StateVector &state) {
    double sum = 0.0;
    for (int l = 1; l <= state.n_sites(); ++l) {
        sum += lambda_term(reduce_to_site(state, l));
    }
    return sum / state.n_sites();
}

double global_entanglement(const StateVector &state) {
    double sum = 0.0;
    for (int l = 1; l <= state.n_sites(); ++l) {
        sum += site_entanglement(state, l);
    }
    return sum / state.n_sites();
}

double EntanglementReport::min_S() const { return *std::min_element(per_site_S.begin(), per_site_S.end()); }

double EntanglementReport::max_S() const { return *std::max_element(per_site_S.begin(), per_site_S.end()); }

double EntanglementReport::mean_abs_sigma_z() const {
    double sum = 0.0;
    for (const BlochVector &r : bloch_vectors) {
        sum += std::abs(r.z);
    }
    return sum / static_cast<double>(bloch_vectors.size());
}

EntanglementReport entanglement_report(const StateVector &state) {
    EntanglementReport report;
    const int n = state.n_sites();
    report.per_site_S.reserve(n);
    report.bloch_vectors.reserve(n);
    double lambda_sum = 0.0;
    double s_sum = 0.0;
    for (int l = 1; l <= n; ++l) {
        const SingleSiteDensity rho = reduce_to_site(state, l);
        const double s = linear_entropy(rho);
        report.per_site_S.push_back(s);
        report.bloch_vectors.push_back(bloch_vector(rho));
        lambda_sum += lambda_term(rho);
        s_sum += s;
    }
    report.lambda = lambda_sum / n;
    report.global_G = s_sum / n;
    return report;
}

BoundChain check_bound_chain(const StateVector &state, const MagnonMode &mode, const EntanglementReport &report,
                             const Tolerances &tol) {
    BoundChain chain;
    chain.signed_commutator = commutator_expectation(state, mode, tol);
    chain.indicator = std::abs(chain.signed_commutator);
    chain.mean_abs_sigma_z = report.mean_abs_sigma_z();
    chain.lambda = report.lambda;
    chain.min_margin = std::min(chain.mean_abs_sigma_z - chain.indicator, chain.lambda - chain.mean_abs_sigma_z);
    chain.holds = chain.min_margin >= -tol.algebraic;
    return chain;
}

BoundChain check_bound_chain(const StateVector &state, const MagnonMode &mode, const Tolerances &tol) {
    return check_bound_chain(state, mode, entanglement_report(state), tol);
}

CounterexampleCheck counterexample_check(const StateVector &state, const Tolerances &tol) {
    CounterexampleCheck out;
    out.indicator = bosonic_indicator(state, MagnonMode::quantized(state.n_sites(), 0), tol);
    out.one_minus_G = 1.0 - global_entanglement(state);
    out.bound_violated = out.indicator > out.one_minus_G + tol.algebraic;
    return out;
}

}  // namespace magnonic
