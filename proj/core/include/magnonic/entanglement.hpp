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

#ifndef MAGNONIC_ENTANGLEMENT_HPP
#define MAGNONIC_ENTANGLEMENT_HPP

#include <array>
#include <vector>

#include "magnonic/config.hpp"
#include "magnonic/magnon.hpp"
#include "magnonic/state.hpp"

namespace magnonic {

/// 2x2 reduced density matrix of one site; row/column 0 is |0>, 1 is |1>.
class SingleSiteDensity {
  public:
    SingleSiteDensity(Complex e00, Complex e01, Complex e10, Complex e11) : entries_{e00, e01, e10, e11} {}

    Complex operator()(int row, int col) const { return entries_[2 * row + col]; }

    Complex trace() const { return entries_[0] + entries_[3]; }

    /// Tr(rho^2) from the explicit matrix entries.
    double purity() const;

    /// 2 Tr(rho^2) - 1 = (rho_11 - rho_00)^2 + 4|rho_01|^2 for unit trace.
    /// Equals 1 - S without the cancellation of 1 - 2[1 - Tr rho^2] near S = 1.
    double purity_excess() const;

    /// Hermitian, unit trace and eigenvalues in [0,1], each within tol.
    bool is_valid(double tol) const;

  private:
    std::array<Complex, 4> entries_;
};

/// (<sigma^x>, <sigma^y>, <sigma^z>) of one site.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm_squared() const noexcept { return x * x + y * y + z * z; }
};

/// Partial trace over every site except l.
SingleSiteDensity reduce_to_site(const StateVector &state, int site);

/// S = 2[1 - Tr rho^2], clamped to [0,1] against round-off.
double linear_entropy(const SingleSiteDensity &rho);

/// sqrt(1 - S), evaluated as sqrt(purity_excess()); the per-site term of Lambda.
double lambda_term(const SingleSiteDensity &rho);

/// Tr(rho sigma^a) for a = x, y, z.
BlochVector bloch_vector(const SingleSiteDensity &rho);

double site_entanglement(const StateVector &state, int site);
BlochVector bloch_vector(const StateVector &state, int site);

/// Lambda = (1/N) sum_l sqrt(1 - S_l).
double lambda_bound(const StateVector &state);

/// Meyer-Wallach G = 2[1 - (1/N) sum_l Tr rho_l^2], evaluated as the mean of S_l.
double global_entanglement(const StateVector &state);

struct EntanglementReport {
    std::vector<double> per_site_S;
    double lambda = 0.0;
    double global_G = 0.0;
    std::vector<BlochVector> bloch_vectors;

    double min_S() const;
    double max_S() const;
    /// (1/N) sum_l |<sigma^z_l>|, the middle term of the bound chain.
    double mean_abs_sigma_z() const;
};

EntanglementReport entanglement_report(const StateVector &state);

/// |<[M_k, M_k^dagger]>| <= (1/N) sum_l |<sigma^z_l>| <= Lambda, with slack.
struct BoundChain {
    double signed_commutator = 0.0;
    double indicator = 0.0;
    double mean_abs_sigma_z = 0.0;
    double lambda = 0.0;
    bool holds = false;
    /// Smallest of (mean_abs_sigma_z - indicator) and (lambda - mean_abs_sigma_z).
    double min_margin = 0.0;
};

BoundChain check_bound_chain(const StateVector &state, const MagnonMode &mode, const Tolerances &tol = {});
BoundChain check_bound_chain(const StateVector &state, const MagnonMode &mode, const EntanglementReport &report,
                             const Tolerances &tol = {});

/// Tests the plausible but false bound |<[M_k, M_k^dagger]>| <= 1 - G on mode k = 0.
struct CounterexampleCheck {
    double indicator = 0.0;
    double one_minus_G = 0.0;
    /// True iff indicator > 1 - G + tol.algebraic.
    bool bound_violated = false;
};

CounterexampleCheck counterexample_check(const StateVector &state, const Tolerances &tol = {});

}  // namespace magnonic

#endif  // MAGNONIC_ENTANGLEMENT_HPP
