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

#ifndef MAGNONIC_CONFIG_HPP
#define MAGNONIC_CONFIG_HPP

namespace magnonic {

/// Default largest lattice accepted by state constructors (2^20 amplitudes).
inline constexpr int kDefaultMaxSites = 20;

/// Basis indices are 64-bit and amplitudes are dense; no cap may exceed this.
inline constexpr int kHardMaxSites = 30;

/// Dense full-spectrum cross-check is run automatically up to this size.
inline constexpr int kDenseOracleMaxSites = 12;

/// Every numerical threshold used by the library lives here.
struct Tolerances {
    /// Norms, S_l bounds, stabilizer expectations, bound-chain slack.
    double algebraic = 1e-12;
    /// Quantities assembled from several sums: dual-route commutator
    /// agreement, Bloch identity, one-magnon eigen-residuals.
    double composed = 1e-10;
    /// Eigenpair residual and Lanczos/dense ground-energy agreement.
    double residual = 1e-8;
    /// Absolute energy gap (coupling units) below which levels count as degenerate.
    double degeneracy = 1e-6;
};

}  // namespace magnonic

#endif  // MAGNONIC_CONFIG_HPP
