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

#ifndef MAGNONIC_LANCZOS_HPP
#define MAGNONIC_LANCZOS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "magnonic/state.hpp"

namespace magnonic {

/// y = A x for a Hermitian A. x and y never alias.
using LinearMap = std::function<void(std::span<const Complex>, std::span<Complex>)>;

/// In-place orthogonal projection onto the search space (symmetry sector,
/// deflation). Must commute with the LinearMap on that space.
using Projector = std::function<void(std::span<Complex>)>;

struct LanczosOptions {
    /// Target ||P A y - theta y|| for the returned Ritz pair.
    double tolerance = 1e-8;
    /// Total matrix-vector products; 0 selects default_iteration_cap(dim).
    std::size_t max_iterations = 0;
    /// Krylov basis size before an explicit restart from the current Ritz vector.
    std::size_t max_basis = 256;
    /// Seed of the random start vector (when none is supplied).
    std::uint64_t seed = 0x5eedULL;
};

struct LanczosResult {
    double eigenvalue = 0.0;
    Amplitudes eigenvector;
    double residual = 0.0;
    std::size_t iterations = 0;
    std::size_t restarts = 0;
};

/// 4 sqrt(dim) + 200.
std::size_t default_iteration_cap(std::size_t dim);

/// Lowest eigenpair of P A P restricted to range(P), by Lanczos with full
/// reorthogonalization and explicit restarts.
///
/// Throws ConvergenceError (carrying the last residual) once the iteration
/// cap is exhausted, and DomainError if the start vector projects to zero.
LanczosResult lanczos_lowest(std::size_t dim, const LinearMap &op, Amplitudes start, const LanczosOptions &options,
                             const Projector &project = {});

/// Same, starting from a seeded complex Gaussian vector.
LanczosResult lanczos_lowest(std::size_t dim, const LinearMap &op, const LanczosOptions &options,
                             const Projector &project = {});

}  // namespace magnonic

#endif  // MAGNONIC_LANCZOS_HPP
