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

#include <cmath>

#include <Eigen/Dense>

#include "gtest/gtest.h"
#include "magnonic/errors.hpp"
#include "magnonic/lanczos.hpp"
#include "magnonic/random.hpp"

using namespace magnonic;

namespace {

LinearMap DenseMap(const Eigen::MatrixXcd &m) {
    return [m](std::span<const Complex> in, std::span<Complex> out) {
        const Eigen::Map<const Eigen::VectorXcd> x(in.data(), static_cast<Eigen::Index>(in.size()));
        Eigen::Map<Eigen::VectorXcd> y(out.data(), static_cast<Eigen::Index>(out.size()));
        y = m * x;
    };
}

Eigen::MatrixXcd RandomHermitian(int dim, std::uint64_t seed) {
    GaussianSource g(seed);
    Eigen::MatrixXcd a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = g.next_complex();
        }
    }
    return 0.5 * (a + a.adjoint());
}

}  // namespace

TEST(Lanczos, DefaultIterationCap) {
    EXPECT_EQ(default_iteration_cap(1024), 328u);
    EXPECT_EQ(default_iteration_cap(1), 204u);
}

TEST(Lanczos, DiagonalOperator) {
    const std::size_t dim = 50;
    const LinearMap op = [](std::span<const Complex> in, std::span<Complex> out) {
        for (std::size_t i = 0; i < in.size(); ++i) {
            out[i] = (0.5 * static_cast<double>(i) - 3.0) * in[i];
        }
    };
    const LanczosResult r = lanczos_lowest(dim, op, LanczosOptions{});
    EXPECT_NEAR(r.eigenvalue, -3.0, 1e-10);
    EXPECT_LE(r.residual, 1e-8);
    EXPECT_NEAR(std::abs(r.eigenvector[0]), 1.0, 1e-8);
}

TEST(Lanczos, MatchesDenseSolverOnRandomHermitian) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const int dim = 60 + 17 * static_cast<int>(seed);
        const Eigen::MatrixXcd m = RandomHermitian(dim, seed);
        const double want = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m).eigenvalues()(0);
        LanczosOptions opts;
        opts.seed = seed;
        const LanczosResult r = lanczos_lowest(static_cast<std::size_t>(dim), DenseMap(m), opts);
        EXPECT_NEAR(r.eigenvalue, want, 1e-9);
        EXPECT_LE(r.residual, 1e-8);
    }
}

TEST(Lanczos, RestartsWithSmallBasis) {
    const Eigen::MatrixXcd m = RandomHermitian(120, 9);
    const double want = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m).eigenvalues()(0);
    LanczosOptions opts;
    opts.max_basis = 12;
    opts.max_iterations = 5000;
    const LanczosResult r = lanczos_lowest(120, DenseMap(m), opts);
    EXPECT_GT(r.restarts, 0u);
    EXPECT_NEAR(r.eigenvalue, want, 1e-9);
}

TEST(Lanczos, ProjectorRestrictsSearch) {
    // diag(0, 1, 2, ...) with the lowest coordinate projected out.
    const std::size_t dim = 30;
    const LinearMap op = [](std::span<const Complex> in, std::span<Complex> out) {
        for (std::size_t i = 0; i < in.size(); ++i) {
            out[i] = static_cast<double>(i) * in[i];
        }
    };
    const Projector drop_first = [](std::span<Complex> v) { v[0] = 0.0; };
    const LanczosResult r = lanczos_lowest(dim, op, LanczosOptions{}, drop_first);
    EXPECT_NEAR(r.eigenvalue, 1.0, 1e-10);
}

TEST(Lanczos, ErrorPaths) {
    const Eigen::MatrixXcd m = RandomHermitian(200, 4);
    LanczosOptions tight;
    tight.max_iterations = 3;
    try {
        lanczos_lowest(200, DenseMap(m), tight);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError &e) {
        EXPECT_GT(e.residual(), 1e-8);
    }

    const Projector kill = [](std::span<Complex> v) {
        for (Complex &x : v) {
            x = 0.0;
        }
    };
    EXPECT_THROW(lanczos_lowest(200, DenseMap(m), LanczosOptions{}, kill), DomainError);
    EXPECT_THROW(lanczos_lowest(200, DenseMap(m), Amplitudes(10), LanczosOptions{}), DomainError);
}

TEST(Lanczos, SeedDeterminism) {
    const Eigen::MatrixXcd m = RandomHermitian(80, 2);
    const LanczosResult a = lanczos_lowest(80, DenseMap(m), LanczosOptions{});
    const LanczosResult b = lanczos_lowest(80, DenseMap(m), LanczosOptions{});
    EXPECT_EQ(a.eigenvalue, b.eigenvalue);
    EXPECT_EQ(a.eigenvector, b.eigenvector);
}
