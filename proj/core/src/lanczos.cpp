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

#include "magnonic/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "magnonic/errors.hpp"
#include "magnonic/random.hpp"

namespace magnonic {

namespace {

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
    Complex sum{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

double norm(std::span<const Complex> a) {
    double sum = 0.0;
    for (const Complex &x : a) {
        sum += std::norm(x);
    }
    return std::sqrt(sum);
}

void scale(std::span<Complex> a, double factor) {
    for (Complex &x : a) {
        x *= factor;
    }
}

struct Ritz {
    double value;
    Eigen::VectorXd coefficients;
};

Ritz lowest_ritz(const std::vector<double> &alpha, const std::vector<double> &beta) {
    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub(std::max<Eigen::Index>(m - 1, 0));
    for (Eigen::Index i = 0; i + 1 < m; ++i) {
        sub(i) = beta[static_cast<std::size_t>(i)];
    }
    if (m == 1) {
        return {diag(0), Eigen::VectorXd::Ones(1)};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

}  // namespace

std::size_t default_iteration_cap(std::size_t dim) {
    return static_cast<std::size_t>(4.0 * std::sqrt(static_cast<double>(dim))) + 200;
}

LanczosResult lanczos_lowest(std::size_t dim, const LinearMap &op, Amplitudes start, const LanczosOptions &options,
                             const Projector &project) {
    if (start.size() != dim) {
        throw DomainError("Lanczos start vector has the wrong length");
    }
    const std::size_t cap = options.max_iterations ? options.max_iterations : default_iteration_cap(dim);
    const std::size_t max_basis = std::max<std::size_t>(2, std::min(options.max_basis, dim));

    Amplitudes v = std::move(start);
    if (project) {
        project(v);
    }
    const double start_norm = norm(v);
    if (start_norm == 0.0) {
        throw DomainError("Lanczos start vector has no component in the search space");
    }
    scale(v, 1.0 / start_norm);

    LanczosResult result;
    Amplitudes w(dim);
    Amplitudes image(dim);
    while (true) {
        std::vector<Amplitudes> basis;
        basis.push_back(std::move(v));
        std::vector<double> alpha;
        std::vector<double> beta;
        Ritz ritz{0.0, {}};

        for (std::size_t j = 0;; ++j) {
            op(basis[j], w);
            ++result.iterations;
            if (project) {
                project(w);
            }
            alpha.push_back(dot(basis[j], w).real());
            // Two classical Gram-Schmidt passes against the whole basis.
            for (int pass = 0; pass < 2; ++pass) {
                for (const Amplitudes &q : basis) {
                    const Complex c = dot(q, w);
                    for (std::size_t i = 0; i < dim; ++i) {
                        w[i] -= c * q[i];
                    }
                }
            }
            const double b = norm(w);
            const bool exhausted = b <= 1e-13 * std::max(1.0, std::abs(alpha.back()));
            const bool full = basis.size() >= max_basis;
            const bool out_of_budget = result.iterations >= cap;
            const bool scheduled = j < 16 || j % 4 == 3;
            if (exhausted || full || out_of_budget || scheduled) {
                ritz = lowest_ritz(alpha, beta);
                const double estimate = b * std::abs(ritz.coefficients(ritz.coefficients.size() - 1));
                if (exhausted || full || out_of_budget || estimate <= 0.25 * options.tolerance) {
                    break;
                }
            }
            beta.push_back(b);
            scale(w, 1.0 / b);
            basis.push_back(w);
        }

        Amplitudes y(dim);
        for (std::size_t i = 0; i < basis.size() && i < static_cast<std::size_t>(ritz.coefficients.size()); ++i) {
            const double c = ritz.coefficients(static_cast<Eigen::Index>(i));
            for (std::size_t k = 0; k < dim; ++k) {
                y[k] += c * basis[i][k];
            }
        }
        if (project) {
            project(y);
        }
        scale(y, 1.0 / norm(y));

        op(y, image);
        ++result.iterations;
        if (project) {
            project(image);
        }
        const double theta = dot(y, image).real();
        for (std::size_t k = 0; k < dim; ++k) {
            image[k] -= theta * y[k];
        }
        result.residual = norm(image);
        result.eigenvalue = theta;
        if (result.residual <= options.tolerance) {
            result.eigenvector = std::move(y);
            return result;
        }
        if (result.iterations >= cap) {
            throw ConvergenceError("Lanczos did not converge within " + std::to_string(cap) +
                                       " matrix-vector products; residual " + std::to_string(result.residual),
                                   result.residual);
        }
        ++result.restarts;
        v = std::move(y);
    }
}

LanczosResult lanczos_lowest(std::size_t dim, const LinearMap &op, const LanczosOptions &options,
                             const Projector &project) {
    GaussianSource source(options.seed);
    Amplitudes start(dim);
    for (Complex &a : start) {
        a = source.next_complex();
    }
    return lanczos_lowest(dim, op, std::move(start), options, project);
}

}  // namespace magnonic
