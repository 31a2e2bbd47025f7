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

#include "magnonic/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "magnonic/errors.hpp"
#include "magnonic/random.hpp"

namespace magnonic {

void check_site_count(int n_sites, int max_sites) {
    if (n_sites < 1) {
        throw InvalidSizeError("lattice must have at least one site, got " + std::to_string(n_sites));
    }
    const int cap = std::min(max_sites, kHardMaxSites);
    if (n_sites > cap) {
        throw ResourceError("lattice of " + std::to_string(n_sites) + " sites exceeds the cap of " +
                            std::to_string(cap));
    }
}

StateVector::StateVector(int n_sites, Amplitudes amplitudes) : n_sites_(n_sites), amplitudes_(std::move(amplitudes)) {
    if (n_sites < 1 || n_sites > kHardMaxSites) {
        throw InvalidSizeError("state must have between 1 and " + std::to_string(kHardMaxSites) + " sites");
    }
    if (amplitudes_.size() != (std::size_t{1} << n_sites)) {
        throw InvalidSizeError("amplitude array of length " + std::to_string(amplitudes_.size()) +
                               " does not match 2^" + std::to_string(n_sites));
    }
}

StateVector StateVector::zero(int n_sites) {
    check_site_count(n_sites, kHardMaxSites);
    return StateVector(n_sites, Amplitudes(std::size_t{1} << n_sites));
}

double StateVector::norm_squared() const noexcept {
    double sum = 0.0;
    for (const Complex &a : amplitudes_) {
        sum += std::norm(a);
    }
    return sum;
}

double StateVector::norm() const noexcept { return std::sqrt(norm_squared()); }

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw DomainError("cannot normalize the zero vector");
    }
    Amplitudes out(amplitudes_);
    for (Complex &a : out) {
        a /= n;
    }
    return StateVector(n_sites_, std::move(out));
}

Complex StateVector::inner(const StateVector &ket) const {
    if (ket.n_sites_ != n_sites_) {
        throw DomainError("inner product between states of different sizes");
    }
    Complex sum{};
    for (std::size_t b = 0; b < amplitudes_.size(); ++b) {
        sum += std::conj(amplitudes_[b]) * ket.amplitudes_[b];
    }
    return sum;
}

double StateVector::distance(const StateVector &other) const {
    if (other.n_sites_ != n_sites_) {
        throw DomainError("distance between states of different sizes");
    }
    double sum = 0.0;
    for (std::size_t b = 0; b < amplitudes_.size(); ++b) {
        sum += std::norm(amplitudes_[b] - other.amplitudes_[b]);
    }
    return std::sqrt(sum);
}

LatticeGraph::LatticeGraph(int n_sites, std::vector<Edge> edges) : n_sites_(n_sites), edges_(std::move(edges)) {
    if (n_sites < 1) {
        throw InvalidSizeError("graph must have at least one site");
    }
    for (Edge &e : edges_) {
        if (e.first < 1 || e.first > n_sites || e.second < 1 || e.second > n_sites) {
            throw DomainError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                              "} has an endpoint outside 1.." + std::to_string(n_sites));
        }
        if (e.first == e.second) {
            throw DomainError("self-loop at site " + std::to_string(e.first));
        }
        if (e.first > e.second) {
            std::swap(e.first, e.second);
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw DomainError("duplicate edge in graph");
    }
}

LatticeGraph LatticeGraph::path(int n_sites) {
    std::vector<Edge> edges;
    for (int l = 1; l < n_sites; ++l) {
        edges.emplace_back(l, l + 1);
    }
    return LatticeGraph(n_sites, std::move(edges));
}

LatticeGraph LatticeGraph::ring(int n_sites) {
    if (n_sites < 3) {
        throw InvalidSizeError("a ring needs at least three sites");
    }
    std::vector<Edge> edges;
    for (int l = 1; l < n_sites; ++l) {
        edges.emplace_back(l, l + 1);
    }
    edges.emplace_back(1, n_sites);
    return LatticeGraph(n_sites, std::move(edges));
}

std::vector<int> LatticeGraph::neighbors(int site) const {
    if (site < 1 || site > n_sites_) {
        throw DomainError("site " + std::to_string(site) + " outside 1.." + std::to_string(n_sites_));
    }
    std::vector<int> out;
    for (const auto &[a, b] : edges_) {
        if (a == site) {
            out.push_back(b);
        } else if (b == site) {
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int wrap(int v, int period) { return ((v % period) + period) % period; }

}  // namespace

int ToricLayout::horizontal(int x, int y) const noexcept { return 1 + wrap(y, ly) * lx + wrap(x, lx); }

int ToricLayout::vertical(int x, int y) const noexcept { return 1 + lx * ly + wrap(y, ly) * lx + wrap(x, lx); }

std::vector<std::vector<int>> ToricLayout::vertex_stars() const {
    std::vector<std::vector<int>> out;
    for (int y = 0; y < ly; ++y) {
        for (int x = 0; x < lx; ++x) {
            out.push_back({horizontal(x, y), horizontal(x - 1, y), vertical(x, y), vertical(x, y - 1)});
        }
    }
    return out;
}

std::vector<std::vector<int>> ToricLayout::plaquettes() const {
    std::vector<std::vector<int>> out;
    for (int y = 0; y < ly; ++y) {
        for (int x = 0; x < lx; ++x) {
            out.push_back({horizontal(x, y), horizontal(x, y + 1), vertical(x, y), vertical(x + 1, y)});
        }
    }
    return out;
}

StateVector product_state(std::span<const int> bits, int max_sites) {
    if (bits.empty()) {
        throw InvalidSizeError("product state needs at least one site");
    }
    const int n = static_cast<int>(bits.size());
    check_site_count(n, max_sites);
    std::uint64_t index = 0;
    for (int l = 1; l <= n; ++l) {
        const int bit = bits[l - 1];
        if (bit != 0 && bit != 1) {
            throw DomainError("product-state entries must be 0 or 1, got " + std::to_string(bit));
        }
        if (bit == 1) {
            index |= site_mask(l);
        }
    }
    Amplitudes amps(std::size_t{1} << n);
    amps[index] = 1.0;
    return StateVector(n, std::move(amps));
}

StateVector dicke_state(int n_sites, int excitations, int max_sites) {
    check_site_count(n_sites, max_sites);
    if (excitations < 0 || excitations > n_sites) {
        throw DomainError("Dicke excitation count " + std::to_string(excitations) + " outside 0.." +
                          std::to_string(n_sites));
    }
    const std::size_t dim = std::size_t{1} << n_sites;
    Amplitudes amps(dim);
    if (excitations == 0) {
        amps[0] = 1.0;
        return StateVector(n_sites, std::move(amps));
    }

    // Gosper's hack walks the weight-m indices in increasing order.
    std::vector<std::uint64_t> support;
    std::uint64_t v = (std::uint64_t{1} << excitations) - 1;
    while (v < dim) {
        support.push_back(v);
        const std::uint64_t c = v & (~v + 1);
        const std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(support.size()));
    for (std::uint64_t b : support) {
        amps[b] = amplitude;
    }
    return StateVector(n_sites, std::move(amps));
}

StateVector weighted_ghz(int n_sites, double zero_weight, int max_sites) {
    check_site_count(n_sites, max_sites);
    if (!(zero_weight >= 0.0 && zero_weight <= 1.0)) {
        throw DomainError("GHZ weight must lie in [0,1]");
    }
    Amplitudes amps(std::size_t{1} << n_sites);
    amps.front() += std::sqrt(zero_weight);
    amps.back() += std::sqrt(1.0 - zero_weight);
    return StateVector(n_sites, std::move(amps));
}

StateVector cluster_state(const LatticeGraph &graph, int max_sites) {
    const int n = graph.n_sites();
    check_site_count(n, max_sites);
    const std::size_t dim = std::size_t{1} << n;
    const double amplitude = std::pow(2.0, -0.5 * n);

    // The phase -1 is attached to the sigma^z = -1 (x) sigma^z = -1 component of
    // each edge, which makes K_l (with sigma^z|0> = -|0>) a +1 stabilizer.
    std::vector<std::uint64_t> edge_masks;
    for (const auto &[a, b] : graph.edges()) {
        edge_masks.push_back(site_mask(a) | site_mask(b));
    }
    Amplitudes amps(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        int sign_flips = 0;
        for (std::uint64_t m : edge_masks) {
            sign_flips += (b & m) == 0 ? 1 : 0;
        }
        amps[b] = (sign_flips % 2 == 0) ? amplitude : -amplitude;
    }
    return StateVector(n, std::move(amps));
}

StateVector toric_code_ground(int lx, int ly, int max_sites) {
    if (lx < 2 || ly < 2) {
        throw DomainError("toric code needs lx, ly >= 2");
    }
    const ToricLayout layout{lx, ly};
    check_site_count(layout.n_sites(), max_sites);
    const int n = layout.n_sites();
    const std::size_t dim = std::size_t{1} << n;

    Amplitudes psi(dim);
    psi[0] = 1.0;
    Amplitudes next(dim);
    for (const auto &star : layout.vertex_stars()) {
        std::uint64_t mask = 0;
        for (int site : star) {
            mask |= site_mask(site);
        }
        double norm_sq = 0.0;
        for (std::size_t b = 0; b < dim; ++b) {
            next[b] = 0.5 * (psi[b] + psi[b ^ mask]);
            norm_sq += std::norm(next[b]);
        }
        const double scale = 1.0 / std::sqrt(norm_sq);
        for (std::size_t b = 0; b < dim; ++b) {
            psi[b] = next[b] * scale;
        }
    }
    return StateVector(n, std::move(psi));
}

StateVector haar_random(int n_sites, std::uint64_t seed, int max_sites) {
    check_site_count(n_sites, max_sites);
    GaussianSource source(seed);
    Amplitudes amps(std::size_t{1} << n_sites);
    for (Complex &a : amps) {
        a = source.next_complex();
    }
    return StateVector(n_sites, std::move(amps)).normalized();
}

}  // namespace magnonic
