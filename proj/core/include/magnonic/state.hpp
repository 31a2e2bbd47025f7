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

#ifndef MAGNONIC_STATE_HPP
#define MAGNONIC_STATE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "magnonic/config.hpp"

namespace magnonic {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

/// Bit mask of site l (1-based) inside a basis index.
constexpr std::uint64_t site_mask(int site) noexcept { return std::uint64_t{1} << (site - 1); }

/// Dense pure state of N spin-1/2 sites.
///
/// Basis index b encodes site l at bit l-1. A set bit is |1>_l, the
/// sigma^z = +1 eigenstate; a clear bit is |0>_l with sigma^z = -1.
///
/// The amplitude array is fixed at construction. Operators return new
/// vectors, which may be unnormalized (ladder and magnon operators).
class StateVector {
  public:
    /// Takes ownership of the amplitudes; length must be exactly 2^n_sites.
    StateVector(int n_sites, Amplitudes amplitudes);

    static StateVector zero(int n_sites);

    int n_sites() const noexcept { return n_sites_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const Complex &operator[](std::size_t index) const { return amplitudes_[index]; }

    double norm_squared() const noexcept;
    double norm() const noexcept;

    /// Throws DomainError for the zero vector.
    StateVector normalized() const;

    /// <this|ket>.
    Complex inner(const StateVector &ket) const;

    /// Euclidean distance ||this - other||.
    double distance(const StateVector &other) const;

    /// Moves the amplitude storage out; the state is left empty.
    Amplitudes release() && { return std::move(amplitudes_); }

  private:
    int n_sites_;
    Amplitudes amplitudes_;
};

/// Undirected simple graph on sites 1..n.
class LatticeGraph {
  public:
    using Edge = std::pair<int, int>;

    /// Edges are stored as (min, max), sorted. Self-loops, duplicates and
    /// out-of-range endpoints throw DomainError.
    LatticeGraph(int n_sites, std::vector<Edge> edges);

    static LatticeGraph path(int n_sites);
    static LatticeGraph ring(int n_sites);

    int n_sites() const noexcept { return n_sites_; }
    const std::vector<Edge> &edges() const noexcept { return edges_; }

    /// Sorted neighbour list C(l).
    std::vector<int> neighbors(int site) const;

  private:
    int n_sites_;
    std::vector<Edge> edges_;
};

/// Edge numbering of an lx x ly periodic square lattice. Horizontal edge
/// (x,y) joins vertex (x,y) to (x+1,y); vertical edge (x,y) joins (x,y) to
/// (x,y+1). Sites are 1-based: horizontal edges first, then vertical.
struct ToricLayout {
    int lx;
    int ly;

    int n_sites() const noexcept { return 2 * lx * ly; }
    int horizontal(int x, int y) const noexcept;
    int vertical(int x, int y) const noexcept;

    /// Four edges meeting at vertex (x,y); A_v is the sigma^x product over them.
    std::vector<std::vector<int>> vertex_stars() const;
    /// Four edges bounding plaquette (x,y); B_p is the sigma^z product over them.
    std::vector<std::vector<int>> plaquettes() const;
};

StateVector product_state(std::span<const int> bits, int max_sites = kDefaultMaxSites);

/// Equal superposition of all basis states with Hamming weight m.
StateVector dicke_state(int n_sites, int excitations, int max_sites = kDefaultMaxSites);

/// sqrt(p)|0...0> + sqrt(1-p)|1...1>.
StateVector weighted_ghz(int n_sites, double zero_weight, int max_sites = kDefaultMaxSites);

/// Graph state stabilized by K_l = sigma^x_l prod_{m in C(l)} sigma^z_m with
/// eigenvalue +1, using the sigma^z sign convention above.
StateVector cluster_state(const LatticeGraph &graph, int max_sites = kDefaultMaxSites);

/// prod_v (1 + A_v)/2 |0...0>, renormalized after every vertex.
StateVector toric_code_ground(int lx, int ly, int max_sites = kDefaultMaxSites);

/// Normalized complex-Gaussian amplitudes from the library's seeded
/// generator (mt19937_64 + Box-Muller, see random.hpp).
StateVector haar_random(int n_sites, std::uint64_t seed, int max_sites = kDefaultMaxSites);

/// Throws InvalidSizeError for n < 1 and ResourceError above the cap.
void check_site_count(int n_sites, int max_sites = kDefaultMaxSites);

}  // namespace magnonic

#endif  // MAGNONIC_STATE_HPP
