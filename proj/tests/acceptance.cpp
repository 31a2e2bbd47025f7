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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "magnonic/entanglement.hpp"
#include "magnonic/magnon.hpp"
#include "magnonic/models.hpp"
#include "magnonic/pauli.hpp"
#include "magnonic/state.hpp"
#include "oracle/dense_oracle.hpp"

using namespace magnonic;

namespace {

constexpr double kExact = 1e-12;

// Collects failed sub-checks of one criterion.
class Check {
  public:
    void near(const std::string &what, double got, double want, double tol) {
        if (!(std::abs(got - want) <= tol)) {
            fail(what + ": got " + fmt(got) + ", want " + fmt(want) + " +- " + fmt(tol));
        }
    }
    void that(const std::string &what, bool ok) {
        if (!ok) {
            fail(what);
        }
    }
    bool ok() const { return failures_.empty(); }
    const std::vector<std::string> &failures() const { return failures_; }

    static std::string fmt(double x) {
        std::ostringstream os;
        os.precision(17);
        os << x;
        return os.str();
    }

  private:
    void fail(std::string msg) { failures_.push_back(std::move(msg)); }
    std::vector<std::string> failures_;
};

void check_modes(Check &c, const std::string &tag, const StateVector &psi, double want_indicator) {
    const EntanglementReport rep = entanglement_report(psi);
    const int n = psi.n_sites();
    for (int j = 0; j < n; ++j) {
        const BoundChain chain = check_bound_chain(psi, MagnonMode::quantized(n, j), rep);
        c.near(tag + " indicator k=" + std::to_string(j), chain.indicator, want_indicator, kExact);
        c.that(tag + " chain k=" + std::to_string(j), chain.holds);
    }
}

Check product_vacuum() {
    Check c;
    const StateVector psi = product_state(std::vector<int>(10, 0));
    const EntanglementReport rep = entanglement_report(psi);
    for (int l = 0; l < 10; ++l) {
        c.that("S_" + std::to_string(l + 1) + " <= 1e-12", std::abs(rep.per_site_S[l]) <= kExact);
    }
    c.near("Lambda", rep.lambda, 1.0, kExact);
    check_modes(c, "product", psi, 1.0);
    return c;
}

Check dicke_condensation() {
    Check c;
    const int n = 16;
    for (int m = 1; m <= 8; ++m) {
        const double alpha = m / 16.0;
        const StateVector psi = dicke_state(n, m);
        const EntanglementReport rep = entanglement_report(psi);
        const std::string tag = "m=" + std::to_string(m);
        for (int l = 0; l < n; ++l) {
            c.near(tag + " S_" + std::to_string(l + 1), rep.per_site_S[l], 4 * alpha * (1 - alpha), kExact);
        }
        c.near(tag + " Lambda", rep.lambda, 1 - 2 * alpha, kExact);
        check_modes(c, tag, psi, 1 - 2 * alpha);
        if (m == 8) {
            c.that("Lambda == 0 exactly at alpha = 1/2 (got " + Check::fmt(rep.lambda) + ")", rep.lambda == 0.0);
        }
    }
    return c;
}

Check cluster_states() {
    Check c;
    for (const LatticeGraph &g : {LatticeGraph::path(8), LatticeGraph::ring(8)}) {
        const std::string tag = g.edges().size() == 8 ? "ring" : "path";
        const StateVector psi = cluster_state(g);
        for (int l = 1; l <= 8; ++l) {
            const Complex k = expectation(psi, cluster_stabilizer(g, l));
            c.near(tag + " Re<K_" + std::to_string(l) + ">", k.real(), 1.0, kExact);
            c.near(tag + " Im<K_" + std::to_string(l) + ">", k.imag(), 0.0, kExact);
        }
        const EntanglementReport rep = entanglement_report(psi);
        for (int l = 0; l < 8; ++l) {
            c.near(tag + " S_" + std::to_string(l + 1), rep.per_site_S[l], 1.0, kExact);
        }
        c.near(tag + " Lambda", rep.lambda, 0.0, kExact);
        check_modes(c, tag, psi, 0.0);
    }
    return c;
}

Check ghz_counterexample() {
    Check c;
    const StateVector psi = weighted_ghz(5, 0.75);
    const CounterexampleCheck ce = counterexample_check(psi);
    const EntanglementReport rep = entanglement_report(psi);
    c.near("indicator", ce.indicator, 0.5, kExact);
    c.near("1 - G", ce.one_minus_G, 0.25, kExact);
    c.near("Lambda", rep.lambda, 0.5, kExact);
    c.that("indicator <= 1 - G is violated", ce.bound_violated);
    for (int j = 0; j < 5; ++j) {
        const BoundChain chain = check_bound_chain(psi, MagnonMode::quantized(5, j), rep);
        c.that("chain holds k=" + std::to_string(j), chain.holds);
        c.near("equality indicator = Lambda k=" + std::to_string(j), chain.indicator, chain.lambda, kExact);
    }
    return c;
}

Check toric_code() {
    Check c;
    const StateVector psi = toric_code_ground(2, 2);
    const std::vector<PauliString> stabilizers = toric_stabilizers(ToricLayout{2, 2});
    c.that("8 stabilizers", stabilizers.size() == 8);
    for (std::size_t i = 0; i < stabilizers.size(); ++i) {
        const Complex k = expectation(psi, stabilizers[i]);
        c.near("Re<stabilizer " + std::to_string(i) + ">", k.real(), 1.0, kExact);
        c.near("Im<stabilizer " + std::to_string(i) + ">", k.imag(), 0.0, kExact);
    }
    const EntanglementReport rep = entanglement_report(psi);
    c.that("min S_l > 0", rep.min_S() > 0.0);
    for (int l = 0; l < 8; ++l) {
        c.near("S_" + std::to_string(l + 1), rep.per_site_S[l], 1.0, kExact);
    }
    return c;
}

Check randomized_chain() {
    Check c;
    for (int n : {4, 6, 8}) {
        long long chain_violations = 0;
        long long cross_violations = 0;
        std::vector<MagnonMode> modes;
        for (int j = 0; j < n; ++j) {
            modes.push_back(MagnonMode::quantized(n, j));
        }
        for (std::uint64_t s = 0; s < 1000; ++s) {
            const StateVector psi = haar_random(n, 1000003ULL * n + s);
            const EntanglementReport rep = entanglement_report(psi);
            for (const MagnonMode &mode : modes) {
                chain_violations += check_bound_chain(psi, mode, rep).holds ? 0 : 1;
            }
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    const CrossCommutators x = cross_commutators(psi, modes[a], modes[b]);
                    cross_violations += std::max(std::abs(x.annihilators), std::abs(x.creators)) <= kExact ? 0 : 1;
                }
            }
        }
        c.that("N=" + std::to_string(n) + " chain violations " + std::to_string(chain_violations),
               chain_violations == 0);
        c.that("N=" + std::to_string(n) + " cross-commutator violations " + std::to_string(cross_violations),
               cross_violations == 0);
    }
    return c;
}

Check eigensolver_oracle() {
    Check c;
    const int n = 10;
    GroundOptions opts;
    opts.dense_oracle = false;
    const HamiltonianSpec heis{HeisenbergFerro{}, n, Boundary::Periodic};
    const HamiltonianSpec ising{TransverseIsing{1.0}, n, Boundary::Periodic};
    const HamiltonianSpec xy{XYModel{0.5, 0.5}, n, Boundary::Periodic};
    c.near("heisenberg N=10", ground_state(heis, opts).energy, oracle::ground_energy(oracle::heisenberg(n, true)),
           1e-8);
    c.near("ising B=1 N=10", ground_state(ising, opts).energy,
           oracle::ground_energy(oracle::transverse_ising(n, 1.0, true)), 1e-8);
    c.near("xy gamma=0.5 B=0.5 N=10", ground_state(xy, opts).energy,
           oracle::ground_energy(oracle::xy(n, 0.5, 0.5, true)), 1e-8);
    c.near("heisenberg periodic N=8", ground_state(HamiltonianSpec{HeisenbergFerro{}, 8, Boundary::Periodic}).energy,
           -8.0, 1e-8);
    return c;
}

Check ising_ghz_limit() {
    Check c;
    const GroundResult weak = ground_state(HamiltonianSpec{TransverseIsing{0.05}, 10, Boundary::Periodic});
    const EntanglementReport w = entanglement_report(weak.state);
    c.that("B=0.05 min S_l > 0.99 (got " + Check::fmt(w.min_S()) + ")", w.min_S() > 0.99);
    c.that("B=0.05 Lambda < 0.1 (got " + Check::fmt(w.lambda) + ")", w.lambda < 0.1);
    const GroundResult strong = ground_state(HamiltonianSpec{TransverseIsing{5.0}, 10, Boundary::Periodic});
    const EntanglementReport s = entanglement_report(strong.state);
    c.that("B=5 max S_l < 0.05 (got " + Check::fmt(s.max_S()) + ")", s.max_S() < 0.05);
    c.that("B=5 Lambda > 0.95 (got " + Check::fmt(s.lambda) + ")", s.lambda > 0.95);
    return c;
}

Check magnon_dispersion() {
    Check c;
    for (int j = 0; j < 8; ++j) {
        const DispersionCheck d = magnon_dispersion_check(8, MagnonMode::quantized(8, j));
        const std::string tag = "k index " + std::to_string(j);
        c.that(tag + " residual " + Check::fmt(d.residual) + " <= 1e-10", d.residual <= 1e-10);
        c.that(tag + " epsilon >= 0 (got " + Check::fmt(d.excitation_energy) + ")", d.excitation_energy >= -kExact);
        if (j == 0) {
            c.near("epsilon_0", d.excitation_energy, 0.0, kExact);
        }
    }
    return c;
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Check determinism() {
    Check c;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("magnonic_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::vector<std::vector<std::string>> commands = {
        {"verify", "--n", "8", "--samples", "200", "--seed", "42"},
        {"sweep", "--model", "dicke", "--n", "16", "--alpha", "0.05:0.50:0.05"},
        {"sweep", "--model", "ising", "--n", "8", "--B", "0.05:3.0:0.5"},
    };
    for (const std::vector<std::string> &base : commands) {
        std::string first;
        for (int rep = 0; rep < 2; ++rep) {
            std::vector<std::string> args = base;
            const fs::path out = dir / ("run" + std::to_string(rep) + ".csv");
            args.push_back("--out");
            args.push_back(out.string());
            std::ostringstream sink;
            const int code = cli::run(args, sink, sink);
            c.that(base[0] + " " + base[2] + " exit code " + std::to_string(code), code == 0);
            const std::string text = read_file(out);
            if (rep == 0) {
                first = text;
                c.that(base[0] + " " + base[2] + " wrote CSV", text.size() > cli::csv_header().size());
            } else {
                c.that(base[0] + " " + base[2] + " byte-identical CSV", text == first);
            }
        }
    }
    fs::remove_all(dir);
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {"product vacuum N=10: S_l = 0, Lambda = 1, indicator = 1", product_vacuum},
        {"Dicke N=16, alpha = m/16: S_l = 4a(1-a), Lambda = indicator = 1-2a", dicke_condensation},
        {"cluster path/ring N=8: K_l = 1, S_l = 1, Lambda = indicator = 0", cluster_states},
        {"GHZ(5, 3/4): indicator 1/2 > 1-G = 1/4, Lambda 1/2, chain tight", ghz_counterexample},
        {"toric code 2x2: stabilizers = 1, S_l = 1", toric_code},
        {"1000 Haar states at N = 4, 6, 8: chain and cross-commutators", randomized_chain},
        {"Lanczos vs Kronecker dense at N=10; Heisenberg N=8 energy -8", eigensolver_oracle},
        {"transverse Ising N=10: GHZ-like at B=0.05, product-like at B=5", ising_ghz_limit},
        {"one-magnon dispersion N=8: eigenstates, epsilon_k >= 0, epsilon_0 = 0", magnon_dispersion},
        {"determinism: verify --seed 42 and sweeps give byte-identical CSV", determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].run();
        } catch (const std::exception &e) {
            c.that(std::string("exception: ") + e.what(), false);
        }
        std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].name << "\n";
        const std::size_t shown = std::min<std::size_t>(c.failures().size(), 10);
        for (std::size_t f = 0; f < shown; ++f) {
            std::cout << "    " << c.failures()[f] << "\n";
        }
        failed += c.ok() ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
