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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <type_traits>
#include <utility>
#include <variant>

#include "CLI11.hpp"
#include "magnonic/config.hpp"
#include "magnonic/entanglement.hpp"
#include "magnonic/errors.hpp"
#include "magnonic/magnon.hpp"
#include "magnonic/models.hpp"
#include "magnonic/pauli.hpp"
#include "magnonic/state.hpp"

namespace magnonic::cli {

namespace {

constexpr std::size_t kMaxGridPoints = 100000;
constexpr int kDumpMaxSites = 12;

// ---------------------------------------------------------------------------
// Formatting

// 12 significant digits for the human-readable report.
std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << (x + 0.0);
    return os.str();
}

std::string pad(const std::string &s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

// ---------------------------------------------------------------------------
// Parsing helpers

double parse_number(std::string_view text) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw UsageError("not a finite number: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

// Independent per-sample seeds from one user seed (splitmix64 finalizer).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// Run configuration

struct GlobalFlags {
    double tol = 1e-12;
    std::string out;
    std::uint64_t seed = 42;
    std::string boundary = "periodic";
    int cap = kDefaultMaxSites;

    Tolerances tolerances() const {
        Tolerances t;
        t.algebraic = tol;
        return t;
    }
    Boundary boundary_value() const { return boundary == "open" ? Boundary::Open : Boundary::Periodic; }
    GroundOptions ground_options() const {
        GroundOptions o;
        o.max_sites = cap;
        o.seed = seed;
        return o;
    }
};

struct ReportFlags {
    std::string kind;
    int n = 0;
    int m = 0;
    double p = 0.5;
    std::string bits;
    std::string graph;
    int lx = 0;
    int ly = 0;
    std::string model;
    double field = 0.0;
    double gamma = 1.0;
    bool dump = false;
};

struct SweepFlags {
    std::string model;
    int n = 0;
    std::string alpha;
    std::string m;
    std::string p;
    std::string field;
    std::string gamma;
    int k = 0;
};

struct VerifyFlags {
    int n = 0;
    long long samples = 1000;
    bool counterexample = false;
    double p = 0.75;
};

class Output {
  public:
    Output(std::ostream &out, const GlobalFlags &g) : out_(out), path_(g.out) {}

    bool has_file() const { return !path_.empty(); }

    void write_csv(const std::vector<CsvRow> &rows) const {
        std::string text = csv_header();
        for (const CsvRow &r : rows) {
            text += format_csv_row(r);
        }
        if (path_.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(path_, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw ResourceError("cannot open output file '" + path_ + "'");
        }
        file << text;
        if (!file) {
            throw ResourceError("failed writing output file '" + path_ + "'");
        }
    }

  private:
    std::ostream &out_;
    std::string path_;
};

CsvRow make_row(std::string model, std::string params, int n, std::string boundary, int k_index,
                const EntanglementReport &report, const BoundChain &chain) {
    CsvRow row;
    row.model = std::move(model);
    row.family_params = std::move(params);
    row.n = n;
    row.boundary = std::move(boundary);
    row.k_index = k_index;
    row.indicator_abs = chain.indicator;
    row.sigma_z_mean_abs = chain.mean_abs_sigma_z;
    row.lambda = report.lambda;
    row.global_G = report.global_G;
    row.min_S = report.min_S();
    row.max_S = report.max_S();
    row.chain_ok = chain.holds;
    return row;
}

std::string hamiltonian_text(const HamiltonianSpec &spec) {
    return std::visit(
        [](const auto &f) -> std::string {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, HeisenbergFerro>) {
                return "H = -sum_l (X_l X_l+1 + Y_l Y_l+1 + Z_l Z_l+1)";
            } else if constexpr (std::is_same_v<F, TransverseIsing>) {
                return "H = -sum_l Z_l Z_l+1 - B sum_l X_l (z coupling, x field)";
            } else {
                return "H = -sum_l [(1+gamma)/2 X_l X_l+1 + (1-gamma)/2 Y_l Y_l+1] - B sum_l Z_l (z field)";
            }
        },
        spec.family);
}

std::string model_params(const HamiltonianSpec &spec) {
    return std::visit(
        [](const auto &f) -> std::string {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, HeisenbergFerro>) {
                return "J=1";
            } else if constexpr (std::is_same_v<F, TransverseIsing>) {
                return "B=" + shortest(f.field);
            } else {
                return "gamma=" + shortest(f.gamma) + ";B=" + shortest(f.field);
            }
        },
        spec.family);
}

// ---------------------------------------------------------------------------
// report

struct Subject {
    std::string model;
    std::string params;
    std::string boundary;
    StateVector state;
    std::vector<std::string> notes;
    bool extra_ok = true;
};

// Site count known before any state is built, so --dump-amplitudes is validated up front.
int planned_sites(const ReportFlags &r, const CLI::App &cmd) {
    if (r.kind == "toric") {
        return 2 * r.lx * r.ly;
    }
    if (r.kind == "product" && cmd.count("--bits") > 0 && cmd.count("--n") == 0) {
        return static_cast<int>(r.bits.size());
    }
    return r.n;
}

void validate_report(const ReportFlags &r, const CLI::App &cmd) {
    const auto need = [&](const char *flag) {
        if (cmd.count(flag) == 0) {
            throw UsageError("report --kind " + r.kind + " requires " + flag);
        }
    };
    if (r.kind == "product") {
        if (cmd.count("--bits") == 0) {
            need("--n");
        }
        if (cmd.count("--bits") > 0) {
            if (r.bits.empty() || r.bits.find_first_not_of("01") != std::string::npos) {
                throw UsageError("--bits must be a non-empty string of 0 and 1");
            }
            if (cmd.count("--n") > 0 && static_cast<int>(r.bits.size()) != r.n) {
                throw UsageError("--bits length does not match --n");
            }
        }
    } else if (r.kind == "dicke") {
        need("--n");
        need("--m");
    } else if (r.kind == "ghz") {
        need("--n");
        need("--p");
    } else if (r.kind == "cluster" || r.kind == "haar") {
        need("--n");
    } else if (r.kind == "toric") {
        need("--lx");
        need("--ly");
        if (cmd.count("--n") > 0 && r.n != 2 * r.lx * r.ly) {
            throw UsageError("--n must equal 2*lx*ly for the toric code");
        }
    } else if (r.kind == "ground") {
        need("--n");
        need("--model");
        if (r.model != "heisenberg") {
            need("--B");
        }
    }
    if (r.dump && planned_sites(r, cmd) > kDumpMaxSites) {
        throw UsageError("--dump-amplitudes is limited to N <= " + std::to_string(kDumpMaxSites));
    }
}

double max_stabilizer_deviation(const StateVector &state, const std::vector<PauliString> &stabilizers) {
    double dev = 0.0;
    for (const PauliString &k : stabilizers) {
        dev = std::max(dev, std::abs(expectation(state, k) - Complex(1.0, 0.0)));
    }
    return dev;
}

Subject build_subject(const ReportFlags &r, const CLI::App &cmd, const GlobalFlags &g) {
    const Tolerances tol = g.tolerances();
    if (r.kind == "product") {
        std::string bits = r.bits;
        if (cmd.count("--bits") == 0) {
            bits.assign(static_cast<std::size_t>(r.n), '0');
        }
        std::vector<int> values;
        for (char c : bits) {
            values.push_back(c - '0');
        }
        return {"product", "bits=" + bits, "none", product_state(values, g.cap), {}, true};
    }
    if (r.kind == "dicke") {
        return {"dicke", "m=" + std::to_string(r.m) + ";alpha=" + shortest(double(r.m) / r.n), "none",
                dicke_state(r.n, r.m, g.cap), {}, true};
    }
    if (r.kind == "ghz") {
        return {"ghz", "p=" + shortest(r.p), "none", weighted_ghz(r.n, r.p, g.cap), {}, true};
    }
    if (r.kind == "haar") {
        return {"haar", "seed=" + std::to_string(g.seed), "none", haar_random(r.n, g.seed, g.cap), {}, true};
    }
    if (r.kind == "cluster") {
        const bool ring = r.graph.empty() ? g.boundary_value() == Boundary::Periodic : r.graph == "ring";
        if (cmd.count("--graph") > 0 && cmd.get_parent()->count("--boundary") > 0 &&
            ring != (g.boundary_value() == Boundary::Periodic)) {
            throw UsageError("--graph and --boundary disagree");
        }
        const LatticeGraph graph = ring ? LatticeGraph::ring(r.n) : LatticeGraph::path(r.n);
        Subject s{"cluster", std::string("graph=") + (ring ? "ring" : "path"), ring ? "periodic" : "open",
                  cluster_state(graph, g.cap), {}, true};
        std::vector<PauliString> stabilizers;
        for (int l = 1; l <= r.n; ++l) {
            stabilizers.push_back(cluster_stabilizer(graph, l));
        }
        const double dev = max_stabilizer_deviation(s.state, stabilizers);
        s.extra_ok = dev <= tol.algebraic;
        s.notes.push_back("stabilizers K_l = X_l prod_{m in C(l)} Z_m: " + std::to_string(stabilizers.size()) +
                          " checked, max |<K> - 1| = " + fmt(dev) + "  " + pass_fail(s.extra_ok));
        return s;
    }
    if (r.kind == "toric") {
        const ToricLayout layout{r.lx, r.ly};
        Subject s{"toric", "lx=" + std::to_string(r.lx) + ";ly=" + std::to_string(r.ly), "periodic",
                  toric_code_ground(r.lx, r.ly, g.cap), {}, true};
        const std::vector<PauliString> stabilizers = toric_stabilizers(layout);
        const double dev = max_stabilizer_deviation(s.state, stabilizers);
        s.extra_ok = dev <= tol.algebraic;
        s.notes.push_back("stabilizers A_v, B_p: " + std::to_string(stabilizers.size()) +
                          " checked, max |<K> - 1| = " + fmt(dev) + "  " + pass_fail(s.extra_ok));
        return s;
    }

    // ground
    HamiltonianSpec spec;
    spec.n_sites = r.n;
    spec.boundary = g.boundary_value();
    if (r.model == "heisenberg") {
        spec.family = HeisenbergFerro{};
    } else if (r.model == "ising") {
        spec.family = TransverseIsing{r.field};
    } else {
        spec.family = XYModel{r.gamma, r.field};
    }
    spec.validate();
    GroundResult ground = ground_state(spec, g.ground_options());
    Subject s{spec.family_name(), model_params(spec), std::string(to_string(spec.boundary)), std::move(ground.state),
              {}, true};
    s.notes.push_back("hamiltonian   " + hamiltonian_text(spec));
    s.notes.push_back("energy        " + fmt(ground.energy));
    if (ground.dense_energy) {
        s.notes.push_back("dense energy  " + fmt(*ground.dense_energy));
    }
    s.notes.push_back("residual      " + fmt(ground.residual));
    s.notes.push_back("gap           " + fmt(ground.gap_to_next));
    s.notes.push_back(std::string("degenerate    ") +
                      (ground.degenerate ? "yes (entanglement values depend on the representative)" : "no"));
    s.notes.push_back(std::string("parity        ") + (ground.parity > 0 ? "+1" : "-1") + " (prod sigma^" +
                      (conserved_parity(spec) == PauliAxis::X ? "x" : "z") + ")");
    if (r.model == "heisenberg") {
        // The fully polarized representative of the degenerate ground multiplet.
        const StateVector zeros = product_state(std::vector<int>(static_cast<std::size_t>(r.n), 0), g.cap);
        const double e = energy(spec, zeros);
        const EntanglementReport rep = entanglement_report(zeros);
        const BoundChain chain = check_bound_chain(zeros, MagnonMode::quantized(r.n, 0), rep, tol);
        const bool ok = std::abs(e - ground.energy) <= Tolerances{}.residual && chain.holds;
        s.extra_ok = ok;
        s.notes.push_back("representative |0...0>: energy " + fmt(e) + ", Lambda " + fmt(rep.lambda) +
                          ", indicator " + fmt(chain.indicator) + ", G " + fmt(rep.global_G) + "  " + pass_fail(ok));
    }
    return s;
}

int cmd_report(const ReportFlags &r, const CLI::App &cmd, const GlobalFlags &g, std::ostream &out) {
    validate_report(r, cmd);
    const Tolerances tol = g.tolerances();
    const Subject s = build_subject(r, cmd, g);
    const int n = s.state.n_sites();
    const EntanglementReport rep = entanglement_report(s.state);

    out << "kind          " << s.model << "\n";
    out << "params        " << s.params << "\n";
    out << "sites         " << n << "\n";
    out << "boundary      " << s.boundary << "\n";
    for (const std::string &note : s.notes) {
        out << note << "\n";
    }
    out << "\n" << pad("site", 6) << pad("S_l", 20) << "<sigma^z_l>\n";
    for (int l = 1; l <= n; ++l) {
        out << pad(std::to_string(l), 6) << pad(fmt(rep.per_site_S[l - 1]), 20)
            << fmt(rep.bloch_vectors[l - 1].z) << "\n";
    }
    out << "\n";
    out << pad("Lambda", 22) << fmt(rep.lambda) << "\n";
    out << pad("G", 22) << fmt(rep.global_G) << "\n";
    out << pad("1 - G", 22) << fmt(1.0 - rep.global_G) << "\n";
    out << pad("mean |<sigma^z_l>|", 22) << fmt(rep.mean_abs_sigma_z()) << "\n";

    out << "\n" << pad("mode", 6) << pad("k", 20) << pad("<[M_k,M_k^+]>", 20) << pad("|<[M_k,M_k^+]>|", 20)
        << "chain\n";
    std::vector<CsvRow> rows;
    bool all_hold = true;
    double min_margin = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        const MagnonMode mode = MagnonMode::quantized(n, j);
        const BoundChain chain = check_bound_chain(s.state, mode, rep, tol);
        all_hold = all_hold && chain.holds;
        min_margin = std::min(min_margin, chain.min_margin);
        out << pad(std::to_string(j), 6) << pad(fmt(mode.wavenumber()), 20) << pad(fmt(chain.signed_commutator), 20)
            << pad(fmt(chain.indicator), 20) << pass_fail(chain.holds) << "\n";
        rows.push_back(make_row(s.model, s.params, n, s.boundary, j, rep, chain));
    }
    const CounterexampleCheck ce = counterexample_check(s.state, tol);

    out << "\nchain |<[M_k,M_k^+]>| <= mean |<sigma^z_l>| <= Lambda: " << pass_fail(all_hold)
        << " (smallest margin " << fmt(min_margin) << ")\n";
    out << "non-theorem bound |<[M_k,M_k^+]>| <= 1 - G: "
        << (ce.bound_violated ? "violated (" + fmt(ce.indicator) + " > " + fmt(ce.one_minus_G) + ")" : "holds")
        << "\n";

    if (r.dump) {
        out << "\nindex,re,im\n";
        for (std::size_t b = 0; b < s.state.dim(); ++b) {
            out << b << "," << shortest(s.state[b].real()) << "," << shortest(s.state[b].imag()) << "\n";
        }
    }
    if (!g.out.empty()) {
        Output(out, g).write_csv(rows);
    }
    return all_hold && s.extra_ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const SweepFlags &f, const CLI::App &cmd, const GlobalFlags &g, std::ostream &out) {
    const auto need = [&](const char *flag) {
        if (cmd.count(flag) == 0) {
            throw UsageError("sweep --model " + f.model + " requires " + flag);
        }
    };
    need("--n");
    check_site_count(f.n, g.cap);
    if (f.k < 0 || f.k >= f.n) {
        throw UsageError("--k must be in [0, n)");
    }
    const Tolerances tol = g.tolerances();
    const MagnonMode mode = MagnonMode::quantized(f.n, f.k);
    const Boundary boundary = g.boundary_value();
    std::vector<CsvRow> rows;

    const auto add_state = [&](const std::string &model, const std::string &params, const std::string &bnd,
                               const StateVector &state) {
        const EntanglementReport rep = entanglement_report(state);
        rows.push_back(make_row(model, params, f.n, bnd, f.k, rep, check_bound_chain(state, mode, rep, tol)));
    };

    if (f.model == "dicke") {
        if ((cmd.count("--alpha") > 0) == (cmd.count("--m") > 0)) {
            throw UsageError("sweep --model dicke requires exactly one of --alpha or --m");
        }
        std::vector<std::pair<int, std::string>> points;
        if (cmd.count("--alpha") > 0) {
            for (double alpha : parse_grid(f.alpha)) {
                const long long m = std::llround(alpha * f.n);
                if (alpha < 0.0 || alpha > 1.0 || m < 0 || m > f.n) {
                    throw UsageError("alpha outside [0, 1]: " + shortest(alpha));
                }
                // m = round(alpha N); the effective alpha = m/N is reported alongside.
                points.emplace_back(static_cast<int>(m), "alpha=" + shortest(alpha) + ";m=" + std::to_string(m) +
                                                             ";alpha_eff=" + shortest(double(m) / f.n));
            }
        } else {
            for (double mv : parse_grid(f.m)) {
                if (mv != std::floor(mv) || mv < 0 || mv > f.n) {
                    throw UsageError("m must be an integer in [0, n]: " + shortest(mv));
                }
                const int m = static_cast<int>(mv);
                points.emplace_back(m, "m=" + std::to_string(m) + ";alpha_eff=" + shortest(double(m) / f.n));
            }
        }
        for (const auto &[m, params] : points) {
            add_state("dicke", params, "none", dicke_state(f.n, m, g.cap));
        }
    } else if (f.model == "ghz") {
        need("--p");
        const std::vector<double> ps = parse_grid(f.p);
        for (double p : ps) {
            if (p < 0.0 || p > 1.0) {
                throw UsageError("p outside [0, 1]: " + shortest(p));
            }
        }
        for (double p : ps) {
            add_state("ghz", "p=" + shortest(p), "none", weighted_ghz(f.n, p, g.cap));
        }
    } else if (f.model == "ising") {
        need("--B");
        const std::vector<double> fields = parse_grid(f.field);
        for (double b : fields) {
            if (b < 0.0) {
                throw UsageError("B must be >= 0: " + shortest(b));
            }
        }
        for (double b : fields) {
            HamiltonianSpec spec{TransverseIsing{b}, f.n, boundary};
            const GroundResult ground = ground_state(spec, g.ground_options());
            add_state("ising", model_params(spec), std::string(to_string(boundary)), ground.state);
        }
    } else {
        need("--gamma");
        need("--B");
        const std::vector<double> gammas = parse_grid(f.gamma);
        const std::vector<double> fields = parse_grid(f.field);
        for (double gm : gammas) {
            if (gm < 0.0 || gm > 1.0) {
                throw UsageError("gamma outside [0, 1]: " + shortest(gm));
            }
        }
        for (double b : fields) {
            if (b < 0.0) {
                throw UsageError("B must be >= 0: " + shortest(b));
            }
        }
        for (const XYSweepPoint &pt : xy_sweep(f.n, gammas, fields, boundary, g.ground_options())) {
            const BoundChain chain = check_bound_chain(pt.ground.state, mode, pt.report, tol);
            rows.push_back(make_row("xy", "gamma=" + shortest(pt.gamma) + ";B=" + shortest(pt.field), f.n,
                                    std::string(to_string(boundary)), f.k, pt.report, chain));
        }
    }

    const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const CsvRow &r) { return r.chain_ok; });
    Output(out, g).write_csv(rows);
    if (!g.out.empty()) {
        out << "wrote " << rows.size() << " rows to " << g.out << "; chain " << pass_fail(all_ok) << "\n";
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const VerifyFlags &f, const CLI::App &cmd, const GlobalFlags &g, std::ostream &out) {
    if (cmd.count("--n") == 0) {
        throw UsageError("verify requires --n");
    }
    check_site_count(f.n, g.cap);
    if (f.samples < 1) {
        throw UsageError("--samples must be >= 1");
    }
    if (f.p < 0.0 || f.p > 1.0) {
        throw UsageError("--p must be in [0, 1]");
    }
    const Tolerances tol = g.tolerances();
    const int n = f.n;
    std::vector<MagnonMode> modes;
    for (int j = 0; j < n; ++j) {
        modes.push_back(MagnonMode::quantized(n, j));
    }

    std::vector<CsvRow> rows;
    long long chain_violations = 0;
    long long cross_violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    double max_cross = 0.0;
    for (long long i = 0; i < f.samples; ++i) {
        const StateVector psi = haar_random(n, sample_seed(g.seed, static_cast<std::uint64_t>(i)), g.cap);
        const EntanglementReport rep = entanglement_report(psi);
        bool ok = true;
        BoundChain first;
        for (int j = 0; j < n; ++j) {
            const BoundChain chain = check_bound_chain(psi, modes[j], rep, tol);
            if (j == 0) {
                first = chain;
            }
            min_margin = std::min(min_margin, chain.min_margin);
            if (!chain.holds) {
                ++chain_violations;
                ok = false;
            }
        }
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                const CrossCommutators c = cross_commutators(psi, modes[a], modes[b]);
                const double mag = std::max(std::abs(c.annihilators), std::abs(c.creators));
                max_cross = std::max(max_cross, mag);
                if (mag > tol.algebraic) {
                    ++cross_violations;
                    ok = false;
                }
            }
        }
        first.holds = ok;
        rows.push_back(make_row("haar", "seed=" + std::to_string(g.seed) + ";sample=" + std::to_string(i), n, "none",
                                0, rep, first));
    }

    const bool passed = chain_violations == 0 && cross_violations == 0;
    out << "haar states        " << f.samples << " at N = " << n << " (seed " << g.seed << ")\n";
    out << "modes per state    " << n << ", cross pairs per state " << n * (n - 1) / 2 << "\n";
    out << "chain violations   " << chain_violations << "\n";
    out << "cross violations   " << cross_violations << "\n";
    out << "smallest margin    " << fmt(min_margin) << "\n";
    out << "largest cross |.|  " << fmt(max_cross) << "\n";
    out << "slack              " << fmt(tol.algebraic) << "\n";
    out << "result             " << pass_fail(passed) << "\n";

    bool counter_ok = true;
    if (f.counterexample) {
        const StateVector ghz = weighted_ghz(n, f.p, g.cap);
        const CounterexampleCheck ce = counterexample_check(ghz, tol);
        const EntanglementReport rep = entanglement_report(ghz);
        const BoundChain chain = check_bound_chain(ghz, modes[0], rep, tol);
        counter_ok = chain.holds;
        out << "\ncounterexample     ghz N = " << n << ", p = " << fmt(f.p) << "\n";
        out << "indicator          " << fmt(ce.indicator) << "\n";
        out << "1 - G              " << fmt(ce.one_minus_G) << "\n";
        out << "Lambda             " << fmt(rep.lambda) << "\n";
        out << "indicator <= 1 - G " << (ce.bound_violated ? "violated (expected-fail: not a theorem)" : "holds")
            << "\n";
        out << "chain              " << pass_fail(chain.holds) << "\n";
        rows.push_back(make_row("ghz", "p=" + shortest(f.p), n, "none", 0, rep, chain));
    }

    if (!g.out.empty()) {
        Output(out, g).write_csv(rows);
    }
    return passed && counter_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public helpers

std::string csv_header() {
    return "model,family_params,n,boundary,k_index,indicator_abs,sigma_z_mean_abs,lambda,global_G,min_S,max_S,"
           "chain_ok\n";
}

std::string shortest(double value) {
    char buf[64];
    // Adding +0.0 folds a negative zero into zero.
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value + 0.0);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string format_csv_row(const CsvRow &row) {
    std::string line;
    line += csv_field(row.model) + ",";
    line += csv_field(row.family_params) + ",";
    line += std::to_string(row.n) + ",";
    line += csv_field(row.boundary) + ",";
    line += std::to_string(row.k_index) + ",";
    line += shortest(row.indicator_abs) + ",";
    line += shortest(row.sigma_z_mean_abs) + ",";
    line += shortest(row.lambda) + ",";
    line += shortest(row.global_G) + ",";
    line += shortest(row.min_S) + ",";
    line += shortest(row.max_S) + ",";
    line += row.chain_ok ? "true" : "false";
    return line + "\n";
}

std::vector<double> parse_grid(std::string_view text) {
    if (text.find(':') != std::string_view::npos) {
        const std::vector<std::string_view> parts = split(text, ':');
        if (parts.size() != 3) {
            throw UsageError("range must be start:stop:step, got '" + std::string(text) + "'");
        }
        const double start = parse_number(parts[0]);
        const double stop = parse_number(parts[1]);
        const double step = parse_number(parts[2]);
        if (step <= 0.0 || stop < start) {
            throw UsageError("empty range '" + std::string(text) + "'");
        }
        const double span = std::floor((stop - start) / step + 1e-9);
        if (span + 1 > static_cast<double>(kMaxGridPoints)) {
            throw UsageError("range '" + std::string(text) + "' has too many points");
        }
        std::vector<double> values;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(span); ++i) {
            values.push_back(round12(start + static_cast<double>(i) * step));
        }
        return values;
    }
    std::vector<double> values;
    for (std::string_view part : split(text, ',')) {
        values.push_back(parse_number(part));
    }
    if (values.empty()) {
        throw UsageError("empty range");
    }
    return values;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Bosonic character of magnons on N-qubit vacuum states.", "magnonic"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--tol", g.tol, "Slack for the bound chain and commutator checks")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "Write CSV to FILE");
    app.add_option("--seed", g.seed, "Seed for random states and Lanczos start vectors")->capture_default_str();
    app.add_option("--boundary", g.boundary, "Chain boundary condition")
        ->capture_default_str()
        ->check(CLI::IsMember({"periodic", "open"}));
    app.add_option("--cap", g.cap, "Largest accepted number of sites")
        ->capture_default_str()
        ->check(CLI::Range(1, kHardMaxSites));

    ReportFlags rf;
    CLI::App *report = app.add_subcommand("report", "Entanglement and commutator report for one state");
    report->add_option("--kind", rf.kind, "State family")
        ->required()
        ->check(CLI::IsMember({"product", "dicke", "ghz", "cluster", "toric", "ground", "haar"}));
    report->add_option("--n", rf.n, "Number of sites")->check(CLI::PositiveNumber);
    report->add_option("--m", rf.m, "Dicke excitation number")->check(CLI::NonNegativeNumber);
    report->add_option("--p", rf.p, "GHZ weight of |0...0>")->check(CLI::Range(0.0, 1.0));
    report->add_option("--bits", rf.bits, "Product-state bits, site 1 first");
    report->add_option("--graph", rf.graph, "Cluster graph")->check(CLI::IsMember({"path", "ring"}));
    report->add_option("--lx", rf.lx, "Toric lattice width")->check(CLI::Range(2, 64));
    report->add_option("--ly", rf.ly, "Toric lattice height")->check(CLI::Range(2, 64));
    report->add_option("--model", rf.model, "Hamiltonian for --kind ground")
        ->check(CLI::IsMember({"heisenberg", "ising", "xy"}));
    report->add_option("--B", rf.field, "Field strength")->check(CLI::NonNegativeNumber);
    report->add_option("--gamma", rf.gamma, "XY anisotropy")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    report->add_flag("--dump-amplitudes", rf.dump, "Print index,re,im rows (N <= 12)");

    SweepFlags sf;
    CLI::App *sweep = app.add_subcommand("sweep", "CSV over a parameter grid");
    sweep->add_option("--model", sf.model, "Family to sweep")
        ->required()
        ->check(CLI::IsMember({"dicke", "ghz", "ising", "xy"}));
    sweep->add_option("--n", sf.n, "Number of sites")->check(CLI::PositiveNumber);
    sweep->add_option("--alpha", sf.alpha, "Dicke filling m/N grid");
    sweep->add_option("--m", sf.m, "Dicke excitation grid");
    sweep->add_option("--p", sf.p, "GHZ weight grid");
    sweep->add_option("--B", sf.field, "Field grid");
    sweep->add_option("--gamma", sf.gamma, "XY anisotropy grid");
    sweep->add_option("--k", sf.k, "Magnon mode index")->capture_default_str();

    VerifyFlags vf;
    CLI::App *verify = app.add_subcommand("verify", "Randomized check of the bound chain on Haar states");
    verify->add_option("--n", vf.n, "Number of sites")->check(CLI::PositiveNumber);
    verify->add_option("--samples", vf.samples, "Number of Haar states")->capture_default_str();
    verify->add_flag("--counterexample", vf.counterexample, "Also test 1 - G as a bound on a weighted GHZ state");
    verify->add_option("--p", vf.p, "GHZ weight for --counterexample")->capture_default_str();

    std::vector<const char *> argv;
    argv.push_back("magnonic");
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (report->parsed()) {
            return cmd_report(rf, *report, g, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sf, *sweep, g, out);
        }
        return cmd_verify(vf, *verify, g, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError &e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConsistencyError &e) {
        err << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const ConvergenceError &e) {
        err << "no convergence: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace magnonic::cli
