// Command-line front end: generates the graph families, runs the search
// dynamics in the full vertex space and/or the invariant subspace, scans the
// coupling, and emits the closed-form predictions. All outputs are plain
// CSV/JSON and are byte-identical across runs for identical configurations.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwsearch/dynamics.hpp"
#include "qwsearch/graph.hpp"
#include "qwsearch/srg.hpp"
#include "qwsearch/theory.hpp"

namespace {

using namespace qws;

struct FamilyOpts {
    std::string family;
    std::int64_t n = -1;
    std::int64_t q = -1;
    std::int64_t t = -1;
    std::int64_t d = -1;
    std::int64_t m = -1;
};

void add_family_options(CLI::App* cmd, FamilyOpts& o) {
    cmd->add_option("--family", o.family, "graph family: complete|paley|latin|triangular")
        ->required();
    cmd->add_option("--n", o.n, "vertex count (complete)");
    cmd->add_option("--q", o.q, "field order (paley)");
    cmd->add_option("--t", o.t, "grid side (latin)");
    cmd->add_option("--d", o.d, "classes per vertex (latin)");
    cmd->add_option("--m", o.m, "base set size (triangular)");
}

std::int64_t require_param(std::int64_t v, const char* flag, const char* family) {
    if (v < 0)
        throw std::invalid_argument(std::string("family ") + family + " requires " + flag);
    return v;
}

GraphFamily resolve_family(const FamilyOpts& o) {
    if (o.family == "complete") return GraphFamily::complete(require_param(o.n, "--n", "complete"));
    if (o.family == "paley") return GraphFamily::paley(require_param(o.q, "--q", "paley"));
    if (o.family == "latin")
        return GraphFamily::latin_square(require_param(o.t, "--t", "latin"),
                                         require_param(o.d, "--d", "latin"));
    if (o.family == "triangular")
        return GraphFamily::triangular(require_param(o.m, "--m", "triangular"));
    throw std::invalid_argument("unknown family '" + o.family +
                                "' (expected complete|paley|latin|triangular)");
}

// "c1" and "c2" select the critical couplings; for the complete graph both
// map to the exact critical value 1/N. Anything else parses as a number.
double resolve_gamma(const std::string& s, const GraphFamily& fam) {
    if (s == "c1" || s == "c2") {
        if (!fam.is_srg()) return 1.0 / static_cast<double>(fam.vertex_count());
        return critical_gamma(fam.srg_params(), s == "c1" ? CaseTag::Case1 : CaseTag::Case2);
    }
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size())
        throw std::invalid_argument("bad --gamma value '" + s + "' (expected c1, c2, or a number)");
    if (!(v > 0.0)) throw std::invalid_argument("--gamma must be positive");
    return v;
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    writer(f);
    f.flush();
    if (!f) throw std::runtime_error("failed writing output file '" + path + "'");
}

struct SimOpts {
    FamilyOpts fam;
    std::string gamma = "c2";
    int marked = 0;
    double tmax = 0.0;  // 0: default pi sqrt(N)
    int samples = 1000;
    std::string engine = "reduced";
    std::string laplacian = "adjacency";
    std::string out;
    std::string format = "csv";
};

void add_sim_options(CLI::App* cmd, SimOpts& o) {
    add_family_options(cmd, o.fam);
    cmd->add_option("--gamma", o.gamma, "coupling: c1|c2|<positive number> (default c2)");
    cmd->add_option("--marked", o.marked, "marked vertex index (full engine; default 0)");
    cmd->add_option("--tmax", o.tmax, "evolution time (default pi*sqrt(N))")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--samples", o.samples, "sample count (default 1000, minimum 10)")
        ->check(CLI::Range(10, 100000000));
    cmd->add_option("--engine", o.engine, "full|reduced|both (default reduced)")
        ->check(CLI::IsMember({"full", "reduced", "both"}));
    cmd->add_option("--laplacian", o.laplacian, "adjacency|full (full engine; default adjacency)")
        ->check(CLI::IsMember({"adjacency", "full"}));
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--format", o.format, "csv|json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
}

void write_trace(const EvolutionTrace& trace, const std::string& format, const std::string& out) {
    with_output(out, [&](std::ostream& os) {
        if (format == "json")
            write_trace_json(trace, os);
        else
            write_trace_csv(trace, os);
    });
}

EvolutionTrace run_reduced_engine(const GraphFamily& fam, double gamma, double tmax, double dt) {
    if (!fam.is_srg())
        return evolve_reduced_complete(fam.vertex_count(), gamma, tmax, dt);
    const SrgParams params = fam.srg_params();
    return evolve_reduced(params, gamma, initial_state_reduced(Basis::ReducedWAB, params), tmax,
                          dt);
}

int run_simulate(const SimOpts& o) {
    const GraphFamily fam = resolve_family(o.fam);
    const double gamma = resolve_gamma(o.gamma, fam);
    const std::int64_t n = fam.vertex_count();
    const double tmax =
        o.tmax > 0.0 ? o.tmax : std::numbers::pi * std::sqrt(static_cast<double>(n));
    const double dt = tmax / o.samples;

    EvolutionTrace reduced, full;
    const bool want_reduced = o.engine != "full";
    const bool want_full = o.engine != "reduced";
    if (want_reduced) {
        reduced = run_reduced_engine(fam, gamma, tmax, dt);
        reduced.meta.family = fam.name();
    }
    Graph graph(2);
    if (want_full) {
        graph = build_family(fam);
        HamiltonianSpec spec{&graph, o.marked, gamma,
                             o.laplacian == "full" ? LaplacianMode::FullLaplacian
                                                   : LaplacianMode::AdjacencyOnly};
        full = evolve_full(spec, initial_state_full(static_cast<int>(n)), tmax, dt);
        full.meta.family = fam.name();
        if (fam.is_srg()) full.meta.params = fam.srg_params();
    }

    const EvolutionTrace& exported = want_full ? full : reduced;
    write_trace(exported, o.format, o.out);

    const Peak pk = find_peak(exported);
    std::cout << "t_peak=" << format_g15(pk.t) << " p_peak=" << format_g15(pk.p)
              << " gamma=" << format_g15(gamma) << '\n';
    if (o.engine == "both")
        std::cout << "max_full_reduced_deviation=" << format_g15(max_trace_deviation(full, reduced))
                  << '\n';
    return 0;
}

int run_gen(const FamilyOpts& fo, const std::string& out) {
    const GraphFamily fam = resolve_family(fo);
    const Graph g = build_family(fam);
    SrgParams header;
    if (fam.is_srg()) {
        const SrgCheck chk = verify_srg(g);
        if (!chk.ok)
            throw std::runtime_error("generated graph failed the strong-regularity check: " +
                                     chk.failure);
        if (!(chk.params == fam.srg_params()))
            throw std::runtime_error("generated graph disagrees with the family parameters");
        header = chk.params;
    } else {
        // no non-adjacent pairs exist, so mu has no witnesses; record 0
        header = SrgParams{fam.n, fam.n - 1, fam.n - 2, 0};
    }
    with_output(out, [&](std::ostream& os) { write_edge_list(g, header, os); });
    if (!out.empty() && out != "-")
        std::cout << header.n << ' ' << header.k << ' ' << header.lambda << ' ' << header.mu
                  << '\n';
    return 0;
}

struct ScanOpts {
    SimOpts sim;
    double gamma_min = 0.0;
    double gamma_max = 0.0;
    int steps = 0;
    std::string spacing = "linear";
};

int run_scan(const ScanOpts& o) {
    if (!(o.gamma_min > 0.0) || !(o.gamma_max > o.gamma_min))
        throw std::invalid_argument("scan-gamma requires 0 < --gamma-min < --gamma-max");
    if (o.steps < 3) throw std::invalid_argument("scan-gamma requires --steps >= 3");
    if (o.sim.engine == "both")
        throw std::invalid_argument("scan-gamma supports --engine reduced or full");

    const GraphFamily fam = resolve_family(o.sim.fam);
    const std::int64_t n = fam.vertex_count();
    const double tmax =
        o.sim.tmax > 0.0 ? o.sim.tmax : std::numbers::pi * std::sqrt(static_cast<double>(n));
    const double dt = tmax / o.sim.samples;

    std::vector<double> gammas(static_cast<std::size_t>(o.steps));
    for (int i = 0; i < o.steps; ++i) {
        const double f = static_cast<double>(i) / (o.steps - 1);
        gammas[static_cast<std::size_t>(i)] =
            o.spacing == "log" ? o.gamma_min * std::pow(o.gamma_max / o.gamma_min, f)
                               : o.gamma_min + f * (o.gamma_max - o.gamma_min);
    }

    Graph graph(2);
    if (o.sim.engine == "full") graph = build_family(fam);

    std::vector<double> t_peaks, p_peaks;
    for (const double gamma : gammas) {
        EvolutionTrace trace;
        if (o.sim.engine == "full") {
            HamiltonianSpec spec{&graph, o.sim.marked, gamma,
                                 o.sim.laplacian == "full" ? LaplacianMode::FullLaplacian
                                                           : LaplacianMode::AdjacencyOnly};
            trace = evolve_full(spec, initial_state_full(static_cast<int>(n)), tmax, dt);
        } else {
            trace = run_reduced_engine(fam, gamma, tmax, dt);
        }
        const Peak pk = find_peak(trace);
        t_peaks.push_back(pk.t);
        p_peaks.push_back(pk.p);
    }

    with_output(o.sim.out, [&](std::ostream& os) {
        if (o.sim.format == "json") {
            nlohmann::ordered_json j;
            j["meta"] = {{"family", fam.name()},
                         {"engine", o.sim.engine},
                         {"spacing", o.spacing},
                         {"t_max", tmax},
                         {"samples", o.sim.samples}};
            j["gamma"] = gammas;
            j["t_peak"] = t_peaks;
            j["p_peak"] = p_peaks;
            os << j.dump(2) << '\n';
        } else {
            os << "# family=" << fam.name() << '\n';
            os << "# engine=" << o.sim.engine << '\n';
            os << "# spacing=" << o.spacing << '\n';
            os << "# t_max=" << format_g15(tmax) << '\n';
            os << "# samples=" << o.sim.samples << '\n';
            os << "gamma,t_peak,p_peak\n";
            for (std::size_t i = 0; i < gammas.size(); ++i)
                os << format_g15(gammas[i]) << ',' << format_g15(t_peaks[i]) << ','
                   << format_g15(p_peaks[i]) << '\n';
        }
    });
    return 0;
}

int run_predict(const FamilyOpts& fo, int case_tag, const std::string& out) {
    const GraphFamily fam = resolve_family(fo);
    with_output(out, [&](std::ostream& os) {
        if (fam.is_srg()) {
            const CaseTag tag = case_tag == 1 ? CaseTag::Case1 : CaseTag::Case2;
            write_prediction_json(predict(fam.srg_params(), tag), os, fam.name());
        } else {
            write_prediction_json(complete_graph_reference(fam.vertex_count()), os, fam.name());
        }
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuous-time quantum-walk search on strongly regular graphs"};
    app.require_subcommand(1);

    FamilyOpts gen_fam;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "generate a graph and emit its edge list");
    add_family_options(gen, gen_fam);
    gen->add_option("--out", gen_out, "edge-list path (default stdout)");

    SimOpts sim;
    CLI::App* simulate =
        app.add_subcommand("simulate", "evolve the search and emit a probability trace");
    add_sim_options(simulate, sim);

    ScanOpts scan;
    CLI::App* scan_cmd =
        app.add_subcommand("scan-gamma", "peak statistics over a grid of couplings");
    add_sim_options(scan_cmd, scan.sim);
    scan_cmd->add_option("--gamma-min", scan.gamma_min, "lowest coupling")->required();
    scan_cmd->add_option("--gamma-max", scan.gamma_max, "highest coupling")->required();
    scan_cmd->add_option("--steps", scan.steps, "grid size (>= 3)")->required();
    scan_cmd->add_option("--spacing", scan.spacing, "linear|log (default linear)")
        ->check(CLI::IsMember({"linear", "log"}));

    FamilyOpts pred_fam;
    std::string pred_out;
    int pred_case = 2;
    CLI::App* pred = app.add_subcommand("predict", "closed-form predictions for a family");
    add_family_options(pred, pred_fam);
    pred->add_option("--case", pred_case, "critical-coupling case: 1|2 (default 2)")
        ->check(CLI::Range(1, 2));
    pred->add_option("--out", pred_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (gen->parsed()) return run_gen(gen_fam, gen_out);
        if (simulate->parsed()) return run_simulate(sim);
        if (scan_cmd->parsed()) return run_scan(scan);
        if (pred->parsed()) return run_predict(pred_fam, pred_case, pred_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
