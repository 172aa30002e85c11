// annigraph: build group-annihilator graphs, compute their spectra and
// annihilator ideals, and run the verification suites from the command line.
//
// Exit codes: 0 success, 1 verification failure (a claimed identity or
// inequality did not hold on the computed data), 2 usage or configuration
// error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "annigraph/ann_graph.hpp"
#include "annigraph/energy.hpp"
#include "annigraph/graph_io.hpp"
#include "annigraph/orbits.hpp"
#include "annigraph/spec_parse.hpp"
#include "annigraph/threshold.hpp"

using json = nlohmann::ordered_json;
using namespace annigraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json json_doubles(const std::vector<double>& xs) {
    json out = json::array();
    for (double x : xs) out.push_back(fmt(x));
    return out;
}

struct CommonOpts {
    std::string group_spec;
    std::string format = "text";
    std::string out_path;
    std::int64_t max_vertices = kDefaultMaxVertices;
    double tol = 1e-10;
    int max_sweeps = 100;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_group = true) {
    if (needs_group)
        cmd->add_option("--group", o.group_spec,
                        "group spec: moduli:n1,n2,... | p^a:P^A | plist:P^A1,P^A2,P^A3")
            ->required();
    cmd->add_option("--format", o.format, "output format");
    cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
    cmd->add_option("--max-vertices", o.max_vertices, "vertex cap for graph construction");
    cmd->add_option("--tol", o.tol, "eigensolver tolerance");
    cmd->add_option("--max-sweeps", o.max_sweeps, "eigensolver iteration cap");
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw Error(ErrorKind::ParseError, "cannot open output file " + o.out_path);
    f << text;
}

// The eigensolver keeps its own dimension cap; raising the graph vertex cap
// must not silently authorize an n^2 dense allocation.
EigenOptions eigen_opts(const CommonOpts& o) {
    EigenOptions e;
    e.tol = o.tol;
    e.max_sweeps = o.max_sweeps;
    return e;
}

std::string route_name(AnnihilatorRoute r) {
    switch (r) {
        case AnnihilatorRoute::Cyclic: return "cyclic";
        case AnnihilatorRoute::Homogeneous: return "homogeneous";
        case AnnihilatorRoute::Rank3: return "rank3";
        case AnnihilatorRoute::BruteForce: return "bruteforce";
    }
    return "?";
}

// ---------------------------------------------------------------- build ---

int cmd_build(const CommonOpts& o) {
    FiniteAbelianGroup g = parse_group_spec(o.group_spec);
    AnnGraph ag = build_graph(g, o.max_vertices);
    if (o.format == "graph6") {
        emit(o, export_graph(ag.graph, GraphFormat::Graph6) + "\n");
        return kExitOk;
    }
    if (o.format == "dot") {
        emit(o, export_graph(ag.graph, GraphFormat::Dot, vertex_labels(g)));
        return kExitOk;
    }
    if (o.format == "json") {
        emit(o, export_graph(ag.graph, GraphFormat::EdgeListJson, vertex_labels(g)));
        return kExitOk;
    }
    if (o.format == "text") {
        GraphMetrics met = metrics(ag);
        std::ostringstream out;
        out << "group: " << o.group_spec << "\n";
        out << "n: " << ag.graph.n() << "\n";
        out << "edges: " << ag.graph.edge_count() << "\n";
        IntPartition ds = degree_sequence(ag.graph);
        out << "degree_sequence:";
        for (std::int64_t d : ds.parts) out << " " << d;
        out << "\n";
        out << "diameter: " << met.diameter << "\n";
        out << "girth: " << (met.girth ? std::to_string(*met.girth) : std::string("none")) << "\n";
        out << "eccentricity_of_zero: " << met.eccentricity_of_zero << "\n";
        if (ag.graph.n() <= 32) {
            out << "adjacency:\n";
            for (std::int64_t u = 0; u < ag.graph.n(); ++u) {
                for (std::int64_t v = 0; v < ag.graph.n(); ++v)
                    out << (ag.graph.has_edge(u, v) ? '1' : '0');
                out << "\n";
            }
        }
        emit(o, out.str());
        return kExitOk;
    }
    throw Error(ErrorKind::UnsupportedFormat, "build supports graph6|dot|json|text");
}

// ------------------------------------------------------------- spectrum ---

int cmd_spectrum(const CommonOpts& o) {
    FiniteAbelianGroup g = parse_group_spec(o.group_spec);
    AnnGraph ag = build_graph(g, o.max_vertices);
    Spectrum s = adjacency_spectrum(ag.graph, eigen_opts(o));
    double e = energy(s);
    double sum = 0.0, sum2 = 0.0;
    for (double x : s.eigenvalues) {
        sum += x;
        sum2 += x * x;
    }
    if (o.format == "json") {
        json out;
        out["group"] = o.group_spec;
        out["n"] = ag.graph.n();
        out["edge_count"] = ag.graph.edge_count();
        out["eigenvalues"] = json_doubles(s.eigenvalues);
        out["energy"] = fmt(e);
        out["sum"] = fmt(sum);
        out["sum_of_squares"] = fmt(sum2);
        if (g.is_cyclic_p_group())
            out["quotient_charpoly"] = quotient_charpoly(quotient(ag)).coeff_strings();
        emit(o, out.dump(2) + "\n");
        return kExitOk;
    }
    if (o.format == "csv") {
        std::ostringstream out;
        out << "index,eigenvalue\n";
        for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
            out << i << "," << fmt(s.eigenvalues[i]) << "\n";
        emit(o, out.str());
        return kExitOk;
    }
    if (o.format == "text") {
        std::ostringstream out;
        out << "n: " << ag.graph.n() << "\n";
        out << "energy: " << fmt(e) << "\n";
        out << "eigenvalues:";
        for (double x : s.eigenvalues) out << " " << fmt(x);
        out << "\n";
        emit(o, out.str());
        return kExitOk;
    }
    throw Error(ErrorKind::UnsupportedFormat, "spectrum supports json|csv|text");
}

// ------------------------------------------------------------ laplacian ---

int cmd_laplacian(const CommonOpts& o) {
    FiniteAbelianGroup g = parse_group_spec(o.group_spec);
    AnnGraph ag = build_graph(g, o.max_vertices);
    bool threshold = !find_alternating_4cycle(ag.graph).has_value();

    Spectrum numeric = laplacian_spectrum_numeric(ag.graph, eigen_opts(o));
    std::vector<std::int64_t> exact;
    double max_diff = 0.0;
    if (threshold) {
        exact = laplacian_spectrum_threshold(ag.graph);
        for (std::size_t i = 0; i < exact.size(); ++i) {
            double n_val = numeric.eigenvalues[numeric.eigenvalues.size() - 1 - i];
            max_diff = std::max(max_diff, std::abs(n_val - static_cast<double>(exact[i])));
        }
    }

    std::ostringstream text;
    json out;
    out["group"] = o.group_spec;
    out["n"] = ag.graph.n();
    out["threshold"] = threshold;
    text << "group: " << o.group_spec << "\nthreshold: " << (threshold ? "true" : "false") << "\n";
    if (threshold) {
        json spec = json::array();
        for (std::int64_t v : exact) spec.push_back(v);
        out["spectrum"] = spec;
        json mult = json::object();
        std::map<std::int64_t, std::int64_t> counts;
        for (std::int64_t v : exact) ++counts[v];
        for (auto it = counts.rbegin(); it != counts.rend(); ++it)
            mult[std::to_string(it->first)] = it->second;
        out["multiplicities"] = mult;
        out["numeric_max_abs_diff"] = fmt(max_diff);
        text << "spectrum:";
        for (std::int64_t v : exact) text << " " << v;
        text << "\nnumeric_max_abs_diff: " << fmt(max_diff) << "\n";
    } else {
        out["spectrum_numeric"] = json_doubles(numeric.eigenvalues);
        text << "spectrum_numeric:";
        for (double v : numeric.eigenvalues) text << " " << fmt(v);
        text << "\n";
    }

    if (o.format == "json")
        emit(o, out.dump(2) + "\n");
    else if (o.format == "text")
        emit(o, text.str());
    else
        throw Error(ErrorKind::UnsupportedFormat, "laplacian supports json|text");

    if (threshold && max_diff > 1e-8) {
        std::cerr << "laplacian: conjugate spectrum and numeric eigenvalues disagree by "
                  << fmt(max_diff) << "\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}

// ------------------------------------------------------- threshold-check ---

int cmd_threshold_check(const CommonOpts& o) {
    FiniteAbelianGroup g = parse_group_spec(o.group_spec);
    AnnGraph ag = build_graph(g, o.max_vertices);
    auto witness = find_alternating_4cycle(ag.graph);
    std::string word;
    if (!witness) word = peel_creation_sequence(ag.graph).str();

    std::ostringstream text;
    text << "threshold: " << (witness ? "false" : "true") << ", witness: ";
    if (witness)
        text << "(" << (*witness)[0] << "," << (*witness)[1] << "," << (*witness)[2] << ","
             << (*witness)[3] << ")";
    else
        text << "none";
    text << "\n";
    if (!witness) text << "creation_sequence: " << word << "\n";

    if (o.format == "json") {
        json out;
        out["group"] = o.group_spec;
        out["threshold"] = !witness.has_value();
        if (witness) {
            out["witness"] = {(*witness)[0], (*witness)[1], (*witness)[2], (*witness)[3]};
        } else {
            out["witness"] = nullptr;
            out["creation_sequence"] = word;
        }
        emit(o, out.dump(2) + "\n");
    } else {
        emit(o, text.str());
    }

    // Cyclic p-group graphs are threshold; a witness there is a verification
    // failure, not just a report.
    if (witness && g.is_cyclic_p_group()) return kExitVerificationFailure;
    return kExitOk;
}

// ----------------------------------------------------------- annihilators ---

int cmd_annihilators(const CommonOpts& o, bool verify) {
    FiniteAbelianGroup g = parse_group_spec(o.group_spec);
    if (g.order() > o.max_vertices)
        throw Error(ErrorKind::GraphTooLarge, "group order exceeds --max-vertices");
    AnnihilatorRoute route = annihilator_route(g);

    struct Row {
        std::int64_t index;
        std::string coords;
        std::int64_t generator;
        std::string label;
        std::int64_t oracle = -1;
        bool match = true;
    };
    std::vector<Row> rows;
    bool all_match = true;
    for (std::int64_t v = 0; v < g.order(); ++v) {
        GroupElement a = g.element(v);
        Row row;
        row.index = v;
        row.coords = element_label(g, v);
        if (route == AnnihilatorRoute::Rank3) {
            Rank3Result r = annihilator_rank3_labeled(a);
            row.generator = r.ideal.generator;
            row.label = std::string("rank3/") + std::string(r.case_label);
        } else {
            row.generator = annihilator(a).generator;
            row.label = route_name(route);
        }
        if (verify) {
            row.oracle = annihilator_bruteforce(a).generator;
            row.match = row.oracle == row.generator;
            all_match = all_match && row.match;
        }
        rows.push_back(std::move(row));
    }

    if (o.format == "json") {
        json out;
        out["group"] = o.group_spec;
        out["exponent"] = g.exponent();
        out["route"] = route_name(route);
        out["verified"] = verify;
        json jr = json::array();
        for (const Row& r : rows) {
            json row;
            row["index"] = r.index;
            row["element"] = r.coords;
            row["generator"] = r.generator;
            row["case"] = r.label;
            if (verify) {
                row["oracle"] = r.oracle;
                row["match"] = r.match;
            }
            jr.push_back(row);
        }
        out["annihilators"] = jr;
        emit(o, out.dump(2) + "\n");
    } else if (o.format == "csv") {
        std::ostringstream out;
        out << "index,element,generator,case";
        if (verify) out << ",oracle,match";
        out << "\n";
        for (const Row& r : rows) {
            out << r.index << ",\"" << r.coords << "\"," << r.generator << "," << r.label;
            if (verify) out << "," << r.oracle << "," << (r.match ? "true" : "false");
            out << "\n";
        }
        emit(o, out.str());
    } else if (o.format == "text") {
        std::ostringstream out;
        for (const Row& r : rows) {
            out << r.coords << " -> " << r.generator << "Z  [" << r.label << "]";
            if (verify && !r.match) out << "  MISMATCH oracle=" << r.oracle;
            out << "\n";
        }
        emit(o, out.str());
    } else {
        throw Error(ErrorKind::UnsupportedFormat, "annihilators supports json|csv|text");
    }
    return all_match ? kExitOk : kExitVerificationFailure;
}

// ----------------------------------------------------------- verify-thm6 ---

int cmd_verify_energy(const CommonOpts& o, std::int64_t p) {
    EnergyBoundReport r = verify_energy_bounds(p, eigen_opts(o));
    if (o.format == "json") {
        json out;
        out["p"] = r.p;
        out["m"] = r.m;
        out["energy_gamma"] = fmt(r.e_gamma);
        out["energy_threshold_graph"] = fmt(r.e_threshold);
        out["energy_complete"] = fmt(r.e_complete);
        out["linear_bound"] = fmt(r.linear_bound);
        out["chain_holds"] = r.chain_holds;
        out["linear_bound_holds"] = r.linear_bound_holds;
        out["residual_cubic_gamma"] = r.residual_cubic_gamma.coeff_strings();
        out["residual_cubic_threshold"] = r.residual_cubic_threshold.coeff_strings();
        emit(o, out.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "p: " << r.p << "  m: " << r.m << "\n";
        out << "E(Gamma(Z/p^2)): " << fmt(r.e_gamma) << "\n";
        out << "E(threshold word): " << fmt(r.e_threshold) << "\n";
        out << "E(K_{p^2}): " << fmt(r.e_complete) << "\n";
        out << "chain E(Gamma) < E(G) < E(K): " << (r.chain_holds ? "holds" : "FAILS") << "\n";
        out << "E(Gamma) <= 7p-2 = " << fmt(r.linear_bound) << ": "
            << (r.linear_bound_holds ? "holds" : "FAILS") << "\n";
        emit(o, out.str());
    }
    return (r.chain_holds && r.linear_bound_holds) ? kExitOk : kExitVerificationFailure;
}

// -------------------------------------------------------- conjecture-scan ---

int cmd_conjecture_scan(const CommonOpts& o, const std::string& primes_csv, int alpha_min,
                        int alpha_max) {
    std::vector<std::int64_t> primes;
    std::stringstream ss(primes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        primes.push_back(std::stoll(tok));
    }
    auto rows = conjecture_scan(primes, alpha_max, o.max_vertices, eigen_opts(o), alpha_min);

    bool refuted = false;
    for (const auto& r : rows) refuted = refuted || r.verdict == ConjectureVerdict::Refutes;

    if (o.format == "json") {
        json out = json::array();
        for (const auto& r : rows) {
            json row;
            row["p"] = r.p;
            row["alpha"] = r.alpha;
            row["n"] = r.n;
            row["energy"] = fmt(r.e);
            row["complete_energy"] = fmt(r.complete_energy);
            row["verdict"] = to_string(r.verdict);
            if (!r.spectrum_if_refuted.empty())
                row["spectrum"] = json_doubles(r.spectrum_if_refuted);
            out.push_back(row);
        }
        emit(o, out.dump(2) + "\n");
    } else if (o.format == "csv") {
        std::ostringstream out;
        out << "p,alpha,n,energy,complete_energy,verdict\n";
        for (const auto& r : rows)
            out << r.p << "," << r.alpha << "," << r.n << "," << fmt(r.e) << ","
                << fmt(r.complete_energy) << "," << to_string(r.verdict) << "\n";
        emit(o, out.str());
    } else if (o.format == "text") {
        std::ostringstream out;
        for (const auto& r : rows) {
            out << "p=" << r.p << " alpha=" << r.alpha << " n=" << r.n << " E=" << fmt(r.e)
                << " 2(n-1)=" << fmt(r.complete_energy) << " " << to_string(r.verdict) << "\n";
            if (!r.spectrum_if_refuted.empty()) {
                out << "  spectrum:";
                for (double x : r.spectrum_if_refuted) out << " " << fmt(x);
                out << "\n";
            }
        }
        emit(o, out.str());
    } else {
        throw Error(ErrorKind::UnsupportedFormat, "conjecture-scan supports json|csv|text");
    }
    return refuted ? kExitVerificationFailure : kExitOk;
}

// ---------------------------------------------------------------- orbits ---

int cmd_orbits(const CommonOpts& o) {
    FiniteAbelianGroup g = parse_group_spec(o.group_spec);
    auto orbits = bruteforce_aut_orbits(g);
    std::int64_t miller = miller_orbit_count(g);
    std::int64_t oracle = static_cast<std::int64_t>(orbits.size());
    bool agree = miller == oracle;

    if (o.format == "json") {
        json out;
        out["group"] = o.group_spec;
        out["order"] = g.order();
        if (g.is_p_group()) {
            PartitionType t(g.p_group_view()->prime, g.p_group_view()->partition());
            out["lambda"] = t.lambda;
            out["p"] = t.p;
            out["miller"] = miller;
            out["oracle"] = oracle;
            std::int64_t ss = ss_orbit_count_experimental(t);
            out["ss_experimental"] = ss;
            out["ss_agrees"] = ss == miller;
        } else {
            out["lambda"] = nullptr;
            out["p"] = nullptr;
            out["miller"] = miller;
            out["oracle"] = oracle;
            out["ss_experimental"] = nullptr;
            out["ss_agrees"] = nullptr;
        }
        out["agree"] = agree;
        json jorb = json::array();
        for (const auto& cls : orbits) {
            json members = json::array();
            for (std::int64_t v : cls) members.push_back(element_label(g, v));
            jorb.push_back(members);
        }
        out["orbits"] = jorb;
        emit(o, out.dump(2) + "\n");
    } else if (o.format == "text") {
        std::ostringstream out;
        out << "order: " << g.order() << "\n";
        out << "miller: " << miller << "\n";
        out << "oracle_orbit_count: " << orbits.size() << "\n";
        out << "agree: " << (agree ? "true" : "false") << "\n";
        for (const auto& cls : orbits) {
            out << "orbit:";
            for (std::int64_t v : cls) out << " " << element_label(g, v);
            out << "\n";
        }
        emit(o, out.str());
    } else {
        throw Error(ErrorKind::UnsupportedFormat, "orbits supports json|text");
    }
    return agree ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-annihilator graphs: construction, spectra, verification"};
    app.require_subcommand(1);

    std::int64_t env_cap = kDefaultMaxVertices;
    if (const char* env = std::getenv("ANNIGRAPH_MAX_VERTICES")) env_cap = std::atoll(env);

    CommonOpts build_o, spectrum_o, laplacian_o, threshold_o, ann_o, thm6_o, scan_o, orbits_o;
    for (CommonOpts* o :
         {&build_o, &spectrum_o, &laplacian_o, &threshold_o, &ann_o, &thm6_o, &scan_o, &orbits_o})
        o->max_vertices = env_cap;

    auto* c_build = app.add_subcommand("build", "construct Gamma(G) and export it");
    add_common(c_build, build_o);

    auto* c_spectrum = app.add_subcommand("spectrum", "adjacency spectrum and energy");
    add_common(c_spectrum, spectrum_o);

    auto* c_laplacian = app.add_subcommand("laplacian", "Laplacian spectrum (exact for threshold graphs)");
    add_common(c_laplacian, laplacian_o);

    auto* c_threshold = app.add_subcommand("threshold-check", "alternating 4-cycle search");
    add_common(c_threshold, threshold_o);

    bool verify = false;
    auto* c_ann = app.add_subcommand("annihilators", "per-element annihilator ideals");
    add_common(c_ann, ann_o);
    c_ann->add_flag("--verify", verify, "compare closed forms against the brute-force oracle");

    std::int64_t thm6_p = 7;
    auto* c_thm6 = app.add_subcommand("verify-thm6", "energy interval check for Gamma(Z/p^2)");
    add_common(c_thm6, thm6_o, /*needs_group=*/false);
    c_thm6->add_option("--p", thm6_p, "prime >= 7")->required();

    std::string scan_primes = "2,3,5,7,11,13,17,19,23";
    int alpha_min = 1, alpha_max = 16;
    auto* c_scan = app.add_subcommand("conjecture-scan", "hypo/hyperenergetic scan of Gamma(Z/p^alpha)");
    add_common(c_scan, scan_o, /*needs_group=*/false);
    scan_o.max_vertices = std::min<std::int64_t>(env_cap, 729);
    c_scan->add_option("--primes", scan_primes, "comma-separated primes");
    c_scan->add_option("--alpha-min", alpha_min, "smallest exponent scanned");
    c_scan->add_option("--alpha-max", alpha_max, "largest exponent scanned");

    auto* c_orbits = app.add_subcommand("orbits", "Aut(G)-orbit oracle vs the closed-form count");
    add_common(c_orbits, orbits_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_build->parsed()) return cmd_build(build_o);
        if (c_spectrum->parsed()) return cmd_spectrum(spectrum_o);
        if (c_laplacian->parsed()) return cmd_laplacian(laplacian_o);
        if (c_threshold->parsed()) return cmd_threshold_check(threshold_o);
        if (c_ann->parsed()) return cmd_annihilators(ann_o, verify);
        if (c_thm6->parsed()) return cmd_verify_energy(thm6_o, thm6_p);
        if (c_scan->parsed()) return cmd_conjecture_scan(scan_o, scan_primes, alpha_min, alpha_max);
        if (c_orbits->parsed()) return cmd_orbits(orbits_o);
    } catch (const Error& e) {
        std::cerr << "annigraph: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::EquitabilityViolated:
            case ErrorKind::NoConvergence:
            case ErrorKind::NotSymmetric:
            case ErrorKind::NotThreshold:
                return kExitVerificationFailure;
            default:
                return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "annigraph: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
