#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "superdom/families.hpp"
#include "superdom/harness.hpp"
#include "superdom/io.hpp"
#include "superdom/solver.hpp"

namespace {

using namespace superdom;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitViolation = 4;

struct InputOptions {
    std::string family;
    std::string file;
    std::string g6;
    std::string edges;
    std::string json_text;
};

struct LoadedGraph {
    Graph graph;
    std::optional<FamilySpec> spec;  // set when the graph came from --family
    std::string id;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* family = cmd->add_option("--family", in.family, "family spec, e.g. path:7 or box:(star:2)x(star:2)");
    auto* file = cmd->add_option("--file", in.file, "graph file (.g6, .json or edge list)");
    auto* g6 = cmd->add_option("--g6", in.g6, "inline graph6 string");
    auto* edges = cmd->add_option("--edges", in.edges, "inline edge list: n m u1 v1 u2 v2 ...");
    auto* json_in = cmd->add_option("--json", in.json_text, "inline JSON graph {\"n\":..,\"edges\":[[u,v],..]}");
    family->excludes(file)->excludes(g6)->excludes(edges)->excludes(json_in);
    file->excludes(g6)->excludes(edges)->excludes(json_in);
    g6->excludes(edges)->excludes(json_in);
    edges->excludes(json_in);
}

LoadedGraph load_graph(const InputOptions& in) {
    if (!in.family.empty()) {
        FamilySpec spec = FamilySpec::parse(in.family);
        return {construct(spec), spec, spec.to_string()};
    }
    if (!in.file.empty()) return {read_graph_file(in.file), std::nullopt, in.file};
    if (!in.g6.empty()) return {graph6_decode(in.g6), std::nullopt, in.g6};
    if (!in.edges.empty()) return {edge_list_decode_string(in.edges), std::nullopt, "edges"};
    if (!in.json_text.empty()) return {graph_from_json(in.json_text), std::nullopt, "json"};
    throw ParseError("no input graph: pass --family, --file, --g6, --edges or --json");
}

// factor arguments accept a family spec first, then fall back to a file path
Graph load_factor(const std::string& text, std::string& id) {
    try {
        FamilySpec spec = FamilySpec::parse(text);
        id = spec.to_string();
        return construct(spec);
    } catch (const ParseError&) {
        id = text;
        return read_graph_file(text);
    }
}

struct CapsOptions {
    long long brute_cap = -1, enum_cap = -1, secure_cap = -1, timeout_ms = -1;

    SolverCaps resolve() const {
        SolverCaps caps = SolverCaps::from_env();
        if (brute_cap > 0) caps.brute_cap = (int)brute_cap;
        if (enum_cap > 0) caps.enum_cap = (int)enum_cap;
        if (secure_cap > 0) caps.secure_cap = (int)secure_cap;
        if (timeout_ms >= 0) caps.timeout_ms = timeout_ms;
        return caps;
    }
};

void add_caps_options(CLI::App* cmd, CapsOptions& caps) {
    cmd->add_option("--brute-cap", caps.brute_cap, "max n for subset enumeration (default 18)");
    cmd->add_option("--enum-cap", caps.enum_cap, "max n for set-family enumeration (default 12)");
    cmd->add_option("--secure-cap", caps.secure_cap, "max n for secure domination (default 14)");
    cmd->add_option("--timeout-ms", caps.timeout_ms, "solver time budget in ms (0 = none)");
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        out.push_back(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// ---------- compute -----------------------------------------------------------

int cmd_compute(const LoadedGraph& input, const std::string& invariants, const std::string& format,
                const SolverCaps& caps) {
    const Graph& g = input.graph;
    GammaSpResult gsp = gamma_sp_bnb(g, caps);

    std::optional<FormulaResult> formula;
    if (input.spec) formula = gamma_sp_formula(*input.spec, caps);
    bool formula_mismatch = formula && gsp.exact && formula->value != gsp.value();

    std::vector<std::string> names;
    for (const auto& name : split_commas(invariants))
        if (!name.empty() && name != "gamma_sp") names.push_back(name);
    InvariantBundle bundle = compute_invariants(g, names, caps);
    // "all" re-yields gamma_sp; the solver line above already reports it with its certificate.
    std::erase_if(bundle.entries, [](const auto& e) { return e.name == "gamma_sp"; });

    if (format == "json") {
        ojson j;
        j["id"] = input.id;
        j["n"] = g.n;
        j["m"] = g.edge_count();
        j["gamma_sp"] = ojson::parse(certificate_to_json(gsp));
        if (formula) {
            ojson f;
            f["value"] = formula->value;
            f["rule"] = formula->rule;
            f["matches_solver"] = !formula_mismatch;
            j["formula"] = f;
        } else {
            j["formula"] = nullptr;
        }
        j["invariants"] = ojson::parse(bundle_to_json(bundle, g.n, g.edge_count()))["invariants"];
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "name,value,method\n";
        if (gsp.exact)
            std::cout << "gamma_sp," << gsp.value() << ",exact\n";
        else
            std::cout << "gamma_sp," << gsp.lower << ".." << gsp.upper << ",interval\n";
        for (const auto& e : bundle.entries) std::cout << e.name << "," << e.value << "," << e.method << "\n";
    } else {
        std::cout << "graph " << input.id << ": n=" << g.n << " m=" << g.edge_count() << "\n";
        if (gsp.exact)
            std::cout << "gamma_sp = " << gsp.value() << " (exact)\n";
        else
            std::cout << "gamma_sp in [" << gsp.lower << ", " << gsp.upper << "] (timed out)\n";
        if (gsp.certificate) {
            std::cout << "  D     = " << gsp.certificate->D.to_string() << "\n";
            std::cout << "  D*    = " << gsp.certificate->Dstar.to_string() << "\n";
            std::cout << "  pairs =";
            for (auto [u, w] : gsp.certificate->assignment) std::cout << " " << u << "<-" << w;
            std::cout << "\n";
        }
        if (formula)
            std::cout << "formula " << formula->rule << " = " << formula->value
                      << (formula_mismatch ? "  ** MISMATCH **" : "  (matches solver)") << "\n";
        for (const auto& e : bundle.entries) {
            std::cout << e.name << " = " << e.value;
            if (!e.certificate_edges.empty()) {
                std::cout << "  [";
                for (size_t i = 0; i < e.certificate_edges.size(); ++i) {
                    if (i) std::cout << " ";
                    std::cout << e.certificate_edges[i].first << "-" << e.certificate_edges[i].second;
                }
                std::cout << "]";
            } else if (!e.certificate_vertices.empty()) {
                std::cout << "  " << VertexSet::of(g.n, e.certificate_vertices).to_string();
            }
            std::cout << "\n";
        }
    }
    if (formula_mismatch) {
        std::cerr << "theorem violation: closed formula disagrees with the exact solver\n";
        return kExitViolation;
    }
    if (!gsp.exact) return kExitTimeout;
    return kExitOk;
}

// ---------- verify -----------------------------------------------------------

void print_entry_human(const BoundEntry& e) {
    std::cout << "  " << e.name << ": ";
    if (!e.applicable) {
        std::cout << "not applicable";
        if (!e.note.empty()) std::cout << " (" << e.note << ")";
        std::cout << "\n";
        return;
    }
    std::cout << e.lhs << (e.is_equality ? " == " : " <= ") << e.rhs << "  "
              << (e.holds ? "holds" : "VIOLATED");
    if (e.tight) std::cout << " (tight)";
    if (!e.note.empty()) std::cout << " [" << e.note << "]";
    std::cout << "\n";
}

int cmd_verify(const LoadedGraph& input, const std::string& format, const SolverCaps& caps) {
    BoundCheckReport rep = check_all_bounds(input.graph, input.id, caps);
    if (format == "json") {
        std::cout << report_to_json(rep) << "\n";
    } else if (format == "csv") {
        std::cout << report_to_csv(rep);
    } else {
        std::cout << "graph " << rep.graph_id << ": n=" << rep.n << " m=" << rep.m << "\n";
        if (rep.exact)
            std::cout << "gamma_sp = " << rep.gamma_sp_hi << " (exact)\n";
        else
            std::cout << "gamma_sp in [" << rep.gamma_sp_lo << ", " << rep.gamma_sp_hi
                      << "] (timed out; bounds skipped)\n";
        for (const auto& e : rep.entries) print_entry_human(e);
        std::cout << "identities: gallai " << (rep.identities.gallai_holds ? "ok" : "FAILED");
        if (rep.identities.konig_applicable)
            std::cout << ", konig " << (rep.identities.konig_holds ? "ok" : "FAILED");
        if (rep.identities.meir_moon_applicable)
            std::cout << ", meir-moon " << (rep.identities.meir_moon_holds ? "ok" : "FAILED");
        std::cout << "\n";
    }
    if (!rep.exact) return kExitTimeout;
    return rep.all_hold() ? kExitOk : kExitViolation;
}

// ---------- product -----------------------------------------------------------

int cmd_product(const std::string& left, const std::string& right, const std::string& format,
                const SolverCaps& caps) {
    std::string left_id, right_id;
    Graph g = load_factor(left, left_id);
    Graph h = load_factor(right, right_id);
    CartesianBoundReport rep = check_cartesian_bounds(g, h, left_id, right_id, caps);
    if (format == "json") {
        std::cout << cartesian_report_to_json(rep) << "\n";
    } else if (format == "csv") {
        std::cout << cartesian_report_to_csv(rep);
    } else {
        std::cout << "product " << rep.left_id << " box " << rep.right_id << ": n=" << rep.n
                  << " n'=" << rep.nprime << "\n";
        std::cout << "gamma_sp(left) = " << rep.gamma_sp_left << ", gamma_sp(right) = " << rep.gamma_sp_right << "\n";
        if (rep.exact)
            std::cout << "gamma_sp(product) = " << rep.product_hi << " (exact)\n";
        else
            std::cout << "gamma_sp(product) in [" << rep.product_lo << ", " << rep.product_hi
                      << "] (bounds only)\n";
        for (const auto& e : rep.entries) print_entry_human(e);
    }
    return rep.all_hold() ? kExitOk : kExitViolation;
}

// ---------- sweep -----------------------------------------------------------

int cmd_sweep(int all_labeled, bool isolate_free, const std::string& corpus_file, bool use_random,
              const RandomCorpusConfig& random_config, int vizing_n, const std::string& format,
              const SolverCaps& caps, int workers) {
    int modes = (all_labeled > 0) + !corpus_file.empty() + use_random + (vizing_n > 0);
    if (modes != 1)
        throw ParseError("pick exactly one sweep mode: --all-labeled N, --corpus FILE, --random, or --vizing N");

    if (vizing_n > 0) {
        std::vector<std::pair<std::string, Graph>> corpus;
        for (int n = 1; n <= vizing_n; ++n)
            for (auto& [id, g] : labeled_corpus(n, false))
                if (is_connected(g)) corpus.emplace_back(id, std::move(g));
        VizingScanReport rep = vizing_like_scan(corpus, caps, workers);
        if (format == "csv")
            std::cout << "pairs_total,pairs_checked,pairs_skipped,violations\n"
                      << rep.pairs_total << "," << rep.pairs_checked << "," << rep.pairs_skipped << ","
                      << rep.violation_reports_json.size() << "\n";
        else if (format == "json")
            std::cout << vizing_report_to_json(rep) << "\n";
        else
            std::cout << "product-inequality scan: " << rep.pairs_checked << " pairs checked, " << rep.pairs_skipped
                      << " skipped, " << rep.violation_reports_json.size() << " violations\n";
        if (!rep.clean()) {
            for (const auto& v : rep.violation_reports_json) std::cerr << v << "\n";
            return kExitViolation;
        }
        return kExitOk;
    }

    std::vector<std::pair<std::string, Graph>> corpus;
    std::string mode;
    if (all_labeled > 0) {
        corpus = labeled_corpus(all_labeled, isolate_free);
        mode = "all-labeled:" + std::to_string(all_labeled) + (isolate_free ? ":isolate-free" : "");
    } else if (use_random) {
        corpus = random_corpus(random_config);
        mode = "random:count=" + std::to_string(random_config.count) + ":seed=" + std::to_string(random_config.seed);
    } else {
        corpus = g6_file_corpus(corpus_file);
        mode = "corpus:" + corpus_file;
    }
    SweepSummary summary = exhaustive_sweep(corpus, caps, workers);
    summary.mode = mode;
    if (format == "json")
        std::cout << summary_to_json(summary) << "\n";
    else if (format == "csv")
        std::cout << summary_to_csv(summary);
    else {
        std::cout << "sweep " << summary.mode << ": " << summary.graph_count << " graphs, "
                  << summary.skipped_inexact << " skipped (inexact), " << summary.violation_ids.size()
                  << " violations, " << summary.identity_failures << " identity failures\n";
        for (const auto& st : summary.per_bound)
            std::cout << "  " << st.name << ": applicable " << st.applicable << ", holds " << st.holds
                      << ", violations " << st.violations << ", tight " << st.tight << "\n";
    }
    if (!summary.clean()) {
        for (const auto& v : summary.violation_reports_json) std::cerr << v << "\n";
        return kExitViolation;
    }
    return kExitOk;
}

// ---------- enumerate -----------------------------------------------------------

int cmd_enumerate(const LoadedGraph& input, const std::string& what, const std::string& set_text,
                  const std::string& format, const SolverCaps& caps) {
    const Graph& g = input.graph;
    if (what == "sets" || what == "pstar") {
        std::vector<VertexSet> sets;
        if (what == "sets") {
            sets = enumerate_min_superdom_sets(g, caps);
        } else {
            if (set_text.empty()) throw ParseError("--what pstar needs --set \"v1,v2,...\"");
            VertexSet s(g.n);
            for (const auto& tok : split_commas(set_text)) {
                if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                    throw ParseError("bad vertex '" + tok + "' in --set");
                s.add(std::stoi(tok));
            }
            sets = enumerate_pstar(g, s, caps);
        }
        if (format == "json") {
            auto arr = ojson::array();
            for (const auto& s : sets) arr.push_back(s.to_vector());
            std::cout << arr.dump() << "\n";
        } else {
            for (const auto& s : sets) std::cout << s.to_string() << "\n";
        }
        return kExitOk;
    }
    if (what == "lambda") {
        LambdaWitness w = lambda_number(g, caps);
        if (format == "json") {
            ojson j;
            j["lambda"] = w.value;
            j["S"] = w.S.to_vector();
            j["Sstar"] = w.Sstar.to_vector();
            j["X"] = w.X.to_vector();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "lambda = " << w.value << "\n  S  = " << w.S.to_string()
                      << "\n  S* = " << w.Sstar.to_string() << "\n  X  = " << w.X.to_string() << "\n";
        }
        return kExitOk;
    }
    if (what == "universal") {
        UniversalVertexReport rep = universal_vertex_checks(g, caps);
        if (format == "json") {
            ojson j;
            j["applicable"] = rep.applicable;
            j["universal_vertex"] = rep.universal_vertex;
            j["gamma_sp"] = rep.gamma_sp;
            j["lambda"] = rep.lambda_value;
            j["degree_one"] = rep.degree_one;
            j["membership_case_seen"] = rep.membership_case_seen;
            j["membership_rule_holds"] = rep.membership_rule_holds;
            j["avoidance_case_seen"] = rep.avoidance_case_seen;
            j["lambda_rule_holds"] = rep.lambda_rule_holds;
            std::cout << j.dump() << "\n";
        } else if (!rep.applicable) {
            std::cout << "no universal vertex\n";
        } else {
            std::cout << "universal vertex " << rep.universal_vertex << ", gamma_sp = " << rep.gamma_sp
                      << ", lambda = " << rep.lambda_value << ", degree-one vertices = " << rep.degree_one << "\n";
            std::cout << "membership case: " << (rep.membership_case_seen ? "seen" : "not seen") << ", rule "
                      << (rep.membership_rule_holds ? "holds" : "VIOLATED") << "\n";
            std::cout << "avoidance case: " << (rep.avoidance_case_seen ? "seen" : "not seen") << ", rule "
                      << (rep.lambda_rule_holds ? "holds" : "VIOLATED") << "\n";
        }
        if (rep.applicable && (!rep.membership_rule_holds || !rep.lambda_rule_holds)) return kExitViolation;
        return kExitOk;
    }
    throw ParseError("--what must be one of: sets, pstar, lambda, universal");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact super domination workbench"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags remain valid after the subcommand name

    std::string format = "human";
    app.add_option("--format", format, "output format: human, json or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    InputOptions in;
    CapsOptions caps_opt;
    std::string invariants = "all";
    auto* compute = app.add_subcommand("compute", "invariants and gamma_sp certificate for one graph");
    add_input_options(compute, in);
    add_caps_options(compute, caps_opt);
    compute->add_option("--invariants", invariants, "comma list or 'all'");

    auto* verify = app.add_subcommand("verify", "evaluate every bound on one graph");
    add_input_options(verify, in);
    add_caps_options(verify, caps_opt);

    std::string left, right;
    auto* product = app.add_subcommand("product", "Cartesian product bounds for two factors");
    product->add_option("--left", left, "left factor: family spec or file")->required();
    product->add_option("--right", right, "right factor: family spec or file")->required();
    add_caps_options(product, caps_opt);

    int all_labeled = 0, vizing_n = 0, workers = 1;
    bool isolate_free = false, use_random = false;
    std::string corpus_file;
    RandomCorpusConfig random_config;
    std::string densities_text;
    auto* sweep = app.add_subcommand("sweep", "bound sweep over a corpus");
    sweep->add_option("--all-labeled", all_labeled, "every labeled graph on N vertices (N <= 6)");
    sweep->add_flag("--isolate-free", isolate_free, "restrict --all-labeled to isolate-free graphs");
    sweep->add_option("--corpus", corpus_file, "graph6 file, one graph per line");
    sweep->add_flag("--random", use_random, "seeded random corpus");
    sweep->add_option("--count", random_config.count, "random corpus size");
    sweep->add_option("--n-min", random_config.n_min, "random corpus minimum order");
    sweep->add_option("--n-max", random_config.n_max, "random corpus maximum order");
    sweep->add_option("--seed", random_config.seed, "random corpus seed");
    sweep->add_option("--densities", densities_text, "comma list of edge densities (default 0.2,0.5,0.8)");
    sweep->add_option("--vizing", vizing_n, "product-inequality scan over connected graphs up to order N");
    sweep->add_option("--workers", workers, "parallel workers (output is worker-count independent)");
    add_caps_options(sweep, caps_opt);

    std::string what = "sets", set_text;
    auto* enumerate = app.add_subcommand("enumerate", "minimum sets, witness families, lambda, universal-vertex facts");
    add_input_options(enumerate, in);
    add_caps_options(enumerate, caps_opt);
    enumerate->add_option("--what", what, "sets | pstar | lambda | universal");
    enumerate->add_option("--set", set_text, "vertex list for --what pstar, e.g. 0,2,3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        SolverCaps caps = caps_opt.resolve();
        if (compute->parsed()) return cmd_compute(load_graph(in), invariants, format, caps);
        if (verify->parsed()) return cmd_verify(load_graph(in), format, caps);
        if (product->parsed()) return cmd_product(left, right, format, caps);
        if (enumerate->parsed()) return cmd_enumerate(load_graph(in), what, set_text, format, caps);
        if (sweep->parsed()) {
            if (!densities_text.empty()) {
                random_config.densities.clear();
                for (const auto& tok : split_commas(densities_text)) random_config.densities.push_back(std::stod(tok));
            }
            return cmd_sweep(all_labeled, isolate_free, corpus_file, use_random, random_config, vizing_n, format,
                             caps, workers);
        }
        return kExitInput;
    } catch (const SolverTimeout& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return kExitTimeout;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const CapExceeded& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
