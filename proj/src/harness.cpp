#include "superdom/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <random>
#include <thread>

#include "json.hpp"
#include "superdom/families.hpp"
#include "superdom/io.hpp"

namespace superdom {

namespace {

using ojson = nlohmann::ordered_json;

struct EntryBuilder {
    std::vector<BoundEntry>& entries;
    bool value_exact;
    long long lo, hi;  // proven interval for the quantity being bounded

    // bound_value <= quantity
    void lower(const std::string& name, bool applicable, long long bound_value, const std::string& note = "") {
        BoundEntry e;
        e.name = name;
        e.applicable = applicable;
        e.note = note;
        if (applicable) {
            e.lhs = bound_value;
            if (value_exact) {
                e.rhs = hi;
                e.holds = bound_value <= hi;
                e.slack = hi - bound_value;
                e.tight = e.holds && e.slack == 0;
            } else {
                e.rhs = lo;
                e.holds = bound_value <= hi;  // only a proven violation counts
                e.slack = lo - bound_value;
                e.note = bound_value <= lo ? "verified against the interval floor" : "indeterminate within interval";
            }
        }
        entries.push_back(std::move(e));
    }

    // quantity <= bound_value
    void upper(const std::string& name, bool applicable, long long bound_value, const std::string& note = "") {
        BoundEntry e;
        e.name = name;
        e.applicable = applicable;
        e.note = note;
        if (applicable) {
            e.rhs = bound_value;
            if (value_exact) {
                e.lhs = hi;
                e.holds = hi <= bound_value;
                e.slack = bound_value - hi;
                e.tight = e.holds && e.slack == 0;
            } else {
                e.lhs = hi;
                e.holds = lo <= bound_value;  // only a proven violation counts
                e.slack = bound_value - hi;
                e.note = hi <= bound_value ? "verified against the interval ceiling" : "indeterminate within interval";
            }
        }
        entries.push_back(std::move(e));
    }

    // quantity == expected (conditional equalities; only used when exact)
    void equality(const std::string& name, bool applicable, long long expected, const std::string& note = "") {
        BoundEntry e;
        e.name = name;
        e.applicable = applicable;
        e.is_equality = true;
        e.note = note;
        if (applicable) {
            e.lhs = hi;
            e.rhs = expected;
            e.holds = hi == expected;
            e.slack = expected - hi;
            e.tight = e.holds;
        }
        entries.push_back(std::move(e));
    }
};

bool entries_hold(const std::vector<BoundEntry>& entries) {
    for (const auto& e : entries)
        if (e.applicable && !e.holds) return false;
    return true;
}

}  // namespace

bool BoundCheckReport::all_hold() const { return entries_hold(entries) && identities.all_hold(); }

bool CartesianBoundReport::all_hold() const { return entries_hold(entries); }

BoundCheckReport check_all_bounds(const Graph& g, const std::string& graph_id, const SolverCaps& caps) {
    BoundCheckReport rep;
    rep.graph_id = graph_id;
    rep.n = g.n;
    rep.m = g.edge_count();
    GammaSpResult r = gamma_sp_bnb(g, caps);
    rep.exact = r.exact;
    rep.gamma_sp_lo = r.lower;
    rep.gamma_sp_hi = r.upper;
    rep.identities = identity_crosschecks(g);
    if (!rep.exact) return rep;  // bounds are skipped, never guessed

    long long n = g.n;
    long long gsp = r.value();
    long long gamma = domination_number(g).value;
    long long alpha_prime = matching_number(g).value;
    long long alpha = independence_number(g).value;
    long long beta = n - alpha;
    long long rho = two_packing_number(g).value;
    long long twins = twin_partition(g).count();
    bool bip = is_bipartite(g);
    bool isolate_free = !has_isolated_vertex(g);
    bool connected = is_connected(g);
    long long delta = max_degree(g);

    EntryBuilder b{rep.entries, true, gsp, gsp};
    b.lower("half_order_floor", true, (n + 1) / 2);
    b.lower("matching_complement", true, n - alpha_prime);
    b.lower("bipartite_cover_complement", bip, bip ? n - beta : 0, bip ? "" : "not bipartite");
    b.lower("bipartite_independence", bip, bip ? alpha : 0, bip ? "" : "not bipartite");
    bool secure_ok = n <= caps.secure_cap;
    b.lower("secure_domination", secure_ok, secure_ok ? secure_domination_number(g, caps).value : 0,
            secure_ok ? "" : "beyond the secure enumeration cap");
    b.lower("twin_classes_complement", true, n - twins);
    bool twin_conn = connected && twins >= 3;
    b.lower("twin_classes_connected", twin_conn, twin_conn ? n - twins + 1 : 0,
            twin_conn ? "" : "needs a connected graph with at least 3 twin classes");
    b.upper("domination_complement", isolate_free, isolate_free ? n - gamma : 0,
            isolate_free ? "" : "needs an isolate-free graph");
    b.upper("two_packing_complement", isolate_free, isolate_free ? n - rho : 0,
            isolate_free ? "" : "needs an isolate-free graph");
    b.upper("max_degree_fraction", isolate_free, isolate_free ? n * delta / (delta + 1) : 0,
            isolate_free ? "" : "needs an isolate-free graph");
    bool line_ok = rep.m >= 1 && rep.m <= 64;
    long long line_rho = 0;
    if (line_ok) line_rho = two_packing_number(line_graph(g).graph).value;
    b.upper("line_graph_packing", line_ok, line_ok ? n - line_rho : 0,
            rep.m < 1 ? "needs at least one edge" : (line_ok ? "" : "line graph beyond the solver ceiling"));
    bool half_dom = isolate_free && 2 * gamma == n;
    b.equality("half_domination_forces_half", half_dom, half_dom ? n / 2 : 0,
               half_dom ? "" : "needs an isolate-free graph with domination number n/2");
    bool cover_eq = bip && isolate_free && gamma == beta;
    b.equality("bipartite_cover_equality", cover_eq, cover_eq ? alpha : 0,
               cover_eq ? "" : "needs a bipartite isolate-free graph with equal domination and cover numbers");
    return rep;
}

CartesianBoundReport check_cartesian_bounds(const Graph& g, const Graph& h, const std::string& left_id,
                                            const std::string& right_id, const SolverCaps& caps) {
    if (g.n < 2 || h.n < 2) throw std::invalid_argument("both factors need order >= 2");
    CartesianBoundReport rep;
    rep.left_id = left_id;
    rep.right_id = right_id;
    rep.n = g.n;
    rep.nprime = h.n;

    GammaSpResult rg = gamma_sp_bnb(g, caps);
    if (!rg.exact) throw SolverTimeout(rg.lower, rg.upper);
    GammaSpResult rh = gamma_sp_bnb(h, caps);
    if (!rh.exact) throw SolverTimeout(rh.lower, rh.upper);
    rep.gamma_sp_left = rg.value();
    rep.gamma_sp_right = rh.value();

    long long n = g.n, np = h.n;
    long long floor_lower = (n * np + 1) / 2;
    long long scaling_upper = std::min(np * rep.gamma_sp_left, n * rep.gamma_sp_right);

    if ((long long)g.n * h.n <= caps.solver_max) {
        GammaSpResult pr = gamma_sp_bnb(cartesian_product(g, h), caps);
        rep.exact = pr.exact;
        rep.product_lo = pr.lower;
        rep.product_hi = pr.upper;
    } else {
        // bounds-only mode: the interval is what the theory grants up front
        rep.exact = false;
        rep.product_lo = floor_lower;
        rep.product_hi = scaling_upper;
    }

    EntryBuilder b{rep.entries, rep.exact, rep.product_lo, rep.product_hi};
    b.lower("product_half_order_floor", true, floor_lower);

    bool lambda_ok = g.n <= caps.enum_cap;
    long long lambda_bound = 0;
    if (lambda_ok) {
        long long lam = lambda_number(g, caps).value;
        lambda_bound = np * rep.gamma_sp_left - lam * (np - rep.gamma_sp_right);
    }
    b.upper("product_lambda_witness", lambda_ok, lambda_bound,
            lambda_ok ? "" : "left factor beyond the enumeration cap");

    b.upper("product_factor_scaling", true, scaling_upper);

    bool both_nonempty = g.edge_count() >= 1 && h.edge_count() >= 1;
    b.upper("product_order_margin", both_nonempty, both_nonempty ? n * np - n - np + 4 : 0,
            both_nonempty ? "" : "needs two nonempty factors");

    bool deg1_ok = false;
    long long deg1_bound = 0;
    std::string deg1_note = "needs a universal vertex avoided by some witness pair";
    if (!universal_vertices(g).empty()) {
        if (g.n <= caps.enum_cap) {
            UniversalVertexReport uv = universal_vertex_checks(g, caps);
            if (uv.avoidance_case_seen) {
                deg1_ok = true;
                deg1_note = "";
                deg1_bound = np * rep.gamma_sp_left - (long long)uv.degree_one * (np - rep.gamma_sp_right);
            }
        } else {
            deg1_note = "left factor beyond the enumeration cap";
        }
    }
    b.upper("product_degree_one_witness", deg1_ok, deg1_bound, deg1_note);

    bool both_bip = is_bipartite(g) && is_bipartite(h);
    long long bip_bound = 0;
    if (both_bip) {
        long long ag = independence_number(g).value, ah = independence_number(h).value;
        bip_bound = ag * ah + std::min(n - ag, np - ah);
    }
    b.lower("product_bipartite_independence", both_bip, bip_bound, both_bip ? "" : "needs two bipartite factors");

    bool half = 2 * rep.gamma_sp_left == n || 2 * rep.gamma_sp_right == np;
    if (rep.exact) {
        b.equality("product_half_order_equality", half, half ? n * np / 2 : 0,
                   half ? "" : "needs a factor at half its order");
    } else if (half) {
        // treat the forced value as simultaneous lower and upper bound
        b.lower("product_half_order_equality_floor", true, n * np / 2);
        b.upper("product_half_order_equality_ceiling", true, n * np / 2);
    }
    return rep;
}

// --- corpora ----------------------------------------------------------------

std::vector<std::pair<std::string, Graph>> labeled_corpus(int n, bool isolate_free_only) {
    if (n < 1 || n > 6) throw std::invalid_argument("labeled corpus supports 1 <= n <= 6");
    std::vector<Edge> slots;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<std::pair<std::string, Graph>> out;
    uint64_t total = 1ULL << slots.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1ULL) edges.push_back(slots[s]);
        Graph g = build_graph(n, edges);
        if (isolate_free_only && has_isolated_vertex(g)) continue;
        char id[32];
        std::snprintf(id, sizeof id, "all%d:0x%llx", n, (unsigned long long)mask);
        out.emplace_back(id, std::move(g));
    }
    return out;
}

std::vector<std::pair<std::string, Graph>> random_corpus(const RandomCorpusConfig& config) {
    if (config.count < 0 || config.n_min < 1 || config.n_min > config.n_max)
        throw std::invalid_argument("bad random corpus configuration");
    if (config.densities.empty()) throw std::invalid_argument("need at least one density");
    for (double d : config.densities)
        if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("densities must lie in [0, 1]");

    std::mt19937_64 rng(config.seed);
    // p is compared against 53-bit slices of the stream: identical graphs on
    // every platform, no library distribution objects involved
    auto flip = [&](double p) { return (rng() >> 11) < (uint64_t)(p * 9007199254740992.0); };

    std::vector<std::pair<std::string, Graph>> out;
    int span = config.n_max - config.n_min + 1;
    for (int idx = 0; idx < config.count; ++idx) {
        int n = config.n_min + (span > 1 ? (int)(rng() % (uint64_t)span) : 0);
        size_t d_idx = (size_t)idx % config.densities.size();
        double d = config.densities[d_idx];
        std::vector<Edge> edges;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                if (flip(d)) edges.emplace_back(i, j);
        std::string id = "rand" + std::to_string(config.seed) + ":" + std::to_string(idx) + ":n" +
                         std::to_string(n) + ":d" + std::to_string(d_idx);
        out.emplace_back(id, build_graph(n, edges));
    }
    return out;
}

std::vector<std::pair<std::string, Graph>> g6_file_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph6 file: " + path);
    std::vector<std::pair<std::string, Graph>> out;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.emplace_back("file:" + std::to_string(lineno), graph6_decode(line));
    }
    return out;
}

// --- sweeps -------------------------------------------------------------------

namespace {

struct GraphOutcome {
    bool exact = false;
    bool identities_ok = true;
    std::vector<std::pair<std::string, std::array<bool, 3>>> flags;  // name -> applicable/holds/tight
    bool violated = false;
    std::string id;
    std::string violation_json;
};

template <typename Work>
void run_indexed(long long total, int workers, Work&& work) {
    workers = std::max(1, workers);
    if (workers == 1 || total <= 1) {
        for (long long i = 0; i < total; ++i) work(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (;;) {
                long long i = next.fetch_add(1);
                if (i >= total) return;
                work(i);
            }
        });
    for (auto& t : pool) t.join();
}

}  // namespace

SweepSummary exhaustive_sweep(const std::vector<std::pair<std::string, Graph>>& corpus, const SolverCaps& caps,
                              int workers) {
    std::vector<GraphOutcome> outcomes(corpus.size());
    run_indexed((long long)corpus.size(), workers, [&](long long i) {
        const auto& [id, g] = corpus[i];
        BoundCheckReport rep = check_all_bounds(g, id, caps);
        GraphOutcome& o = outcomes[i];
        o.exact = rep.exact;
        o.identities_ok = rep.identities.all_hold();
        o.id = id;
        for (const auto& e : rep.entries) o.flags.emplace_back(e.name, std::array<bool, 3>{e.applicable, e.holds, e.tight});
        o.violated = !rep.all_hold();
        if (o.violated) o.violation_json = report_to_json(rep);
    });

    SweepSummary summary;
    summary.mode = std::to_string(corpus.size()) + " graphs";
    summary.graph_count = (long long)corpus.size();
    std::vector<size_t> stat_index;  // parallel to summary.per_bound
    for (const auto& o : outcomes) {
        if (!o.exact) ++summary.skipped_inexact;
        if (!o.identities_ok) ++summary.identity_failures;
        for (const auto& [name, f] : o.flags) {
            size_t k = 0;
            for (; k < summary.per_bound.size(); ++k)
                if (summary.per_bound[k].name == name) break;
            if (k == summary.per_bound.size()) summary.per_bound.push_back(BoundStat{name, 0, 0, 0, 0});
            BoundStat& st = summary.per_bound[k];
            if (f[0]) {
                ++st.applicable;
                if (f[1]) ++st.holds; else ++st.violations;
                if (f[2]) ++st.tight;
            }
        }
        if (o.violated) {
            summary.violation_ids.push_back(o.id);
            summary.violation_reports_json.push_back(o.violation_json);
        }
    }
    return summary;
}

bool SweepSummary::clean() const {
    return violation_ids.empty() && identity_failures == 0;
}

VizingScanReport vizing_like_scan(const std::vector<std::pair<std::string, Graph>>& corpus, const SolverCaps& caps,
                                  int workers) {
    long long n = (long long)corpus.size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) pairs.emplace_back(i, j);

    // factor values first; a timed-out factor removes all of its pairs
    std::vector<long long> factor(n, -1);
    run_indexed(n, workers, [&](long long i) {
        GammaSpResult r = gamma_sp_bnb(corpus[i].second, caps);
        if (r.exact) factor[i] = r.value();
    });

    enum class Outcome { checked, skipped, violated };
    std::vector<Outcome> outcome(pairs.size(), Outcome::skipped);
    std::vector<std::string> violation(pairs.size());
    run_indexed((long long)pairs.size(), workers, [&](long long p) {
        auto [i, j] = pairs[p];
        const Graph& g = corpus[i].second;
        const Graph& h = corpus[j].second;
        if (factor[i] < 0 || factor[j] < 0) return;
        if ((long long)g.n * h.n > caps.solver_max) return;
        GammaSpResult pr = gamma_sp_bnb(cartesian_product(g, h), caps);
        if (!pr.exact) return;
        outcome[p] = Outcome::checked;
        if (pr.value() < factor[i] * factor[j]) {
            outcome[p] = Outcome::violated;
            ojson v;
            v["left_id"] = corpus[i].first;
            v["right_id"] = corpus[j].first;
            v["left_g6"] = graph6_encode(g);
            v["right_g6"] = graph6_encode(h);
            v["gamma_sp_left"] = factor[i];
            v["gamma_sp_right"] = factor[j];
            v["product"] = ojson::parse(certificate_to_json(pr));
            violation[p] = v.dump();
        }
    });

    VizingScanReport rep;
    rep.pairs_total = (long long)pairs.size();
    for (size_t p = 0; p < pairs.size(); ++p) {
        switch (outcome[p]) {
            case Outcome::skipped: ++rep.pairs_skipped; break;
            case Outcome::checked: ++rep.pairs_checked; break;
            case Outcome::violated:
                ++rep.pairs_checked;
                rep.violation_reports_json.push_back(violation[p]);
                break;
        }
    }
    return rep;
}

// --- serialization -------------------------------------------------------------

namespace {

ojson entry_json(const BoundEntry& e) {
    ojson j;
    j["name"] = e.name;
    j["applicable"] = e.applicable;
    j["is_equality"] = e.is_equality;
    j["lhs"] = e.lhs;
    j["rhs"] = e.rhs;
    j["holds"] = e.holds;
    j["slack"] = e.slack;
    j["tight"] = e.tight;
    j["note"] = e.note;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string entry_csv_row(const std::string& prefix, const BoundEntry& e) {
    return prefix + "," + csv_escape(e.name) + "," + (e.applicable ? "1" : "0") + "," + (e.is_equality ? "1" : "0") +
           "," + std::to_string(e.lhs) + "," + std::to_string(e.rhs) + "," + (e.holds ? "1" : "0") + "," +
           std::to_string(e.slack) + "," + (e.tight ? "1" : "0") + "," + csv_escape(e.note) + "\n";
}

ojson identities_json(const IdentityReport& id) {
    ojson j;
    j["gallai_holds"] = id.gallai_holds;
    j["konig_applicable"] = id.konig_applicable;
    j["konig_holds"] = id.konig_holds;
    j["meir_moon_applicable"] = id.meir_moon_applicable;
    j["meir_moon_holds"] = id.meir_moon_holds;
    return j;
}

}  // namespace

std::string report_to_json(const BoundCheckReport& report) {
    ojson j;
    j["graph_id"] = report.graph_id;
    j["n"] = report.n;
    j["m"] = report.m;
    j["exact"] = report.exact;
    j["gamma_sp_lo"] = report.gamma_sp_lo;
    j["gamma_sp_hi"] = report.gamma_sp_hi;
    auto arr = ojson::array();
    for (const auto& e : report.entries) arr.push_back(entry_json(e));
    j["entries"] = arr;
    j["identities"] = identities_json(report.identities);
    j["all_hold"] = report.all_hold();
    return j.dump();
}

std::string report_to_csv(const BoundCheckReport& report) {
    std::string out = "graph_id,n,m,bound,applicable,is_equality,lhs,rhs,holds,slack,tight,note\n";
    std::string prefix = csv_escape(report.graph_id) + "," + std::to_string(report.n) + "," + std::to_string(report.m);
    for (const auto& e : report.entries) out += entry_csv_row(prefix, e);
    return out;
}

std::string cartesian_report_to_json(const CartesianBoundReport& report) {
    ojson j;
    j["left_id"] = report.left_id;
    j["right_id"] = report.right_id;
    j["n"] = report.n;
    j["nprime"] = report.nprime;
    j["exact"] = report.exact;
    j["product_lo"] = report.product_lo;
    j["product_hi"] = report.product_hi;
    j["gamma_sp_left"] = report.gamma_sp_left;
    j["gamma_sp_right"] = report.gamma_sp_right;
    auto arr = ojson::array();
    for (const auto& e : report.entries) arr.push_back(entry_json(e));
    j["entries"] = arr;
    j["all_hold"] = report.all_hold();
    return j.dump();
}

std::string cartesian_report_to_csv(const CartesianBoundReport& report) {
    std::string out = "left_id,right_id,bound,applicable,is_equality,lhs,rhs,holds,slack,tight,note\n";
    std::string prefix = csv_escape(report.left_id) + "," + csv_escape(report.right_id);
    for (const auto& e : report.entries) out += entry_csv_row(prefix, e);
    return out;
}

std::string summary_to_json(const SweepSummary& summary) {
    ojson j;
    j["mode"] = summary.mode;
    j["graph_count"] = summary.graph_count;
    j["skipped_inexact"] = summary.skipped_inexact;
    j["identity_failures"] = summary.identity_failures;
    auto arr = ojson::array();
    for (const auto& st : summary.per_bound) {
        ojson s;
        s["name"] = st.name;
        s["applicable"] = st.applicable;
        s["holds"] = st.holds;
        s["violations"] = st.violations;
        s["tight"] = st.tight;
        arr.push_back(std::move(s));
    }
    j["per_bound"] = arr;
    auto viols = ojson::array();
    for (size_t i = 0; i < summary.violation_ids.size(); ++i) {
        ojson v;
        v["id"] = summary.violation_ids[i];
        v["report"] = ojson::parse(summary.violation_reports_json[i]);
        viols.push_back(std::move(v));
    }
    j["violations"] = viols;
    j["clean"] = summary.clean();
    return j.dump();
}

std::string summary_to_csv(const SweepSummary& summary) {
    std::string out = "bound,applicable,holds,violations,tight\n";
    for (const auto& st : summary.per_bound)
        out += csv_escape(st.name) + "," + std::to_string(st.applicable) + "," + std::to_string(st.holds) + "," +
               std::to_string(st.violations) + "," + std::to_string(st.tight) + "\n";
    return out;
}

std::string vizing_report_to_json(const VizingScanReport& report) {
    ojson j;
    j["pairs_total"] = report.pairs_total;
    j["pairs_checked"] = report.pairs_checked;
    j["pairs_skipped"] = report.pairs_skipped;
    auto arr = ojson::array();
    for (const auto& v : report.violation_reports_json) arr.push_back(ojson::parse(v));
    j["violations"] = arr;
    j["clean"] = report.clean();
    return j.dump();
}

}  // namespace superdom
