#include "superdom/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "json.hpp"

namespace superdom {

// --- checking -------------------------------------------------------------

std::optional<SuperDomCertificate> is_super_dominating(const Graph& g, const VertexSet& d) {
    VertexSet dbar = d.complement();
    std::vector<int> outside_deg(g.n, 0);
    for (Vertex v = 0; v < g.n; ++v) outside_deg[v] = (int)(g.adj[v] & dbar).size();
    SuperDomCertificate cert{d, VertexSet(g.n), {}};
    bool ok = true;
    dbar.for_each([&](Vertex u) {
        if (!ok) return;
        // a witness with exactly one outside neighbor sees exactly u, and can
        // serve no other outside vertex — the greedy pick is safe
        Vertex witness = -1;
        (g.adj[u] & d).for_each([&](Vertex v) {
            if (witness == -1 && outside_deg[v] == 1) witness = v;
        });
        if (witness == -1) {
            ok = false;
            return;
        }
        cert.Dstar.add(witness);
        cert.assignment.emplace_back(u, witness);
    });
    if (!ok) return std::nullopt;
    return cert;
}

bool certificate_valid(const Graph& g, const SuperDomCertificate& cert) {
    if (cert.D.universe() != g.n || cert.Dstar.universe() != g.n) return false;
    if (!cert.Dstar.is_subset_of(cert.D)) return false;
    VertexSet dbar = cert.D.complement();
    if (cert.assignment.size() != (size_t)dbar.size()) return false;
    VertexSet covered(g.n), witnesses(g.n);
    for (auto [u, w] : cert.assignment) {
        if (u < 0 || u >= g.n || w < 0 || w >= g.n) return false;
        if (covered.contains(u) || witnesses.contains(w)) return false;  // bijection
        if (!dbar.contains(u) || !cert.D.contains(w)) return false;
        VertexSet seen = g.adj[w] & dbar;
        if (seen.size() != 1 || !seen.contains(u)) return false;  // w sees exactly u outside
        covered.add(u);
        witnesses.add(w);
    }
    return covered == dbar && witnesses == cert.Dstar;
}

// --- mask machinery ---------------------------------------------------------

namespace {

struct Masks {
    int n = 0;
    uint64_t all = 0;
    std::vector<uint64_t> adj;

    static Masks from(const Graph& g, int cap, const char* what) {
        if (g.n > 64 || g.n > cap)
            throw CapExceeded(std::string(what) + " capped at n <= " + std::to_string(std::min(cap, 64)) +
                              " (got n = " + std::to_string(g.n) + ")");
        Masks m;
        m.n = g.n;
        m.all = g.n == 64 ? ~0ULL : (1ULL << g.n) - 1;
        m.adj.resize(g.n);
        for (Vertex v = 0; v < g.n; ++v) m.adj[v] = g.adj[v].low_word();
        return m;
    }
};

VertexSet mask_to_set(int n, uint64_t mask) {
    VertexSet s(n);
    while (mask) {
        s.add(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

bool sd_mask(const Masks& m, uint64_t d) {
    uint64_t dbar = m.all & ~d;
    for (uint64_t rest = dbar; rest; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        bool found = false;
        for (uint64_t cand = m.adj[u] & d; cand; cand &= cand - 1) {
            int v = std::countr_zero(cand);
            if (std::popcount(m.adj[v] & dbar) == 1) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// Branch and bound over a fixed vertex order: each vertex goes outside
// first (drives |D| down), then inside. State keeps, per vertex, how many
// of its neighbors are currently outside; a partial assignment is viable
// when every outside vertex still has a neighbor that is not outside and
// has exactly one outside neighbor. Sending the undecided rest inside
// never breaks viability, so viable full assignments are exactly the
// super dominating sets.
struct SdSearch {
    const Masks& m;
    std::vector<int> order;
    int global_lb = 0;

    std::chrono::steady_clock::time_point deadline;
    bool use_deadline = false;
    bool aborted = false;
    long long ticks = 0;

    uint64_t in_d = 0, outside = 0;
    int undecided = 0;
    std::vector<int> outside_cnt;

    // optimize mode
    int prune_at = 0;
    int best_real = 0;
    uint64_t best_set = 0;
    // decision mode
    int target = -1;
    bool found = false;

    explicit SdSearch(const Masks& masks, const std::vector<int>& degree) : m(masks) {
        order.resize(m.n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return degree[a] != degree[b] ? degree[a] > degree[b] : a < b; });
        outside_cnt.assign(m.n, 0);
    }

    bool viable() const {
        uint64_t usable = 0;
        for (uint64_t rest = m.all & ~outside; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (outside_cnt[v] == 1) usable |= 1ULL << v;
        }
        for (uint64_t rest = outside; rest; rest &= rest - 1)
            if (!(m.adj[std::countr_zero(rest)] & usable)) return false;
        return true;
    }

    bool reset(uint64_t forced_in, uint64_t forced_out) {
        in_d = forced_in;
        outside = forced_out;
        undecided = m.n - std::popcount(forced_in) - std::popcount(forced_out);
        for (int v = 0; v < m.n; ++v) outside_cnt[v] = std::popcount(m.adj[v] & outside);
        found = false;
        return viable();
    }

    bool timed_out() {
        if ((++ticks & 1023) == 0 && use_deadline && std::chrono::steady_clock::now() > deadline) aborted = true;
        return aborted;
    }

    int node_lb() const {
        return std::max({global_lb, std::popcount(in_d), m.n - std::popcount(outside) - undecided});
    }

    bool push_outside(int v) {
        outside |= 1ULL << v;
        --undecided;
        for (uint64_t rest = m.adj[v]; rest; rest &= rest - 1) ++outside_cnt[std::countr_zero(rest)];
        if (viable()) return true;
        pop_outside(v);
        return false;
    }

    void pop_outside(int v) {
        outside &= ~(1ULL << v);
        ++undecided;
        for (uint64_t rest = m.adj[v]; rest; rest &= rest - 1) --outside_cnt[std::countr_zero(rest)];
    }

    void optimize(size_t pos) {
        if (timed_out()) return;
        if (node_lb() >= prune_at) return;
        if (undecided == 0) {
            int val = std::popcount(in_d);
            if (val < best_real) {
                best_real = val;
                best_set = in_d;
                prune_at = std::min(prune_at, val);
            }
            return;
        }
        while (assigned(order[pos])) ++pos;
        int v = order[pos];
        if (push_outside(v)) {
            optimize(pos + 1);
            pop_outside(v);
        }
        if (aborted) return;
        in_d |= 1ULL << v;
        --undecided;
        optimize(pos + 1);
        in_d &= ~(1ULL << v);
        ++undecided;
    }

    void decide(size_t pos) {
        if (found || timed_out()) return;
        if (node_lb() > target) return;
        if (undecided == 0) {
            found = true;
            best_set = in_d;
            return;
        }
        while (assigned(order[pos])) ++pos;
        int v = order[pos];
        if (push_outside(v)) {
            decide(pos + 1);
            pop_outside(v);
        }
        if (found || aborted) return;
        in_d |= 1ULL << v;
        --undecided;
        decide(pos + 1);
        in_d &= ~(1ULL << v);
        ++undecided;
    }

    bool assigned(int v) const { return ((in_d | outside) >> v) & 1ULL; }
};

GammaSpResult trivial_result(const Graph& g) {
    GammaSpResult r;
    r.lower = r.upper = 0;
    r.exact = true;
    r.certificate = is_super_dominating(g, VertexSet(g.n));
    return r;
}

GammaSpResult finish_exact(const Graph& g, int n, long long value, uint64_t set_mask) {
    GammaSpResult r;
    r.lower = r.upper = value;
    r.exact = true;
    r.certificate = is_super_dominating(g, mask_to_set(n, set_mask));
    return r;
}

}  // namespace

GammaSpResult gamma_sp_bruteforce(const Graph& g, const SolverCaps& caps) {
    Masks m = Masks::from(g, std::min(caps.brute_cap, caps.solver_max), "subset enumeration");
    if (g.n == 0) return trivial_result(g);
    for (int k = (g.n + 1) / 2; k < g.n; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            uint64_t mask = 0;
            for (int i : idx) mask |= 1ULL << i;
            if (sd_mask(m, mask)) return finish_exact(g, g.n, k, mask);
            int i = k - 1;
            while (i >= 0 && idx[i] == g.n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return finish_exact(g, g.n, g.n, m.all);
}

GammaSpResult gamma_sp_bnb(const Graph& g, const SolverCaps& caps) {
    Masks m = Masks::from(g, caps.solver_max, "branch and bound");
    if (g.n == 0) return trivial_result(g);
    std::vector<int> degree(g.n);
    for (Vertex v = 0; v < g.n; ++v) degree[v] = g.degree(v);

    SdSearch search(m, degree);
    search.global_lb = (g.n + 1) / 2;
    search.global_lb = std::max(search.global_lb, g.n - matching_number(g).value);
    search.global_lb = std::max(search.global_lb, g.n - (int)twin_partition(g).count());
    if (caps.timeout_ms > 0) {
        search.use_deadline = true;
        search.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(caps.timeout_ms);
    }

    // Phase 1: value. Start from the full vertex set; when the graph is
    // isolate-free a set of size n - gamma is known to exist, which lets the
    // search ignore anything at least that large. If the search ever fails
    // to realize that promise it is rerun unseeded, so exactness never
    // depends on the seed.
    int seed_cut = g.n + 1;
    if (g.n >= 1 && !has_isolated_vertex(g)) seed_cut = g.n - domination_number(g).value + 1;
    search.best_real = g.n;
    search.best_set = m.all;
    search.prune_at = std::min(g.n, seed_cut);
    search.reset(0, 0);
    search.optimize(0);
    if (!search.aborted && seed_cut <= g.n && search.best_real >= seed_cut) {
        search.best_real = g.n;
        search.best_set = m.all;
        search.prune_at = g.n;
        search.reset(0, 0);
        search.optimize(0);
    }

    if (search.aborted) {
        GammaSpResult r;
        r.lower = search.global_lb;
        r.upper = search.best_real;
        r.exact = false;
        r.certificate = is_super_dominating(g, mask_to_set(g.n, search.best_set));
        return r;
    }

    // Phase 2: lexicographically smallest optimum, grown with the decision
    // search as the feasibility oracle.
    int value = search.best_real;
    uint64_t incumbent = search.best_set;
    uint64_t in = 0, out = 0;
    int have = 0;
    search.target = value;
    for (Vertex v = 0; v < g.n && have < value && !search.aborted; ++v) {
        uint64_t bit = 1ULL << v;
        int rest_after_out = g.n - std::popcount(out) - 1;
        bool can_skip = rest_after_out >= value;  // enough vertices left to pad D
        bool keep = true;
        if (can_skip) {
            if (search.reset(in | bit, out)) search.decide(0);
            keep = search.found;
        }
        if (keep) {
            in |= bit;
            ++have;
        } else {
            out |= bit;
        }
    }
    if (search.aborted) return finish_exact(g, g.n, value, incumbent);  // exact value, non-minimal label set
    return finish_exact(g, g.n, value, in);
}

std::vector<VertexSet> enumerate_min_superdom_sets(const Graph& g, const SolverCaps& caps) {
    Masks m = Masks::from(g, std::min(caps.enum_cap, caps.solver_max), "minimum-set enumeration");
    std::vector<VertexSet> out;
    if (g.n == 0) {
        out.emplace_back(0);
        return out;
    }
    GammaSpResult r = gamma_sp_bnb(g, caps);
    if (!r.exact) throw SolverTimeout(r.lower, r.upper);
    int k = (int)r.value();
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k == 0) {
        out.emplace_back(g.n);
        return out;
    }
    for (;;) {
        uint64_t mask = 0;
        for (int i : idx) mask |= 1ULL << i;
        if (sd_mask(m, mask)) out.push_back(mask_to_set(g.n, mask));
        int i = k - 1;
        while (i >= 0 && idx[i] == g.n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

namespace {

// Witness pools per outside vertex. Pools are pairwise disjoint (a member
// has exactly one outside neighbor), so the perfect assignments between
// outside vertices and witnesses are exactly the pool-by-pool choices.
std::vector<std::vector<Vertex>> witness_pools(const Graph& g, const VertexSet& s) {
    VertexSet sbar = s.complement();
    std::vector<std::vector<Vertex>> pools;
    sbar.for_each([&](Vertex u) {
        std::vector<Vertex> pool;
        (g.adj[u] & s).for_each([&](Vertex v) {
            if ((g.adj[v] & sbar).size() == 1) pool.push_back(v);
        });
        pools.push_back(std::move(pool));
    });
    return pools;
}

}  // namespace

std::vector<VertexSet> enumerate_pstar(const Graph& g, const VertexSet& s, const SolverCaps& caps) {
    if (g.n > caps.enum_cap || g.n > caps.solver_max)
        throw CapExceeded("witness-family enumeration capped at n <= " +
                          std::to_string(std::min(caps.enum_cap, caps.solver_max)));
    GammaSpResult r = gamma_sp_bnb(g, caps);
    if (!r.exact) throw SolverTimeout(r.lower, r.upper);
    if ((long long)s.size() != r.value() || !is_super_dominating(g, s))
        throw std::invalid_argument("not a minimum super dominating set: " + s.to_string());

    auto pools = witness_pools(g, s);
    std::vector<VertexSet> result;
    std::vector<size_t> pick(pools.size(), 0);
    for (;;) {
        VertexSet image(g.n);
        for (size_t i = 0; i < pools.size(); ++i) image.add(pools[i][pick[i]]);
        result.push_back(image);
        size_t i = pools.size();
        while (i > 0 && ++pick[i - 1] == pools[i - 1].size()) pick[--i] = 0;
        if (i == 0) break;
    }
    std::sort(result.begin(), result.end(), VertexSet::lex_less);
    return result;
}

LambdaWitness lambda_number(const Graph& g, const SolverCaps& caps) {
    LambdaWitness best;
    best.value = -1;
    for (const VertexSet& s : enumerate_min_superdom_sets(g, caps)) {
        VertexSet sbar = s.complement();
        for (const VertexSet& sstar : enumerate_pstar(g, s, caps)) {
            VertexSet banned = sbar | sstar;
            VertexSet x(g.n);
            s.for_each([&](Vertex v) {
                if (!g.adj[v].intersects(banned)) x.add(v);
            });
            if ((int)x.size() > best.value) best = {(int)x.size(), s, sstar, x};
        }
    }
    return best;
}

UniversalVertexReport universal_vertex_checks(const Graph& g, const SolverCaps& caps) {
    UniversalVertexReport report;
    auto universal = universal_vertices(g);
    if (universal.empty()) return report;
    report.applicable = true;
    report.universal_vertex = universal.first();
    GammaSpResult r = gamma_sp_bnb(g, caps);
    if (!r.exact) throw SolverTimeout(r.lower, r.upper);
    report.gamma_sp = r.value();
    report.degree_one = degree_one_count(g);
    LambdaWitness lw = lambda_number(g, caps);
    report.lambda_value = lw.value;
    for (const VertexSet& s : enumerate_min_superdom_sets(g, caps)) {
        VertexSet sbar = s.complement();
        for (const VertexSet& sstar : enumerate_pstar(g, s, caps)) {
            bool inside = sbar.contains(report.universal_vertex) || sstar.contains(report.universal_vertex);
            if (inside) {
                report.membership_case_seen = true;
                if (report.gamma_sp != g.n - 1) report.membership_rule_holds = false;
            } else {
                report.avoidance_case_seen = true;
                if (report.lambda_value < report.degree_one) report.lambda_rule_holds = false;
            }
        }
    }
    return report;
}

std::string certificate_to_json(const GammaSpResult& result) {
    nlohmann::ordered_json j;
    if (result.exact)
        j["gamma_sp"] = result.upper;
    else
        j["gamma_sp"] = nullptr;
    if (result.certificate) {
        j["D"] = result.certificate->D.to_vector();
        j["Dstar"] = result.certificate->Dstar.to_vector();
        auto assign = nlohmann::ordered_json::object();
        for (auto [u, w] : result.certificate->assignment) assign[std::to_string(u)] = w;
        j["assignment"] = assign;
    } else {
        j["D"] = nlohmann::json::array();
        j["Dstar"] = nlohmann::json::array();
        j["assignment"] = nlohmann::json::object();
    }
    j["exact"] = result.exact;
    j["bounds"] = {result.lower, result.upper};
    return j.dump();
}

}  // namespace superdom
