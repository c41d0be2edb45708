#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

// Gates for the exponential-time algorithms. Environment variables
// SUPERDOM_BRUTE_CAP, SUPERDOM_ENUM_CAP, SUPERDOM_SECURE_CAP and
// SUPERDOM_TIMEOUT_MS override the defaults (explicit CLI flags win over
// the environment).
struct SolverCaps {
    int brute_cap = 18;        // full subset enumeration of candidate sets
    int enum_cap = 12;         // minimum-set family / witness-family / lambda sweeps
    int secure_cap = 14;       // secure domination enumeration
    int solver_max = 64;       // hard ceiling: solvers run on single-word bitmasks
    long long timeout_ms = 0;  // 0 = run to completion

    static SolverCaps from_env();
};

// Raised when an operation is asked to run beyond its configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a time-limited solve ends with only an interval. Callers that
// can work with intervals use the solver API directly instead of catching.
struct SolverTimeout : std::runtime_error {
    long long lower, upper;
    SolverTimeout(long long lo, long long hi)
        : std::runtime_error("solver timed out with bounds [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"),
          lower(lo),
          upper(hi) {}
};

struct SetResult {
    int value;
    VertexSet certificate;  // lexicographically smallest optimum
};

struct MatchingResult {
    int value;
    std::vector<Edge> certificate;  // lexicographically smallest optimum matching
};

// --- defining predicates (used to revalidate every certificate) --------

bool is_dominating(const Graph& g, const VertexSet& s);
bool is_secure_dominating(const Graph& g, const VertexSet& s);
bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_two_packing(const Graph& g, const VertexSet& s);
bool is_matching(const Graph& g, const std::vector<Edge>& m);

// --- exact optimizers ---------------------------------------------------

SetResult domination_number(const Graph& g);                                // branch and bound
SetResult secure_domination_number(const Graph& g, const SolverCaps& caps = {});  // ascending enumeration
MatchingResult matching_number(const Graph& g);                             // blossom augmenting paths
SetResult independence_number(const Graph& g);                              // branch and bound
SetResult vertex_cover_number(const Graph& g);                              // complement of independence
SetResult two_packing_number(const Graph& g);                               // independence in conflict graph

// Classical identities used as cross-checks of the optimizers.
struct IdentityReport {
    bool gallai_holds = false;           // alpha + beta = n, every graph
    bool konig_applicable = false;       // bipartite graphs
    bool konig_holds = true;             // alpha' = beta
    bool meir_moon_applicable = false;   // trees
    bool meir_moon_holds = true;         // gamma = rho
    bool all_hold() const { return gallai_holds && konig_holds && meir_moon_holds; }
};
IdentityReport identity_crosschecks(const Graph& g);

bool is_tree(const Graph& g);

// --- bundled computation -------------------------------------------------

struct InvariantEntry {
    std::string name;
    long long value = 0;
    std::vector<Vertex> certificate_vertices;  // sorted; empty if not applicable
    std::vector<Edge> certificate_edges;       // matching certificates only
    std::string method;                        // "exact" or "formula"
};

struct InvariantBundle {
    std::vector<InvariantEntry> entries;
    const InvariantEntry* find(const std::string& name) const;
};

// Recognized names: gamma, gamma_s, alpha_prime, alpha, beta, rho,
// twin_count, max_degree, degree_one_count, gamma_sp, lambda.
// "all" expands to every name whose cap admits the graph.
InvariantBundle compute_invariants(const Graph& g, const std::vector<std::string>& names,
                                   const SolverCaps& caps = {});
std::string bundle_to_json(const InvariantBundle& bundle, int n, long long m);

}  // namespace superdom
