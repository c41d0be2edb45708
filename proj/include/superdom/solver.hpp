#pragma once

#include <optional>

#include "superdom/invariants.hpp"

namespace superdom {

// Witness that D is super dominating: for every u outside D the assigned
// vertex u* ∈ D* sees exactly u among the vertices outside D.
struct SuperDomCertificate {
    VertexSet D;
    VertexSet Dstar;                // ⊆ D, one witness per outside vertex
    std::vector<Edge> assignment;   // pairs (u, u*), sorted by u
};

// Full certificate if D is super dominating, nothing otherwise. For each
// outside vertex u the smallest valid witness is chosen; a valid witness
// has exactly one neighbor outside D, so witnesses of distinct outside
// vertices never collide and the assignment is automatically a bijection.
std::optional<SuperDomCertificate> is_super_dominating(const Graph& g, const VertexSet& d);

// Re-validates a certificate against the defining condition from scratch.
bool certificate_valid(const Graph& g, const SuperDomCertificate& cert);

struct GammaSpResult {
    long long lower = 0;
    long long upper = 0;
    bool exact = false;  // false only after a timeout
    std::optional<SuperDomCertificate> certificate;  // witness for `upper`
    long long value() const { return upper; }
};

// Ascending-cardinality subset enumeration starting at the ⌈n/2⌉ floor;
// returns the lexicographically smallest minimum set. Refuses n > brute cap.
GammaSpResult gamma_sp_bruteforce(const Graph& g, const SolverCaps& caps = {});

// Bound-pruned branch and bound; exact unless the timeout fires, in which
// case the best proven interval is returned with exact=false. The
// certificate is the lexicographically smallest minimum set.
GammaSpResult gamma_sp_bnb(const Graph& g, const SolverCaps& caps = {});

// All minimum super dominating sets, lexicographic order. Refuses n > enum cap.
std::vector<VertexSet> enumerate_min_superdom_sets(const Graph& g, const SolverCaps& caps = {});

// All witness sets S* ⊆ S realizable by a perfect assignment between the
// outside vertices and S. Rejects S that is not a minimum super dominating
// set. Lexicographic order.
std::vector<VertexSet> enumerate_pstar(const Graph& g, const VertexSet& s, const SolverCaps& caps = {});

struct LambdaWitness {
    int value = 0;
    VertexSet S;      // minimum super dominating set attaining the maximum
    VertexSet Sstar;  // witness family member
    VertexSet X;      // X ⊆ S with N(X) ∩ (S̄ ∪ S*) = ∅, |X| maximal
};

// λ = max over (S, S*) of the largest X ⊆ S whose neighborhood avoids
// S̄ ∪ S*. The inner maximum takes every feasible vertex at once (the
// constraint decomposes per vertex). Refuses n > enum cap.
LambdaWitness lambda_number(const Graph& g, const SolverCaps& caps = {});

// Checks the two universal-vertex facts: if the universal vertex lands in
// S̄ ∪ S* for some minimum set S and witness S*, the super domination
// number must be n−1; and when some pair (S, S*) avoids it, λ must be at
// least the number of degree-one vertices.
struct UniversalVertexReport {
    bool applicable = false;      // graph has a universal vertex
    Vertex universal_vertex = -1; // smallest one
    long long gamma_sp = 0;
    int lambda_value = 0;
    int degree_one = 0;
    bool membership_case_seen = false;  // some (S,S*) contains v in S̄ ∪ S*
    bool membership_rule_holds = true;  // ... and then gamma_sp = n−1
    bool avoidance_case_seen = false;   // some (S,S*) avoids v
    bool lambda_rule_holds = true;      // ... and then λ ≥ degree_one
};
UniversalVertexReport universal_vertex_checks(const Graph& g, const SolverCaps& caps = {});

// {"gamma_sp": k|null, "D": [...], "Dstar": [...], "assignment": {...},
//  "exact": bool, "bounds": [lo, hi]}
std::string certificate_to_json(const GammaSpResult& result);

}  // namespace superdom
