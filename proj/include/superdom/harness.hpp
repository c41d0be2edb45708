#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superdom/solver.hpp"

namespace superdom {

// One inequality (or conditional equality) evaluated on a concrete graph.
// For inequalities the direction is always written lhs <= rhs, so
// slack = rhs - lhs is non-negative exactly when the bound holds.
struct BoundEntry {
    std::string name;
    bool applicable = false;  // hypothesis met on this graph
    bool is_equality = false;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = true;   // vacuously true when not applicable
    long long slack = 0;
    bool tight = false;  // applicable and lhs == rhs
    std::string note;    // why not applicable, when useful
};

struct BoundCheckReport {
    std::string graph_id;
    int n = 0;
    long long m = 0;
    bool exact = false;           // solver proved the exact value
    long long gamma_sp_lo = 0;
    long long gamma_sp_hi = 0;
    std::vector<BoundEntry> entries;  // empty when !exact (skipped, not guessed)
    IdentityReport identities;
    bool all_hold() const;
};

// Evaluates every single-graph inequality with exact invariant values.
BoundCheckReport check_all_bounds(const Graph& g, const std::string& graph_id,
                                  const SolverCaps& caps = {});

struct CartesianBoundReport {
    std::string left_id, right_id;
    int n = 0, nprime = 0;
    bool exact = false;           // exact product value available
    long long product_lo = 0, product_hi = 0;
    long long gamma_sp_left = 0, gamma_sp_right = 0;
    std::vector<BoundEntry> entries;
    bool all_hold() const;
};

// Product bounds for G □ H (both orders >= 2). When the product exceeds the
// solver envelope the report carries bounds only, flagged not exact.
CartesianBoundReport check_cartesian_bounds(const Graph& g, const Graph& h,
                                            const std::string& left_id, const std::string& right_id,
                                            const SolverCaps& caps = {});

// --- corpora ------------------------------------------------------------

// Every labeled graph on n vertices (2^C(n,2) graphs); optionally only
// those without isolated vertices. Ids look like "all4:0x1a".
std::vector<std::pair<std::string, Graph>> labeled_corpus(int n, bool isolate_free_only);

struct RandomCorpusConfig {
    int count = 100;
    int n_min = 4;
    int n_max = 12;
    std::vector<double> densities = {0.2, 0.5, 0.8};
    uint64_t seed = 1;
};

// Deterministic: a fixed seed yields the same graphs on every platform
// (own bit-twiddling on a mt19937_64 stream, no distribution objects).
std::vector<std::pair<std::string, Graph>> random_corpus(const RandomCorpusConfig& config);

// One graph6 line per graph; '#' comments and blank lines ignored.
std::vector<std::pair<std::string, Graph>> g6_file_corpus(const std::string& path);

// --- sweeps ---------------------------------------------------------------

struct BoundStat {
    std::string name;
    long long applicable = 0;
    long long holds = 0;
    long long violations = 0;
    long long tight = 0;
};

struct SweepSummary {
    std::string mode;
    long long graph_count = 0;
    long long skipped_inexact = 0;  // solver timed out; report skipped
    std::vector<BoundStat> per_bound;
    long long identity_failures = 0;
    std::vector<std::string> violation_ids;
    std::vector<std::string> violation_reports_json;  // full dumps, same order
    bool clean() const;
};

// Runs check_all_bounds over the corpus, in parallel over graphs. The
// reduction is ordered by corpus index, so the summary is byte-identical
// for any worker count.
SweepSummary exhaustive_sweep(const std::vector<std::pair<std::string, Graph>>& corpus,
                              const SolverCaps& caps = {}, int workers = 1);

// --- product-inequality falsification scan --------------------------------

struct VizingScanReport {
    long long pairs_total = 0;
    long long pairs_checked = 0;
    long long pairs_skipped = 0;  // product beyond the solver envelope
    std::vector<std::string> violation_reports_json;
    bool clean() const { return violation_reports_json.empty(); }
};

// Tests gamma_sp(G □ H) >= gamma_sp(G) * gamma_sp(H) over every unordered
// pair from the corpus. A violation (none expected; the inequality is an
// open conjecture) dumps both factors and all certificates.
VizingScanReport vizing_like_scan(const std::vector<std::pair<std::string, Graph>>& corpus,
                                  const SolverCaps& caps = {}, int workers = 1);

// --- serialization ---------------------------------------------------------

std::string report_to_json(const BoundCheckReport& report);
std::string report_to_csv(const BoundCheckReport& report);  // header + rows
std::string cartesian_report_to_json(const CartesianBoundReport& report);
std::string cartesian_report_to_csv(const CartesianBoundReport& report);
std::string summary_to_json(const SweepSummary& summary);
std::string summary_to_csv(const SweepSummary& summary);
std::string vizing_report_to_json(const VizingScanReport& report);

}  // namespace superdom
