#pragma once

#include <optional>
#include <string>

#include "superdom/invariants.hpp"

namespace superdom {

enum class FamilyKind {
    path,
    cycle,
    complete,
    empty,
    star,
    complete_bipartite,
    complete_multipartite,
    hypercube,
    corona,
    box,  // Cartesian product
};

// Compact family description, parsed from CLI strings such as
//   path:7   cmp:3,2,1   corona:(path:3)x(complete:2)   box:(star:2)x(star:2)
struct FamilySpec {
    FamilyKind kind;
    std::vector<long long> params;
    std::vector<FamilySpec> factors;  // corona / box only, exactly two

    static FamilySpec parse(const std::string& text);  // throws ParseError from io.hpp
    std::string to_string() const;
};

Graph construct(const FamilySpec& spec);

struct FormulaResult {
    long long value;
    std::string rule;  // which closed form fired
};

// Closed-form super domination number when a known formula covers the
// spec. Hypothesis violations and uncovered shapes yield nullopt — never a
// silently wrong number. Product rules tried in order: one factor K_2;
// both factors complete (the K_3 case before the n,n' >= 4 case); both
// factors stars; half-order equality from factor formulas. The corona rule
// may invoke the solver on the second factor.
std::optional<FormulaResult> gamma_sp_formula(const FamilySpec& spec, const SolverCaps& caps = {});

struct IntInterval {
    long long lo;
    long long hi;
    bool exact() const { return lo == hi; }
};

enum class PathOrCycle { path, cycle };

// Parity-based interval for (path or cycle of length n) □ H: exact when the
// residue gives equality (even paths, cycles with n divisible by 4),
// otherwise the proven closed interval. Needs n >= 3 and |V(H)| >= 2.
std::optional<IntInterval> cartesian_parity_bounds(PathOrCycle kind, int n, const Graph& h);

// If one factor achieves half its order, the product's value is exactly
// half the product order. Computes factor values with the solver.
std::optional<long long> half_order_rule(const Graph& g, const Graph& h, const SolverCaps& caps = {});

}  // namespace superdom
