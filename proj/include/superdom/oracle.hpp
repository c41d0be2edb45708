#pragma once

#include "superdom/graph.hpp"

namespace superdom::oracle {

// Deliberately naive reference implementations: plain subset loops with no
// pruning, no shared code with the optimized solvers. Tests compare
// solver output against these on small instances. All functions refuse
// graphs beyond desk scale (n <= 20, or the stated tighter limit).

int gamma(const Graph& g);
int gamma_s(const Graph& g);     // n <= 14
int gamma_sp(const Graph& g);    // own inline definition check, n <= 16
int alpha(const Graph& g);
int rho(const Graph& g);
int matching(const Graph& g);    // bitmask DP over free vertices, n <= 22

// Literal reading of the lambda definition: maximize |X| over every
// minimum super dominating set S, every witness family member S*, and
// every subset X of S with N(X) disjoint from S̄ ∪ S*. n <= 10.
int lambda_literal(const Graph& g);

}  // namespace superdom::oracle
