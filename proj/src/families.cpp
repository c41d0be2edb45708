#include "superdom/families.hpp"

#include <algorithm>
#include <climits>

#include "superdom/io.hpp"
#include "superdom/solver.hpp"

namespace superdom {

namespace {

constexpr long long kConstructLimit = 1'000'000;  // largest order construct() will materialize

const char* kind_token(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::complete: return "complete";
        case FamilyKind::empty: return "empty";
        case FamilyKind::star: return "star";
        case FamilyKind::complete_bipartite: return "kbip";
        case FamilyKind::complete_multipartite: return "cmp";
        case FamilyKind::hypercube: return "cube";
        case FamilyKind::corona: return "corona";
        case FamilyKind::box: return "box";
    }
    return "?";
}

std::vector<long long> parse_params(const std::string& text, const std::string& whole) {
    std::vector<long long> params;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad family parameter '" + tok + "' in '" + whole + "'");
        if (tok.size() > 18) throw ParseError("family parameter out of range in '" + whole + "'");
        params.push_back(std::stoll(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return params;
}

// rest must look like "(specA)x(specB)"; returns the two inner texts
std::pair<std::string, std::string> split_factors(const std::string& rest, const std::string& whole) {
    auto fail = [&]() -> std::pair<std::string, std::string> {
        throw ParseError("expected (spec)x(spec) after the family kind in '" + whole + "'");
    };
    if (rest.empty() || rest.front() != '(') return fail();
    int depth = 0;
    size_t close = std::string::npos;
    for (size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == '(') ++depth;
        if (rest[i] == ')' && --depth == 0) {
            close = i;
            break;
        }
    }
    if (close == std::string::npos) return fail();
    if (close + 2 >= rest.size() || rest[close + 1] != 'x' || rest[close + 2] != '(') return fail();
    if (rest.back() != ')') return fail();
    std::string left = rest.substr(1, close - 1);
    std::string right = rest.substr(close + 3, rest.size() - close - 4);
    if (left.empty() || right.empty()) return fail();
    return {left, right};
}

void require_params(const FamilySpec& spec, size_t count, const std::string& whole) {
    if (spec.params.size() != count)
        throw ParseError(std::string(kind_token(spec.kind)) + " takes " + std::to_string(count) +
                         " parameter(s) in '" + whole + "'");
}

long long checked_mul(long long a, long long b, const std::string& what) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out)) throw ParseError("order overflow in " + what);
    return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
        throw ParseError("family spec must look like kind:params, got '" + text + "'");
    std::string kind_text = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    FamilySpec spec;
    if (kind_text == "path") spec.kind = FamilyKind::path;
    else if (kind_text == "cycle") spec.kind = FamilyKind::cycle;
    else if (kind_text == "complete") spec.kind = FamilyKind::complete;
    else if (kind_text == "empty") spec.kind = FamilyKind::empty;
    else if (kind_text == "star") spec.kind = FamilyKind::star;
    else if (kind_text == "kbip") spec.kind = FamilyKind::complete_bipartite;
    else if (kind_text == "cmp") spec.kind = FamilyKind::complete_multipartite;
    else if (kind_text == "cube") spec.kind = FamilyKind::hypercube;
    else if (kind_text == "corona") spec.kind = FamilyKind::corona;
    else if (kind_text == "box") spec.kind = FamilyKind::box;
    else throw ParseError("unknown family kind '" + kind_text + "' in '" + text + "'");

    if (spec.kind == FamilyKind::corona || spec.kind == FamilyKind::box) {
        auto [left, right] = split_factors(rest, text);
        spec.factors.push_back(parse(left));
        spec.factors.push_back(parse(right));
        return spec;
    }

    spec.params = parse_params(rest, text);
    switch (spec.kind) {
        case FamilyKind::path:
        case FamilyKind::complete:
        case FamilyKind::empty:
            require_params(spec, 1, text);
            if (spec.params[0] < 1) throw ParseError("order must be >= 1 in '" + text + "'");
            break;
        case FamilyKind::cycle:
            require_params(spec, 1, text);
            if (spec.params[0] < 3) throw ParseError("cycle needs order >= 3 in '" + text + "'");
            break;
        case FamilyKind::star:
            require_params(spec, 1, text);
            if (spec.params[0] < 1) throw ParseError("star needs >= 1 leaf in '" + text + "'");
            break;
        case FamilyKind::hypercube:
            require_params(spec, 1, text);
            if (spec.params[0] < 1 || spec.params[0] > 62)
                throw ParseError("hypercube dimension must be in [1, 62] in '" + text + "'");
            break;
        case FamilyKind::complete_bipartite:
            require_params(spec, 2, text);
            if (spec.params[0] < 1 || spec.params[1] < 1)
                throw ParseError("both sides must be >= 1 in '" + text + "'");
            break;
        case FamilyKind::complete_multipartite:
            if (spec.params.size() < 2) throw ParseError("cmp needs at least two parts in '" + text + "'");
            for (long long p : spec.params)
                if (p < 1) throw ParseError("every part must be >= 1 in '" + text + "'");
            break;
        default:
            break;
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out = kind_token(kind);
    out += ":";
    if (kind == FamilyKind::corona || kind == FamilyKind::box) {
        out += "(" + factors[0].to_string() + ")x(" + factors[1].to_string() + ")";
        return out;
    }
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(params[i]);
    }
    return out;
}

namespace {

long long spec_order(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::path:
        case FamilyKind::cycle:
        case FamilyKind::complete:
        case FamilyKind::empty:
            return spec.params[0];
        case FamilyKind::star:
            return spec.params[0] + 1;
        case FamilyKind::complete_bipartite:
            return spec.params[0] + spec.params[1];
        case FamilyKind::complete_multipartite: {
            long long total = 0;
            for (long long p : spec.params) total += p;
            return total;
        }
        case FamilyKind::hypercube:
            return 1LL << spec.params[0];
        case FamilyKind::corona:
            return checked_mul(spec_order(spec.factors[0]), 1 + spec_order(spec.factors[1]), "corona");
        case FamilyKind::box:
            return checked_mul(spec_order(spec.factors[0]), spec_order(spec.factors[1]), "box");
    }
    return 0;
}

// whether the described graph has no edges at all
bool spec_is_edgeless(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::empty:
            return true;
        case FamilyKind::path:
        case FamilyKind::complete:
            return spec.params[0] == 1;
        case FamilyKind::cycle:
        case FamilyKind::star:
        case FamilyKind::complete_bipartite:
        case FamilyKind::complete_multipartite:
        case FamilyKind::hypercube:
            return false;
        case FamilyKind::corona:
            return false;  // the join to each copy always adds edges
        case FamilyKind::box:
            return spec_is_edgeless(spec.factors[0]) && spec_is_edgeless(spec.factors[1]);
    }
    return false;
}

// recognizes specs isomorphic to a complete graph and reports its order
std::optional<long long> spec_as_complete(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::complete:
            return spec.params[0];
        case FamilyKind::path:
            return spec.params[0] <= 2 ? std::optional<long long>(spec.params[0]) : std::nullopt;
        case FamilyKind::empty:
            return spec.params[0] == 1 ? std::optional<long long>(1) : std::nullopt;
        case FamilyKind::cycle:
            return spec.params[0] == 3 ? std::optional<long long>(3) : std::nullopt;
        case FamilyKind::star:
            return spec.params[0] == 1 ? std::optional<long long>(2) : std::nullopt;
        case FamilyKind::complete_bipartite:
            return spec.params[0] == 1 && spec.params[1] == 1 ? std::optional<long long>(2) : std::nullopt;
        case FamilyKind::complete_multipartite: {
            for (long long p : spec.params)
                if (p != 1) return std::nullopt;
            return (long long)spec.params.size();
        }
        case FamilyKind::hypercube:
            return spec.params[0] == 1 ? std::optional<long long>(2) : std::nullopt;
        default:
            return std::nullopt;
    }
}

// recognizes specs isomorphic to a star K_{1,r} with r >= 1
std::optional<long long> spec_as_star(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::star:
            return spec.params[0];
        case FamilyKind::path:
            if (spec.params[0] == 2) return 1;
            if (spec.params[0] == 3) return 2;
            return std::nullopt;
        case FamilyKind::complete:
            return spec.params[0] == 2 ? std::optional<long long>(1) : std::nullopt;
        case FamilyKind::complete_bipartite: {
            long long r = spec.params[0], t = spec.params[1];
            if (r == 1) return t == 1 ? 1 : t;
            if (t == 1) return r;
            return std::nullopt;
        }
        case FamilyKind::complete_multipartite: {
            if (spec.params.size() != 2) return std::nullopt;
            long long r = spec.params[0], t = spec.params[1];
            if (r == 1 && t >= 1) return t == 1 ? 1 : t;
            if (t == 1) return r;
            return std::nullopt;
        }
        case FamilyKind::hypercube:
            return spec.params[0] == 1 ? std::optional<long long>(1) : std::nullopt;
        default:
            return std::nullopt;
    }
}

int small_int(long long v, const std::string& what) {
    if (v > kConstructLimit) throw ParseError(what + " too large to construct (order " + std::to_string(v) + ")");
    return (int)v;
}

}  // namespace

Graph construct(const FamilySpec& spec) {
    small_int(spec_order(spec), spec.to_string());
    switch (spec.kind) {
        case FamilyKind::path:
            return path_graph((int)spec.params[0]);
        case FamilyKind::cycle:
            return cycle_graph((int)spec.params[0]);
        case FamilyKind::complete:
            return complete_graph((int)spec.params[0]);
        case FamilyKind::empty:
            return empty_graph((int)spec.params[0]);
        case FamilyKind::star:
            return star_graph((int)spec.params[0]);
        case FamilyKind::complete_bipartite:
            return complete_bipartite((int)spec.params[0], (int)spec.params[1]);
        case FamilyKind::complete_multipartite: {
            std::vector<int> parts(spec.params.begin(), spec.params.end());
            return complete_multipartite(parts);
        }
        case FamilyKind::hypercube:
            return hypercube((int)spec.params[0]);
        case FamilyKind::corona:
            return corona_product(construct(spec.factors[0]), construct(spec.factors[1]));
        case FamilyKind::box:
            return cartesian_product(construct(spec.factors[0]), construct(spec.factors[1]));
    }
    throw ParseError("unhandled family kind");
}

std::optional<FormulaResult> gamma_sp_formula(const FamilySpec& spec, const SolverCaps& caps) {
    switch (spec.kind) {
        case FamilyKind::path: {
            long long n = spec.params[0];
            if (n == 1) return FormulaResult{1, "edgeless_everything"};
            if (n == 2) return FormulaResult{1, "complete_all_but_one"};
            return FormulaResult{(n + 1) / 2, "path_half_ceiling"};
        }
        case FamilyKind::cycle: {
            long long n = spec.params[0];
            if (n < 3) return std::nullopt;
            long long r = n % 4;
            if (r == 0 || r == 3) return FormulaResult{(n + 1) / 2, "cycle_half_ceiling"};
            return FormulaResult{(n + 2) / 2, "cycle_half_ceiling_plus"};
        }
        case FamilyKind::complete: {
            long long n = spec.params[0];
            if (n == 1) return FormulaResult{1, "edgeless_everything"};
            return FormulaResult{n - 1, "complete_all_but_one"};
        }
        case FamilyKind::empty:
            return FormulaResult{spec.params[0], "edgeless_everything"};
        case FamilyKind::star:
            return FormulaResult{spec.params[0], "multipartite_at_most_one_big_part"};
        case FamilyKind::complete_bipartite: {
            long long r = spec.params[0], t = spec.params[1];
            long long n = r + t;
            if (r >= 2 && t >= 2) return FormulaResult{n - 2, "multipartite_two_big_parts"};
            if (n < 2) return std::nullopt;  // K_{1,1} falls through to n-1
            return FormulaResult{n - 1, "multipartite_at_most_one_big_part"};
        }
        case FamilyKind::complete_multipartite: {
            long long n = 0, big = 0;
            for (long long p : spec.params) {
                n += p;
                if (p > 1) ++big;
            }
            if (big >= 2) return FormulaResult{n - 2, "multipartite_two_big_parts"};
            return FormulaResult{n - 1, "multipartite_at_most_one_big_part"};
        }
        case FamilyKind::hypercube:
            return FormulaResult{1LL << (spec.params[0] - 1), "hypercube_half_order"};
        case FamilyKind::corona: {
            long long n = spec_order(spec.factors[0]);
            const FamilySpec& h = spec.factors[1];
            if (spec_is_edgeless(h)) return FormulaResult{checked_mul(n, spec_order(h), "corona"), "corona_edgeless_copies"};
            long long gsp_h;
            if (auto inner = gamma_sp_formula(h, caps)) {
                gsp_h = inner->value;
            } else {
                try {
                    GammaSpResult r = gamma_sp_bnb(construct(h), caps);
                    if (!r.exact) return std::nullopt;
                    gsp_h = r.value();
                } catch (const CapExceeded&) {
                    return std::nullopt;
                } catch (const ParseError&) {
                    return std::nullopt;
                }
            }
            return FormulaResult{checked_mul(n, gsp_h + 1, "corona"), "corona_copies_plus_roots"};
        }
        case FamilyKind::box: {
            const FamilySpec& a = spec.factors[0];
            const FamilySpec& b = spec.factors[1];
            long long na = spec_order(a), nb = spec_order(b);
            // rule 1: one factor is K_2 and the other has order >= 2
            bool a_is_k2 = spec_as_complete(a) == 2 && !spec_is_edgeless(a);
            bool b_is_k2 = spec_as_complete(b) == 2 && !spec_is_edgeless(b);
            if (a_is_k2 && nb >= 2) return FormulaResult{nb, "one_factor_k2_half_order"};
            if (b_is_k2 && na >= 2) return FormulaResult{na, "one_factor_k2_half_order"};
            // rule 2: both factors complete (the K_3 special case first)
            auto qa = spec_as_complete(a), qb = spec_as_complete(b);
            if (qa && qb) {
                if (*qb == 3 && *qa >= 3) return FormulaResult{2 * *qa, "complete_box_k3"};
                if (*qa == 3 && *qb >= 3) return FormulaResult{2 * *qb, "complete_box_k3"};
                if (*qa >= 4 && *qb >= 4)
                    return FormulaResult{checked_mul(*qa, *qb, "box") - *qa - *qb + 4, "complete_box_complete"};
            }
            // rule 3: both factors stars
            auto ra = spec_as_star(a), rb = spec_as_star(b);
            if (ra && rb) return FormulaResult{checked_mul(*ra, *rb, "box") + 1, "star_box_star"};
            // rule 4: a factor formula certifying gamma_sp = order / 2
            if (na >= 2 && nb >= 2) {
                auto fa = gamma_sp_formula(a, caps);
                if (fa && 2 * fa->value == na)
                    return FormulaResult{checked_mul(na, nb, "box") / 2, "half_order_factor"};
                auto fb = gamma_sp_formula(b, caps);
                if (fb && 2 * fb->value == nb)
                    return FormulaResult{checked_mul(na, nb, "box") / 2, "half_order_factor"};
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<IntInterval> cartesian_parity_bounds(PathOrCycle kind, int n, const Graph& h) {
    if (n < 3 || h.n < 2) return std::nullopt;
    long long total = (long long)n * h.n;
    long long lo = (total + 1) / 2;
    if (kind == PathOrCycle::path) {
        if (n % 2 == 0) return IntInterval{total / 2, total / 2};
        return IntInterval{lo, (long long)(n + 1) * h.n / 2};
    }
    int r = n % 4;
    if (r == 0) return IntInterval{total / 2, total / 2};
    if (r == 2) return IntInterval{lo, (long long)(n + 2) * h.n / 2};
    return IntInterval{lo, (long long)(n + 1) * h.n / 2};
}

std::optional<long long> half_order_rule(const Graph& g, const Graph& h, const SolverCaps& caps) {
    if (g.n < 2 || h.n < 2) return std::nullopt;
    GammaSpResult rg = gamma_sp_bnb(g, caps);
    if (!rg.exact) throw SolverTimeout(rg.lower, rg.upper);
    if (2 * rg.value() == g.n) return (long long)g.n * h.n / 2;
    GammaSpResult rh = gamma_sp_bnb(h, caps);
    if (!rh.exact) throw SolverTimeout(rh.lower, rh.upper);
    if (2 * rh.value() == h.n) return (long long)g.n * h.n / 2;
    return std::nullopt;
}

}  // namespace superdom
