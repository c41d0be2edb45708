#include "superdom/oracle.hpp"

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

// Reference implementations: every routine below walks the raw definition
// with plain loops over subsets. They share nothing with the production
// solvers on purpose, so that agreement between the two is meaningful.

namespace superdom::oracle {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

std::vector<uint32_t> neighbor_masks(const Graph& g) {
    std::vector<uint32_t> nb(g.n, 0);
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v = 0; v < g.n; ++v)
            if (u != v && g.adjacent(u, v)) nb[u] |= 1u << v;
    return nb;
}

bool dominating_mask(int n, const std::vector<uint32_t>& nb, uint32_t s) {
    for (int u = 0; u < n; ++u)
        if (!((s >> u) & 1u) && !(nb[u] & s)) return false;
    return true;
}

// literal reading: an injective map from the outside vertices into s where
// the image of u is a neighbor of u whose only outside neighbor is u
bool assign_witnesses(int n, const std::vector<uint32_t>& nb, uint32_t s, uint32_t outside, uint32_t used,
                      std::set<uint32_t>* images) {
    if (!outside) {
        if (images) images->insert(used);
        return true;
    }
    int u = std::countr_zero(outside);
    uint32_t rest = outside & (outside - 1);
    bool any = false;
    for (int v = 0; v < n; ++v) {
        uint32_t bit = 1u << v;
        if (!(nb[u] & bit)) continue;   // v must neighbor u
        if (!((s >> v) & 1u)) continue; // v must lie in s
        if (used & bit) continue;       // injectivity
        if ((nb[v] & ~s) != (1u << u)) continue;  // u is v's only outside neighbor
        if (assign_witnesses(n, nb, s, rest, used | bit, images)) {
            any = true;
            if (!images) return true;
        }
    }
    return any;
}

bool super_dominating_mask(int n, const std::vector<uint32_t>& nb, uint32_t s, uint32_t full) {
    uint32_t outside = full & ~s;
    return assign_witnesses(n, nb, s, outside, 0, nullptr);
}

}  // namespace

int gamma(const Graph& g) {
    require(g.n >= 1 && g.n <= 20, "oracle::gamma handles 1 <= n <= 20");
    auto nb = neighbor_masks(g);
    uint32_t full = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
    int best = g.n;
    for (uint32_t s = 0; s <= full; ++s)
        if (std::popcount(s) < best && dominating_mask(g.n, nb, s)) best = std::popcount(s);
    return best;
}

int gamma_s(const Graph& g) {
    require(g.n >= 1 && g.n <= 14, "oracle::gamma_s handles 1 <= n <= 14");
    auto nb = neighbor_masks(g);
    uint32_t full = (1u << g.n) - 1;
    int best = g.n;
    for (uint32_t s = 0; s <= full; ++s) {
        if (std::popcount(s) >= best) continue;
        if (!dominating_mask(g.n, nb, s)) continue;
        bool secure = true;
        for (int v = 0; v < g.n && secure; ++v) {
            if ((s >> v) & 1u) continue;
            bool defended = false;
            for (int u = 0; u < g.n && !defended; ++u) {
                if (!((s >> u) & 1u) || !((nb[v] >> u) & 1u)) continue;
                uint32_t swapped = (s & ~(1u << u)) | (1u << v);
                if (dominating_mask(g.n, nb, swapped)) defended = true;
            }
            if (!defended) secure = false;
        }
        if (secure) best = std::popcount(s);
    }
    return best;
}

int gamma_sp(const Graph& g) {
    require(g.n >= 1 && g.n <= 16, "oracle::gamma_sp handles 1 <= n <= 16");
    auto nb = neighbor_masks(g);
    uint32_t full = (1u << g.n) - 1;
    int best = g.n;  // the whole vertex set always qualifies
    for (uint32_t s = 0; s < full; ++s)
        if (std::popcount(s) < best && super_dominating_mask(g.n, nb, s, full)) best = std::popcount(s);
    return best;
}

int alpha(const Graph& g) {
    require(g.n >= 1 && g.n <= 20, "oracle::alpha handles 1 <= n <= 20");
    auto nb = neighbor_masks(g);
    uint32_t full = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
    int best = 0;
    for (uint32_t s = 0; s <= full; ++s) {
        if (std::popcount(s) <= best) continue;
        bool independent = true;
        for (uint32_t rest = s; rest && independent; rest &= rest - 1)
            if (nb[std::countr_zero(rest)] & s) independent = false;
        if (independent) best = std::popcount(s);
    }
    return best;
}

int rho(const Graph& g) {
    require(g.n >= 1 && g.n <= 20, "oracle::rho handles 1 <= n <= 20");
    auto nb = neighbor_masks(g);
    std::vector<uint32_t> closed(g.n);
    for (int v = 0; v < g.n; ++v) closed[v] = nb[v] | (1u << v);
    uint32_t full = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
    int best = 0;
    for (uint32_t s = 0; s <= full; ++s) {
        if (std::popcount(s) <= best) continue;
        bool packing = true;
        for (uint32_t a = s; a && packing; a &= a - 1) {
            int u = std::countr_zero(a);
            for (uint32_t b = a & (a - 1); b && packing; b &= b - 1)
                if (closed[u] & closed[std::countr_zero(b)]) packing = false;
        }
        if (packing) best = std::popcount(s);
    }
    return best;
}

namespace {

int matching_rec(int n, const std::vector<uint32_t>& nb, uint32_t free, std::vector<int8_t>& memo) {
    if (!free) return 0;
    if (memo[free] >= 0) return memo[free];
    int v = std::countr_zero(free);
    uint32_t without_v = free & ~(1u << v);
    int best = matching_rec(n, nb, without_v, memo);  // leave v unmatched
    for (uint32_t cand = nb[v] & without_v; cand; cand &= cand - 1) {
        int u = std::countr_zero(cand);
        int take = 1 + matching_rec(n, nb, without_v & ~(1u << u), memo);
        if (take > best) best = take;
    }
    memo[free] = (int8_t)best;
    return best;
}

}  // namespace

int matching(const Graph& g) {
    require(g.n >= 1 && g.n <= 22, "oracle::matching handles 1 <= n <= 22");
    auto nb = neighbor_masks(g);
    std::vector<int8_t> memo(1u << g.n, -1);
    return matching_rec(g.n, nb, (1u << g.n) - 1, memo);
}

int lambda_literal(const Graph& g) {
    require(g.n >= 1 && g.n <= 10, "oracle::lambda_literal handles 1 <= n <= 10");
    auto nb = neighbor_masks(g);
    uint32_t full = (1u << g.n) - 1;
    int gsp = gamma_sp(g);
    int best = 0;
    for (uint32_t s = 0; s <= full; ++s) {
        if (std::popcount(s) != gsp) continue;
        uint32_t outside = full & ~s;
        std::set<uint32_t> images;
        if (!assign_witnesses(g.n, nb, s, outside, 0, &images)) continue;
        for (uint32_t image : images) {
            uint32_t banned = outside | image;
            // every subset x of s with N(x) disjoint from the banned region
            for (uint32_t x = s;; x = (x - 1) & s) {
                if (std::popcount(x) > best) {
                    uint32_t nx = 0;
                    for (uint32_t rest = x; rest; rest &= rest - 1) nx |= nb[std::countr_zero(rest)];
                    if (!(nx & banned)) best = std::popcount(x);
                }
                if (x == 0) break;
            }
        }
    }
    return best;
}

}  // namespace superdom::oracle
