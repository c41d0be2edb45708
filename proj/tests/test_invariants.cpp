#include <cstdlib>

#include "doctest.h"
#include "json.hpp"
#include "superdom/invariants.hpp"
#include "superdom/oracle.hpp"

using namespace superdom;

namespace {

Graph fig_two_triangles_chain() {
    return build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {3, 6}, {4, 6}});
}

}  // namespace

TEST_CASE("defining predicates") {
    Graph p4 = path_graph(4);
    CHECK(is_dominating(p4, VertexSet::of(4, {1, 2})));
    CHECK_FALSE(is_dominating(p4, VertexSet::of(4, {0})));
    CHECK(is_independent_set(p4, VertexSet::of(4, {0, 2})));
    CHECK_FALSE(is_independent_set(p4, VertexSet::of(4, {0, 1})));
    CHECK(is_vertex_cover(p4, VertexSet::of(4, {1, 2})));
    CHECK_FALSE(is_vertex_cover(p4, VertexSet::of(4, {0, 1})));
    CHECK(is_two_packing(p4, VertexSet::of(4, {0, 3})));
    CHECK_FALSE(is_two_packing(p4, VertexSet::of(4, {0, 2})));
    CHECK(is_matching(p4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(is_matching(p4, {{0, 1}, {1, 2}}));
    CHECK_FALSE(is_matching(p4, {{0, 2}}));  // not an edge
    CHECK(is_secure_dominating(complete_graph(3), VertexSet::of(3, {0})));
    CHECK_FALSE(is_secure_dominating(path_graph(4), VertexSet::of(4, {1})));
}

TEST_CASE("domination number") {
    CHECK(domination_number(cycle_graph(6)).value == 2);
    CHECK(domination_number(path_graph(4)).value == 2);
    CHECK(domination_number(complete_graph(5)).value == 1);
    CHECK(domination_number(star_graph(6)).value == 1);
    CHECK(domination_number(empty_graph(4)).value == 4);
    CHECK(domination_number(fig_two_triangles_chain()).value == 2);
    CHECK(domination_number(cartesian_product(complete_graph(4), complete_graph(2))).value == 2);

    SetResult r = domination_number(cycle_graph(6));
    CHECK(is_dominating(cycle_graph(6), r.certificate));
    CHECK(r.certificate == VertexSet::of(6, {0, 3}));  // lexicographically smallest
}

TEST_CASE("secure domination number") {
    CHECK(secure_domination_number(complete_graph(3)).value == 1);
    CHECK(secure_domination_number(path_graph(4)).value == 2);
    CHECK(secure_domination_number(star_graph(4)).value == 4);
    CHECK(secure_domination_number(fig_two_triangles_chain()).value == 3);
    SetResult r = secure_domination_number(path_graph(4));
    CHECK(is_secure_dominating(path_graph(4), r.certificate));
    CHECK((int)r.certificate.size() == 2);

    SolverCaps tight;
    tight.secure_cap = 3;
    CHECK_THROWS_AS(secure_domination_number(path_graph(4), tight), CapExceeded);
}

TEST_CASE("matching number (blossom)") {
    CHECK(matching_number(cycle_graph(7)).value == 3);
    CHECK(matching_number(hypercube(3)).value == 4);
    CHECK(matching_number(fig_two_triangles_chain()).value == 3);
    CHECK(matching_number(empty_graph(5)).value == 0);
    CHECK(matching_number(complete_graph(5)).value == 2);
    // odd cycles force blossom contractions
    CHECK(matching_number(cycle_graph(9)).value == 4);

    MatchingResult r = matching_number(path_graph(4));
    CHECK(r.value == 2);
    CHECK(is_matching(path_graph(4), r.certificate));
    std::vector<Edge> want = {{0, 1}, {2, 3}};
    CHECK(r.certificate == want);  // lexicographically smallest optimum

    for (const Graph& g : {cycle_graph(5), star_graph(4), complete_graph(6), hypercube(3)})
        CHECK(matching_number(g).value == oracle::matching(g));
}

TEST_CASE("independence, vertex cover, two-packing") {
    CHECK(independence_number(hypercube(3)).value == 4);
    CHECK(independence_number(cycle_graph(5)).value == 2);
    CHECK(independence_number(fig_two_triangles_chain()).value == 3);
    CHECK(vertex_cover_number(hypercube(3)).value == 4);
    CHECK(vertex_cover_number(cycle_graph(5)).value == 3);
    CHECK(independence_number(path_graph(4)).certificate == VertexSet::of(4, {0, 2}));

    CHECK(two_packing_number(fig_two_triangles_chain()).value == 2);
    CHECK(two_packing_number(complete_graph(5)).value == 1);
    CHECK(two_packing_number(path_graph(4)).value == 2);
    CHECK(two_packing_number(cycle_graph(4)).value == 1);
    CHECK(two_packing_number(corona_product(path_graph(3), complete_graph(2))).value == 3);

    SetResult is = independence_number(cycle_graph(6));
    CHECK(is_independent_set(cycle_graph(6), is.certificate));
    SetResult vc = vertex_cover_number(cycle_graph(6));
    CHECK(is_vertex_cover(cycle_graph(6), vc.certificate));
    SetResult tp = two_packing_number(cycle_graph(7));
    CHECK(is_two_packing(cycle_graph(7), tp.certificate));
    CHECK(tp.value == 2);
}

TEST_CASE("identity cross-checks") {
    IdentityReport tree = identity_crosschecks(path_graph(5));
    CHECK(tree.gallai_holds);
    CHECK(tree.konig_applicable);
    CHECK(tree.konig_holds);
    CHECK(tree.meir_moon_applicable);
    CHECK(tree.meir_moon_holds);
    CHECK(tree.all_hold());

    IdentityReport even = identity_crosschecks(cycle_graph(4));
    CHECK(even.konig_applicable);
    CHECK_FALSE(even.meir_moon_applicable);
    CHECK(even.all_hold());

    IdentityReport odd = identity_crosschecks(cycle_graph(5));
    CHECK_FALSE(odd.konig_applicable);
    CHECK(odd.all_hold());
}

TEST_CASE("is_tree") {
    CHECK(is_tree(path_graph(6)));
    CHECK(is_tree(star_graph(5)));
    CHECK(is_tree(path_graph(1)));
    CHECK_FALSE(is_tree(cycle_graph(4)));
    CHECK_FALSE(is_tree(disjoint_union(path_graph(2), path_graph(2))));
}

TEST_CASE("compute_invariants bundles everything for one graph") {
    Graph g = fig_two_triangles_chain();
    InvariantBundle b = compute_invariants(g, {"all"});
    auto value = [&](const char* name) {
        const InvariantEntry* e = b.find(name);
        REQUIRE_MESSAGE(e != nullptr, name);
        return e->value;
    };
    CHECK(value("gamma_sp") == 5);
    CHECK(value("gamma") == 2);
    CHECK(value("gamma_s") == 3);
    CHECK(value("alpha_prime") == 3);
    CHECK(value("alpha") == 3);
    CHECK(value("beta") == 4);
    CHECK(value("rho") == 2);
    CHECK(value("twin_count") == 6);
    CHECK(value("max_degree") == 3);
    CHECK(value("degree_one_count") == 1);  // the pendant vertex 0
    CHECK(value("lambda") == oracle::lambda_literal(g));

    InvariantBundle some = compute_invariants(g, {"gamma", "alpha"});
    CHECK(some.entries.size() == 2);
    CHECK(some.find("gamma_sp") == nullptr);

    CHECK_THROWS_AS(compute_invariants(g, {"no_such_invariant"}), std::invalid_argument);
}

TEST_CASE("caps gate expensive invariants") {
    Graph g = fig_two_triangles_chain();
    SolverCaps tiny;
    tiny.enum_cap = 5;
    tiny.secure_cap = 5;
    // "all" silently omits what the caps exclude
    InvariantBundle b = compute_invariants(g, {"all"}, tiny);
    CHECK(b.find("lambda") == nullptr);
    CHECK(b.find("gamma_s") == nullptr);
    CHECK(b.find("gamma") != nullptr);
    // an explicit request beyond its cap is an error, not a silent omission
    CHECK_THROWS_AS(compute_invariants(g, {"lambda"}, tiny), CapExceeded);
    CHECK_THROWS_AS(compute_invariants(g, {"gamma_s"}, tiny), CapExceeded);
}

TEST_CASE("solver caps read the environment") {
    setenv("SUPERDOM_BRUTE_CAP", "9", 1);
    setenv("SUPERDOM_TIMEOUT_MS", "1234", 1);
    SolverCaps caps = SolverCaps::from_env();
    CHECK(caps.brute_cap == 9);
    CHECK(caps.timeout_ms == 1234);
    CHECK(caps.enum_cap == 12);  // untouched default
    unsetenv("SUPERDOM_BRUTE_CAP");
    unsetenv("SUPERDOM_TIMEOUT_MS");
    SolverCaps fresh = SolverCaps::from_env();
    CHECK(fresh.brute_cap == 18);
    CHECK(fresh.timeout_ms == 0);
}

TEST_CASE("bundle serializes to json") {
    Graph g = path_graph(4);
    InvariantBundle b = compute_invariants(g, {"gamma_sp", "alpha_prime"});
    nlohmann::json j = nlohmann::json::parse(bundle_to_json(b, g.n, g.edge_count()));
    CHECK(j["n"] == 4);
    CHECK(j["m"] == 3);
    bool saw_matching = false;
    for (const auto& e : j["invariants"]) {
        if (e["name"] == "alpha_prime") {
            saw_matching = true;
            CHECK(e["value"] == 2);
            CHECK(e["certificate"].size() == 2);  // two matched edges
        }
    }
    CHECK(saw_matching);
}
