#include <stdexcept>

#include "doctest.h"
#include "superdom/graph.hpp"

using namespace superdom;

namespace {

Graph fig_two_triangles_chain() {
    return build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {3, 6}, {4, 6}});
}

Graph fig_false_twins() {
    return build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 8}, {8, 7}, {7, 6}, {6, 5}, {2, 4}, {4, 7}});
}

}  // namespace

TEST_CASE("build_graph validates input") {
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), std::invalid_argument);
    Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("edges are sorted with u < v") {
    Graph g = build_graph(4, {{3, 2}, {1, 0}, {2, 0}});
    std::vector<Edge> want = {{0, 1}, {0, 2}, {2, 3}};
    CHECK(g.edges() == want);
}

TEST_CASE("standard families have the right shape") {
    CHECK(path_graph(1).n == 1);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK(cycle_graph(6).edge_count() == 6);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(empty_graph(4).edge_count() == 0);
    CHECK(star_graph(4).n == 5);
    CHECK(star_graph(4).degree(0) == 4);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(complete_multipartite({2, 2, 2}).edge_count() == 12);

    Graph q3 = hypercube(3);
    CHECK(q3.n == 8);
    CHECK(q3.edge_count() == 12);
    for (int v = 0; v < q3.n; ++v) CHECK(q3.degree(v) == 3);
    // coordinate bitmask labeling: neighbors differ in one bit
    CHECK(q3.adjacent(0, 1));
    CHECK(q3.adjacent(0, 2));
    CHECK(q3.adjacent(0, 4));
    CHECK_FALSE(q3.adjacent(0, 3));

    CHECK(graphs_equal(complete_bipartite(1, 2), star_graph(2)));
    CHECK(graphs_equal(complete_multipartite({1, 1, 1}), complete_graph(3)));
    CHECK(graphs_equal(hypercube(2), build_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
}

TEST_CASE("family constructors reject bad parameters") {
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(star_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(complete_bipartite(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(complete_multipartite({3}), std::invalid_argument);
    CHECK_THROWS_AS(hypercube(0), std::invalid_argument);
}

TEST_CASE("neighborhoods") {
    Graph p4 = path_graph(4);
    CHECK(open_neighborhood(p4, 1) == VertexSet::of(4, {0, 2}));
    CHECK(closed_neighborhood(p4, 1) == VertexSet::of(4, {0, 1, 2}));
    CHECK(open_neighborhood(p4, VertexSet::of(4, {0, 3})) == VertexSet::of(4, {1, 2}));
    CHECK(closed_neighborhood(p4, VertexSet::of(4, {0})) == VertexSet::of(4, {0, 1}));
}

TEST_CASE("disjoint union and join") {
    Graph u = disjoint_union(path_graph(3), complete_graph(2));
    CHECK(u.n == 5);
    CHECK(u.edge_count() == 3);
    CHECK(u.adjacent(3, 4));
    CHECK_FALSE(u.adjacent(2, 3));

    Graph j = join(empty_graph(1), empty_graph(2));
    CHECK(graphs_equal(j, star_graph(2)));
    CHECK(join(path_graph(2), path_graph(2)).edge_count() == 2 + 4);
}

TEST_CASE("cartesian product") {
    Graph c4 = cartesian_product(complete_graph(2), complete_graph(2));
    CHECK(c4.n == 4);
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    Graph g = cartesian_product(path_graph(3), complete_graph(2));
    CHECK(g.n == 6);
    CHECK(g.edge_count() == 3 + 4);  // 3 rungs + two copies of P3
    // (a,b) -> a*h.n + b
    CHECK(product_vertex(path_graph(3), complete_graph(2), 2, 1) == 5);
    CHECK(g.adjacent(0, 1));   // (0,0)-(0,1): edge in the second factor
    CHECK(g.adjacent(0, 2));   // (0,0)-(1,0): edge in the first factor
    CHECK_FALSE(g.adjacent(0, 3));

    CHECK(graphs_equal(cartesian_product(complete_graph(2), complete_graph(2)), hypercube(2)));
}

TEST_CASE("corona product") {
    Graph g = corona_product(path_graph(3), complete_graph(2));
    CHECK(g.n == 3 + 3 * 2);
    CHECK(g.edge_count() == 2 + 3 * 1 + 3 * 2);
    // vertex b of copy a is g.n + a*h.n + b
    CHECK(g.adjacent(3, 4));       // copy 0 keeps its K2 edge
    CHECK(g.adjacent(0, 3));       // center joined to its copy
    CHECK(g.adjacent(0, 4));
    CHECK_FALSE(g.adjacent(0, 5)); // but not to other copies
    CHECK(g.adjacent(2, 7));
    CHECK(g.adjacent(2, 8));
}

TEST_CASE("line graph") {
    CHECK(graphs_equal(line_graph(path_graph(4)).graph, path_graph(3)));
    CHECK(graphs_equal(line_graph(cycle_graph(3)).graph, cycle_graph(3)));
    CHECK(graphs_equal(line_graph(star_graph(4)).graph, complete_graph(4)));
    CHECK_THROWS_AS(line_graph(empty_graph(3)), std::invalid_argument);

    LineGraphResult lg = line_graph(path_graph(3));
    REQUIRE(lg.vertex_edge.size() == 2);
    CHECK(lg.vertex_edge[0] == Edge{0, 1});
    CHECK(lg.vertex_edge[1] == Edge{1, 2});
}

TEST_CASE("twin partition") {
    CHECK(twin_partition(complete_graph(4)).count() == 1);
    CHECK(twin_partition(empty_graph(5)).count() == 1);
    CHECK(twin_partition(path_graph(4)).count() == 4);

    TwinPartition c4 = twin_partition(cycle_graph(4));
    CHECK(c4.count() == 2);
    CHECK(c4.classes[0].members == VertexSet::of(4, {0, 2}));
    CHECK(c4.classes[0].kind == TwinKind::false_twin);
    CHECK(c4.classes[1].members == VertexSet::of(4, {1, 3}));

    TwinPartition kt = twin_partition(complete_graph(3));
    REQUIRE(kt.count() == 1);
    CHECK(kt.classes[0].kind == TwinKind::true_twin);

    CHECK(twin_partition(fig_false_twins()).count() == 5);
    CHECK(twin_partition(complete_bipartite(2, 3)).count() == 2);
}

TEST_CASE("structure predicates") {
    CHECK(is_connected(path_graph(1)));
    CHECK(is_connected(cycle_graph(5)));
    CHECK_FALSE(is_connected(disjoint_union(path_graph(2), path_graph(2))));
    CHECK(has_isolated_vertex(disjoint_union(path_graph(2), empty_graph(1))));
    CHECK_FALSE(has_isolated_vertex(cycle_graph(4)));
    CHECK(is_empty_graph(empty_graph(3)));
    CHECK_FALSE(is_empty_graph(path_graph(2)));
    CHECK(max_degree(star_graph(5)) == 5);
    CHECK(min_degree(star_graph(5)) == 1);
    CHECK(universal_vertices(star_graph(3)) == VertexSet::of(4, {0}));
    CHECK(universal_vertices(complete_graph(3)) == VertexSet::full(3));
    CHECK(universal_vertices(path_graph(4)).empty());
    CHECK(degree_one_count(path_graph(4)) == 2);
    CHECK(degree_one_count(star_graph(3)) == 3);
}

TEST_CASE("bipartition") {
    CHECK(is_bipartite(cycle_graph(4)));
    CHECK(is_bipartite(hypercube(3)));
    CHECK(is_bipartite(path_graph(1)));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK_FALSE(is_bipartite(complete_graph(3)));

    auto side = bipartition(complete_bipartite(2, 3));
    REQUIRE(side.has_value());
    CHECK((*side)[0] == (*side)[1]);
    CHECK((*side)[2] == (*side)[3]);
    CHECK((*side)[0] != (*side)[2]);
}

TEST_CASE("induced subgraph and components") {
    Graph sub = induced_subgraph(path_graph(4), VertexSet::of(4, {0, 1, 2}));
    CHECK(graphs_equal(sub, path_graph(3)));
    Graph skip = induced_subgraph(path_graph(4), VertexSet::of(4, {0, 2, 3}));
    CHECK(skip.edge_count() == 1);  // only 2-3 survives, relabelled 1-2
    CHECK(skip.adjacent(1, 2));

    auto comps = connected_components(disjoint_union(path_graph(3), complete_graph(2)));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet::of(5, {0, 1, 2}));
    CHECK(comps[1] == VertexSet::of(5, {3, 4}));
}

TEST_CASE("graphs_equal is labelled equality") {
    CHECK(graphs_equal(path_graph(3), path_graph(3)));
    CHECK_FALSE(graphs_equal(path_graph(3), path_graph(4)));
    // same shape, different labeling
    Graph other = build_graph(3, {{0, 2}, {2, 1}});
    CHECK_FALSE(graphs_equal(other, path_graph(3)));
    CHECK(fig_two_triangles_chain().edge_count() == 8);
}
