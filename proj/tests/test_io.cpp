#include <string>
#include <vector>

#include "doctest.h"
#include "superdom/io.hpp"

using namespace superdom;

#ifndef SUPERDOM_SOURCE_DIR
#define SUPERDOM_SOURCE_DIR "."
#endif

namespace {

const std::string kFixtures = std::string(SUPERDOM_SOURCE_DIR) + "/fixtures/";

Graph fig_false_twins() {
    return build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 8}, {8, 7}, {7, 6}, {6, 5}, {2, 4}, {4, 7}});
}

Graph fig_two_triangles_chain() {
    return build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {3, 6}, {4, 6}});
}

}  // namespace

TEST_CASE("graph6 decodes known strings") {
    CHECK(graphs_equal(graph6_decode("A_"), complete_graph(2)));
    CHECK(graphs_equal(graph6_decode("Bg"), path_graph(3)));
    CHECK(graphs_equal(graph6_decode("Ch"), path_graph(4)));
    CHECK(graphs_equal(graph6_decode("Dhc"), cycle_graph(5)));
    CHECK(graphs_equal(graph6_decode("C~"), complete_graph(4)));
    CHECK(graphs_equal(graph6_decode("Gr`HOk"), hypercube(3)));
    CHECK(graphs_equal(graph6_decode("FhD_o"), fig_two_triangles_chain()));
    CHECK(graphs_equal(graph6_decode("@"), empty_graph(1)));
    CHECK(graphs_equal(graph6_decode("D??"), empty_graph(5)));
}

TEST_CASE("graph6 round trips byte-exactly") {
    for (const std::string& s : {"A_", "Bg", "Ch", "Dhc", "C~", "Gr`HOk", "FhD_o", "@", "D??"})
        CHECK(graph6_encode(graph6_decode(s)) == s);
    for (const Graph& g : {path_graph(1), path_graph(7), cycle_graph(9), complete_graph(6),
                           star_graph(5), hypercube(4), fig_false_twins()})
        CHECK(graphs_equal(graph6_decode(graph6_encode(g)), g));
}

TEST_CASE("graph6 long-form header for n > 62") {
    Graph big = path_graph(100);
    std::string enc = graph6_encode(big);
    CHECK(enc[0] == '~');
    CHECK(graphs_equal(graph6_decode(enc), big));
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), ParseError);
    CHECK_THROWS_AS(graph6_decode("C"), ParseError);       // truncated body
    CHECK_THROWS_AS(graph6_decode("Chh"), ParseError);     // trailing bytes
    CHECK_THROWS_AS(graph6_decode("B\x01"), ParseError);   // byte out of range
}

TEST_CASE("edge list round trip") {
    for (const Graph& g : {path_graph(5), empty_graph(3), fig_two_triangles_chain()}) {
        CHECK(graphs_equal(edge_list_decode_string(edge_list_encode(g)), g));
    }
    Graph g = edge_list_decode_string("3 2\n0 1\n1 2\n");
    CHECK(graphs_equal(g, path_graph(3)));
    // whitespace-insensitive: everything on one line also parses
    CHECK(graphs_equal(edge_list_decode_string("3 2 0 1 1 2"), path_graph(3)));
}

TEST_CASE("edge list rejects malformed input") {
    CHECK_THROWS_AS(edge_list_decode_string(""), ParseError);
    CHECK_THROWS_AS(edge_list_decode_string("3"), ParseError);
    CHECK_THROWS_AS(edge_list_decode_string("3 2\n0 1\n"), ParseError);   // missing edge
    CHECK_THROWS_AS(edge_list_decode_string("3 1\n0 3\n"), ParseError);   // vertex out of range
    CHECK_THROWS_AS(edge_list_decode_string("3 1\n1 1\n"), ParseError);   // self loop
    CHECK_THROWS_AS(edge_list_decode_string("-1 0\n"), ParseError);
}

TEST_CASE("json round trip") {
    for (const Graph& g : {path_graph(4), empty_graph(2), fig_false_twins()})
        CHECK(graphs_equal(graph_from_json(graph_to_json(g)), g));
    CHECK(graphs_equal(graph_from_json(R"({"n":3,"edges":[[0,1],[1,2]]})"), path_graph(3)));
    CHECK_THROWS_AS(graph_from_json("{}"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"n":2,"edges":[[0,5]]})"), ParseError);
    CHECK_THROWS_AS(graph_from_json("not json"), ParseError);
}

TEST_CASE("read_graph_file picks the format from the extension") {
    Graph twins = read_graph_file(kFixtures + "false_twins_9.edges");
    CHECK(graphs_equal(twins, fig_false_twins()));
    Graph chain = read_graph_file(kFixtures + "triangles_chain_7.edges");
    CHECK(graphs_equal(chain, fig_two_triangles_chain()));
    CHECK(read_graph_file(kFixtures + "apex_two_pairs_7.edges").n == 7);
    CHECK(read_graph_file(kFixtures + "apex_pair_4.edges").edge_count() == 4);
    CHECK_THROWS_AS(read_graph_file(kFixtures + "does_not_exist.edges"), ParseError);
}
