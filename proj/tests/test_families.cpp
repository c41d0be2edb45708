#include <stdexcept>

#include "doctest.h"
#include "superdom/families.hpp"
#include "superdom/io.hpp"
#include "superdom/solver.hpp"

using namespace superdom;

namespace {

long long formula_value(const std::string& text) {
    auto r = gamma_sp_formula(FamilySpec::parse(text));
    REQUIRE_MESSAGE(r.has_value(), text);
    return r->value;
}

long long solver_value(const std::string& text) {
    return gamma_sp_bnb(construct(FamilySpec::parse(text))).value();
}

}  // namespace

TEST_CASE("family spec parsing and round trip") {
    FamilySpec p = FamilySpec::parse("path:7");
    CHECK(p.kind == FamilyKind::path);
    REQUIRE(p.params.size() == 1);
    CHECK(p.params[0] == 7);
    CHECK(p.to_string() == "path:7");

    FamilySpec mp = FamilySpec::parse("cmp:3,2,1");
    CHECK(mp.kind == FamilyKind::complete_multipartite);
    CHECK(mp.params == std::vector<long long>{3, 2, 1});

    FamilySpec box = FamilySpec::parse("box:(star:2)x(star:2)");
    CHECK(box.kind == FamilyKind::box);
    REQUIRE(box.factors.size() == 2);
    CHECK(box.factors[0].kind == FamilyKind::star);
    CHECK(box.to_string() == "box:(star:2)x(star:2)");

    FamilySpec cor = FamilySpec::parse("corona:(path:3)x(complete:2)");
    CHECK(cor.kind == FamilyKind::corona);
    CHECK(cor.to_string() == "corona:(path:3)x(complete:2)");

    // nesting
    FamilySpec nested = FamilySpec::parse("box:(box:(path:3)x(path:3))x(complete:2)");
    REQUIRE(nested.factors.size() == 2);
    CHECK(nested.factors[0].kind == FamilyKind::box);
    CHECK(construct(nested).n == 18);

    for (const char* bad : {"path", "path:", "path:0", "path:-3", "cycle:2", "kbip:1", "cmp:4",
                            "box:path:3", "box:(path:3)", "box:(path:3)x(path:3)x(path:3)",
                            "corona:(path:3)", "nosuch:3", "path:x", "cube:0", ""})
        CHECK_THROWS_AS(FamilySpec::parse(bad), ParseError);
}

TEST_CASE("construct matches the direct constructors") {
    CHECK(graphs_equal(construct(FamilySpec::parse("path:4")), path_graph(4)));
    CHECK(graphs_equal(construct(FamilySpec::parse("cycle:5")), cycle_graph(5)));
    CHECK(graphs_equal(construct(FamilySpec::parse("complete:4")), complete_graph(4)));
    CHECK(graphs_equal(construct(FamilySpec::parse("empty:3")), empty_graph(3)));
    CHECK(graphs_equal(construct(FamilySpec::parse("star:3")), star_graph(3)));
    CHECK(graphs_equal(construct(FamilySpec::parse("kbip:2,3")), complete_bipartite(2, 3)));
    CHECK(graphs_equal(construct(FamilySpec::parse("cmp:2,2")), complete_multipartite({2, 2})));
    CHECK(graphs_equal(construct(FamilySpec::parse("cube:3")), hypercube(3)));
    CHECK(graphs_equal(construct(FamilySpec::parse("corona:(path:3)x(complete:2)")),
                       corona_product(path_graph(3), complete_graph(2))));
    CHECK(graphs_equal(construct(FamilySpec::parse("box:(star:2)x(star:2)")),
                       cartesian_product(star_graph(2), star_graph(2))));
}

TEST_CASE("closed formulas: basic families") {
    CHECK(formula_value("path:3") == 2);
    CHECK(formula_value("path:7") == 4);
    CHECK(formula_value("path:16") == 8);
    CHECK(formula_value("path:2") == 1);   // recognized as complete:2
    CHECK(formula_value("path:1") == 1);   // recognized as edgeless
    CHECK(formula_value("complete:1") == 1);

    CHECK(formula_value("cycle:5") == 3);   // 5 % 4 == 1 -> (n+1)/2 rounded up
    CHECK(formula_value("cycle:6") == 4);   // 6 % 4 == 2
    CHECK(formula_value("cycle:7") == 4);   // 7 % 4 == 3 -> ceil(n/2)
    CHECK(formula_value("cycle:8") == 4);   // 8 % 4 == 0
    CHECK(formula_value("cycle:3") == 2);

    CHECK(formula_value("complete:2") == 1);
    CHECK(formula_value("complete:10") == 9);
    CHECK(formula_value("empty:5") == 5);
    CHECK(formula_value("star:4") == 4);
    CHECK(formula_value("kbip:1,1") == 1);
    CHECK(formula_value("kbip:1,4") == 4);   // a star
    CHECK(formula_value("kbip:2,3") == 3);   // both sides >= 2: n - 2
    CHECK(formula_value("cmp:1,1,1") == 2);  // complete K3
    CHECK(formula_value("cmp:3,1,1") == 4);  // single big part: n - 1
    CHECK(formula_value("cmp:2,2,2") == 4);  // two parts >= 2: n - 2
    CHECK(formula_value("cube:1") == 1);
    CHECK(formula_value("cube:4") == 8);
}

TEST_CASE("closed formulas match the exact solver") {
    for (const char* spec :
         {"path:5", "path:10", "cycle:5", "cycle:6", "cycle:8", "complete:6", "empty:4", "star:5",
          "kbip:2,4", "kbip:3,3", "cmp:2,2,1", "cmp:4,2", "cube:3",
          "corona:(path:3)x(complete:2)", "corona:(complete:2)x(empty:3)",
          "box:(complete:2)x(complete:5)", "box:(complete:3)x(complete:4)",
          "box:(star:2)x(star:2)", "box:(path:4)x(path:4)"})
        CHECK_MESSAGE(formula_value(spec) == solver_value(spec), spec);
}

TEST_CASE("closed formulas: corona") {
    CHECK(formula_value("corona:(path:3)x(complete:2)") == 3 * 2);
    CHECK(formula_value("corona:(complete:2)x(path:3)") == 2 * 3);
    CHECK(formula_value("corona:(complete:2)x(empty:3)") == 2 * 3);
    CHECK(formula_value("corona:(cycle:4)x(empty:1)") == 4);
    // nested corona: inner value feeds the outer rule
    CHECK(formula_value("corona:(path:2)x(corona:(path:2)x(complete:2))") == 2 * (2 * 2 + 1));
}

TEST_CASE("closed formulas: products") {
    CHECK(formula_value("box:(complete:2)x(complete:7)") == 7);
    CHECK(formula_value("box:(complete:7)x(complete:2)") == 7);
    CHECK(formula_value("box:(complete:3)x(complete:5)") == 10);
    CHECK(formula_value("box:(complete:4)x(complete:4)") == 12);
    CHECK(formula_value("box:(star:2)x(star:2)") == 5);
    CHECK(formula_value("box:(star:3)x(star:2)") == 7);
    CHECK(formula_value("box:(path:4)x(path:4)") == 8);    // left factor attains half order
    CHECK(formula_value("box:(complete:2)x(path:5)") == 5);  // K2 rule
    CHECK(formula_value("box:(cube:1)x(path:5)") == 5);      // cube:1 is K2
}

TEST_CASE("formula refuses when no hypothesis applies") {
    CHECK_FALSE(gamma_sp_formula(FamilySpec::parse("box:(path:3)x(path:5)")).has_value());
    CHECK_FALSE(gamma_sp_formula(FamilySpec::parse("box:(cycle:5)x(cycle:5)")).has_value());
    // no silently wrong numbers: every produced value is checked elsewhere against the solver
}

TEST_CASE("parity bounds for path and cycle products") {
    Graph k3 = complete_graph(3);
    auto even_path = cartesian_parity_bounds(PathOrCycle::path, 4, k3);
    REQUIRE(even_path.has_value());
    CHECK(even_path->exact());
    CHECK(even_path->lo == 6);
    CHECK(even_path->lo == gamma_sp_bnb(cartesian_product(path_graph(4), k3)).value());

    auto odd_path = cartesian_parity_bounds(PathOrCycle::path, 5, k3);
    REQUIRE(odd_path.has_value());
    CHECK_FALSE(odd_path->exact());
    CHECK(odd_path->lo == 8);   // ceil(15/2)
    CHECK(odd_path->hi == 9);   // (n+1) n' / 2
    long long p5k3 = gamma_sp_bnb(cartesian_product(path_graph(5), k3)).value();
    CHECK(odd_path->lo <= p5k3);
    CHECK(p5k3 <= odd_path->hi);

    auto cyc0 = cartesian_parity_bounds(PathOrCycle::cycle, 8, k3);
    REQUIRE(cyc0.has_value());
    CHECK(cyc0->exact());
    CHECK(cyc0->lo == 12);
    CHECK(cyc0->lo == gamma_sp_bnb(cartesian_product(cycle_graph(8), k3)).value());

    auto cyc2 = cartesian_parity_bounds(PathOrCycle::cycle, 6, k3);
    REQUIRE(cyc2.has_value());
    CHECK(cyc2->lo == 9);
    CHECK(cyc2->hi == 12);  // (n+2) n' / 2
    long long c6k3 = gamma_sp_bnb(cartesian_product(cycle_graph(6), k3)).value();
    CHECK(cyc2->lo <= c6k3);
    CHECK(c6k3 <= cyc2->hi);

    CHECK_FALSE(cartesian_parity_bounds(PathOrCycle::path, 2, k3).has_value());
    CHECK_FALSE(cartesian_parity_bounds(PathOrCycle::cycle, 4, path_graph(1)).has_value());
}

TEST_CASE("half-order rule") {
    auto r = half_order_rule(path_graph(4), complete_graph(3));
    REQUIRE(r.has_value());
    CHECK(*r == 6);
    CHECK(*r == gamma_sp_bnb(cartesian_product(path_graph(4), complete_graph(3))).value());

    // neither factor attains half its order
    CHECK_FALSE(half_order_rule(path_graph(3), complete_graph(3)).has_value());
}

TEST_CASE("construct guards absurd sizes") {
    CHECK_THROWS_AS(construct(FamilySpec::parse("path:2000000")), ParseError);
    CHECK_THROWS_AS(construct(FamilySpec::parse("cube:40")), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("cube:63"), ParseError);
}
