#include <doctest.h>

#include <set>

#include "tds/fixtures.hpp"
#include "tds/graph6.hpp"
#include "tds/objectives.hpp"

using namespace tds;

TEST_CASE("eleven fixtures, unknown ids rejected") {
    CHECK(fixture_count() == 11);
    CHECK_THROWS_AS(load_fixture(0), UnknownFixture);
    CHECK_THROWS_AS(load_fixture(12), UnknownFixture);
}

TEST_CASE("fixture metadata") {
    const Fixture one = load_fixture(1);
    CHECK(one.n == 21);
    CHECK(one.r == 10);
    for (int i = 0; i < 21; ++i) CHECK(one.published_t[i] == 10 + i);

    const Fixture last = load_fixture(11);
    CHECK(last.n == 27);
    CHECK(last.r == 12);
    CHECK(last.published_t.back() == 44);
}

TEST_CASE("every fixture is regular, triangle-distinct, and matches its column") {
    for (int id = 1; id <= fixture_count(); ++id) {
        const Fixture fx = load_fixture(id);
        CHECK(fx.graph.order() == fx.n);
        CHECK(fx.graph.regular_degree() == fx.r);
        const TriangleProfile p = triangle_degrees(fx.graph);
        CHECK(p.t == fx.published_t);
        CHECK(is_triangle_distinct(p));
        CHECK(f1(p) == fx.n);
        CHECK(f2(p) == 0);
        CHECK(f3(p) < fx.n);
        CHECK(check_necessary_condition(fx.n, fx.r));
    }
}

TEST_CASE("complements are TD with the predicted profile") {
    std::set<std::string> fixture_g6;
    for (int id = 1; id <= fixture_count(); ++id)
        fixture_g6.insert(encode_graph6(load_fixture(id).graph));

    for (int id = 1; id <= fixture_count(); ++id) {
        const Fixture fx = load_fixture(id);
        const Graph comp = fx.graph.complement();
        CHECK(comp.regular_degree() == fx.n - 1 - fx.r);
        const TriangleProfile pc = triangle_degrees(comp);
        CHECK(is_triangle_distinct(pc));
        for (int v = 0; v < fx.n; ++v)
            CHECK(pc.t[v] == complement_triangle_degree(fx.n, fx.r, fx.published_t[v]));
        // none of the bundled graphs is the complement of another
        CHECK(fixture_g6.count(encode_graph6(comp)) == 0);
    }
}

TEST_CASE("embedded text parses back to the same graph") {
    for (int id = 1; id <= fixture_count(); ++id) {
        const Fixture fx = load_fixture(id);
        const auto parsed = parse_adjacency_list(fx.adjlist_text);
        CHECK(parsed.graph == fx.graph);
        REQUIRE(parsed.has_full_t_column());
        for (int v = 0; v < fx.n; ++v) CHECK(parsed.t_column[v] == fx.published_t[v]);
    }
}
