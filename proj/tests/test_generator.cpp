#include <doctest.h>

#include "oracles.hpp"
#include "tds/generator.hpp"
#include "tds/graph6.hpp"

using namespace tds;

TEST_CASE("circulant seeds") {
    CHECK(circulant_regular(6, 2) == oracles::cycle_graph(6));
    const Graph g = circulant_regular(6, 3);
    CHECK(g.regular_degree() == 3);
    CHECK(g.edge_count() == 9);
    CHECK(circulant_regular(5, 4) == oracles::complete_graph(5));
    CHECK(circulant_regular(4, 0).edge_count() == 0);
    CHECK_THROWS_AS(circulant_regular(5, 3), NoSuchRegularGraph);  // n*r odd
    CHECK_THROWS_AS(circulant_regular(4, 4), NoSuchRegularGraph);  // r >= n
}

TEST_CASE("random_regular is regular and deterministic") {
    const GeneratorParams params{16, 8, 7, -1};
    const Graph a = random_regular(params);
    const Graph b = random_regular(params);
    CHECK(a == b);
    CHECK(a.regular_degree() == 8);
    CHECK(encode_graph6(a) == encode_graph6(b));
    CHECK(a != circulant_regular(16, 8));  // the walk actually moved
    CHECK(random_regular({16, 8, 8, -1}) != a);
}

TEST_CASE("mixing zero returns the circulant") {
    CHECK(random_regular({10, 4, 5, 0}) == circulant_regular(10, 4));
}

TEST_CASE("regularity sweep over small orders") {
    for (int n = 4; n <= 24; ++n)
        for (int r = 2; r <= n - 2; ++r) {
            if ((n * r) % 2 != 0) continue;
            const Graph g = random_regular({n, r, static_cast<std::uint64_t>(1000 + n * 100 + r), 2 * n * r});
            CHECK(g.order() == n);
            CHECK(g.regular_degree() == r);
        }
}
