#include <doctest.h>

#include "oracles.hpp"
#include "tds/graph.hpp"
#include "tds/rng.hpp"

using namespace tds;

TEST_CASE("graph basics") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(g.has_edge(1, 0));
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    g.remove_edge(0, 1);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(Graph(kMaxVertices + 1), std::invalid_argument);
}

TEST_CASE("adjacency stays symmetric and irreflexive under random edits") {
    Rng rng(7);
    Graph g = oracles::random_graph(23, 40, rng);
    for (int u = 0; u < 23; ++u) {
        CHECK_FALSE(g.has_edge(u, u));
        for (int v = 0; v < 23; ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    }
}

TEST_CASE("triangle degrees of small named graphs") {
    CHECK(triangle_degrees(oracles::cycle_graph(5)).t == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(triangle_degrees(oracles::complete_graph(4)).t == std::vector<int>{3, 3, 3, 3});
}

TEST_CASE("triangle degrees match half the diagonal of A^3") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(63));
        const Graph g = oracles::random_graph(n, 10 + trial * 2 % 80, rng);
        CHECK(triangle_degrees(g).t == oracles::a3_diag_triangle_degrees(g));
    }
}

TEST_CASE("profile sum is three times the triangle count") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(18));
        const Graph g = oracles::random_graph(n, 50, rng);
        const TriangleProfile p = triangle_degrees(g);
        CHECK(p.sum() == 3 * oracles::triangle_count(g));
        CHECK(p.sum() % 3 == 0);
    }
}

TEST_CASE("triangle degree bounded by C(deg, 2)") {
    Rng rng(17);
    const Graph g = oracles::random_graph(30, 45, rng);
    const TriangleProfile p = triangle_degrees(g);
    for (int v = 0; v < 30; ++v) {
        const long long d = g.degree(v);
        CHECK(p.t[v] >= 0);
        CHECK(p.t[v] <= d * (d - 1) / 2);
    }
}

TEST_CASE("sorted_desc is descending") {
    TriangleProfile p{{3, 9, 1, 9, 0}};
    CHECK(p.sorted_desc() == std::vector<int>{9, 9, 3, 1, 0});
}

TEST_CASE("complement of K4 is empty, complement is an involution") {
    const Graph k4 = oracles::complete_graph(4);
    CHECK(k4.complement().edge_count() == 0);
    Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracles::random_graph(2 + static_cast<int>(rng.below(40)), 30, rng);
        CHECK(g.complement().complement() == g);
        CHECK(g.complement().edge_count() ==
              static_cast<long long>(g.order()) * (g.order() - 1) / 2 - g.edge_count());
    }
}

TEST_CASE("complement triangle degree identity") {
    CHECK(complement_triangle_degree(21, 10, 10) == 30);
    CHECK(complement_triangle_degree(4, 3, 3) == 0);
    // 3 r (n-r-1) odd makes the identity non-integral
    CHECK_THROWS_AS(complement_triangle_degree(7, 1, 0), NonIntegerResult);
}

TEST_CASE("complement identity holds vertexwise on random regular graphs") {
    // regular graphs via circulants of assorted degrees
    for (auto [n, r] : {std::pair{12, 4}, {15, 6}, {16, 7}, {21, 10}}) {
        Graph g(n);
        for (int d = 1; d <= r / 2; ++d)
            for (int i = 0; i < n; ++i)
                if (!g.has_edge(i, (i + d) % n)) g.add_edge(i, (i + d) % n);
        if (r % 2)
            for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
        const TriangleProfile p = triangle_degrees(g);
        const TriangleProfile pc = triangle_degrees(g.complement());
        for (int v = 0; v < n; ++v)
            CHECK(pc.t[v] == complement_triangle_degree(n, r, p.t[v]));
    }
}
