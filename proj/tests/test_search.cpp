#include <doctest.h>

#include "oracles.hpp"
#include "tds/fixtures.hpp"
#include "tds/generator.hpp"
#include "tds/moves.hpp"
#include "tds/search.hpp"

using namespace tds;

TEST_CASE("greedy returns immediately from a TD start under f2") {
    const Fixture fx = load_fixture(5);
    const GreedyResult res = greedy_descent(fx.graph, ObjectiveKind::F2Minimize);
    CHECK(res.steps == 0);
    CHECK(res.value.value == 0.0);
    CHECK(res.graph == fx.graph);
}

TEST_CASE("K4 is a fixed point: no feasible switchings at all") {
    const GreedyResult res =
        greedy_descent(oracles::complete_graph(4), ObjectiveKind::F2Minimize);
    CHECK(res.steps == 0);
    CHECK(res.value.value == 6.0);
}

TEST_CASE("greedy descends monotonically from a perturbed fixture") {
    const Fixture fx = load_fixture(1);
    Rng rng(42);
    const Graph start = apply(fx.graph, random_switching(fx.graph, rng));
    const double before = evaluate(ObjectiveKind::F3Minimize, triangle_degrees(start));
    const GreedyResult res =
        greedy_descent(start, ObjectiveKind::F3Minimize, /*stop_on_td=*/false);
    CHECK(res.value.value <= before);
    if (res.steps > 0) CHECK(res.value.value < before);
    CHECK(res.graph.regular_degree() == 10);
}

TEST_CASE("greedy ends at a local optimum: no neighbour is strictly better") {
    Rng rng(23);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Graph start = random_regular({12, 5, seed, -1});
        const GreedyResult res =
            greedy_descent(start, ObjectiveKind::F2Minimize, /*stop_on_td=*/false);
        const TriangleProfile p = triangle_degrees(res.graph);
        CHECK(evaluate(ObjectiveKind::F2Minimize, p) == res.value.value);
        for (const Switching& sw : enumerate_feasible(res.graph)) {
            const auto [ng, np] = apply_with_profile(res.graph, p, sw);
            CHECK_FALSE(is_improvement(ObjectiveKind::F2Minimize,
                                       evaluate(ObjectiveKind::F2Minimize, np),
                                       res.value.value));
        }
    }
}

TEST_CASE("shake applies k switchings and keeps regularity") {
    const Fixture fx = load_fixture(1);
    Rng rng(5);
    for (int k = 1; k <= 6; ++k) {
        const Graph shaken = shake(fx.graph, k, rng);
        CHECK(shaken.regular_degree() == 10);
        CHECK(shaken.edge_count() == fx.graph.edge_count());
    }
    // one switching touches at most 4 edge slots
    Rng rng2(6);
    const Graph one = shake(fx.graph, 1, rng2);
    int changed = 0;
    for (int u = 0; u < one.order(); ++u)
        for (int v = u + 1; v < one.order(); ++v)
            if (one.has_edge(u, v) != fx.graph.has_edge(u, v)) ++changed;
    CHECK(changed == 4);
}

TEST_CASE("vns on a TD start reports success without shaking") {
    SearchConfig config;
    config.n = 22;
    config.r = 10;
    config.objective = ObjectiveKind::F2Minimize;
    config.seed = 1;
    const SearchReport rep = vns(config, load_fixture(5).graph);
    CHECK(rep.is_td);
    CHECK(rep.best_value.value == 0.0);
    CHECK(rep.shakes == 0);
    CHECK(rep.iterations == 0);
    CHECK(rep.stop_reason == StopReason::TdFound);
}

TEST_CASE("invalid configurations are rejected") {
    SearchConfig config;
    config.n = 5;
    config.r = 3;  // n*r odd
    CHECK_THROWS_AS(vns(config), InvalidConfig);
    config.r = 6;  // r >= n
    CHECK_THROWS_AS(vns(config), InvalidConfig);
    config = {};
    config.n = 8;
    config.r = 4;
    config.k_max = 0;
    CHECK_THROWS_AS(vns(config), InvalidConfig);
    config.k_max = 5;
    CHECK_THROWS_AS(vns(config, oracles::cycle_graph(8)), InvalidConfig);  // not 4-regular
}

TEST_CASE("deterministic stagnation-bounded runs are reproducible") {
    SearchConfig config;
    config.n = 10;
    config.r = 4;
    config.objective = ObjectiveKind::F3Minimize;
    config.k_max = 4;
    config.seed = 11;
    config.stagnation_limit = 8;
    config.log_events = true;
    const SearchReport a = vns(config);
    const SearchReport b = vns(config);
    CHECK(a.best_graph == b.best_graph);
    CHECK(a.best_value.value == b.best_value.value);
    CHECK(a.iterations == b.iterations);
    CHECK(a.shakes == b.shakes);
    CHECK(a.k_final == b.k_final);
    CHECK(a.events.size() == b.events.size());
    CHECK(a.stop_reason == StopReason::Stagnation);
    // no regular TD graph this small exists, so the run must exhaust itself
    CHECK_FALSE(a.is_td);
    CHECK(a.best_graph.regular_degree() == 4);
}

TEST_CASE("the event log honours the k protocol") {
    SearchConfig config;
    config.n = 12;
    config.r = 5;
    config.objective = ObjectiveKind::F2Minimize;
    config.k_max = 3;
    config.seed = 17;
    config.stagnation_limit = 10;
    config.log_events = true;
    const SearchReport rep = vns(config);
    REQUIRE(!rep.events.empty());
    CHECK(validate_vns_log(rep.events, config.k_max) == std::nullopt);
    CHECK(rep.shakes + 1 == static_cast<long long>(rep.events.size()));
}

TEST_CASE("the log validator flags protocol violations") {
    std::vector<VnsEvent> log;
    log.push_back({0, 3, 5.0, true, 1, true, false});
    log.push_back({1, 2, 4.0, true, 1, true, false});
    log.push_back({1, 0, 4.0, false, 2, true, false});
    log.push_back({2, 0, 4.0, false, 3, true, false});
    log.push_back({3, 0, 4.0, false, 3, true, false});  // capped at k_max
    CHECK(validate_vns_log(log, 3) == std::nullopt);

    auto bad = log;
    bad[2].k_next = 3;  // skipped a strength
    CHECK(validate_vns_log(bad, 3).has_value());
    bad = log;
    bad[1].k_next = 2;  // no reset on improvement
    CHECK(validate_vns_log(bad, 3).has_value());
    bad = log;
    bad[3].regular = false;
    CHECK(validate_vns_log(bad, 3).has_value());
    bad = log;
    bad[4].k_used = 2;  // does not continue from k_next
    CHECK(validate_vns_log(bad, 3).has_value());
    CHECK(validate_vns_log({}, 3).has_value());
}

TEST_CASE("time limit stops an endless search") {
    SearchConfig config;
    config.n = 12;
    config.r = 4;
    config.objective = ObjectiveKind::F2Minimize;
    config.seed = 3;
    config.time_limit_seconds = 0.3;
    const SearchReport rep = vns(config);
    CHECK_FALSE(rep.is_td);
    CHECK(rep.stop_reason == StopReason::TimeLimit);
    CHECK(rep.elapsed_seconds < 5.0);
    CHECK(rep.best_graph.regular_degree() == 4);
}

TEST_CASE("one worker makes parallel_search equal to vns") {
    SearchConfig config;
    config.n = 10;
    config.r = 4;
    config.objective = ObjectiveKind::F2Minimize;
    config.k_max = 3;
    config.seed = 31;
    config.stagnation_limit = 6;
    const SearchReport a = parallel_search(config);
    const SearchReport b = vns(config);
    CHECK(a.best_graph == b.best_graph);
    CHECK(a.best_value.value == b.best_value.value);
    CHECK(a.shakes == b.shakes);
    CHECK(a.iterations == b.iterations);
    CHECK(a.worker_id == b.worker_id);
}

TEST_CASE("parallel search with several workers finds the fixture again") {
    const Fixture fx = load_fixture(1);
    Rng rng(402);
    const Graph start = apply(fx.graph, random_switching(fx.graph, rng));
    SearchConfig config;
    config.n = 21;
    config.r = 10;
    config.objective = ObjectiveKind::F3Minimize;
    config.seed = 7;
    config.workers = 2;
    config.time_limit_seconds = 60.0;
    const SearchReport rep = parallel_search(config, start);
    CHECK(rep.is_td);
    CHECK(rep.best_graph.regular_degree() == 10);
    CHECK(rep.worker_id >= 0);
    CHECK(rep.worker_id < 2);
    const TriangleProfile p = triangle_degrees(rep.best_graph);
    CHECK(f2(p) == 0);
    CHECK(f1(p) == 21);
    CHECK(f3(p) < 21.0);
}
