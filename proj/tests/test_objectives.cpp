#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tds/objectives.hpp"
#include "tds/rng.hpp"

using namespace tds;

namespace {
TriangleProfile profile(std::vector<int> t) { return TriangleProfile{std::move(t)}; }
}

TEST_CASE("f1 counts distinct values") {
    CHECK(f1(profile({3, 3, 3, 3})) == 1);
    CHECK(f1(profile({0, 0, 1})) == 2);
    CHECK(f1(profile({5, 1, 9})) == 3);
}

TEST_CASE("f2 counts equal pairs") {
    CHECK(f2(profile({3, 3, 3, 3})) == 6);
    CHECK(f2(profile({5, 5, 5, 7, 7})) == 4);
    CHECK(f2(profile({1, 2, 3})) == 0);
}

TEST_CASE("f2 agrees with the pairwise loop on random profiles") {
    Rng rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> t(2 + rng.below(30));
        for (auto& x : t) x = static_cast<int>(rng.below(12));
        CHECK(f2(profile(t)) == oracles::equal_pairs(t));
    }
}

TEST_CASE("f1 class-size bookkeeping") {
    Rng rng(37);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> t(2 + rng.below(30));
        for (auto& x : t) x = static_cast<int>(rng.below(10));
        std::vector<int> sorted = t;
        std::sort(sorted.begin(), sorted.end());
        int collapsed = 0;  // sum over classes of (size - 1)
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1]) ++collapsed;
        CHECK(f1(profile(t)) == static_cast<int>(t.size()) - collapsed);
    }
}

TEST_CASE("f3 on the all-equal profile is n per summand") {
    // every gap 0, each summand 1/(1/4) = 4; exact in binary floating point
    CHECK(f3(profile({3, 3, 3, 3})) == 12.0);
}

TEST_CASE("f3 on a run of consecutive values") {
    std::vector<int> t(21);
    for (int i = 0; i < 21; ++i) t[i] = 10 + i;
    CHECK(f3(profile(t)) == doctest::Approx(420.0 / 22.0).epsilon(1e-12));
}

TEST_CASE("f3 is permutation invariant and needs n >= 2") {
    CHECK(f3(profile({1, 5, 9})) == f3(profile({9, 1, 5})));
    CHECK_THROWS_AS(f3(profile({1})), std::invalid_argument);
}

TEST_CASE("f3 threshold separates ties from no ties") {
    Rng rng(41);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(27));
        std::vector<int> t(n);
        for (auto& x : t) x = static_cast<int>(rng.below(2 * n));
        const TriangleProfile p = profile(t);
        const bool ties = !is_triangle_distinct(p);
        if (ties)
            CHECK(f3(p) > n);
        else
            CHECK(f3(p) < n);
    }
}

TEST_CASE("distinctness, f1 = n and f2 = 0 coincide; values stay in range") {
    Rng rng(43);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(29));
        std::vector<int> t(n);
        for (auto& x : t) x = static_cast<int>(rng.below(3 * n));
        const TriangleProfile p = profile(t);
        const bool td = is_triangle_distinct(p);
        CHECK(td == (f2(p) == 0));
        CHECK(td == (f1(p) == n));
        CHECK(f1(p) >= 1);
        CHECK(f1(p) <= n);
        CHECK(f2(p) >= 0);
        CHECK(f2(p) <= n * (n - 1) / 2);
        CHECK(f3(p) > 0.0);
    }
}

TEST_CASE("necessary condition C(r,2) >= n-1") {
    CHECK(check_necessary_condition(21, 10));
    CHECK_FALSE(check_necessary_condition(21, 5));
    CHECK(check_necessary_condition(7, 4));  // boundary: 6 >= 6
    CHECK_FALSE(check_necessary_condition(8, 4));
}

TEST_CASE("improvement directions") {
    CHECK(is_improvement(ObjectiveKind::F1Maximize, 5, 4));
    CHECK_FALSE(is_improvement(ObjectiveKind::F1Maximize, 4, 4));
    CHECK(is_improvement(ObjectiveKind::F2Minimize, 3, 4));
    CHECK_FALSE(is_improvement(ObjectiveKind::F2Minimize, 4, 4));
    CHECK(is_improvement(ObjectiveKind::F3Minimize, 1.0, 1.1));
    CHECK_FALSE(is_improvement(ObjectiveKind::F3Minimize, 1.0, 1.0 + 1e-12));
}

TEST_CASE("objective names") {
    CHECK(objective_from_name("f2") == ObjectiveKind::F2Minimize);
    CHECK_FALSE(objective_from_name("f4").has_value());
    CHECK(objective_name(ObjectiveKind::F3Minimize) == "f3");
}
