#pragma once

#include <stdexcept>
#include <string_view>
#include <vector>

#include "tds/adjlist.hpp"
#include "tds/graph.hpp"

namespace tds {

struct UnknownFixture : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One of the bundled regular triangle-distinct reference graphs, embedded
// as neighbour-list text with its triangle-degree column.
struct Fixture {
    int id = 0;
    int n = 0;
    int r = 0;
    Graph graph;
    std::vector<int> published_t;
    std::string_view adjlist_text;
};

int fixture_count();
Fixture load_fixture(int id);  // 1..fixture_count()

}  // namespace tds
