#include "tds/fixtures.hpp"

namespace tds {

namespace {

struct FixtureData {
    int id;
    int n;
    int r;
    const char* text;
};

const FixtureData kFixtures[] = {
    {1, 21, 10,
     R"adj(# regular triangle-distinct graph 1 (n=21, r=10), with triangle degrees
 1:  2  3  4  8 11 13 14 16 19 21 | 10
 2:  1  5  6  7  9 10 15 17 18 20 | 11
 3:  1  5  6  7  9 10 12 15 19 20 | 12
 4:  1  5  6  7  9 10 12 15 18 21 | 13
 5:  2  3  4 11 13 14 15 16 19 21 | 14
 6:  2  3  4 11 13 14 16 17 19 20 | 15
 7:  2  3  4  8 11 13 14 17 19 20 | 16
 8:  1  7  9 10 15 16 17 18 20 21 | 17
 9:  2  3  4  8 11 12 13 16 18 21 | 18
10:  2  3  4  8 13 14 17 18 19 20 | 19
11:  1  5  6  7  9 12 15 16 18 21 | 20
12:  3  4  9 11 14 15 16 17 18 21 | 21
13:  1  5  6  7  9 10 14 17 19 20 | 22
14:  1  5  6  7 10 12 13 17 19 20 | 23
15:  2  3  4  5  8 11 12 16 18 21 | 24
16:  1  5  6  8  9 11 12 15 18 21 | 25
17:  2  6  7  8 10 12 13 14 19 20 | 26
18:  2  4  8  9 10 11 12 15 16 21 | 27
19:  1  3  5  6  7 10 13 14 17 20 | 28
20:  2  3  6  7  8 10 13 14 17 19 | 29
21:  1  4  5  8  9 11 12 15 16 18 | 30)adj"},
    {2, 21, 10,
     R"adj(# regular triangle-distinct graph 2 (n=21, r=10), with triangle degrees
 1:  2  3  5  8 10 11 16 17 18 21 | 12
 2:  1  4  6  7  9 12 14 15 19 20 | 13
 3:  1  4  6  7  9 12 13 19 20 21 | 14
 4:  2  3  5  8 10 11 15 16 20 21 | 15
 5:  1  4  6  7  9 12 15 17 18 19 | 16
 6:  2  3  5  8 10 11 14 17 18 19 | 17
 7:  2  3  5  8 10 11 13 16 20 21 | 18
 8:  1  4  6  7  9 12 13 16 20 21 | 19
 9:  2  3  5  8 10 13 14 16 20 21 | 20
10:  1  4  6  7  9 13 16 18 20 21 | 21
11:  1  4  6  7 12 14 15 17 18 19 | 22
12:  2  3  5  8 11 14 15 17 18 19 | 23
13:  3  7  8  9 10 15 16 17 20 21 | 24
14:  2  6  9 11 12 15 16 17 18 19 | 25
15:  2  4  5 11 12 13 14 17 18 19 | 26
16:  1  4  7  8  9 10 13 14 20 21 | 27
17:  1  5  6 11 12 13 14 15 18 19 | 28
18:  1  5  6 10 11 12 14 15 17 19 | 29
19:  2  3  5  6 11 12 14 15 17 18 | 30
20:  2  3  4  7  8  9 10 13 16 21 | 31
21:  1  3  4  7  8  9 10 13 16 20 | 32)adj"},
    {3, 21, 10,
     R"adj(# regular triangle-distinct graph 3 (n=21, r=10), with triangle degrees
 1:  2  3  4  7  9 12 13 14 20 21 | 11
 2:  1  5  6  8 10 11 16 17 18 21 | 12
 3:  1  5  6  8 10 11 15 17 18 21 | 13
 4:  1  5  6  8 10 11 16 18 19 20 | 14
 5:  2  3  4  7  9 12 14 15 19 20 | 15
 6:  2  3  4  9 12 13 14 16 19 20 | 16
 7:  1  5  8 11 13 15 16 17 18 21 | 17
 8:  2  3  4  7 13 14 15 16 19 20 | 18
 9:  1  5  6 10 11 13 17 18 19 21 | 19
10:  2  3  4  9 12 13 15 17 18 21 | 20
11:  2  3  4  7  9 13 14 17 18 21 | 21
12:  1  5  6 10 14 15 16 17 19 20 | 22
13:  1  6  7  8  9 10 11 17 18 21 | 23
14:  1  5  6  8 11 12 15 16 19 20 | 24
15:  3  5  7  8 10 12 14 16 19 20 | 25
16:  2  4  6  7  8 12 14 15 19 20 | 26
17:  2  3  7  9 10 11 12 13 18 21 | 27
18:  2  3  4  7  9 10 11 13 17 21 | 28
19:  4  5  6  8  9 12 14 15 16 20 | 29
20:  1  4  5  6  8 12 14 15 16 19 | 30
21:  1  2  3  7  9 10 11 13 17 18 | 31)adj"},
    {4, 21, 10,
     R"adj(# regular triangle-distinct graph 4 (n=21, r=10), with triangle degrees
 1:  2  3  6  8  9 11 12 13 18 21 | 9
 2:  1  4  5  7 10 14 15 16 19 20 | 10
 3:  1  4  5  7 10 14 15 16 20 21 | 11
 4:  2  3  6  9 11 12 13 17 18 21 | 13
 5:  2  3  6  8  9 11 12 18 19 20 | 14
 6:  1  4  5  7 10 13 14 15 19 20 | 15
 7:  2  3  6 11 12 13 16 17 18 21 | 16
 8:  1  5 10 12 14 15 16 17 19 20 | 17
 9:  1  4  5 10 15 16 17 18 19 21 | 18
10:  2  3  6  8  9 11 16 17 18 21 | 19
11:  1  4  5  7 10 14 16 17 18 21 | 20
12:  1  4  5  7  8 13 14 15 19 20 | 21
13:  1  4  6  7 12 14 15 17 19 20 | 22
14:  2  3  6  8 11 12 13 15 19 20 | 23
15:  2  3  6  8  9 12 13 14 19 20 | 24
16:  2  3  7  8  9 10 11 17 18 21 | 25
17:  4  7  8  9 10 11 13 16 18 21 | 26
18:  1  4  5  7  9 10 11 16 17 21 | 27
19:  2  5  6  8  9 12 13 14 15 20 | 28
20:  2  3  5  6  8 12 13 14 15 19 | 29
21:  1  3  4  7  9 10 11 16 17 18 | 30)adj"},
    {5, 22, 10,
     R"adj(# regular triangle-distinct graph 5 (n=22, r=10), with triangle degrees
 1:  4  5  6  7  9 10 11 14 18 22 | 9
 2:  4  5  6  7  9 10 11 14 18 21 | 10
 3:  4  5  6  7  9 10 11 14 16 19 | 11
 4:  1  2  3  8 12 15 16 17 19 21 | 12
 5:  1  2  3  8 12 16 17 19 20 21 | 13
 6:  1  2  3  8 12 13 15 16 20 22 | 14
 7:  1  2  3  8 12 13 15 18 20 22 | 15
 8:  4  5  6  7  9 10 17 20 21 22 | 16
 9:  1  2  3  8 15 16 17 18 20 22 | 17
10:  1  2  3  8 12 13 14 17 19 21 | 18
11:  1  2  3 12 13 14 17 18 19 21 | 19
12:  4  5  6  7 10 11 14 17 19 21 | 20
13:  6  7 10 11 15 16 18 19 20 22 | 21
14:  1  2  3 10 11 12 15 17 19 21 | 22
15:  4  6  7  9 13 14 16 18 20 22 | 23
16:  3  4  5  6  9 13 15 18 20 22 | 24
17:  4  5  8  9 10 11 12 14 19 21 | 25
18:  1  2  7  9 11 13 15 16 20 22 | 26
19:  3  4  5 10 11 12 13 14 17 21 | 27
20:  5  6  7  8  9 13 15 16 18 22 | 28
21:  2  4  5  8 10 11 12 14 17 19 | 29
22:  1  6  7  8  9 13 15 16 18 20 | 30)adj"},
    {6, 23, 10,
     R"adj(# regular triangle-distinct graph 6 (n=23, r=10), with triangle degrees
 1:  3  4  5  9 10 11 12 16 18 23 | 7
 2:  3  4  5  9 10 11 12 18 19 21 | 9
 3:  1  2  6  7  8 13 14 15 21 22 | 10
 4:  1  2  6  7  8 13 15 20 21 22 | 11
 5:  1  2  6  8 13 14 15 19 20 23 | 12
 6:  3  4  5  9 10 11 12 18 21 22 | 13
 7:  3  4  9 10 11 12 13 16 18 22 | 14
 8:  3  4  5 11 12 16 18 19 21 22 | 15
 9:  1  2  6  7 14 15 17 19 20 23 | 16
10:  1  2  6  7 14 15 16 17 20 23 | 17
11:  1  2  6  7  8 13 14 18 21 22 | 18
12:  1  2  6  7  8 13 17 18 21 22 | 19
13:  3  4  5  7 11 12 17 18 21 22 | 20
14:  3  5  9 10 11 16 17 19 20 23 | 21
15:  3  4  5  9 10 16 17 19 20 23 | 22
16:  1  7  8 10 14 15 17 19 20 23 | 23
17:  9 10 12 13 14 15 16 19 20 23 | 25
18:  1  2  6  7  8 11 12 13 21 22 | 26
19:  2  5  8  9 14 15 16 17 20 23 | 27
20:  4  5  9 10 14 15 16 17 19 23 | 29
21:  2  3  4  6  8 11 12 13 18 22 | 30
22:  3  4  6  7  8 11 12 13 18 21 | 31
23:  1  5  9 10 14 15 16 17 19 20 | 32)adj"},
    {7, 24, 11,
     R"adj(# regular triangle-distinct graph 7 (n=24, r=11), with triangle degrees
 1:  2  3  8  9 11 12 13 15 17 20 21 | 13
 2:  1  4  5  6  7 10 16 18 19 21 22 | 14
 3:  1  4  5  6  7 10 16 18 22 23 24 | 15
 4:  2  3  8  9 10 11 12 13 20 22 23 | 16
 5:  2  3  9 10 11 12 13 17 20 21 24 | 17
 6:  2  3  8  9 11 13 14 15 20 23 24 | 18
 7:  2  3  8  9 12 13 15 20 21 23 24 | 19
 8:  1  4  6  7 10 15 16 17 18 19 22 | 20
 9:  1  4  5  6  7 12 16 17 18 19 22 | 21
10:  2  3  4  5  8 14 17 19 21 23 24 | 22
11:  1  4  5  6 12 14 16 17 18 19 22 | 23
12:  1  4  5  7  9 11 14 16 18 19 22 | 24
13:  1  4  5  6  7 14 16 20 21 23 24 | 25
14:  6 10 11 12 13 15 18 20 21 23 24 | 26
15:  1  6  7  8 14 17 19 20 21 23 24 | 27
16:  2  3  8  9 11 12 13 17 18 19 22 | 28
17:  1  5  8  9 10 11 15 16 18 19 22 | 29
18:  2  3  8  9 11 12 14 16 17 19 22 | 30
19:  2  8  9 10 11 12 15 16 17 18 22 | 31
20:  1  4  5  6  7 13 14 15 21 23 24 | 32
21:  1  2  5  7 10 13 14 15 20 23 24 | 33
22:  2  3  4  8  9 11 12 16 17 18 19 | 34
23:  3  4  6  7 10 13 14 15 20 21 24 | 35
24:  3  5  6  7 10 13 14 15 20 21 23 | 36)adj"},
    {8, 24, 11,
     R"adj(# regular triangle-distinct graph 8 (n=24, r=11), with triangle degrees
 1:  2  4  5  9 11 12 14 17 18 21 23 | 12
 2:  1  3  6  7  8 10 13 15 16 20 23 | 13
 3:  2  4  5  9 11 12 17 18 21 23 24 | 14
 4:  1  3  6  7  8 10 15 16 19 22 24 | 15
 5:  1  3  6  7  8 10 13 14 16 22 24 | 16
 6:  2  4  5  9 12 14 17 18 19 21 23 | 17
 7:  2  4  5  9 11 12 14 15 18 19 20 | 18
 8:  2  4  5  9 11 12 13 14 17 22 24 | 19
 9:  1  3  6  7  8 13 15 16 17 22 24 | 20
10:  2  4  5 11 16 17 18 20 21 22 24 | 21
11:  1  3  7  8 10 15 16 17 19 22 24 | 22
12:  1  3  6  7  8 16 18 19 20 21 23 | 23
13:  2  5  8  9 14 18 19 20 21 22 23 | 24
14:  1  5  6  7  8 13 15 19 20 21 23 | 25
15:  2  4  7  9 11 14 16 17 20 22 24 | 26
16:  2  4  5  9 10 11 12 15 17 22 24 | 27
17:  1  3  6  8  9 10 11 15 16 22 24 | 28
18:  1  3  6  7 10 12 13 19 20 21 23 | 29
19:  4  6  7 11 12 13 14 18 20 21 23 | 30
20:  2  7 10 12 13 14 15 18 19 21 23 | 31
21:  1  3  6 10 12 13 14 18 19 20 23 | 32
22:  4  5  8  9 10 11 13 15 16 17 24 | 34
23:  1  2  3  6 12 13 14 18 19 20 21 | 35
24:  3  4  5  8  9 10 11 15 16 17 22 | 36)adj"},
    {9, 25, 12,
     R"adj(# regular triangle-distinct graph 9 (n=25, r=12), with triangle degrees
 1:  2  3  4 10 11 12 14 16 17 18 21 24 | 18
 2:  1  5  6  7  8  9 13 15 20 22 23 24 | 19
 3:  1  5  6  7  8  9 13 17 19 20 22 25 | 20
 4:  1  5  6  7  8  9 13 17 19 22 24 25 | 21
 5:  2  3  4 10 11 12 14 16 17 19 23 25 | 22
 6:  2  3  4 10 11 12 14 16 18 19 22 25 | 23
 7:  2  3  4 10 11 14 16 18 20 21 23 24 | 24
 8:  2  3  4 10 11 12 14 16 17 18 22 25 | 25
 9:  2  3  4 11 12 14 15 18 19 21 23 24 | 26
10:  1  5  6  7  8 11 13 15 16 20 22 25 | 27
11:  1  5  6  7  8  9 10 13 14 15 22 25 | 28
12:  1  5  6  8  9 13 14 17 21 22 23 25 | 29
13:  2  3  4 10 11 12 14 15 17 20 22 25 | 31
14:  1  5  6  7  8  9 11 12 13 17 22 25 | 32
15:  2  9 10 11 13 17 18 19 20 21 23 24 | 33
16:  1  5  6  7  8 10 18 19 20 21 23 24 | 34
17:  1  3  4  5  8 12 13 14 15 21 22 25 | 35
18:  1  6  7  8  9 15 16 19 20 21 23 24 | 36
19:  3  4  5  6  9 15 16 18 20 21 23 24 | 37
20:  2  3  7 10 13 15 16 18 19 21 23 24 | 38
21:  1  7  9 12 15 16 17 18 19 20 23 24 | 39
22:  2  3  4  6  8 10 11 12 13 14 17 25 | 40
23:  2  5  7  9 12 15 16 18 19 20 21 24 | 41
24:  1  2  4  7  9 15 16 18 19 20 21 23 | 43
25:  3  4  5  6  8 10 11 12 13 14 17 22 | 44)adj"},
    {10, 26, 12,
     R"adj(# regular triangle-distinct graph 10 (n=26, r=12), with triangle degrees
 1:  2  3  4  7  9 12 13 14 15 19 23 25 | 13
 2:  1  5  6  8 10 11 16 17 18 20 21 22 | 14
 3:  1  5  6  8 10 11 17 18 20 21 24 26 | 16
 4:  1  5  6  8 10 11 16 17 18 20 22 26 | 17
 5:  2  3  4  7  9 12 13 14 19 23 24 25 | 18
 6:  2  3  4  7  9 12 13 14 19 21 24 25 | 19
 7:  1  5  6  8 10 15 16 17 21 22 24 26 | 20
 8:  2  3  4  7  9 12 14 15 18 23 25 26 | 21
 9:  1  5  6  8 11 18 20 22 23 24 25 26 | 22
10:  2  3  4  7 12 13 15 19 20 21 22 23 | 23
11:  2  3  4  9 13 14 15 16 17 19 24 26 | 24
12:  1  5  6  8 10 16 18 20 21 23 24 25 | 25
13:  1  5  6 10 11 14 17 18 19 22 23 25 | 26
14:  1  5  6  8 11 13 15 17 18 20 22 26 | 27
15:  1  7  8 10 11 14 16 18 20 21 22 26 | 28
16:  2  4  7 11 12 15 17 19 21 23 24 25 | 29
17:  2  3  4  7 11 13 14 16 19 20 22 26 | 30
18:  2  3  4  8  9 12 13 14 15 20 22 26 | 31
19:  1  5  6 10 11 13 16 17 21 23 24 25 | 32
20:  2  3  4  9 10 12 14 15 17 18 22 26 | 33
21:  2  3  6  7 10 12 15 16 19 23 24 25 | 34
22:  2  4  7  9 10 13 14 15 17 18 20 26 | 35
23:  1  5  8  9 10 12 13 16 19 21 24 25 | 36
24:  3  5  6  7  9 11 12 16 19 21 23 25 | 37
25:  1  5  6  8  9 12 13 16 19 21 23 24 | 38
26:  3  4  7  8  9 11 14 15 17 18 20 22 | 39)adj"},
    {11, 27, 12,
     R"adj(# regular triangle-distinct graph 11 (n=27, r=12), with triangle degrees
 1:  3  4  5  6  7 12 14 15 17 20 21 24 | 14
 2:  3  4  5  6  7 12 14 15 17 21 24 25 | 15
 3:  1  2  8  9 10 11 13 16 18 19 26 27 | 17
 4:  1  2  8 10 13 16 18 19 21 22 23 27 | 19
 5:  1  2  9 10 11 16 18 19 20 22 23 26 | 20
 6:  1  2  8  9 10 13 17 18 19 22 26 27 | 21
 7:  1  2  9 10 11 13 16 19 20 23 24 25 | 22
 8:  3  4  6 12 14 15 18 20 24 25 26 27 | 24
 9:  3  5  6  7 12 14 15 21 22 23 24 25 | 25
10:  3  4  5  6  7 12 15 18 22 23 24 25 | 26
11:  3  5  7 12 15 16 17 20 21 22 23 25 | 27
12:  1  2  8  9 10 11 17 18 21 22 24 25 | 28
13:  3  4  6  7 14 15 16 17 19 21 26 27 | 29
14:  1  2  8  9 13 16 17 18 19 20 26 27 | 30
15:  1  2  8  9 10 11 13 21 22 23 24 25 | 31
16:  3  4  5  7 11 13 14 17 20 23 26 27 | 32
17:  1  2  6 11 12 13 14 16 19 20 26 27 | 33
18:  3  4  5  6  8 10 12 14 19 20 26 27 | 34
19:  3  4  5  6  7 13 14 17 18 20 26 27 | 35
20:  1  5  7  8 11 14 16 17 18 19 26 27 | 36
21:  1  2  4  9 11 12 13 15 22 23 24 25 | 37
22:  4  5  6  9 10 11 12 15 21 23 24 25 | 38
23:  4  5  7  9 10 11 15 16 21 22 24 25 | 39
24:  1  2  7  8  9 10 12 15 21 22 23 25 | 40
25:  2  7  8  9 10 11 12 15 21 22 23 24 | 42
26:  3  5  6  8 13 14 16 17 18 19 20 27 | 43
27:  3  4  6  8 13 14 16 17 18 19 20 26 | 44)adj"},
};

constexpr int kFixtureCount = static_cast<int>(sizeof(kFixtures) / sizeof(kFixtures[0]));

}  // namespace

int fixture_count() { return kFixtureCount; }

Fixture load_fixture(int id) {
    if (id < 1 || id > kFixtureCount)
        throw UnknownFixture("fixture id must be in 1.." + std::to_string(kFixtureCount) +
                             ", got " + std::to_string(id));
    const FixtureData& data = kFixtures[id - 1];
    ParsedAdjacencyList parsed = parse_adjacency_list(data.text);
    Fixture fx;
    fx.id = data.id;
    fx.n = data.n;
    fx.r = data.r;
    fx.graph = std::move(parsed.graph);
    fx.published_t.reserve(parsed.t_column.size());
    for (const auto& t : parsed.t_column) fx.published_t.push_back(t.value());
    fx.adjlist_text = data.text;
    return fx;
}

}  // namespace tds
