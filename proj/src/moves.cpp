#include "tds/moves.hpp"

#include <algorithm>
#include <string>

namespace tds {

namespace {

std::string describe(const Switching& sw) {
    return "(" + std::to_string(sw.u) + "," + std::to_string(sw.s) + "," +
           std::to_string(sw.v) + "," + std::to_string(sw.t) + ")";
}

void delete_edge_with_profile(Graph& g, TriangleProfile& p, int x, int y) {
    const VertexSet common = g.neighbours(x) & g.neighbours(y);
    const int c = common.count();
    p.t[x] -= c;
    p.t[y] -= c;
    common.for_each([&](int w) { --p.t[w]; });
    g.remove_edge(x, y);
}

void add_edge_with_profile(Graph& g, TriangleProfile& p, int x, int y) {
    const VertexSet common = g.neighbours(x) & g.neighbours(y);
    const int c = common.count();
    p.t[x] += c;
    p.t[y] += c;
    common.for_each([&](int w) { ++p.t[w]; });
    g.add_edge(x, y);
}

}  // namespace

Switching canonical_form(const Switching& sw) {
    const Switching reps[4] = {sw,
                               {sw.s, sw.u, sw.t, sw.v},
                               {sw.v, sw.t, sw.u, sw.s},
                               {sw.t, sw.v, sw.s, sw.u}};
    return *std::min_element(std::begin(reps), std::end(reps));
}

bool is_feasible(const Graph& g, const Switching& sw) {
    const int n = g.order();
    const int ids[4] = {sw.u, sw.s, sw.v, sw.t};
    for (int x : ids)
        if (x < 0 || x >= n) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (ids[i] == ids[j]) return false;
    return g.has_edge(sw.u, sw.s) && g.has_edge(sw.v, sw.t) &&
           !g.has_edge(sw.u, sw.t) && !g.has_edge(sw.v, sw.s);
}

void apply_in_place(Graph& g, const Switching& sw) {
    if (!is_feasible(g, sw))
        throw InfeasibleSwitching("switching " + describe(sw) + " is not feasible");
    g.remove_edge(sw.u, sw.s);
    g.remove_edge(sw.v, sw.t);
    g.add_edge(sw.u, sw.t);
    g.add_edge(sw.v, sw.s);
}

Graph apply(const Graph& g, const Switching& sw) {
    Graph out = g;
    apply_in_place(out, sw);
    return out;
}

std::vector<Switching> enumerate_feasible(const Graph& g) {
    const auto edges = g.edges();
    std::vector<Switching> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [a, b] = edges[i];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [c, d] = edges[j];
            if (c == a || c == b || d == a || d == b) continue;
            // Both tuples are already canonical: a < b, c < d, a < c.
            if (!g.has_edge(a, d) && !g.has_edge(c, b)) out.push_back({a, b, c, d});
            if (!g.has_edge(a, c) && !g.has_edge(d, b)) out.push_back({a, b, d, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Switching random_switching(const Graph& g, Rng& rng) {
    const auto edges = g.edges();
    const std::size_t m = edges.size();
    if (m >= 2) {
        const long long budget = 50LL * static_cast<long long>(m);
        for (long long attempt = 0; attempt < budget; ++attempt) {
            const std::size_t i = rng.below(m);
            const std::size_t j = rng.below(m);
            if (i == j) continue;
            const auto [a, b] = edges[i];
            const auto [c, d] = edges[j];
            const Switching sw =
                rng.below(2) == 0 ? Switching{a, b, c, d} : Switching{a, b, d, c};
            if (is_feasible(g, sw)) return canonical_form(sw);
        }
    }
    throw NoFeasibleSwitching("no feasible switching found after the retry budget");
}

void apply_with_profile_in_place(Graph& g, TriangleProfile& p, const Switching& sw) {
    if (!is_feasible(g, sw))
        throw InfeasibleSwitching("switching " + describe(sw) + " is not feasible");
    delete_edge_with_profile(g, p, sw.u, sw.s);
    delete_edge_with_profile(g, p, sw.v, sw.t);
    add_edge_with_profile(g, p, sw.u, sw.t);
    add_edge_with_profile(g, p, sw.v, sw.s);
}

std::pair<Graph, TriangleProfile> apply_with_profile(const Graph& g,
                                                     const TriangleProfile& p,
                                                     const Switching& sw) {
    Graph out_g = g;
    TriangleProfile out_p = p;
    apply_with_profile_in_place(out_g, out_p, sw);
    return {std::move(out_g), std::move(out_p)};
}

}  // namespace tds
