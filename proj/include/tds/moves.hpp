#pragma once

#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tds/graph.hpp"
#include "tds/rng.hpp"

namespace tds {

// One degree-preserving 2-edge swap: delete edges us and vt, add edges ut
// and vs. Feasible when u,s,v,t are pairwise distinct, us and vt are edges,
// and ut and vs are not.
struct Switching {
    int u = 0, s = 0, v = 0, t = 0;
    friend auto operator<=>(const Switching&, const Switching&) = default;
};

struct InfeasibleSwitching : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoFeasibleSwitching : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The inverse move: applying (u,t,v,s) after (u,s,v,t) restores the graph.
inline Switching inverse(const Switching& sw) { return {sw.u, sw.t, sw.v, sw.s}; }

// Four tuples describe the same move (swap u<->s with v<->t, and swap the
// two deleted edges); the canonical one puts the smallest vertex first.
Switching canonical_form(const Switching& sw);

bool is_feasible(const Graph& g, const Switching& sw);

void apply_in_place(Graph& g, const Switching& sw);
Graph apply(const Graph& g, const Switching& sw);

// Every feasible move exactly once, canonical, sorted lexicographically.
std::vector<Switching> enumerate_feasible(const Graph& g);

// Draw two distinct edges and one of the two reconnection pairings
// uniformly; reject infeasible draws. Gives up after 50*m attempts.
Switching random_switching(const Graph& g, Rng& rng);

// Switch and maintain the triangle profile incrementally: each of the four
// edge operations adjusts t on the two endpoints and their current common
// neighbours, against the live adjacency at that step.
void apply_with_profile_in_place(Graph& g, TriangleProfile& p, const Switching& sw);
std::pair<Graph, TriangleProfile> apply_with_profile(const Graph& g,
                                                     const TriangleProfile& p,
                                                     const Switching& sw);

}  // namespace tds
