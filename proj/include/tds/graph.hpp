#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tds/bitset.hpp"

namespace tds {

// Simple undirected graph on vertices 0..n-1, stored as one bitset row of
// neighbours per vertex. Rows stay symmetric and irreflexive; mutation is
// meant only for construction and for edge switchings on a working copy.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) > 0 ? n : 0) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("graph order out of range [0, " +
                                        std::to_string(kMaxVertices) + "]");
    }

    int order() const { return n_; }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }

    void add_edge(int u, int v) {
        adj_[u].set(v);
        adj_[v].set(u);
    }

    void remove_edge(int u, int v) {
        adj_[u].reset(v);
        adj_[v].reset(u);
    }

    const VertexSet& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    // r if every vertex has degree r, otherwise nullopt.
    std::optional<int> regular_degree() const {
        if (n_ == 0) return 0;
        int r = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != r) return std::nullopt;
        return r;
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (v > u) out.emplace_back(u, v);
            });
        return out;
    }

    Graph complement() const {
        Graph c(n_);
        const VertexSet mask = VertexSet::all_below(n_);
        for (int v = 0; v < n_; ++v) {
            for (int i = 0; i < VertexSet::kWords; ++i)
                c.adj_[v].words[i] = ~adj_[v].words[i] & mask.words[i];
            c.adj_[v].reset(v);
        }
        return c;
    }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Per-vertex triangle degrees: t[v] = number of triangles containing v.
struct TriangleProfile {
    std::vector<int> t;

    int order() const { return static_cast<int>(t.size()); }

    std::vector<int> sorted_desc() const;

    long long sum() const {
        long long s = 0;
        for (int x : t) s += x;
        return s;
    }

    bool operator==(const TriangleProfile&) const = default;
};

// t[v] = (1/2) * sum over neighbours u of |N(v) ∩ N(u)|, which equals half
// the v-th diagonal entry of A^3.
TriangleProfile triangle_degrees(const Graph& g);

// Inputs are inconsistent with any r-regular graph (the identity below does
// not produce an integer).
struct NonIntegerResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Triangle degree of a vertex in the complement of an r-regular graph of
// order n whose triangle degree is t:  C(n-1,2) - (3/2) r (n-r-1) - t.
long long complement_triangle_degree(int n, int r, long long t);

}  // namespace tds
