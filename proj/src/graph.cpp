#include "tds/graph.hpp"

#include <algorithm>
#include <cassert>

namespace tds {

std::vector<int> TriangleProfile::sorted_desc() const {
    std::vector<int> s = t;
    std::sort(s.begin(), s.end(), std::greater<int>());
    return s;
}

TriangleProfile triangle_degrees(const Graph& g) {
    const int n = g.order();
    TriangleProfile p;
    p.t.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        const VertexSet& nv = g.neighbours(v);
        long long acc = 0;
        nv.for_each([&](int u) { acc += nv.intersection_count(g.neighbours(u)); });
        assert(acc % 2 == 0);
        p.t[v] = static_cast<int>(acc / 2);
    }
    return p;
}

long long complement_triangle_degree(int n, int r, long long t) {
    // Doubled to keep the arithmetic in integers; an odd value means the
    // (n, r, t) triple cannot come from a regular graph.
    const long long twice =
        static_cast<long long>(n - 1) * (n - 2) - 3LL * r * (n - r - 1) - 2 * t;
    if (twice % 2 != 0)
        throw NonIntegerResult("complement triangle degree is not an integer for n=" +
                               std::to_string(n) + " r=" + std::to_string(r) +
                               " t=" + std::to_string(t));
    return twice / 2;
}

}  // namespace tds
