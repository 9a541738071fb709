#include "tds/generator.hpp"

#include <string>

#include "tds/moves.hpp"
#include "tds/rng.hpp"

namespace tds {

Graph circulant_regular(int n, int r) {
    if (n < 1 || n > kMaxVertices || r < 0 || r >= n ||
        (static_cast<long long>(n) * r) % 2 != 0)
        throw NoSuchRegularGraph("no " + std::to_string(r) + "-regular graph on " +
                                 std::to_string(n) + " vertices");
    Graph g(n);
    for (int d = 1; d <= r / 2; ++d)
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + d) % n);
    if (r % 2 == 1)
        for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
    return g;
}

Graph random_regular(const GeneratorParams& params) {
    Graph g = circulant_regular(params.n, params.r);
    const long long steps = params.mixing_steps >= 0
                                ? params.mixing_steps
                                : 10LL * params.n * params.r;
    Rng rng(params.seed);
    for (long long i = 0; i < steps; ++i) apply_in_place(g, random_switching(g, rng));
    return g;
}

}  // namespace tds
