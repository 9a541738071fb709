#include "tds/graph6.hpp"

namespace tds {

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n >= 63) throw MalformedGraph6("graph6 short form requires n < 63");
    std::string out;
    out.reserve(1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
    out.push_back(static_cast<char>(63 + n));
    unsigned chunk = 0;
    int bit = 5;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) chunk |= 1u << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(63 + chunk));
    return out;
}

Graph decode_graph6(std::string_view line) {
    if (line.empty()) throw MalformedGraph6("empty graph6 line");
    for (unsigned char c : line)
        if (c < 63 || c > 126)
            throw MalformedGraph6("graph6 byte outside 63..126");
    if (line[0] == 126) throw MalformedGraph6("long-form graph6 header not supported");
    const int n = line[0] - 63;
    const std::size_t expect =
        1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (line.size() != expect)
        throw MalformedGraph6("graph6 line has wrong length for n=" + std::to_string(n));
    Graph g(n);
    std::size_t idx = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++idx) {
            const unsigned chunk = static_cast<unsigned char>(line[1 + idx / 6]) - 63;
            if ((chunk >> (5 - idx % 6)) & 1u) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace tds
