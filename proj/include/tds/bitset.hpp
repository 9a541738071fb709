#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace tds {

#ifndef TDS_MAX_VERTICES
#define TDS_MAX_VERTICES 128
#endif

// Compile-time cap on the number of vertices a Graph can hold.
inline constexpr int kMaxVertices = TDS_MAX_VERTICES;

// Fixed-width set of vertex ids in [0, kMaxVertices).
struct VertexSet {
    static constexpr int kWords = (kMaxVertices + 63) / 64;

    std::array<std::uint64_t, kWords> words{};

    bool test(int v) const { return (words[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    bool empty() const {
        for (auto w : words)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : words) c += std::popcount(w);
        return c;
    }

    int intersection_count(const VertexSet& o) const {
        int c = 0;
        for (int i = 0; i < kWords; ++i) c += std::popcount(words[i] & o.words[i]);
        return c;
    }

    // Calls f(v) for every member, in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t w = words[i];
            while (w) {
                f((i << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    // All vertices strictly below n.
    static VertexSet all_below(int n) {
        VertexSet s;
        for (int i = 0; i < kWords; ++i) {
            int lo = i << 6;
            if (n >= lo + 64)
                s.words[i] = ~std::uint64_t{0};
            else if (n > lo)
                s.words[i] = (std::uint64_t{1} << (n - lo)) - 1;
        }
        return s;
    }

    friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.words[i] = a.words[i] & b.words[i];
        return r;
    }

    bool operator==(const VertexSet&) const = default;
};

}  // namespace tds
