#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tds/graph.hpp"

namespace tds {

struct OrderCounts {
    long long total = 0;
    long long td = 0;
    long long regular_td = 0;
};

struct CensusCounts {
    long long total = 0;
    long long td = 0;
    long long regular_td = 0;
    long long skipped = 0;  // malformed lines in non-strict mode
    std::map<int, OrderCounts> by_order;

    void merge(const CensusCounts& other);
};

struct ScanOptions {
    bool filter_td = false;
    bool strict = true;
    int threads = 1;
};

// Malformed graph6 line in a strict scan; carries the 1-based line number.
struct Graph6StreamError : std::runtime_error {
    Graph6StreamError(long long line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
    long long line;
};

// Counts every decodable graph6 line, classifying triangle-distinct and
// regular-and-TD graphs. Lines are processed in constant memory per batch;
// with filter_td the TD lines are echoed to `filtered` in input order.
CensusCounts scan_stream(std::istream& in, const ScanOptions& options = {},
                         std::ostream* filtered = nullptr);

struct VerificationReport {
    int n = 0;
    long long m = 0;
    std::optional<int> regular_r;
    TriangleProfile profile;
    int f1_value = 0;
    int f2_value = 0;
    double f3_value = 0.0;  // 0 when n < 2
    bool td = false;

    std::optional<int> claimed_r;
    bool r_matches = true;
    bool has_claimed_t = false;
    std::vector<int> t_mismatches;  // 0-based vertices whose claimed t differs

    bool all_claims_hold() const { return r_matches && t_mismatches.empty(); }
};

// Recomputes every invariant of interest and diffs any claims against them.
// claimed_t entries may be absent per vertex (only present claims are
// checked).
VerificationReport verify_graph(const Graph& g, std::optional<int> claimed_r = {},
                                const std::vector<std::optional<int>>* claimed_t = nullptr);

}  // namespace tds
