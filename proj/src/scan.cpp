#include "tds/scan.hpp"

#include <future>
#include <istream>
#include <ostream>

#include "tds/graph6.hpp"
#include "tds/objectives.hpp"

namespace tds {

namespace {

struct ShardResult {
    CensusCounts counts;
    std::vector<std::size_t> kept;  // batch indices of TD graphs
    std::optional<std::pair<long long, std::string>> error;  // first malformed line
};

ShardResult scan_shard(const std::vector<std::string>& batch,
                       const std::vector<long long>& line_nos, std::size_t begin,
                       std::size_t end, const ScanOptions& options) {
    ShardResult out;
    for (std::size_t i = begin; i < end; ++i) {
        Graph g;
        try {
            g = decode_graph6(batch[i]);
        } catch (const MalformedGraph6& e) {
            if (options.strict) {
                if (!out.error) out.error = {line_nos[i], e.what()};
                return out;
            }
            ++out.counts.skipped;
            continue;
        }
        const bool td = is_triangle_distinct(triangle_degrees(g));
        const bool regular = g.regular_degree().has_value();
        ++out.counts.total;
        OrderCounts& oc = out.counts.by_order[g.order()];
        ++oc.total;
        if (td) {
            ++out.counts.td;
            ++oc.td;
            if (regular) {
                ++out.counts.regular_td;
                ++oc.regular_td;
            }
            if (options.filter_td) out.kept.push_back(i);
        }
    }
    return out;
}

}  // namespace

void CensusCounts::merge(const CensusCounts& other) {
    total += other.total;
    td += other.td;
    regular_td += other.regular_td;
    skipped += other.skipped;
    for (const auto& [order, oc] : other.by_order) {
        OrderCounts& mine = by_order[order];
        mine.total += oc.total;
        mine.td += oc.td;
        mine.regular_td += oc.regular_td;
    }
}

CensusCounts scan_stream(std::istream& in, const ScanOptions& options,
                         std::ostream* filtered) {
    const int threads = options.threads > 1 ? options.threads : 1;
    const std::size_t batch_cap = 8192 * static_cast<std::size_t>(threads);

    CensusCounts totals;
    std::vector<std::string> batch;
    std::vector<long long> line_nos;
    batch.reserve(batch_cap);
    line_nos.reserve(batch_cap);

    auto flush = [&] {
        if (batch.empty()) return;
        std::vector<ShardResult> results;
        if (threads == 1) {
            results.push_back(scan_shard(batch, line_nos, 0, batch.size(), options));
        } else {
            const std::size_t per = (batch.size() + threads - 1) / threads;
            std::vector<std::future<ShardResult>> futures;
            for (int t = 0; t < threads; ++t) {
                const std::size_t lo = std::min(per * t, batch.size());
                const std::size_t hi = std::min(lo + per, batch.size());
                if (lo == hi) continue;
                futures.push_back(std::async(std::launch::async, scan_shard,
                                             std::cref(batch), std::cref(line_nos), lo,
                                             hi, std::cref(options)));
            }
            for (auto& f : futures) results.push_back(f.get());
        }
        std::optional<std::pair<long long, std::string>> first_error;
        for (const ShardResult& r : results)
            if (r.error && (!first_error || r.error->first < first_error->first))
                first_error = r.error;
        if (first_error) throw Graph6StreamError(first_error->first, first_error->second);
        for (ShardResult& r : results) {
            totals.merge(r.counts);
            if (filtered)
                for (std::size_t i : r.kept) *filtered << batch[i] << '\n';
        }
        batch.clear();
        line_nos.clear();
    };

    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        batch.push_back(line);
        line_nos.push_back(line_no);
        if (batch.size() >= batch_cap) flush();
    }
    flush();
    return totals;
}

VerificationReport verify_graph(const Graph& g, std::optional<int> claimed_r,
                                const std::vector<std::optional<int>>* claimed_t) {
    VerificationReport rep;
    rep.n = g.order();
    rep.m = g.edge_count();
    rep.regular_r = g.regular_degree();
    rep.profile = triangle_degrees(g);
    rep.f1_value = f1(rep.profile);
    rep.f2_value = f2(rep.profile);
    rep.f3_value = rep.n >= 2 ? f3(rep.profile) : 0.0;
    rep.td = is_triangle_distinct(rep.profile);

    rep.claimed_r = claimed_r;
    if (claimed_r) rep.r_matches = rep.regular_r == claimed_r;
    if (claimed_t) {
        for (int v = 0; v < rep.n && v < static_cast<int>(claimed_t->size()); ++v) {
            if (!(*claimed_t)[v]) continue;
            rep.has_claimed_t = true;
            if (*(*claimed_t)[v] != rep.profile.t[v]) rep.t_mismatches.push_back(v);
        }
    }
    return rep;
}

}  // namespace tds
