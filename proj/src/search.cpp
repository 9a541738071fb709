#include "tds/search.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "tds/generator.hpp"
#include "tds/moves.hpp"

namespace tds {

namespace {

using Clock = std::chrono::steady_clock;

struct DescentOutcome {
    double value = 0.0;
    long long steps = 0;
    bool td = false;
};

// In-place best-improvement descent over the switching neighbourhood.
// should_stop is polled between greedy steps.
DescentOutcome descend(Graph& g, TriangleProfile& p, ObjectiveKind objective,
                       bool stop_on_td, const std::function<bool()>& should_stop) {
    DescentOutcome out;
    out.value = evaluate(objective, p);
    out.td = is_triangle_distinct(p);
    if (stop_on_td && out.td) return out;
    for (;;) {
        if (should_stop && should_stop()) return out;
        bool found = false;
        double best = out.value;
        Switching best_sw;
        for (const Switching& sw : enumerate_feasible(g)) {
            apply_with_profile_in_place(g, p, sw);
            const double val = evaluate(objective, p);
            apply_with_profile_in_place(g, p, inverse(sw));
            if (is_improvement(objective, val, best)) {
                best = val;
                best_sw = sw;
                found = true;
            }
        }
        if (!found) break;  // local optimum
        apply_with_profile_in_place(g, p, best_sw);
        out.value = best;
        ++out.steps;
        out.td = is_triangle_distinct(p);
        if (stop_on_td && out.td) break;
    }
    return out;
}

void validate(const SearchConfig& c) {
    if (c.n < 1 || c.n > kMaxVertices)
        throw InvalidConfig("order must be in [1, " + std::to_string(kMaxVertices) + "]");
    if (c.r < 0 || c.r >= c.n)
        throw InvalidConfig("degree must satisfy 0 <= r < n");
    if ((static_cast<long long>(c.n) * c.r) % 2 != 0)
        throw InvalidConfig("no regular graph exists: n*r is odd");
    if (c.k_max < 1) throw InvalidConfig("k_max must be at least 1");
    if (c.workers < 1) throw InvalidConfig("workers must be at least 1");
}

}  // namespace

std::string_view stop_reason_name(StopReason reason) {
    switch (reason) {
        case StopReason::TdFound: return "td-found";
        case StopReason::TimeLimit: return "time-limit";
        case StopReason::Stagnation: return "stagnation";
        case StopReason::Exhausted: return "exhausted";
        case StopReason::ExternalStop: return "external-stop";
    }
    return "?";
}

std::optional<std::string> validate_vns_log(const std::vector<VnsEvent>& events,
                                            int k_max) {
    if (events.empty()) return "empty event log";
    int expected_k = 0;  // initial descent
    for (std::size_t i = 0; i < events.size(); ++i) {
        const VnsEvent& e = events[i];
        const std::string at = "event " + std::to_string(i) + ": ";
        if (e.k_used != expected_k)
            return at + "k_used = " + std::to_string(e.k_used) + ", expected " +
                   std::to_string(expected_k);
        if (!e.regular) return at + "graph is not regular";
        const int proper_next =
            (i == 0 || e.improved) ? 1 : std::min(e.k_used + 1, k_max);
        if (e.k_next != proper_next)
            return at + "k_next = " + std::to_string(e.k_next) + ", expected " +
                   std::to_string(proper_next);
        expected_k = e.k_next;
    }
    return std::nullopt;
}

GreedyResult greedy_descent(const Graph& g, ObjectiveKind objective, bool stop_on_td) {
    Graph work = g;
    TriangleProfile p = triangle_degrees(work);
    const DescentOutcome out = descend(work, p, objective, stop_on_td, nullptr);
    return {std::move(work), ObjectiveValue{objective, out.value}, out.steps};
}

Graph shake(const Graph& g, int k, Rng& rng) {
    Graph out = g;
    for (int i = 0; i < k; ++i) apply_in_place(out, random_switching(out, rng));
    return out;
}

SearchReport vns(const SearchConfig& config, const std::optional<Graph>& start,
                 const std::atomic<bool>* external_stop, int worker_id) {
    validate(config);
    const auto t0 = Clock::now();
    const bool timed = config.time_limit_seconds > 0;
    const auto deadline =
        t0 + std::chrono::duration_cast<Clock::duration>(
                 std::chrono::duration<double>(timed ? config.time_limit_seconds : 0));
    bool external_fired = false;
    const std::function<bool()> should_stop = [&]() {
        if (external_stop && external_stop->load(std::memory_order_relaxed)) {
            external_fired = true;
            return true;
        }
        return timed && Clock::now() >= deadline;
    };

    Rng rng(config.seed);
    Graph best = [&] {
        if (start) {
            if (start->order() != config.n || start->regular_degree() != config.r)
                throw InvalidConfig("start graph is not " + std::to_string(config.r) +
                                    "-regular on " + std::to_string(config.n) +
                                    " vertices");
            return *start;
        }
        return random_regular({config.n, config.r, rng.next(), -1});
    }();

    SearchReport report;
    report.worker_id = worker_id;

    TriangleProfile initial_profile = triangle_degrees(best);
    DescentOutcome d = descend(best, initial_profile, config.objective,
                               config.stop_on_td, should_stop);
    report.iterations += d.steps;
    double best_value = d.value;
    bool best_td = d.td;
    if (config.log_events)
        report.events.push_back({0, d.steps, d.value, true, 1,
                                 best.regular_degree() == config.r, d.td});

    int k = 1;
    long long stagnant = 0;
    StopReason reason = StopReason::Exhausted;
    for (;;) {
        if (config.stop_on_td && best_td) {
            reason = StopReason::TdFound;
            break;
        }
        if (should_stop()) {
            reason = external_fired ? StopReason::ExternalStop : StopReason::TimeLimit;
            break;
        }
        Graph candidate = best;
        try {
            candidate = shake(candidate, k, rng);
        } catch (const NoFeasibleSwitching&) {
            reason = StopReason::Exhausted;
            break;
        }
        TriangleProfile profile = triangle_degrees(candidate);
        d = descend(candidate, profile, config.objective, config.stop_on_td,
                    should_stop);
        ++report.shakes;
        report.iterations += d.steps;

        const bool improved = is_improvement(config.objective, d.value, best_value);
        const bool candidate_regular = candidate.regular_degree() == config.r;
        const int k_used = k;
        if (improved) {
            best = std::move(candidate);
            best_value = d.value;
            best_td = d.td;
            k = 1;
            stagnant = 0;
        } else {
            if (k_used == config.k_max) ++stagnant;
            k = std::min(k_used + 1, config.k_max);
        }
        if (config.log_events)
            report.events.push_back(
                {k_used, d.steps, d.value, improved, k, candidate_regular, d.td});
        if (!improved && config.stagnation_limit > 0 &&
            stagnant >= config.stagnation_limit) {
            reason = StopReason::Stagnation;
            break;
        }
    }

    report.best_graph = std::move(best);
    report.best_value = {config.objective, best_value};
    report.is_td = best_td;
    report.k_final = k;
    report.stop_reason = reason;
    report.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - t0).count();
    return report;
}

SearchReport parallel_search(const SearchConfig& config,
                             const std::optional<Graph>& start) {
    validate(config);
    if (config.workers == 1) return vns(config, start, nullptr, 0);

    std::atomic<bool> stop{false};
    std::mutex mu;
    std::optional<SearchReport> winner;
    std::vector<std::optional<SearchReport>> reports(config.workers);
    std::exception_ptr failure;

    std::vector<std::thread> threads;
    threads.reserve(config.workers);
    for (int w = 0; w < config.workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                SearchConfig local = config;
                local.seed = config.seed + static_cast<std::uint64_t>(w);
                SearchReport rep = vns(local, start, &stop, w);
                std::lock_guard<std::mutex> lock(mu);
                if (rep.is_td && !winner) {
                    winner = rep;
                    stop.store(true, std::memory_order_relaxed);
                }
                reports[w] = std::move(rep);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                stop.store(true, std::memory_order_relaxed);
            }
        });
    }
    for (auto& th : threads) th.join();
    if (failure) std::rethrow_exception(failure);
    if (winner) return *winner;

    // No TD graph: report the best final value, lowest worker id on ties.
    int best = 0;
    for (int w = 1; w < config.workers; ++w)
        if (is_improvement(config.objective, reports[w]->best_value.value,
                           reports[best]->best_value.value))
            best = w;
    return *reports[best];
}

}  // namespace tds
