#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tds/graph.hpp"
#include "tds/objectives.hpp"
#include "tds/rng.hpp"

namespace tds {

struct InvalidConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchConfig {
    int n = 0;
    int r = 0;
    ObjectiveKind objective = ObjectiveKind::F3Minimize;
    int k_max = 10;
    double time_limit_seconds = 0.0;  // <= 0: no wall-clock limit
    std::uint64_t seed = 0;
    int workers = 1;
    bool stop_on_td = true;
    // Consecutive non-improving shakes at k = k_max before giving up;
    // 0 disables the stagnation stop.
    long long stagnation_limit = 0;
    bool log_events = false;
};

enum class StopReason {
    TdFound,
    TimeLimit,
    Stagnation,
    Exhausted,  // no feasible switching to shake with
    ExternalStop,
};

std::string_view stop_reason_name(StopReason reason);

// One descent in the VNS loop. The first entry of a log is the initial
// descent (k_used = 0); each later entry records the shake strength used,
// the descended value, whether it strictly improved the incumbent, and the
// shake strength selected for the next round.
struct VnsEvent {
    int k_used = 0;
    long long descent_steps = 0;
    double value = 0.0;
    bool improved = false;
    int k_next = 1;
    bool regular = false;
    bool td = false;
};

// Replays an event log against the shake-strength protocol: k resets to 1
// exactly on strict improvement and otherwise increments by one, capped at
// k_max; every recorded graph must be regular. Returns a description of the
// first violation, or nullopt if the log is clean.
std::optional<std::string> validate_vns_log(const std::vector<VnsEvent>& events, int k_max);

struct SearchReport {
    Graph best_graph;
    ObjectiveValue best_value{ObjectiveKind::F3Minimize, 0.0};
    bool is_td = false;
    long long iterations = 0;  // greedy steps over all descents
    long long shakes = 0;
    int k_final = 1;
    double elapsed_seconds = 0.0;
    int worker_id = 0;
    StopReason stop_reason = StopReason::Exhausted;
    std::vector<VnsEvent> events;  // populated when config.log_events
};

struct GreedyResult {
    Graph graph;
    ObjectiveValue value;
    long long steps = 0;
};

// Best-improvement descent: probes every feasible switching with an
// incremental profile update and a revert, then takes the strictly best
// neighbour (first in canonical order on ties). Stops at a local optimum,
// or as soon as the profile is triangle-distinct when stop_on_td is set.
GreedyResult greedy_descent(const Graph& g, ObjectiveKind objective,
                            bool stop_on_td = true);

// k successful random switchings applied in sequence.
Graph shake(const Graph& g, int k, Rng& rng);

// The full loop: descend, then repeatedly shake the incumbent with k random
// switchings and descend again; strict improvement resets k to 1, anything
// else raises it by one up to k_max.
SearchReport vns(const SearchConfig& config,
                 const std::optional<Graph>& start = std::nullopt,
                 const std::atomic<bool>* external_stop = nullptr,
                 int worker_id = 0);

// config.workers independent runs with seeds seed+0 .. seed+w-1; the first
// to reach a TD graph wins and stops the rest, otherwise the best final
// value is reported.
SearchReport parallel_search(const SearchConfig& config,
                             const std::optional<Graph>& start = std::nullopt);

}  // namespace tds
