// Command-line front end: search / verify / scan / gen / complement / fixtures.
//
// Exit codes: 0 success (search: TD graph found), 2 usage error,
// 3 search budget expired without a TD graph, 4 malformed input.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tds/adjlist.hpp"
#include "tds/fixtures.hpp"
#include "tds/generator.hpp"
#include "tds/graph6.hpp"
#include "tds/moves.hpp"
#include "tds/objectives.hpp"
#include "tds/scan.hpp"
#include "tds/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudgetExpired = 3;
constexpr int kExitBadInput = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string iso8601_utc(std::chrono::system_clock::time_point tp) {
    const std::time_t t = std::chrono::system_clock::to_time_t(tp);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_file_or_stdin(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_adjacency_list(const std::string& text) {
    return text.find(':') != std::string::npos;
}

// Parses either format; graph6 input may hold several graphs, one per line.
std::vector<tds::ParsedAdjacencyList> parse_graphs(const std::string& text) {
    std::vector<tds::ParsedAdjacencyList> out;
    if (looks_like_adjacency_list(text)) {
        out.push_back(tds::parse_adjacency_list(text));
        return out;
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back({tds::decode_graph6(line), {}});
        out.back().t_column.resize(out.back().graph.order());
    }
    if (out.empty()) throw tds::MalformedGraph6("no graphs in input");
    return out;
}

nlohmann::json verification_to_json(const tds::VerificationReport& rep) {
    nlohmann::json j;
    j["record"] = "verification";
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["regular"] = rep.regular_r.has_value();
    if (rep.regular_r) j["r"] = *rep.regular_r;
    j["t"] = rep.profile.t;
    j["f1"] = rep.f1_value;
    j["f2"] = rep.f2_value;
    j["f3"] = rep.f3_value;
    j["td"] = rep.td;
    if (rep.claimed_r) {
        j["claimed_r"] = *rep.claimed_r;
        j["r_matches"] = rep.r_matches;
    }
    if (rep.has_claimed_t) {
        nlohmann::json mism = nlohmann::json::array();
        for (int v : rep.t_mismatches) mism.push_back(v + 1);
        j["t_mismatch_vertices"] = mism;
    }
    return j;
}

void print_verification(const tds::VerificationReport& rep, std::ostream& os) {
    os << "n=" << rep.n << " m=" << rep.m;
    if (rep.regular_r)
        os << " regular r=" << *rep.regular_r;
    else
        os << " not regular";
    os << " td=" << (rep.td ? "yes" : "no") << " f1=" << rep.f1_value
       << " f2=" << rep.f2_value;
    if (rep.n >= 2) os << " f3=" << rep.f3_value;
    os << '\n';
    if (rep.claimed_r)
        os << "  claimed r=" << *rep.claimed_r << ": "
           << (rep.r_matches ? "match" : "MISMATCH") << '\n';
    if (rep.has_claimed_t) {
        if (rep.t_mismatches.empty()) {
            os << "  claimed t column: all values match\n";
        } else {
            os << "  claimed t column: MISMATCH at";
            for (int v : rep.t_mismatches) os << " vertex " << v + 1;
            os << '\n';
        }
    }
}

void print_census(const tds::CensusCounts& counts, std::ostream& os) {
    for (const auto& [order, oc] : counts.by_order) {
        os << "order " << order << ": total " << oc.total << " td " << oc.td
           << " regular_td " << oc.regular_td;
        if (oc.total > 0) {
            char pct[32];
            std::snprintf(pct, sizeof pct, "%.3f", 100.0 * oc.td / oc.total);
            os << " (" << pct << "%)";
        }
        os << '\n';
    }
    os << "total " << counts.total << " td " << counts.td << " regular_td "
       << counts.regular_td << " skipped " << counts.skipped << '\n';
}

nlohmann::json census_to_json(const tds::CensusCounts& counts) {
    nlohmann::json j;
    j["record"] = "census";
    j["total"] = counts.total;
    j["td"] = counts.td;
    j["regular_td"] = counts.regular_td;
    j["skipped"] = counts.skipped;
    nlohmann::json orders = nlohmann::json::object();
    for (const auto& [order, oc] : counts.by_order)
        orders[std::to_string(order)] = {
            {"total", oc.total}, {"td", oc.td}, {"regular_td", oc.regular_td}};
    j["by_order"] = orders;
    return j;
}

int run_gen(int n, int r, std::uint64_t seed, long long mix) {
    const tds::Graph g = tds::random_regular({n, r, seed, mix});
    std::cout << tds::encode_graph6(g) << '\n';
    return kExitOk;
}

int run_fixtures(std::optional<int> id, const std::string& format) {
    std::vector<int> ids;
    if (id)
        ids.push_back(*id);
    else
        for (int i = 1; i <= tds::fixture_count(); ++i) ids.push_back(i);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const tds::Fixture fx = tds::load_fixture(ids[i]);
        if (format == "g6") {
            std::cout << tds::encode_graph6(fx.graph) << '\n';
        } else {
            if (i > 0) std::cout << '\n';
            std::cout << fx.adjlist_text << '\n';
        }
    }
    return kExitOk;
}

int run_complement(const std::string& path, const std::string& format) {
    const auto graphs = parse_graphs(read_file_or_stdin(path));
    for (const auto& parsed : graphs) {
        const tds::Graph c = parsed.graph.complement();
        if (format == "g6") {
            std::cout << tds::encode_graph6(c) << '\n';
        } else {
            const auto profile = tds::triangle_degrees(c);
            std::cout << tds::to_adjacency_list(c, &profile.t);
        }
    }
    return kExitOk;
}

int run_verify(const std::string& path, std::optional<int> claimed_r, bool json) {
    const auto graphs = parse_graphs(read_file_or_stdin(path));
    for (const auto& parsed : graphs) {
        const auto rep = tds::verify_graph(parsed.graph, claimed_r, &parsed.t_column);
        if (json)
            std::cout << verification_to_json(rep).dump() << '\n';
        else
            print_verification(rep, std::cout);
    }
    return kExitOk;
}

int run_scan(const std::string& path, bool filter_td, bool lax, int threads,
             bool json) {
    tds::ScanOptions options;
    options.filter_td = filter_td;
    options.strict = !lax;
    options.threads = threads;

    std::ifstream file;
    std::istream* in = &std::cin;
    if (!path.empty() && path != "-") {
        file.open(path, std::ios::binary);
        if (!file) throw InputError("cannot open '" + path + "'");
        in = &file;
    }
    const tds::CensusCounts counts =
        tds::scan_stream(*in, options, filter_td ? &std::cout : nullptr);
    // In filter mode stdout carries the graph6 stream; the summary moves to
    // stderr so pipelines stay clean.
    std::ostream& os = filter_td ? std::cerr : std::cout;
    if (json)
        os << census_to_json(counts).dump() << '\n';
    else
        print_census(counts, os);
    return kExitOk;
}

struct SearchCliArgs {
    tds::SearchConfig config;
    std::string start_path;
    std::string out_path;
    bool json = false;
};

int run_search(const SearchCliArgs& args) {
    if (!tds::check_necessary_condition(args.config.n, args.config.r)) {
        std::cerr << "error: C(r,2) = " << args.config.r * (args.config.r - 1) / 2
                  << " < n-1 = " << args.config.n - 1
                  << ": no " << args.config.r << "-regular graph on " << args.config.n
                  << " vertices can be triangle-distinct\n";
        return kExitUsage;
    }

    std::optional<tds::Graph> start;
    if (!args.start_path.empty()) {
        const auto graphs = parse_graphs(read_file_or_stdin(args.start_path));
        if (graphs.size() != 1)
            throw tds::MalformedGraph6("start file must hold exactly one graph");
        start = graphs.front().graph;
    }

    const auto started = std::chrono::system_clock::now();
    const tds::SearchReport report = tds::parallel_search(args.config, start);
    const auto ended = std::chrono::system_clock::now();

    const auto profile = tds::triangle_degrees(report.best_graph);
    const std::string g6 = tds::encode_graph6(report.best_graph);

    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path);
        if (!out) throw InputError("cannot write '" + args.out_path + "'");
        out << g6 << '\n' << tds::to_adjacency_list(report.best_graph, &profile.t);
    } else if (!args.json) {
        std::cout << g6 << '\n'
                  << tds::to_adjacency_list(report.best_graph, &profile.t);
    }

    nlohmann::json manifest;
    manifest["record"] = "search-run";
    manifest["config"] = {{"n", args.config.n},
                          {"r", args.config.r},
                          {"objective", tds::objective_name(args.config.objective)},
                          {"k_max", args.config.k_max},
                          {"time_limit_s", args.config.time_limit_seconds},
                          {"seed", args.config.seed},
                          {"workers", args.config.workers},
                          {"stop_on_td", args.config.stop_on_td},
                          {"stagnation_limit", args.config.stagnation_limit},
                          {"start", args.start_path}};
    manifest["started"] = iso8601_utc(started);
    manifest["ended"] = iso8601_utc(ended);
    manifest["result"] = {{"is_td", report.is_td},
                          {"objective", tds::objective_name(report.best_value.kind)},
                          {"value", report.best_value.value},
                          {"f1", tds::f1(profile)},
                          {"f2", tds::f2(profile)},
                          {"iterations", report.iterations},
                          {"shakes", report.shakes},
                          {"k_final", report.k_final},
                          {"stop_reason", tds::stop_reason_name(report.stop_reason)},
                          {"worker", report.worker_id},
                          {"elapsed_s", report.elapsed_seconds},
                          {"graph6", g6}};
    manifest["artifacts"] = {{"out", args.out_path}};

    // Exactly one manifest line per run: stdout under --json, stderr otherwise.
    (args.json ? std::cout : std::cerr) << manifest.dump() << '\n';

    if (args.config.log_events) {
        for (const auto& e : report.events) {
            nlohmann::json ev = {{"record", "vns-event"}, {"k_used", e.k_used},
                                 {"steps", e.descent_steps}, {"value", e.value},
                                 {"improved", e.improved},  {"k_next", e.k_next},
                                 {"regular", e.regular},    {"td", e.td}};
            (args.json ? std::cout : std::cerr) << ev.dump() << '\n';
        }
    }
    return report.is_td ? kExitOk : kExitBudgetExpired;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"search and verification tool for regular triangle-distinct graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit one random regular graph as graph6");
    int gen_n = 0, gen_r = 0;
    std::uint64_t gen_seed = 0;
    long long gen_mix = -1;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--r", gen_r, "degree")->required();
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--mix", gen_mix, "randomizing switchings (default 10*n*r)");

    // fixtures
    auto* fixtures =
        app.add_subcommand("fixtures", "emit the bundled triangle-distinct graphs");
    std::optional<int> fx_id;
    std::string fx_format = "g6";
    fixtures->add_option("--id", fx_id, "fixture id")
        ->check(CLI::Range(1, tds::fixture_count()));
    fixtures->add_option("--format", fx_format, "output format")
        ->check(CLI::IsMember({"g6", "adjlist"}));

    // complement
    auto* complement =
        app.add_subcommand("complement", "complement of each input graph");
    std::string comp_path, comp_format = "g6";
    complement->add_option("file", comp_path, "graph6 or neighbour-list file (default stdin)");
    complement->add_option("--format", comp_format, "output format")
        ->check(CLI::IsMember({"g6", "adjlist"}));

    // verify
    auto* verify = app.add_subcommand(
        "verify", "recompute regularity, triangle degrees and objectives");
    std::string verify_path;
    std::optional<int> verify_r;
    bool verify_json = false;
    verify->add_option("file", verify_path, "graph6 or neighbour-list file (default stdin)");
    verify->add_option("--r", verify_r, "claimed degree to check");
    verify->add_flag("--json", verify_json, "machine-readable output");

    // scan
    auto* scan = app.add_subcommand("scan", "triangle-distinctness census of a graph6 stream");
    std::string scan_path;
    bool scan_filter = false, scan_lax = false, scan_json = false;
    int scan_threads = 1;
    scan->add_option("file", scan_path, "graph6 stream (default stdin)");
    scan->add_flag("--filter-td", scan_filter, "echo TD graphs to stdout");
    bool scan_strict = false;
    scan->add_flag("--strict", scan_strict, "abort on malformed lines (default)");
    scan->add_flag("--lax", scan_lax, "skip malformed lines instead of aborting")
        ->excludes("--strict");
    scan->add_option("--threads", scan_threads, "worker threads")->check(CLI::PositiveNumber);
    scan->add_flag("--json", scan_json, "machine-readable output");

    // search
    auto* search =
        app.add_subcommand("search", "VNS search for a regular triangle-distinct graph");
    SearchCliArgs sa;
    std::string search_objective = "f3";
    sa.config.workers = 0;  // resolved below
    search->add_option("--n", sa.config.n, "vertex count")->required();
    search->add_option("--r", sa.config.r, "degree")->required();
    search->add_option("--objective", search_objective, "objective function")
        ->check(CLI::IsMember({"f1", "f2", "f3"}));
    search->add_option("--kmax", sa.config.k_max, "maximum shaking strength");
    search->add_option("--time-limit", sa.config.time_limit_seconds,
                       "wall-clock budget in seconds")
        ->required();
    search->add_option("--seed", sa.config.seed, "base random seed");
    search->add_option("--workers", sa.config.workers,
                       "parallel instances (default $TDSEARCH_WORKERS or 1)");
    search->add_option("--stagnation", sa.config.stagnation_limit,
                       "stop after this many non-improving shakes at kmax (0: off)");
    bool keep_going = false;
    search->add_flag("--keep-going", keep_going, "do not stop at the first TD graph");
    search->add_flag("--log-events", sa.config.log_events, "emit one record per descent");
    search->add_option("--start", sa.start_path, "start graph file");
    search->add_option("--out", sa.out_path, "write the result report here");
    search->add_flag("--json", sa.json, "manifest on stdout instead of the text report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) return run_gen(gen_n, gen_r, gen_seed, gen_mix);
        if (*fixtures) return run_fixtures(fx_id, fx_format);
        if (*complement) return run_complement(comp_path, comp_format);
        if (*verify) return run_verify(verify_path, verify_r, verify_json);
        if (*scan)
            return run_scan(scan_path, scan_filter, scan_lax, scan_threads, scan_json);
        if (*search) {
            if (sa.config.workers == 0) {
                sa.config.workers = 1;
                if (const char* env = std::getenv("TDSEARCH_WORKERS"))
                    sa.config.workers = std::max(1, std::atoi(env));
            }
            const auto obj = tds::objective_from_name(search_objective);
            sa.config.objective = *obj;  // membership already checked
            sa.config.stop_on_td = !keep_going;
            return run_search(sa);
        }
    } catch (const tds::InvalidConfig& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const tds::NoSuchRegularGraph& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const tds::NoFeasibleSwitching& e) {
        std::cerr << "error: " << e.what()
                  << " (complete and empty graphs admit no switching; try --mix 0)\n";
        return kExitUsage;
    } catch (const tds::UnknownFixture& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const tds::Graph6StreamError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const tds::MalformedGraph6& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const tds::AdjacencyListError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
