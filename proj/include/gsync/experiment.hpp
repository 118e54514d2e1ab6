#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gsync/bounds.hpp"
#include "gsync/estimators.hpp"
#include "gsync/sync_model.hpp"

namespace gsync {

enum class EstimatorKind { Trivial, Triangle, Map };

inline EstimatorKind parse_estimator(const std::string& name) {
    if (name == "trivial") return EstimatorKind::Trivial;
    if (name == "triangle") return EstimatorKind::Triangle;
    if (name == "map") return EstimatorKind::Map;
    throw std::invalid_argument("unknown estimator '" + name + "' (expected trivial|triangle|map)");
}

inline const char* estimator_name(EstimatorKind k) {
    switch (k) {
        case EstimatorKind::Trivial: return "trivial";
        case EstimatorKind::Triangle: return "triangle";
        case EstimatorKind::Map: return "map";
    }
    return "?";
}

// --- spec string parsing -------------------------------------------------
//
// group:  cyclic:K | sym:K | prod:ATOM,ATOM[,...]   (atoms are cyclic/sym)
// graph (single instance):  complete:N | lattice:SIDE,DIM | file:PATH
// graph (sweep family):     complete | lattice:DIM | file:PATH

namespace detail {
inline std::uint32_t parse_uint(const std::string& s, const char* what) {
    std::uint32_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
    return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}
} // namespace detail

inline GroupTable parse_group_spec(const std::string& spec) {
    if (spec.rfind("cyclic:", 0) == 0)
        return make_cyclic(detail::parse_uint(spec.substr(7), "cyclic order"));
    if (spec.rfind("sym:", 0) == 0)
        return make_symmetric(detail::parse_uint(spec.substr(4), "symmetric degree"));
    if (spec.rfind("prod:", 0) == 0) {
        const auto atoms = detail::split(spec.substr(5), ',');
        if (atoms.size() < 2)
            throw std::invalid_argument("prod: needs at least two factors");
        GroupTable t = parse_group_spec(atoms[0]);
        for (std::size_t i = 1; i < atoms.size(); ++i)
            t = direct_product(t, parse_group_spec(atoms[i]));
        return t;
    }
    throw std::invalid_argument("unknown group spec '" + spec + "'");
}

inline DiGraph parse_graph_instance(const std::string& spec) {
    if (spec.rfind("complete:", 0) == 0)
        return complete_digraph(detail::parse_uint(spec.substr(9), "complete size"));
    if (spec.rfind("lattice:", 0) == 0) {
        const auto parts = detail::split(spec.substr(8), ',');
        if (parts.size() != 2)
            throw std::invalid_argument("lattice spec must be lattice:SIDE,DIM");
        return lattice_digraph(detail::parse_uint(parts[0], "lattice side"),
                               detail::parse_uint(parts[1], "lattice dim"));
    }
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
        return load_edge_list(in);
    }
    throw std::invalid_argument("unknown graph spec '" + spec + "'");
}

// --- trials ---------------------------------------------------------------

struct TrialResult {
    std::uint64_t seed = 0;  // master seed
    std::uint64_t trial = 0; // trial index within the cell
    std::uint32_t n = 0;     // vertex count
    double p = 0.0;
    std::string estimator;
    bool exact_recovery = false;
    std::uint64_t edge_error_count = 0;
    std::optional<Vertex> offset_vertex; // impossibility experiments only
    double wall_time_s = 0.0;            // excluded from determinism guarantees
};

// First candidate vertex (ascending) whose every incident observation reads
// as if its label were right-multiplied by g: outgoing edges (u,w) must show
// (x(u)g)^-1 x(w), incoming edges (w,u) must show x(w)^-1 x(u)g. Vertices of
// degree zero are skipped; the vacuous event carries no posterior advantage.
inline std::optional<Vertex> detect_offset_vertex(const GroupTable& group, const DiGraph& graph,
                                                  const VertexLabeling& x, const EdgeLabeling& y,
                                                  Element g, const VertexSet& candidates) {
    if (g == group.identity)
        throw std::invalid_argument("detect_offset_vertex: offset element must differ from identity");
    if (x.size() != graph.n_vertices || y.size() != graph.n_edges())
        throw std::invalid_argument("detect_offset_vertex: labeling length mismatch");
    for (Vertex u : candidates) {
        if (u >= graph.n_vertices)
            throw std::out_of_range("detect_offset_vertex: candidate out of range");
        if (graph.incident[u].empty()) continue;
        const Element shifted = group.mul(x[u], g);
        bool all = true;
        for (EdgeId e : graph.incident[u]) {
            const auto& [a, b] = graph.edges[e];
            const Element expect = (a == u) ? group.mul(group.inv(shifted), x[b])
                                            : group.mul(group.inv(x[a]), shifted);
            if (y[e] != expect) {
                all = false;
                break;
            }
        }
        if (all) return u;
    }
    return std::nullopt;
}

inline Element first_non_identity(const GroupTable& group) {
    if (group.order < 2)
        throw std::invalid_argument("first_non_identity: group is trivial");
    return group.identity == 0 ? 1 : 0;
}

// One seeded Monte Carlo trial: sample a hidden labeling and observations,
// run the named estimator, score exact recovery through the edge labeling.
//
// The map estimator additionally records an offset vertex scanned over the
// greedy independent set. When its enumeration budget is exceeded the trial
// falls back to the offset event alone: a detected vertex certifies that the
// configuration with that vertex's label shifted beats the truth, so the MAP
// estimate cannot match, and edge_error_count reports the disagreement count
// of that witness (its degree). An undetected trial counts as recovery,
// making the fallback an upper bound on true MAP recovery.
inline TrialResult run_trial(const SyncProblem& problem, EstimatorKind kind,
                             std::uint64_t master_seed, std::uint64_t trial_index) {
    const auto t0 = std::chrono::steady_clock::now();
    TrialResult r;
    r.seed = master_seed;
    r.trial = trial_index;
    r.n = problem.graph.n_vertices;
    r.p = problem.flip_prob;
    r.estimator = estimator_name(kind);

    auto stream = make_trial_stream(master_seed, problem.graph.n_vertices,
                                    problem.flip_prob, trial_index);
    const VertexLabeling x = sample_vertex_labels(problem, stream);
    const EdgeLabeling y = sample_observations(problem, x, stream);
    const EdgeLabeling truth = edge_differences(problem, x);

    switch (kind) {
        case EstimatorKind::Trivial: {
            r.edge_error_count = edge_errors(trivial_estimator(y), truth);
            break;
        }
        case EstimatorKind::Triangle: {
            r.edge_error_count = edge_errors(triangle_estimator(problem, y), truth);
            break;
        }
        case EstimatorKind::Map: {
            const VertexSet candidates = greedy_independent_set(problem.graph);
            r.offset_vertex = detect_offset_vertex(problem.group, problem.graph, x, y,
                                                   first_non_identity(problem.group), candidates);
            if (map_search_space(problem.group.order, problem.graph.n_vertices)) {
                const Orbit est = map_estimator(problem, y);
                r.edge_error_count = edge_errors(edge_differences(problem, est.representative), truth);
            } else if (r.offset_vertex) {
                r.edge_error_count = problem.graph.incident[*r.offset_vertex].size();
            } else {
                r.edge_error_count = 0;
            }
            break;
        }
    }
    r.exact_recovery = r.edge_error_count == 0;
    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline nlohmann::json trial_to_json(const TrialResult& r) {
    nlohmann::json j{{"seed", r.seed},
                     {"trial", r.trial},
                     {"n", r.n},
                     {"p", r.p},
                     {"estimator", r.estimator},
                     {"exact_recovery", r.exact_recovery},
                     {"edge_error_count", r.edge_error_count},
                     {"wall_time_s", r.wall_time_s}};
    j["offset_vertex"] = r.offset_vertex ? nlohmann::json(*r.offset_vertex) : nlohmann::json(nullptr);
    return j;
}

// Full record of one trial's randomness: enough to replay it elsewhere.
inline nlohmann::json trial_record_json(const SyncProblem& problem, std::uint64_t master_seed,
                                        std::uint64_t trial_index) {
    auto stream = make_trial_stream(master_seed, problem.graph.n_vertices,
                                    problem.flip_prob, trial_index);
    const VertexLabeling x = sample_vertex_labels(problem, stream);
    const EdgeLabeling y = sample_observations(problem, x, stream);
    return nlohmann::json{{"seed", master_seed},
                          {"trial", trial_index},
                          {"graph", {{"n_vertices", problem.graph.n_vertices},
                                     {"edges", problem.graph.edges}}},
                          {"group", problem.group.name},
                          {"flip_prob", problem.flip_prob},
                          {"x", x},
                          {"y", y}};
}

// --- sweeps ----------------------------------------------------------------

struct ExperimentConfig {
    std::string graph;     // complete | lattice:DIM | file:PATH
    std::string group;     // cyclic:K | sym:K | prod:...
    std::string estimator; // trivial | triangle | map
    std::vector<double> flip_probs;
    std::vector<std::uint32_t> sizes; // n for complete, side for lattice; ignored for file
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::string output; // path prefix; empty = no files
};

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    cfg.graph = j.at("graph").get<std::string>();
    cfg.group = j.at("group").get<std::string>();
    cfg.estimator = j.at("estimator").get<std::string>();
    cfg.flip_probs = j.at("p").get<std::vector<double>>();
    if (j.contains("sizes")) cfg.sizes = j.at("sizes").get<std::vector<std::uint32_t>>();
    cfg.trials = j.at("trials").get<std::uint64_t>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("output")) cfg.output = j.at("output").get<std::string>();

    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    for (double p : cfg.flip_probs)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("config: flip probabilities must lie in [0,1]");
    if (cfg.flip_probs.empty()) throw std::invalid_argument("config: empty p list");
    const bool from_file = cfg.graph.rfind("file:", 0) == 0;
    if (!from_file && cfg.sizes.empty())
        throw std::invalid_argument("config: sizes required for generated graph families");
    parse_estimator(cfg.estimator); // validate early
    return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config '" + path + "'");
    nlohmann::json j;
    in >> j;
    return config_from_json(j);
}

struct CellSummary {
    std::uint32_t n = 0; // vertex count
    double p = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double frequency = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
    double mean_edge_errors = 0.0;
    double analytic_bound = 0.0; // meaning depends on estimator; see README
    std::string error;           // non-empty if the cell could not run
};

struct SweepResult {
    ExperimentConfig config;
    std::vector<CellSummary> cells;
};

// Wilson score interval for a binomial proportion.
inline std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                                 double z = 1.96) {
    if (trials == 0) throw std::invalid_argument("wilson_interval: zero trials");
    const double nt = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / nt;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nt;
    const double center = (phat + z2 / (2.0 * nt)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / nt + z2 / (4.0 * nt * nt)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace detail {

inline DiGraph build_family_graph(const std::string& family, std::uint32_t size) {
    if (family == "complete") return complete_digraph(size);
    if (family.rfind("lattice:", 0) == 0)
        return lattice_digraph(size, parse_uint(family.substr(8), "lattice dim"));
    throw std::invalid_argument("unknown graph family '" + family + "'");
}

inline double cell_analytic_bound(const SyncProblem& problem, EstimatorKind kind) {
    try {
        switch (kind) {
            case EstimatorKind::Triangle:
                return recovery_failure_bound(problem.graph.n_vertices, problem.flip_prob,
                                              problem.group.order);
            case EstimatorKind::Map:
                return offset_exists_lower_bound(
                    problem.flip_prob, max_degree(problem.graph), problem.group.order,
                    greedy_independent_set(problem.graph).size());
            case EstimatorKind::Trivial: {
                const auto m = static_cast<double>(problem.graph.n_edges());
                if (m == 0.0) return 1.0;
                return std::exp(m * std::log1p(-problem.flip_prob)); // exact recovery prob
            }
        }
    } catch (const std::domain_error&) {
        // fall through: degenerate or out-of-domain parameters
    }
    return std::numeric_limits<double>::quiet_NaN();
}

// Shortest round-trip decimal form; keeps sweep output byte-stable.
inline std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

inline void check_estimator_preconditions(const SyncProblem& problem, EstimatorKind kind) {
    if (kind == EstimatorKind::Triangle &&
        (!is_complete_digraph(problem.graph) || problem.graph.n_vertices < 3))
        throw std::invalid_argument("triangle estimator requires a complete digraph on >= 3 vertices");
    if (kind == EstimatorKind::Map && !is_connected(problem.graph))
        throw std::invalid_argument("map estimator requires a connected graph");
}

} // namespace detail

// Run one cell's trials, optionally across worker threads. Results are
// written into per-trial slots and reduced in index order, so the summary is
// independent of the thread count.
inline CellSummary run_cell(const SyncProblem& problem, EstimatorKind kind,
                            std::uint64_t master_seed, std::uint64_t trials,
                            unsigned n_threads = 1) {
    CellSummary cell;
    cell.n = problem.graph.n_vertices;
    cell.p = problem.flip_prob;
    cell.trials = trials;
    cell.analytic_bound = detail::cell_analytic_bound(problem, kind);
    try {
        detail::check_estimator_preconditions(problem, kind);
    } catch (const std::exception& ex) {
        cell.error = ex.what();
        cell.frequency = cell.wilson_lo = cell.wilson_hi = cell.mean_edge_errors =
            std::numeric_limits<double>::quiet_NaN();
        return cell;
    }

    std::vector<TrialResult> results(trials);
    const auto run_range = [&](std::atomic<std::uint64_t>& next) {
        for (std::uint64_t i; (i = next.fetch_add(1)) < trials;)
            results[i] = run_trial(problem, kind, master_seed, i);
    };
    std::atomic<std::uint64_t> next{0};
    if (n_threads <= 1) {
        run_range(next);
    } else {
        std::vector<std::thread> workers;
        const unsigned k = static_cast<unsigned>(
            std::min<std::uint64_t>(n_threads, trials));
        workers.reserve(k);
        for (unsigned t = 0; t < k; ++t) workers.emplace_back([&] { run_range(next); });
        for (auto& w : workers) w.join();
    }

    std::uint64_t err_sum = 0;
    for (const auto& r : results) {
        cell.successes += r.exact_recovery ? 1 : 0;
        err_sum += r.edge_error_count;
    }
    cell.frequency = static_cast<double>(cell.successes) / static_cast<double>(trials);
    std::tie(cell.wilson_lo, cell.wilson_hi) = wilson_interval(cell.successes, trials);
    cell.mean_edge_errors = static_cast<double>(err_sum) / static_cast<double>(trials);
    return cell;
}

inline std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "n,p,trials,successes,frequency,wilson_lo,wilson_hi,mean_edge_errors,analytic_bound\n";
    for (const auto& c : result.cells) {
        out << c.n << ',' << detail::format_double(c.p) << ',' << c.trials << ','
            << c.successes << ',' << detail::format_double(c.frequency) << ','
            << detail::format_double(c.wilson_lo) << ',' << detail::format_double(c.wilson_hi)
            << ',' << detail::format_double(c.mean_edge_errors) << ','
            << detail::format_double(c.analytic_bound) << '\n';
    }
    return out.str();
}

inline nlohmann::json sweep_json(const SweepResult& result) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : result.cells) {
        nlohmann::json j{{"n", c.n},
                         {"p", c.p},
                         {"trials", c.trials},
                         {"successes", c.successes},
                         {"frequency", c.frequency},
                         {"wilson_lo", c.wilson_lo},
                         {"wilson_hi", c.wilson_hi},
                         {"mean_edge_errors", c.mean_edge_errors},
                         {"analytic_bound", c.analytic_bound}};
        if (!c.error.empty()) j["error"] = c.error;
        cells.push_back(std::move(j));
    }
    return nlohmann::json{{"config",
                           {{"graph", result.config.graph},
                            {"group", result.config.group},
                            {"estimator", result.config.estimator},
                            {"p", result.config.flip_probs},
                            {"sizes", result.config.sizes},
                            {"trials", result.config.trials},
                            {"seed", result.config.seed}}},
                          {"cells", cells}};
}

// All cells x trials, deterministic for a fixed config regardless of
// n_threads. Writes <output>.csv and <output>.json when an output prefix is
// configured.
inline SweepResult run_sweep(const ExperimentConfig& cfg, unsigned n_threads = 1) {
    SweepResult result;
    result.config = cfg;
    const GroupTable group = parse_group_spec(cfg.group);
    const EstimatorKind kind = parse_estimator(cfg.estimator);

    std::vector<DiGraph> graphs;
    if (cfg.graph.rfind("file:", 0) == 0) {
        graphs.push_back(parse_graph_instance(cfg.graph));
    } else {
        for (const auto size : cfg.sizes)
            graphs.push_back(detail::build_family_graph(cfg.graph, size));
    }

    for (const auto& graph : graphs) {
        for (const double p : cfg.flip_probs) {
            const SyncProblem problem(graph, group, p);
            result.cells.push_back(run_cell(problem, kind, cfg.seed, cfg.trials, n_threads));
        }
    }

    if (!cfg.output.empty()) {
        const std::filesystem::path base(cfg.output);
        if (base.has_parent_path()) std::filesystem::create_directories(base.parent_path());
        std::ofstream csv(cfg.output + ".csv", std::ios::binary);
        csv << sweep_csv(result);
        std::ofstream json(cfg.output + ".json", std::ios::binary);
        json << sweep_json(result).dump(2) << '\n';
    }
    return result;
}

} // namespace gsync
