// Command-line front end: simulate | sweep | bounds | verify.
// Exit codes: 0 success, 1 property failure, 2 configuration error.

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "gsync/gsync.hpp"

namespace {

int cmd_simulate(const std::string& graph_spec, const std::string& group_spec, double p,
                 const std::string& estimator, std::uint64_t seed, std::uint64_t trials,
                 bool full_record) {
    const gsync::DiGraph graph = gsync::parse_graph_instance(graph_spec);
    const gsync::GroupTable group = gsync::parse_group_spec(group_spec);
    const gsync::SyncProblem problem(graph, group, p);
    const gsync::EstimatorKind kind = gsync::parse_estimator(estimator);
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (full_record)
            std::cout << gsync::trial_record_json(problem, seed, t).dump() << '\n';
        else
            std::cout << gsync::trial_to_json(gsync::run_trial(problem, kind, seed, t)).dump()
                      << '\n';
    }
    return 0;
}

int cmd_sweep(const std::string& config_path, unsigned threads) {
    const gsync::ExperimentConfig cfg = gsync::load_config(config_path);
    const gsync::SweepResult result = gsync::run_sweep(cfg, threads);
    std::cout << gsync::sweep_csv(result);
    for (const auto& cell : result.cells)
        if (!cell.error.empty())
            std::cerr << "note: cell n=" << cell.n << " p=" << cell.p
                      << " skipped: " << cell.error << '\n';
    return 0;
}

int cmd_bounds(std::uint32_t order, double p, std::uint32_t n, std::uint32_t d,
               std::uint64_t set_size) {
    using gsync::detail::format_double;
    const auto dist = gsync::two_hop_distribution(p, order);
    const double pc = gsync::critical_flip_prob(order);
    double failure = std::numeric_limits<double>::quiet_NaN();
    try {
        failure = gsync::recovery_failure_bound(n, p, order);
    } catch (const std::domain_error& ex) {
        std::cerr << "note: failure bound undefined: " << ex.what() << '\n';
    }
    double offset = std::numeric_limits<double>::quiet_NaN();
    if (d > 0 && set_size > 0) {
        try {
            offset = gsync::offset_exists_lower_bound(p, d, order, set_size);
        } catch (const std::domain_error& ex) {
            std::cerr << "note: offset bound undefined: " << ex.what() << '\n';
        }
    }
    std::cout << "group_order,p,n,f,h,p_critical,failure_bound,offset_bound\n"
              << order << ',' << format_double(p) << ',' << n << ','
              << format_double(dist.p_correct) << ',' << format_double(dist.p_each_wrong) << ','
              << format_double(pc) << ',' << format_double(failure) << ','
              << format_double(offset) << '\n';
    return 0;
}

int cmd_verify(std::uint64_t seed, std::uint64_t samples) {
    int failures = 0;
    for (const auto& check : gsync::run_property_suite(seed, samples)) {
        std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail
                  << '\n';
        failures += check.passed ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noisy group synchronization laboratory"};
    app.require_subcommand(1);

    std::string graph_spec, group_spec, estimator = "triangle", config_path;
    double p = 0.1;
    std::uint64_t seed = 1, trials = 1, samples = 100000, set_size = 0;
    std::uint32_t order = 2, n = 10, d = 0;
    unsigned threads = 1;
    bool full_record = false;

    auto* sim = app.add_subcommand("simulate", "Run seeded trials and print one JSON line each");
    sim->add_option("--graph", graph_spec, "complete:N | lattice:SIDE,DIM | file:PATH")->required();
    sim->add_option("--group", group_spec, "cyclic:K | sym:K | prod:ATOM,ATOM[,...]")->required();
    sim->add_option("--p", p, "flip probability in [0,1]")->required();
    sim->add_option("--estimator", estimator, "trivial | triangle | map");
    sim->add_option("--seed", seed, "master seed");
    sim->add_option("--trials", trials, "number of trials");
    sim->add_flag("--record", full_record, "print full trial records (labels and observations)");

    auto* swp = app.add_subcommand("sweep", "Run a config-driven sweep and print its CSV");
    swp->add_option("--config", config_path, "JSON config path")->required();
    swp->add_option("--threads", threads, "worker threads per cell");

    auto* bnd = app.add_subcommand("bounds", "Print closed-form quantities as a CSV row");
    bnd->add_option("--group-order", order, "group order (>= 2)")->required();
    bnd->add_option("--p", p, "flip probability")->required();
    bnd->add_option("--n", n, "vertex count for the failure bound")->required();
    bnd->add_option("--d", d, "degree for the offset bound");
    bnd->add_option("--set-size", set_size, "independent-set size for the offset bound");

    auto* ver = app.add_subcommand("verify", "Run the property suite; exit 1 on any failure");
    ver->add_option("--seed", seed, "suite seed");
    ver->add_option("--samples", samples, "Monte Carlo samples per comparison");

    try {
        app.parse(argc, argv);
        if (sim->parsed())
            return cmd_simulate(graph_spec, group_spec, p, estimator, seed, trials, full_record);
        if (swp->parsed()) return cmd_sweep(config_path, threads);
        if (bnd->parsed()) return cmd_bounds(order, p, n, d, set_size);
        if (ver->parsed()) return cmd_verify(seed, samples);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 2;
}
