#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gsync/bounds.hpp"
#include "gsync/estimators.hpp"
#include "gsync/experiment.hpp"
#include "gsync/sync_model.hpp"

namespace gsync {

// Small graph builders used by the self checks (and handy in tests).
inline DiGraph path_digraph(std::uint32_t n) { return lattice_digraph(n, 1); }

inline DiGraph cycle_digraph(std::uint32_t n) {
    if (n < 3) throw std::invalid_argument("cycle_digraph: need at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(n);
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return make_digraph(n, edges);
}

inline DiGraph star_digraph(std::uint32_t n_leaves) {
    if (n_leaves < 1) throw std::invalid_argument("star_digraph: need at least 1 leaf");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(n_leaves);
    for (Vertex v = 1; v <= n_leaves; ++v) edges.emplace_back(0, v);
    return make_digraph(n_leaves + 1, edges);
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

// Counts of the two-hop product y(u,w)y(w,v) on a noisy triangle, tallied by
// offset o = psi(u,v)^-1 * (product). Index identity = correct reading.
inline std::vector<std::uint64_t> two_hop_offset_counts(const GroupTable& group, double p,
                                                        std::uint64_t samples, RngStream stream) {
    const DiGraph k3 = complete_digraph(3);
    const SyncProblem problem(k3, group, p);
    // complete_digraph(3) edge order: (0,1) (0,2) (1,0) (1,2) (2,0) (2,1)
    constexpr EdgeId e02 = 1, e21 = 5;
    std::vector<std::uint64_t> counts(group.order, 0);
    for (std::uint64_t i = 0; i < samples; ++i) {
        auto trial = stream.child(i);
        const VertexLabeling x = sample_vertex_labels(problem, trial);
        const EdgeLabeling y = sample_observations(problem, x, trial);
        const Element product = group.mul(y[e02], y[e21]);
        const Element truth = group.mul(group.inv(x[0]), x[1]);
        ++counts[group.mul(group.inv(truth), product)];
    }
    return counts;
}

inline bool rows_are_permutations(const GroupTable& t) {
    std::vector<bool> seen(t.order);
    for (Element a = 0; a < t.order; ++a) {
        std::fill(seen.begin(), seen.end(), false);
        for (Element b = 0; b < t.order; ++b) {
            const Element c = t.mul(a, b);
            if (seen[c]) return false;
            seen[c] = true;
        }
    }
    return true;
}

inline void enumerate_labelings(std::uint32_t order, std::uint32_t n,
                                const std::function<void(const VertexLabeling&)>& fn) {
    VertexLabeling x(n, 0);
    while (true) {
        fn(x);
        std::uint32_t i = n;
        while (i > 0) {
            --i;
            if (++x[i] < order) break;
            x[i] = 0;
            if (i == 0) return;
        }
    }
}

} // namespace detail

// Property suite behind the `verify` subcommand. Checks are deterministic
// for a fixed seed; every closed-form comparison uses a 3-sigma band.
inline std::vector<CheckResult> run_property_suite(std::uint64_t seed = 1,
                                                   std::uint64_t mc_samples = 100000) {
    std::vector<CheckResult> out;
    const auto push = [&](std::string name, bool ok, std::string detail) {
        out.push_back({std::move(name), ok, std::move(detail)});
    };

    { // group axioms across the constructor menagerie, plus left cancellation
        bool ok = true;
        std::string detail = "all tables pass axioms and left cancellation";
        std::vector<GroupTable> tables;
        for (std::uint32_t k = 1; k <= 24; ++k) tables.push_back(make_cyclic(k));
        for (std::uint32_t k = 1; k <= 5; ++k) tables.push_back(make_symmetric(k));
        tables.push_back(direct_product(make_cyclic(2), make_cyclic(3)));
        tables.push_back(direct_product(make_symmetric(3), make_cyclic(4)));
        for (const auto& t : tables) {
            if (auto why = axiom_violation(t)) {
                ok = false;
                detail = t.name + ": " + *why;
                break;
            }
            if (!detail::rows_are_permutations(t)) {
                ok = false;
                detail = t.name + ": multiplication row is not a permutation";
                break;
            }
        }
        push("group_axioms", ok, detail);
    }

    { // orbits match edge-difference fibers on every small connected graph
        bool ok = true;
        std::string detail = "fibers of the edge-difference map equal orbits";
        const std::vector<DiGraph> graphs = {path_digraph(2), path_digraph(3), path_digraph(4),
                                             cycle_digraph(3), cycle_digraph(4), star_digraph(3),
                                             complete_digraph(3), complete_digraph(4)};
        for (std::uint32_t order : {2u, 3u}) {
            const GroupTable g = make_cyclic(order);
            for (const auto& graph : graphs) {
                std::vector<VertexLabeling> all;
                detail::enumerate_labelings(order, graph.n_vertices,
                                            [&](const VertexLabeling& x) { all.push_back(x); });
                for (const auto& x : all) {
                    const auto psi_x = edge_differences(g, graph, x);
                    for (const auto& xp : all) {
                        const bool same_psi = psi_x == edge_differences(g, graph, xp);
                        if (same_psi != same_orbit(g, x, xp)) {
                            std::ostringstream msg;
                            msg << g.name << " on " << graph.n_vertices
                                << " vertices: fiber/orbit mismatch";
                            ok = false;
                            detail = msg.str();
                            break;
                        }
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        push("orbit_equivalence", ok, detail);
    }

    { // two-hop distribution normalizes exactly across orders and p
        bool ok = true;
        std::string detail = "f + (K-1)h = 1 within 1e-12 on a 1001-point grid";
        for (std::uint32_t order : {2u, 3u, 4u, 5u, 6u, 24u, 120u}) {
            for (int i = 0; i <= 1000; ++i) {
                const double p = i / 1000.0;
                const auto d = two_hop_distribution(p, order);
                const double total = d.p_correct + (order - 1) * d.p_each_wrong;
                if (std::abs(total - 1.0) > 1e-12) {
                    std::ostringstream msg;
                    msg << "order " << order << ", p=" << p << ": total " << total;
                    ok = false;
                    detail = msg.str();
                    break;
                }
            }
            if (!ok) break;
        }
        push("two_hop_normalization", ok, detail);
    }

    { // sampled two-hop products match the closed forms
        bool ok = true;
        std::ostringstream msg;
        auto root = RngStream::from_seed(seed).child(0x7768); // "wh"
        for (std::uint32_t order : {2u, 3u, 6u}) {
            const GroupTable g = make_cyclic(order);
            for (double p : {0.1, 0.3, 0.45}) {
                const auto counts = detail::two_hop_offset_counts(
                    g, p, mc_samples, root.child(order).child(static_cast<std::uint64_t>(p * 100)));
                const auto d = two_hop_distribution(p, order);
                const double ns = static_cast<double>(mc_samples);
                const auto band = [&](double q) { return 3.0 * std::sqrt(q * (1.0 - q) / ns); };
                if (std::abs(counts[g.identity] / ns - d.p_correct) > band(d.p_correct)) {
                    ok = false;
                    msg << "order " << order << ", p=" << p << ": correct-product frequency "
                        << counts[g.identity] / ns << " vs " << d.p_correct;
                }
                for (Element o = 0; ok && o < order; ++o) {
                    if (o == g.identity) continue;
                    if (std::abs(counts[o] / ns - d.p_each_wrong) > band(d.p_each_wrong)) {
                        ok = false;
                        msg << "order " << order << ", p=" << p << ": wrong-product frequency "
                            << counts[o] / ns << " vs " << d.p_each_wrong;
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        push("two_hop_monte_carlo", ok,
             ok ? "sampled frequencies within 3 sigma of closed forms" : msg.str());
    }

    return out;
}

} // namespace gsync
