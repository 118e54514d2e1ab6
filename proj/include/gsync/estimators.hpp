#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gsync/sync_model.hpp"

namespace gsync {

using VoteTally = std::vector<std::uint32_t>; // per-group-element counts

// Orbit of a vertex labeling under global left translation, canonicalized so
// the first vertex carries the identity.
struct Orbit {
    VertexLabeling representative;
};

inline Orbit canonical_orbit(const GroupTable& group, const VertexLabeling& x) {
    if (x.empty())
        throw std::invalid_argument("canonical_orbit: empty labeling");
    const Element g = group.inv(x[0]);
    Orbit o;
    o.representative.resize(x.size());
    for (std::size_t u = 0; u < x.size(); ++u)
        o.representative[u] = group.mul(g, x[u]);
    return o;
}

// True iff x' = g x for some single group element g. The only candidate is
// g = x'(u0) x(u0)^-1; verify it globally.
inline bool same_orbit(const GroupTable& group, const VertexLabeling& x,
                       const VertexLabeling& xp) {
    if (x.size() != xp.size())
        throw std::invalid_argument("same_orbit: labeling length mismatch");
    if (x.empty()) return true;
    const Element g = group.mul(xp[0], group.inv(x[0]));
    for (std::size_t u = 0; u < x.size(); ++u)
        if (xp[u] != group.mul(g, x[u])) return false;
    return true;
}

// The estimator that returns the observations unchanged.
inline EdgeLabeling trivial_estimator(const EdgeLabeling& y) { return y; }

inline bool exact_recovery(const EdgeLabeling& estimate, const EdgeLabeling& truth) {
    if (estimate.size() != truth.size())
        throw std::invalid_argument("exact_recovery: labeling length mismatch");
    return estimate == truth;
}

inline std::size_t edge_errors(const EdgeLabeling& estimate, const EdgeLabeling& truth) {
    if (estimate.size() != truth.size())
        throw std::invalid_argument("edge_errors: labeling length mismatch");
    std::size_t errs = 0;
    for (std::size_t e = 0; e < truth.size(); ++e)
        if (estimate[e] != truth[e]) ++errs;
    return errs;
}

inline bool is_complete_digraph(const DiGraph& g) {
    return g.n_vertices >= 2 &&
           g.n_edges() == static_cast<std::size_t>(g.n_vertices) * (g.n_vertices - 1);
}

// Smallest-index argmax; the deterministic refinement of "ties broken
// arbitrarily".
inline Element argmax_vote(const VoteTally& tally) {
    Element best = 0;
    for (Element g = 1; g < tally.size(); ++g)
        if (tally[g] > tally[best]) best = g;
    return best;
}

namespace detail {

// Dense (u,v) -> edge id table for complete digraphs.
inline std::vector<EdgeId> edge_index_matrix(const DiGraph& g) {
    const std::size_t n = g.n_vertices;
    std::vector<EdgeId> idx(n * n, 0);
    for (EdgeId e = 0; e < g.n_edges(); ++e)
        idx[static_cast<std::size_t>(g.edges[e].first) * n + g.edges[e].second] = e;
    return idx;
}

inline VoteTally triangle_votes_impl(const SyncProblem& p, const EdgeLabeling& y,
                                     Vertex u, Vertex v, const std::vector<EdgeId>& idx) {
    const std::size_t n = p.graph.n_vertices;
    VoteTally tally(p.group.order, 0);
    for (Vertex w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        const Element a = y[idx[static_cast<std::size_t>(u) * n + w]];
        const Element b = y[idx[static_cast<std::size_t>(w) * n + v]];
        ++tally[p.group.mul(a, b)];
    }
    return tally;
}

} // namespace detail

// For each group element g, the number of 2-observations on (u,v) whose
// product y(u,w) y(w,v) equals g. Totals sum to n-2.
inline VoteTally triangle_votes(const SyncProblem& p, const EdgeLabeling& y,
                                Vertex u, Vertex v) {
    if (!is_complete_digraph(p.graph) || p.graph.n_vertices < 3)
        throw std::invalid_argument("triangle_votes: requires a complete digraph on >= 3 vertices");
    if (y.size() != p.graph.n_edges())
        throw std::invalid_argument("triangle_votes: observation length mismatch");
    if (u >= p.graph.n_vertices || v >= p.graph.n_vertices || u == v)
        throw std::invalid_argument("triangle_votes: bad edge endpoints");
    return detail::triangle_votes_impl(p, y, u, v, detail::edge_index_matrix(p.graph));
}

// Per edge, the group element with the most 2-observation votes.
inline EdgeLabeling triangle_estimator(const SyncProblem& p, const EdgeLabeling& y) {
    if (!is_complete_digraph(p.graph) || p.graph.n_vertices < 3)
        throw std::invalid_argument("triangle_estimator: requires a complete digraph on >= 3 vertices");
    if (y.size() != p.graph.n_edges())
        throw std::invalid_argument("triangle_estimator: observation length mismatch");
    const auto idx = detail::edge_index_matrix(p.graph);
    EdgeLabeling out(p.graph.n_edges());
    for (EdgeId e = 0; e < p.graph.n_edges(); ++e) {
        const auto& [u, v] = p.graph.edges[e];
        out[e] = argmax_vote(detail::triangle_votes_impl(p, y, u, v, idx));
    }
    return out;
}

// Gauge-fixed search space size |G|^(n-1), or nullopt on overflow past the
// given cap.
inline std::optional<std::uint64_t> map_search_space(std::uint32_t group_order,
                                                     std::uint32_t n_vertices,
                                                     std::uint64_t cap = 10000000) {
    std::uint64_t size = 1;
    for (std::uint32_t i = 1; i < n_vertices; ++i) {
        size *= group_order;
        if (size > cap) return std::nullopt;
    }
    return size;
}

// Brute-force MAP estimator. Enumerates one gauge-fixed representative per
// orbit (first vertex pinned to the identity; the posterior is constant on
// orbits, so this loses nothing) and returns the orbit with maximal
// posterior. Under the uniform kernel the posterior is monotone in the
// agreement count: increasing below p_c, decreasing above, flat at p_c.
// Ties break toward the earliest configuration in lexicographic enumeration
// order.
inline Orbit map_estimator(const SyncProblem& p, const EdgeLabeling& y) {
    const std::uint32_t n = p.graph.n_vertices;
    const std::uint32_t order = p.group.order;
    if (y.size() != p.graph.n_edges())
        throw std::invalid_argument("map_estimator: observation length mismatch");
    if (n == 0)
        throw std::invalid_argument("map_estimator: empty graph");
    if (!is_connected(p.graph))
        throw std::invalid_argument("map_estimator: graph must be connected");
    if (!map_search_space(order, n))
        throw std::length_error("map_estimator: search space exceeds 10^7 configurations");

    const double p_c = 1.0 - 1.0 / order;
    const int direction = p.flip_prob < p_c ? 1 : (p.flip_prob > p_c ? -1 : 0);

    VertexLabeling x(n, 0);
    x[0] = p.group.identity;
    VertexLabeling best = x;
    long long best_score = std::numeric_limits<long long>::lowest();

    while (true) {
        std::size_t agree = 0;
        for (EdgeId e = 0; e < p.graph.n_edges(); ++e) {
            const auto& [u, v] = p.graph.edges[e];
            if (y[e] == p.group.mul(p.group.inv(x[u]), x[v])) ++agree;
        }
        const long long score = direction * static_cast<long long>(agree);
        if (score > best_score) {
            best_score = score;
            best = x;
        }
        // next gauge-fixed configuration, last vertex fastest
        std::uint32_t u = n;
        while (u-- > 1) {
            if (++x[u] < order) break;
            x[u] = 0;
        }
        if (u == 0) break;
    }
    return Orbit{best};
}

} // namespace gsync
