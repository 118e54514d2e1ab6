#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gsync/graph.hpp"
#include "gsync/group.hpp"
#include "gsync/rng.hpp"

namespace gsync {

using VertexLabeling = std::vector<Element>; // one group element per vertex
using EdgeLabeling = std::vector<Element>;   // one group element per edge, in edge order

// A synchronization instance: graph, group, and the flip probability of the
// uniform observation kernel. The vertex prior is always uniform.
struct SyncProblem {
    DiGraph graph;
    GroupTable group;
    double flip_prob = 0.0;

    SyncProblem(DiGraph g, GroupTable grp, double p)
        : graph(std::move(g)), group(std::move(grp)), flip_prob(p) {
        if (group.order < 2)
            throw std::invalid_argument("SyncProblem: group order must be >= 2");
        if (!(flip_prob >= 0.0 && flip_prob <= 1.0))
            throw std::invalid_argument("SyncProblem: flip probability must be in [0,1]");
    }
};

// Edge-difference map: labeling x of the vertices to the edge labeling
// (u,v) -> x(u)^-1 x(v).
inline EdgeLabeling edge_differences(const GroupTable& group, const DiGraph& graph,
                                     const VertexLabeling& x) {
    if (x.size() != graph.n_vertices)
        throw std::invalid_argument("edge_differences: labeling length mismatch");
    EdgeLabeling out(graph.n_edges());
    for (EdgeId e = 0; e < graph.n_edges(); ++e) {
        const auto& [u, v] = graph.edges[e];
        out[e] = group.mul(group.inv(x[u]), x[v]);
    }
    return out;
}

inline EdgeLabeling edge_differences(const SyncProblem& p, const VertexLabeling& x) {
    return edge_differences(p.group, p.graph, x);
}

namespace detail {
constexpr std::uint64_t kVertexDomain = 0x76; // 'v'
constexpr std::uint64_t kEdgeDomain = 0x65;   // 'e'

// Uniform draw from G \ {excluded}.
inline Element uniform_excluding(const GroupTable& g, Element excluded, RngStream& s) {
    const Element k = s.uniform_below(g.order - 1);
    return k < excluded ? k : k + 1;
}
} // namespace detail

// One i.i.d. uniform element per vertex. Each vertex owns a substream, so
// the result does not depend on evaluation order.
inline VertexLabeling sample_vertex_labels(const GroupTable& group, std::uint32_t n_vertices,
                                           RngStream stream) {
    auto domain = stream.child(detail::kVertexDomain);
    VertexLabeling x(n_vertices);
    for (Vertex v = 0; v < n_vertices; ++v) {
        auto s = domain.child(v);
        x[v] = s.uniform_below(group.order);
    }
    return x;
}

inline VertexLabeling sample_vertex_labels(const SyncProblem& p, RngStream stream) {
    return sample_vertex_labels(p.group, p.graph.n_vertices, stream);
}

// Uniform observation kernel: per edge, emit the true difference with
// probability 1-p, otherwise right-multiply by a noise element drawn
// uniformly from G \ {e}. Per-edge substreams keyed by edge id make the
// output independent of iteration order.
inline EdgeLabeling sample_observations(const SyncProblem& p, const VertexLabeling& x,
                                        RngStream stream) {
    const EdgeLabeling psi = edge_differences(p, x);
    auto domain = stream.child(detail::kEdgeDomain);
    EdgeLabeling y(psi.size());
    for (EdgeId e = 0; e < psi.size(); ++e) {
        auto s = domain.child(e);
        if (s.uniform01() < 1.0 - p.flip_prob) {
            y[e] = psi[e];
        } else {
            const Element noise = detail::uniform_excluding(p.group, p.group.identity, s);
            y[e] = p.group.mul(psi[e], noise);
        }
    }
    return y;
}

inline std::size_t count_agreements(const EdgeLabeling& y, const EdgeLabeling& psi) {
    if (y.size() != psi.size())
        throw std::invalid_argument("count_agreements: labeling length mismatch");
    std::size_t agree = 0;
    for (std::size_t e = 0; e < y.size(); ++e)
        if (y[e] == psi[e]) ++agree;
    return agree;
}

// log Q(y | psi_x): agreements contribute log(1-p), disagreements
// log(p/(|G|-1)). Requires p in (0,1); at the endpoints the kernel is
// degenerate and callers must compare agreement counts instead.
inline double log_likelihood(const SyncProblem& p, const EdgeLabeling& y,
                             const EdgeLabeling& psi_x) {
    if (!(p.flip_prob > 0.0 && p.flip_prob < 1.0))
        throw std::domain_error("log_likelihood: flip probability must be in (0,1)");
    const auto agree = static_cast<double>(count_agreements(y, psi_x));
    const auto disagree = static_cast<double>(y.size()) - agree;
    return agree * std::log1p(-p.flip_prob) +
           disagree * std::log(p.flip_prob / (p.group.order - 1));
}

} // namespace gsync
