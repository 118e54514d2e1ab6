#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gsync {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using VertexSet = std::vector<Vertex>; // sorted, distinct

// Simple directed graph: no self-loops, no duplicate directed edges.
// Antiparallel pairs (u,v) and (v,u) are distinct edges. The incident index
// lists edge ids touching each vertex in both orientations, so
// incident[v].size() is deg(v) in the sense used by the degree bounds.
struct DiGraph {
    std::uint32_t n_vertices = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::vector<EdgeId>> incident;

    std::size_t n_edges() const { return edges.size(); }

    Vertex other_end(EdgeId e, Vertex v) const {
        const auto& [u, w] = edges[e];
        return v == u ? w : u;
    }
};

inline DiGraph make_digraph(std::uint32_t n_vertices,
                            std::vector<std::pair<Vertex, Vertex>> edge_list) {
    if (n_vertices == 0)
        throw std::invalid_argument("make_digraph: need at least 1 vertex");
    DiGraph g;
    g.n_vertices = n_vertices;
    for (const auto& [u, v] : edge_list) {
        if (u >= n_vertices || v >= n_vertices)
            throw std::invalid_argument("make_digraph: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("make_digraph: self-loop not allowed");
    }
    std::vector<std::uint64_t> keys(edge_list.size());
    for (std::size_t i = 0; i < edge_list.size(); ++i)
        keys[i] = static_cast<std::uint64_t>(edge_list[i].first) * n_vertices +
                  edge_list[i].second;
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw std::invalid_argument("make_digraph: duplicate directed edge");
    g.edges = std::move(edge_list);
    g.incident.resize(n_vertices);
    for (EdgeId e = 0; e < g.edges.size(); ++e) {
        g.incident[g.edges[e].first].push_back(e);
        g.incident[g.edges[e].second].push_back(e);
    }
    return g;
}

// All n(n-1) ordered pairs (u,v), u != v.
inline DiGraph complete_digraph(std::uint32_t n) {
    if (n < 2)
        throw std::invalid_argument("complete_digraph: need at least 2 vertices");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) edges.emplace_back(u, v);
    return make_digraph(n, std::move(edges));
}

// Points of {0..side-1}^dim, edges between unit-distance neighbours oriented
// from the coordinatewise-smaller vertex to the larger. Vertex index is
// row-major with the first coordinate most significant.
inline DiGraph lattice_digraph(std::uint32_t side, std::uint32_t dim) {
    if (side < 2 || dim < 1)
        throw std::invalid_argument("lattice_digraph: need side >= 2 and dim >= 1");
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < dim; ++i) {
        n *= side;
        if (n > 1000000)
            throw std::length_error("lattice_digraph: more than 10^6 vertices");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::uint32_t> coord(dim, 0);
    for (Vertex v = 0; v < n; ++v) {
        std::uint64_t stride = 1; // stride of coordinate i is side^(dim-1-i)
        for (std::uint32_t i = dim; i-- > 0;) {
            if (coord[i] + 1 < side)
                edges.emplace_back(v, static_cast<Vertex>(v + stride));
            stride *= side;
        }
        // odometer increment, last coordinate fastest
        for (std::uint32_t i = dim; i-- > 0;) {
            if (++coord[i] < side) break;
            coord[i] = 0;
        }
    }
    return make_digraph(static_cast<std::uint32_t>(n), std::move(edges));
}

inline std::uint32_t max_degree(const DiGraph& g) {
    std::size_t best = 0;
    for (const auto& inc : g.incident) best = std::max(best, inc.size());
    return static_cast<std::uint32_t>(best);
}

// Greedy maximal independent set in vertex-index order. No edge in either
// orientation joins two members; size >= n / (max_degree + 1).
inline VertexSet greedy_independent_set(const DiGraph& g) {
    VertexSet set;
    std::vector<char> blocked(g.n_vertices, 0);
    for (Vertex v = 0; v < g.n_vertices; ++v) {
        if (blocked[v]) continue;
        set.push_back(v);
        for (EdgeId e : g.incident[v]) blocked[g.other_end(e, v)] = 1;
    }
    return set;
}

// Connectivity of the underlying undirected graph.
inline bool is_connected(const DiGraph& g) {
    if (g.n_vertices == 0) return true;
    std::vector<char> seen(g.n_vertices, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident[v]) {
            const Vertex w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == g.n_vertices;
}

// Edge-list text format: "n_vertices m_edges\n" then one "u v\n" per edge,
// 0-based, in edge order. store/load round-trips bit-exactly.
inline void store_edge_list(const DiGraph& g, std::ostream& out) {
    out << g.n_vertices << ' ' << g.edges.size() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

inline DiGraph load_edge_list(std::istream& in) {
    std::uint32_t n = 0;
    std::size_t m = 0;
    if (!(in >> n >> m))
        throw std::invalid_argument("load_edge_list: bad header line");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Vertex u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("load_edge_list: truncated edge list");
        edges.emplace_back(u, v);
    }
    return make_digraph(n, std::move(edges));
}

inline std::string edge_list_text(const DiGraph& g) {
    std::ostringstream out;
    store_edge_list(g, out);
    return out.str();
}

} // namespace gsync
