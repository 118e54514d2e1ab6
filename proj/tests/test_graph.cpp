#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "gsync/graph.hpp"

using namespace gsync;

namespace {
bool edge_present(const DiGraph& g, Vertex u, Vertex v) {
    for (const auto& [a, b] : g.edges)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

bool set_is_independent(const DiGraph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (edge_present(g, s[i], s[j])) return false;
    return true;
}
} // namespace

TEST_CASE("complete digraphs") {
    const DiGraph k3 = complete_digraph(3);
    CHECK(k3.n_vertices == 3);
    CHECK(k3.n_edges() == 6);

    const DiGraph k2 = complete_digraph(2);
    REQUIRE(k2.n_edges() == 2);
    CHECK(k2.edges[0] == std::pair<Vertex, Vertex>{0, 1});
    CHECK(k2.edges[1] == std::pair<Vertex, Vertex>{1, 0});

    const DiGraph k5 = complete_digraph(5);
    for (Vertex v = 0; v < 5; ++v) CHECK(k5.incident[v].size() == 8);

    for (std::uint32_t n = 2; n <= 50; ++n)
        CHECK(complete_digraph(n).n_edges() == n * (n - 1));

    CHECK_THROWS_AS(complete_digraph(1), std::invalid_argument);
}

TEST_CASE("lattice digraphs") {
    const DiGraph grid = lattice_digraph(3, 2);
    CHECK(grid.n_vertices == 9);
    CHECK(grid.n_edges() == 12);
    CHECK(max_degree(grid) == 4);
    CHECK(is_connected(grid));

    const DiGraph path2 = lattice_digraph(2, 1);
    CHECK(path2.n_vertices == 2);
    REQUIRE(path2.n_edges() == 1);
    CHECK(path2.edges[0] == std::pair<Vertex, Vertex>{0, 1});

    CHECK(max_degree(lattice_digraph(4, 3)) == 6);

    // edge count d*(s-1)*s^(d-1), degree capped at 2d
    for (std::uint32_t s : {2u, 3u, 5u}) {
        for (std::uint32_t d : {1u, 2u, 3u}) {
            const DiGraph g = lattice_digraph(s, d);
            std::uint32_t expect = d * (s - 1);
            for (std::uint32_t i = 1; i < d; ++i) expect *= s;
            CHECK(g.n_edges() == expect);
            CHECK(max_degree(g) <= 2 * d);
        }
    }

    // edges point from smaller to larger coordinates
    const DiGraph path3 = lattice_digraph(3, 1);
    REQUIRE(path3.n_edges() == 2);
    CHECK(path3.edges[0].first < path3.edges[0].second);
    CHECK(path3.edges[1].first < path3.edges[1].second);

    CHECK_THROWS_AS(lattice_digraph(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(lattice_digraph(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(lattice_digraph(101, 3), std::length_error); // 101^3 > 1e6
}

TEST_CASE("degrees") {
    CHECK(max_degree(complete_digraph(4)) == 6);
    CHECK(max_degree(make_digraph(2, {{0, 1}})) == 1);
    CHECK(max_degree(make_digraph(3, {})) == 0);
}

TEST_CASE("greedy independent sets") {
    const VertexSet k5 = greedy_independent_set(complete_digraph(5));
    CHECK(k5 == VertexSet{0});

    const DiGraph grid = lattice_digraph(4, 2);
    const VertexSet cells = greedy_independent_set(grid);
    CHECK(cells.size() >= 8); // checkerboard class attains n^2/2
    CHECK(set_is_independent(grid, cells));

    const VertexSet all7 = greedy_independent_set(make_digraph(7, {}));
    CHECK(all7 == VertexSet{0, 1, 2, 3, 4, 5, 6});

    // greedy guarantee n/(max_degree+1), checked across a small catalog
    for (const DiGraph& g :
         {complete_digraph(6), lattice_digraph(5, 2), lattice_digraph(3, 3)}) {
        const VertexSet s = greedy_independent_set(g);
        CHECK(set_is_independent(g, s));
        CHECK(s.size() * (max_degree(g) + 1) >= g.n_vertices);
        CHECK(std::is_sorted(s.begin(), s.end()));
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(complete_digraph(3)));
    CHECK_FALSE(is_connected(make_digraph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(lattice_digraph(3, 2)));
    CHECK(is_connected(make_digraph(1, {})));
    CHECK_FALSE(is_connected(make_digraph(2, {})));
}

TEST_CASE("digraph construction validates input") {
    CHECK_THROWS_AS(make_digraph(3, {{0, 0}}), std::invalid_argument);        // self-loop
    CHECK_THROWS_AS(make_digraph(3, {{0, 1}, {0, 1}}), std::invalid_argument); // duplicate
    CHECK_THROWS_AS(make_digraph(3, {{0, 3}}), std::invalid_argument);         // out of range
    CHECK_THROWS_AS(make_digraph(0, {}), std::invalid_argument);

    // (u,v) and (v,u) are distinct directed edges
    const DiGraph g = make_digraph(2, {{0, 1}, {1, 0}});
    CHECK(g.n_edges() == 2);
    CHECK(g.other_end(0, 0) == 1);
    CHECK(g.other_end(0, 1) == 0);
}

TEST_CASE("edge list text round trip") {
    const DiGraph k2 = complete_digraph(2);
    CHECK(edge_list_text(k2) == "2 2\n0 1\n1 0\n");

    const DiGraph grid = lattice_digraph(3, 2);
    std::stringstream buf;
    store_edge_list(grid, buf);
    const DiGraph back = load_edge_list(buf);
    CHECK(back.n_vertices == grid.n_vertices);
    CHECK(back.edges == grid.edges);
    CHECK(edge_list_text(back) == edge_list_text(grid));

    std::stringstream bad("2 1\n0 junk\n");
    CHECK_THROWS_AS(load_edge_list(bad), std::invalid_argument);
    std::stringstream short_list("3 2\n0 1\n");
    CHECK_THROWS_AS(load_edge_list(short_list), std::invalid_argument);
}
