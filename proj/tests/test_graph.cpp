#include <random>

#include "doctest.h"
#include "sparsedom/generators.hpp"
#include "sparsedom/graph.hpp"
#include "test_helpers.hpp"

using namespace sparsedom;

TEST_CASE("bfs distances truncate at the cap") {
    Graph p5 = make_path(5);
    CHECK(bfs_distances(p5, 2, 1) == std::map<Vertex, int>{{1, 1}, {2, 0}, {3, 1}});
    CHECK(bfs_distances(p5, 0, 0) == std::map<Vertex, int>{{0, 0}});
    Graph c6 = make_cycle(6);
    CHECK(bfs_distances(c6, 0, 2) ==
          std::map<Vertex, int>{{0, 0}, {1, 1}, {5, 1}, {2, 2}, {4, 2}});
    CHECK_THROWS_AS(bfs_distances(p5, 9, 1), std::out_of_range);
}

TEST_CASE("balls contain their center and grow with the radius") {
    Graph star = make_star(4);
    CHECK(ball(star, 0, 1) == VertexSet::full(5));
    Graph p5 = make_path(5);
    CHECK(ball(p5, 0, 2) == VertexSet{0, 1, 2});
    CHECK(ball(p5, 0, 10) == VertexSet::full(5));  // radius beyond the diameter
    for (int v = 0; v < 5; ++v) {
        for (int d = 0; d < 4; ++d) {
            CHECK(is_subset(ball(p5, v, d), ball(p5, v, d + 1)));
        }
    }
}

TEST_CASE("deletion compacts and keeps a two-way remap") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    auto res = remove_vertices(k3, VertexSet{1});
    CHECK(res.graph.vertex_count() == 2);
    CHECK(res.graph.edge_count() == 1);
    CHECK(res.to_old(VertexSet{0, 1}) == VertexSet{0, 2});

    Graph g = make_path(4);
    auto same = remove_vertices(g, {});
    CHECK(same.graph == g);
    CHECK(same.to_new(VertexSet{0, 3}) == VertexSet{0, 3});

    Graph star = make_star(5);
    auto leaves = remove_vertices(star, VertexSet{0});
    CHECK(leaves.graph.vertex_count() == 5);
    CHECK(leaves.graph.edge_count() == 0);
}

TEST_CASE("powers join exactly the short-distance pairs") {
    Graph p3 = make_path(3);
    Graph k3 = power(p3, 2);
    CHECK(k3.edge_count() == 3);

    Graph p5 = make_path(5);
    CHECK(power(p5, 1) == p5);

    // Every pair in the square of a 6-cycle sits at distance 1 or 2; checked
    // against plain all-pairs distances.
    Graph c6 = make_cycle(6);
    Graph sq = power(c6, 2);
    auto dist = testref::all_pairs_floyd(c6);
    for (int u = 0; u < 6; ++u) {
        CHECK(sq.degree(u) == 4);
        for (int v = u + 1; v < 6; ++v) {
            CHECK(sq.has_edge(u, v) == (dist[u][v] >= 1 && dist[u][v] <= 2));
        }
    }
}

TEST_CASE("scattering matches the ball-disjointness definition") {
    Graph c12 = make_cycle(12);
    CHECK(is_scattered(c12, VertexSet{0, 4, 8}, 1));
    CHECK_FALSE(is_scattered(c12, VertexSet{0, 4, 8}, 2));
    CHECK(is_scattered(c12, VertexSet{3}, 5));
    CHECK(is_scattered(c12, {}, 3));
}

TEST_CASE("domination predicate") {
    Graph star = make_star(4);
    CHECK(dominates(star, VertexSet{0}, VertexSet::full(5), 1));
    Graph p5 = make_path(5);
    CHECK(dominates(p5, VertexSet{1, 3}, VertexSet::full(5), 1));
    CHECK_FALSE(dominates(p5, VertexSet{1}, VertexSet::full(5), 1));
    CHECK(dominates(p5, {}, {}, 1));
}

TEST_CASE("distance axioms on sampled graphs") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Graph g = testref::random_gnp(12, 0.3, seed);
        auto dist = testref::all_pairs_floyd(g);
        AllPairsCache cache(g);
        for (int u = 0; u < 12; ++u) {
            for (int v = 0; v < 12; ++v) {
                int expected = dist[u][v] >= testref::kInf ? -1 : dist[u][v];
                CHECK(cache.distance(u, v) == expected);
                CHECK(cache.distance(u, v) == cache.distance(v, u));
                for (int w = 0; w < 12; ++w) {
                    if (dist[u][w] < testref::kInf && dist[w][v] < testref::kInf) {
                        CHECK(dist[u][v] <= dist[u][w] + dist[w][v]);
                    }
                }
            }
        }
    }
}

TEST_CASE("scattering and domination transfer to the power graph") {
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = testref::random_gnp(5 + static_cast<int>(seed * 5 % 36), 0.2, seed * 17);
        const int n = g.vertex_count();
        for (int r : {1, 2}) {
            Graph pw = power(g, 2 * r);
            Graph pd = power(g, r);
            for (int trial = 0; trial < 6; ++trial) {
                std::vector<Vertex> ids;
                for (int v = 0; v < n; ++v) {
                    if (rng() % 4 == 0) ids.push_back(v);
                }
                VertexSet a(ids);
                bool independent = true;
                for (Vertex u : a) {
                    for (Vertex v : a) {
                        if (u < v && pw.has_edge(u, v)) independent = false;
                    }
                }
                CHECK(is_scattered(g, a, r) == independent);

                std::vector<Vertex> wids;
                for (int v = 0; v < n; ++v) {
                    if (rng() % 3 == 0) wids.push_back(v);
                }
                VertexSet w(wids);
                CHECK(dominates(g, a, w, r) == dominates(pd, a, w, 1));
            }
        }
    }
}

TEST_CASE("graph construction rejects malformed edges") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 7), std::out_of_range);
    CHECK(g.edge_count() == 1);
    CHECK(induces_connected(g, VertexSet{0, 1}));
    CHECK_FALSE(induces_connected(g, VertexSet{0, 2}));
}
