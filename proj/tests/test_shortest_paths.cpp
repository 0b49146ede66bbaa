#include <doctest.h>

#include <random>
#include <stdexcept>

#include "addspan/shortest_paths.hpp"
#include "oracles.hpp"

using namespace addspan;

namespace {

// 0-1(2) 1-2(2) 0-2(5) 2-3(1) 1-3(4) 3-4(3); unique shortest paths from 0.
Graph fixture_a() {
    return Graph::from_edges(
        5, {{0, 1, 2.0}, {1, 2, 2.0}, {0, 2, 5.0}, {2, 3, 1.0}, {1, 3, 4.0}, {3, 4, 3.0}});
}

// Two shortest 0-3 paths of length 4: via 1 (max edge 2) and via 2 (max edge 3).
Graph fixture_tie() {
    return Graph::from_edges(4, {{0, 1, 2.0}, {1, 3, 2.0}, {0, 2, 1.0}, {2, 3, 3.0}});
}

}  // namespace

TEST_CASE("dijkstra distances on a hand-checked instance") {
    Graph g = fixture_a();
    SsspResult r = dijkstra(g, 0);
    CHECK(r.dist == std::vector<Weight>{0, 2, 4, 5, 8});
    CHECK(r.path_to(g, 4) == std::vector<VertexId>{0, 1, 2, 3, 4});
    CHECK(r.path_to(g, 0) == std::vector<VertexId>{0});
    CHECK(r.parent_edge[0] == kNone);
}

TEST_CASE("dijkstra handles unreachable vertices") {
    Graph g = Graph::from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    SsspResult r = dijkstra(g, 0);
    CHECK(r.dist[1] == 1.0);
    CHECK(r.dist[2] == kInf);
    CHECK(r.parent_edge[3] == kNone);
    CHECK(r.path_to(g, 3).empty());
}

TEST_CASE("filtered dijkstra equals dijkstra on the induced subgraph") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_connected(24, 30, 1.0, 10.0, rng);
        EdgeSet keep(g.num_edges());
        std::vector<Edge> kept_edges;
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (rng() % 3 != 0) {
                keep.insert(e);
                kept_edges.push_back(g.edge(e));
            }
        Graph sub = Graph::from_edges(g.num_vertices(), std::move(kept_edges));
        SsspResult filtered = dijkstra(g, 0, &keep);
        SsspResult direct = dijkstra(sub, 0);
        CHECK(filtered.dist == direct.dist);
    }
}

TEST_CASE("dijkstra agrees with Bellman-Ford exactly on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracle::random_connected(40, 80, 1.0, 10.0, rng);
        VertexId s = static_cast<VertexId>(rng() % g.num_vertices());
        SsspResult r = dijkstra(g, s);
        CHECK(r.dist == oracle::bellman_ford(g, s));
        // Reconstructed paths re-sum to the reported distance, term for term.
        for (VertexId t = 0; t < g.num_vertices(); ++t) {
            if (r.dist[t] == kInf || t == s) continue;
            std::vector<VertexId> p = r.path_to(g, t);
            REQUIRE(p.size() >= 2);
            CHECK(p.front() == s);
            CHECK(p.back() == t);
            CHECK(oracle::path_weight(g, p) == r.dist[t]);
        }
    }
}

TEST_CASE("dijkstra agrees with Floyd-Warshall on integer weights") {
    std::mt19937_64 rng(13);
    Graph g = oracle::weighted_from_pairs(oracle::complete_pairs(16), 16, rng,
                                          /*integer_weights=*/true);
    auto fw = oracle::floyd_warshall(g);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        SsspResult r = dijkstra(g, s);
        CHECK(r.dist == fw[s]);
    }
}

TEST_CASE("bottleneck dijkstra on hand-checked instances") {
    Graph g = fixture_a();
    BottleneckResult r = bottleneck_dijkstra(g, 0);
    CHECK(r.dist == std::vector<Weight>{0, 2, 4, 5, 8});
    CHECK(r.bottleneck == std::vector<Weight>{0, 2, 2, 2, 3});

    Graph tie = fixture_tie();
    BottleneckResult rt = bottleneck_dijkstra(tie, 0);
    CHECK(rt.dist[3] == 4.0);
    CHECK(rt.bottleneck[3] == 2.0);  // the lighter of the two tied paths
}

TEST_CASE("a plain dijkstra tree can realize a worse bottleneck than the optimum") {
    Graph tie = fixture_tie();
    SsspResult tree = dijkstra(tie, 0);
    std::vector<Weight> tb = tree_bottlenecks(tie, tree);
    // The tree settles 2 first (distance 1) and keeps parent edge 2-3 for
    // vertex 3, whose max edge is 3; the optimum over shortest paths is 2.
    CHECK(tb[3] == 3.0);
    CHECK(bottleneck_dijkstra(tie, 0).bottleneck[3] == 2.0);
}

TEST_CASE("bottleneck equals exhaustive minimum over shortest paths") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_connected(8, 6, 1.0, 6.0, rng);
        BottleneckResult r = bottleneck_dijkstra(g, 0);
        SsspResult plain = dijkstra(g, 0);
        for (VertexId t = 1; t < g.num_vertices(); ++t) {
            CHECK(r.dist[t] == plain.dist[t]);
            CHECK(r.bottleneck[t] == oracle::min_bottleneck_over_shortest(g, 0, t));
        }
    }
}

TEST_CASE("tree_bottlenecks matches a per-vertex parent walk") {
    std::mt19937_64 rng(19);
    Graph g = oracle::random_connected(30, 45, 1.0, 10.0, rng);
    for (VertexId s : {VertexId{0}, VertexId{7}, VertexId{29}}) {
        SsspResult tree = dijkstra(g, s);
        std::vector<Weight> tb = tree_bottlenecks(g, tree);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            if (tree.dist[v] == kInf) {
                CHECK(tb[v] == kInf);
                continue;
            }
            Weight want = 0;
            VertexId cur = v;
            while (cur != s) {
                EdgeId e = tree.parent_edge[cur];
                want = std::max(want, g.edge(e).w);
                cur = g.other_endpoint(e, cur);
            }
            CHECK(tb[v] == want);
        }
    }
}

TEST_CASE("apsp rows equal per-source runs and the cap trips") {
    std::mt19937_64 rng(23);
    Graph g = oracle::random_connected(12, 10, 1.0, 5.0, rng);
    ApspResult all = apsp(g);
    REQUIRE(all.rows.size() == 12);
    for (VertexId s = 0; s < 12; ++s) {
        BottleneckResult row = bottleneck_dijkstra(g, s);
        CHECK(all.rows[s].dist == row.dist);
        CHECK(all.rows[s].bottleneck == row.bottleneck);
    }
    CHECK_THROWS_AS(apsp(g, 11), std::invalid_argument);
}
