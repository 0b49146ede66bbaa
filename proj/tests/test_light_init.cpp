#include <doctest.h>

#include <random>
#include <stdexcept>

#include "addspan/light_init.hpp"
#include "oracles.hpp"

using namespace addspan;

namespace {

// K4 with weights chosen so the per-vertex selections are easy to hand-check.
// ids: 0:0-1(1) 1:0-2(2) 2:0-3(3) 3:1-2(3) 4:2-3(1) 5:1-3(2)
Graph k4() {
    return Graph::from_edges(
        4, {{0, 1, 1.0}, {0, 2, 2.0}, {0, 3, 3.0}, {1, 2, 3.0}, {2, 3, 1.0}, {1, 3, 2.0}});
}

}  // namespace

TEST_CASE("d_light_init keeps each vertex's lightest edges, unioned") {
    Graph g = k4();
    // d=1: 0 and 1 both pick 0-1; 2 and 3 both pick 2-3.
    SpannerBuild h1 = d_light_init(g, 1);
    CHECK(h1.size() == 2);
    CHECK(h1.contains(0));
    CHECK(h1.contains(4));
    CHECK(h1.missing(1));
    CHECK(h1.missing(2));
    CHECK(h1.missing(3));
    CHECK(h1.missing(5));

    // d=2 additionally picks 0-2 (at 0 and 2) and 1-3 (at 1 and 3).
    SpannerBuild h2 = d_light_init(g, 2);
    CHECK(h2.size() == 4);
    CHECK(h2.contains(0));
    CHECK(h2.contains(1));
    CHECK(h2.contains(4));
    CHECK(h2.contains(5));

    // d >= max degree keeps everything.
    CHECK(d_light_init(g, 3).size() == 6);
    CHECK(d_light_init(g, 100).size() == 6);

    // d=0 keeps nothing.
    CHECK(d_light_init(g, 0).size() == 0);
}

TEST_CASE("weight ties break toward the smaller edge id") {
    // 0's two w=5 edges tie; only id 0 is chosen at d=1. Vertices 1 and 2
    // prefer their w=1 edges, so edge 1 (0-2) stays out entirely.
    Graph g = Graph::from_edges(4, {{0, 1, 5.0}, {0, 2, 5.0}, {1, 3, 1.0}, {2, 3, 1.0}});
    SpannerBuild h = d_light_init(g, 1);
    CHECK(h.contains(0));
    CHECK(h.missing(1));
    CHECK(h.contains(2));
    CHECK(h.contains(3));
}

TEST_CASE("light threshold property on random graphs") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = oracle::random_connected(30, 60, 1.0, 10.0, rng);
        std::size_t d = 1 + trial % 4;
        SpannerBuild h = d_light_init(g, d);
        CHECK(h.size() <= g.num_vertices() * d);
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (h.contains(e)) continue;
            // A missing edge means both endpoints kept d strictly lighter
            // (by weight, then id) incident edges in H.
            for (VertexId v : {g.edge(e).u, g.edge(e).v}) {
                CHECK(g.degree(v) > d);
                std::size_t lighter = 0;
                for (const AdjEntry& a : g.neighbors(v))
                    if (h.contains(a.edge) &&
                        (a.w < g.edge(e).w || (a.w == g.edge(e).w && a.edge < e)))
                        ++lighter;
                CHECK(lighter >= d);
            }
        }
        // A vertex of degree <= d keeps all of its edges.
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            if (g.degree(v) > d) continue;
            for (const AdjEntry& a : g.neighbors(v)) CHECK(h.contains(a.edge));
        }
    }
}

TEST_CASE("SpannerBuild add_edge, version and add_path") {
    Graph g = k4();
    SpannerBuild h(g);
    CHECK(h.size() == 0);
    CHECK(h.version() == 0);
    CHECK(h.add_edge(0));
    CHECK(h.version() == 1);
    CHECK(!h.add_edge(0));  // duplicate: no version bump
    CHECK(h.version() == 1);

    std::vector<VertexId> path{0, 2, 3};
    CHECK(h.count_missing_on_path(path) == 2);
    CHECK(h.add_path(path) == 2);
    CHECK(h.count_missing_on_path(path) == 0);
    CHECK(h.size() == 3);
    CHECK(h.version() == 3);

    std::vector<VertexId> not_a_path{0, 1, 0};  // 1-0 exists; 0 repeated is fine for add_path
    CHECK(h.add_path(not_a_path) == 0);
    std::vector<VertexId> broken{0, 1, 1};
    CHECK_THROWS_AS(h.add_path(broken), std::invalid_argument);
    CHECK_THROWS_AS(h.count_missing_on_path(broken), std::invalid_argument);

    std::vector<VertexId> single{2};
    CHECK(h.add_path(single) == 0);
    CHECK(h.add_path({}) == 0);
}

TEST_CASE("d_light_init on graphs without edges") {
    Graph g = Graph::from_edges(3, {});
    SpannerBuild h = d_light_init(g, 2);
    CHECK(h.size() == 0);
    CHECK(h.base().num_vertices() == 3);
}
