#pragma once

#include <vector>

#include "addspan/graph.hpp"

namespace addspan {

struct SsspResult {
    VertexId source = 0;
    std::vector<Weight> dist;          // kInf if unreachable
    std::vector<EdgeId> parent_edge;   // kNone at the source and unreachable vertices

    // Vertex sequence source..target; empty if unreachable, {source} if equal.
    std::vector<VertexId> path_to(const Graph& g, VertexId target) const;
};

// Ties on distance settle the smaller vertex id first; relaxations improve
// strictly, so parents (and paths) are deterministic. With `edge_filter` only
// edges in the set are traversed.
SsspResult dijkstra(const Graph& g, VertexId source, const EdgeSet* edge_filter = nullptr);

struct BottleneckResult {
    VertexId source = 0;
    std::vector<Weight> dist;
    std::vector<Weight> bottleneck;    // min over shortest paths of the max edge weight; 0 at source
    std::vector<EdgeId> parent_edge;   // tree realizing (dist, bottleneck) per vertex
};

// Lexicographic Dijkstra on (distance, bottleneck). The max-edge combine is
// monotone, so extending an optimal prefix stays optimal.
BottleneckResult bottleneck_dijkstra(const Graph& g, VertexId source);

// Max edge weight along the parent-tree path of `tree` to each vertex.
// 0 at the source, kInf where unreachable.
std::vector<Weight> tree_bottlenecks(const Graph& g, const SsspResult& tree);

struct ApspResult {
    std::vector<BottleneckResult> rows;  // row s = bottleneck_dijkstra(g, s)
};

// Quadratic memory; refuses graphs above `cap` so accidental large runs fail loudly.
ApspResult apsp(const Graph& g, VertexId cap = 2000);

}  // namespace addspan
