#include "addspan/shortest_paths.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace addspan {

std::vector<VertexId> SsspResult::path_to(const Graph& g, VertexId target) const {
    std::vector<VertexId> out;
    if (dist[target] == kInf) return out;
    VertexId v = target;
    out.push_back(v);
    while (v != source) {
        EdgeId e = parent_edge[v];
        v = g.other_endpoint(e, v);
        out.push_back(v);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

SsspResult dijkstra(const Graph& g, VertexId source, const EdgeSet* edge_filter) {
    VertexId n = g.num_vertices();
    SsspResult r{source, std::vector<Weight>(n, kInf), std::vector<EdgeId>(n, kNone)};
    r.dist[source] = 0;

    using Item = std::pair<Weight, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, source});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > r.dist[v]) continue;  // stale entry
        for (const AdjEntry& a : g.neighbors(v)) {
            if (edge_filter && !edge_filter->contains(a.edge)) continue;
            Weight nd = d + a.w;
            if (nd < r.dist[a.to]) {
                r.dist[a.to] = nd;
                r.parent_edge[a.to] = a.edge;
                pq.push({nd, a.to});
            }
        }
    }
    return r;
}

BottleneckResult bottleneck_dijkstra(const Graph& g, VertexId source) {
    VertexId n = g.num_vertices();
    BottleneckResult r{source, std::vector<Weight>(n, kInf), std::vector<Weight>(n, kInf),
                       std::vector<EdgeId>(n, kNone)};
    r.dist[source] = 0;
    r.bottleneck[source] = 0;

    using Item = std::tuple<Weight, Weight, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, 0, source});
    while (!pq.empty()) {
        auto [d, b, v] = pq.top();
        pq.pop();
        if (d > r.dist[v] || (d == r.dist[v] && b > r.bottleneck[v])) continue;
        for (const AdjEntry& a : g.neighbors(v)) {
            Weight nd = d + a.w;
            Weight nb = std::max(b, a.w);
            if (nd < r.dist[a.to] || (nd == r.dist[a.to] && nb < r.bottleneck[a.to])) {
                r.dist[a.to] = nd;
                r.bottleneck[a.to] = nb;
                r.parent_edge[a.to] = a.edge;
                pq.push({nd, nb, a.to});
            }
        }
    }
    return r;
}

std::vector<Weight> tree_bottlenecks(const Graph& g, const SsspResult& tree) {
    VertexId n = g.num_vertices();
    std::vector<Weight> out(n, kInf);
    // Parents have strictly smaller distance (positive weights), so a sweep in
    // distance order sees each parent before its children.
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return tree.dist[a] < tree.dist[b]; });
    for (VertexId v : order) {
        if (tree.dist[v] == kInf) break;
        if (v == tree.source) {
            out[v] = 0;
            continue;
        }
        EdgeId e = tree.parent_edge[v];
        VertexId u = g.other_endpoint(e, v);
        out[v] = std::max(out[u], g.edge(e).w);
    }
    return out;
}

ApspResult apsp(const Graph& g, VertexId cap) {
    if (g.num_vertices() > cap)
        throw std::invalid_argument("apsp: n=" + std::to_string(g.num_vertices()) +
                                    " exceeds cap=" + std::to_string(cap) + "; raise the cap explicitly");
    ApspResult r;
    r.rows.reserve(g.num_vertices());
    for (VertexId s = 0; s < g.num_vertices(); ++s) r.rows.push_back(bottleneck_dijkstra(g, s));
    return r;
}

}  // namespace addspan
