#include "addspan/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace addspan {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph Graph::from_edges(VertexId n, std::vector<Edge> edges) {
    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    g.edges_.reserve(edges.size());
    g.index_.reserve(edges.size() * 2);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("edge " + std::to_string(i) + ": vertex id out of range");
        if (e.u == e.v)
            throw std::invalid_argument("edge " + std::to_string(i) + ": self-loop");
        if (!(e.w > 0) || e.w == kInf)
            throw std::invalid_argument("edge " + std::to_string(i) + ": weight must be positive and finite");
        auto [it, fresh] = g.index_.emplace(pair_key(e.u, e.v), static_cast<EdgeId>(i));
        if (!fresh)
            throw std::invalid_argument("edge " + std::to_string(i) + ": duplicate of edge " +
                                        std::to_string(it->second));
        EdgeId id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back(e);
        g.adj_[e.u].push_back({e.v, e.w, id});
        g.adj_[e.v].push_back({e.u, e.w, id});
        g.w_max_ = std::max(g.w_max_, e.w);
    }
    return g;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_ || u == v) return std::nullopt;
    auto it = index_.find(pair_key(u, v));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace addspan
