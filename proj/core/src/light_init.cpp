#include "addspan/light_init.hpp"

#include <algorithm>
#include <stdexcept>

namespace addspan {

namespace {

EdgeId edge_between(const Graph& g, VertexId a, VertexId b) {
    auto e = g.find_edge(a, b);
    if (!e)
        throw std::invalid_argument("path step " + std::to_string(a) + "-" + std::to_string(b) +
                                    " is not an edge of the base graph");
    return *e;
}

}  // namespace

std::size_t SpannerBuild::add_path(std::span<const VertexId> path) {
    std::size_t added = 0;
    for (std::size_t i = 1; i < path.size(); ++i)
        if (add_edge(edge_between(*base_, path[i - 1], path[i]))) ++added;
    return added;
}

std::size_t SpannerBuild::count_missing_on_path(std::span<const VertexId> path) const {
    std::size_t missing_count = 0;
    for (std::size_t i = 1; i < path.size(); ++i)
        if (missing(edge_between(*base_, path[i - 1], path[i]))) ++missing_count;
    return missing_count;
}

SpannerBuild d_light_init(const Graph& g, std::size_t d) {
    SpannerBuild sb(g, d);
    if (d == 0) return sb;
    std::vector<EdgeId> incident;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        incident.clear();
        for (const AdjEntry& a : g.neighbors(v)) incident.push_back(a.edge);
        std::size_t keep = std::min(d, incident.size());
        std::partial_sort(incident.begin(), incident.begin() + keep, incident.end(),
                          [&](EdgeId x, EdgeId y) {
                              Weight wx = g.edge(x).w, wy = g.edge(y).w;
                              return wx < wy || (wx == wy && x < y);
                          });
        for (std::size_t i = 0; i < keep; ++i) sb.add_edge(incident[i]);
    }
    return sb;
}

}  // namespace addspan
