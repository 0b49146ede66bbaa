#include <stdexcept>

#include "addspan/graph.hpp"
#include "addspan/sampling.hpp"

namespace addspan {

Graph generate_gnp(VertexId n, double p, Weight w_min, Weight w_max, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("generate_gnp: p must lie in [0,1]");
    if (!(w_min > 0) || !(w_min <= w_max)) throw std::invalid_argument("generate_gnp: need 0 < w_min <= w_max");

    // One sequential splitmix64 stream; presence and weight draws interleave,
    // so the instance is a pure function of the parameter tuple.
    std::uint64_t state = detail::mix64(seed ^ 0xD6E8FEB86659FD93ull);
    auto next01 = [&state] {
        state = detail::mix64(state);
        return detail::uniform01(state);
    };

    std::vector<Edge> edges;
    for (VertexId u = 0; u + 1 < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (next01() >= p) continue;
            Weight w = w_min + next01() * (w_max - w_min);
            edges.push_back({u, v, w});
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace addspan
