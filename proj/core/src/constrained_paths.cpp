#include "addspan/constrained_paths.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

#include "addspan/shortest_paths.hpp"

namespace addspan {

std::optional<ConstrainedPath> MecspTable::path(std::uint32_t layer, VertexId target) const {
    if (layer >= budget_ || target >= n_) throw std::invalid_argument("MecspTable::path: out of range");
    if (dist_[idx(layer, target)] == kInf) return std::nullopt;

    ConstrainedPath out;
    out.weight = dist_[idx(layer, target)];
    std::uint32_t l = layer;
    VertexId v = target;
    out.vertices.push_back(v);
    while (true) {
        std::size_t i = idx(l, v);
        EdgeId pe = pred_edge_[i];
        if (pe == kNone) {
            if (v == source_) break;
            assert(l > 0);  // finite non-source label without an edge inherits from below
            --l;
            continue;
        }
        if (pred_layer_[i] != l) ++out.missing;  // edge charged one layer down
        l = pred_layer_[i];
        v = g_->other_endpoint(pe, v);
        out.vertices.push_back(v);
    }
    std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

MecspTable mecsp(const Graph& g, const SpannerBuild& h, VertexId source, std::uint32_t budget) {
    if (budget == 0) throw std::invalid_argument("mecsp: budget must be >= 1");
    if (source >= g.num_vertices()) throw std::invalid_argument("mecsp: source out of range");
    assert(&h.base() == &g);

    VertexId n = g.num_vertices();
    MecspTable t;
    t.g_ = &g;
    t.n_ = n;
    t.source_ = source;
    t.budget_ = budget;
    std::size_t cells = static_cast<std::size_t>(budget) * n;
    t.dist_.assign(cells, kInf);
    t.pred_edge_.assign(cells, kNone);
    t.pred_layer_.assign(cells, 0);

    SsspResult base = dijkstra(g, source, &h.edges());
    for (VertexId v = 0; v < n; ++v) {
        t.dist_[v] = base.dist[v];
        t.pred_edge_[v] = base.parent_edge[v];
    }

    using Item = std::pair<Weight, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (std::uint32_t l = 1; l < budget; ++l) {
        std::size_t off = t.idx(l, 0);
        std::size_t prev = t.idx(l - 1, 0);
        bool changed = false;

        for (VertexId v = 0; v < n; ++v) t.dist_[off + v] = t.dist_[prev + v];

        // One extra missing edge, charged against the settled layer below.
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (h.contains(e)) continue;
            const Edge& ed = g.edge(e);
            Weight du = t.dist_[prev + ed.u];
            if (du + ed.w < t.dist_[off + ed.v]) {
                t.dist_[off + ed.v] = du + ed.w;
                t.pred_edge_[off + ed.v] = e;
                t.pred_layer_[off + ed.v] = l - 1;
                changed = true;
            }
            Weight dv = t.dist_[prev + ed.v];
            if (dv + ed.w < t.dist_[off + ed.u]) {
                t.dist_[off + ed.u] = dv + ed.w;
                t.pred_edge_[off + ed.u] = e;
                t.pred_layer_[off + ed.u] = l - 1;
                changed = true;
            }
        }

        // Multi-source Dijkstra over H edges from the seeded labels.
        for (VertexId v = 0; v < n; ++v)
            if (t.dist_[off + v] != kInf) pq.push({t.dist_[off + v], v});
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (d > t.dist_[off + v]) continue;
            for (const AdjEntry& a : g.neighbors(v)) {
                if (!h.contains(a.edge)) continue;
                Weight nd = d + a.w;
                if (nd < t.dist_[off + a.to]) {
                    t.dist_[off + a.to] = nd;
                    t.pred_edge_[off + a.to] = a.edge;
                    t.pred_layer_[off + a.to] = l;
                    pq.push({nd, a.to});
                    changed = true;
                }
            }
        }

        // Fixed point: seeding layer l+1 from an unchanged layer reproduces it.
        if (!changed) {
            for (std::uint32_t rest = l + 1; rest < budget; ++rest) {
                std::size_t roff = t.idx(rest, 0);
                for (VertexId v = 0; v < n; ++v) t.dist_[roff + v] = t.dist_[off + v];
            }
            break;
        }
    }
    return t;
}

std::vector<VertexId> WeakCssspResult::path_to(const Graph& g, VertexId target) const {
    std::vector<VertexId> out;
    if (delta_dist[target] == kInf) return out;
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

WeakCssspResult weak_csssp(const Graph& g, const SpannerBuild& h, VertexId source,
                           const ReweightConfig& cfg) {
    if (cfg.budget == 0) throw std::invalid_argument("weak_csssp: budget must be >= 1");
    if (!(cfg.epsilon0 > 0.0 && cfg.epsilon0 < 1.0))
        throw std::invalid_argument("weak_csssp: epsilon0 must lie in (0,1)");
    if (!(cfg.w_max >= 0)) throw std::invalid_argument("weak_csssp: w_max must be >= 0");
    if (source >= g.num_vertices()) throw std::invalid_argument("weak_csssp: source out of range");
    assert(&h.base() == &g);

    VertexId n = g.num_vertices();
    Weight s = cfg.surcharge();
    WeakCssspResult r{source, std::vector<Weight>(n, kInf), std::vector<Weight>(n, kInf),
                      std::vector<EdgeId>(n, kNone)};
    r.delta_dist[source] = 0;
    r.dist[source] = 0;

    using Item = std::pair<Weight, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, source});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > r.delta_dist[v]) continue;
        for (const AdjEntry& a : g.neighbors(v)) {
            Weight wp = h.missing(a.edge) ? a.w + s : a.w;
            Weight nd = d + wp;
            if (nd < r.delta_dist[a.to]) {
                r.delta_dist[a.to] = nd;
                r.dist[a.to] = r.dist[v] + a.w;
                r.parent_edge[a.to] = a.edge;
                pq.push({nd, a.to});
            }
        }
    }
    return r;
}

}  // namespace addspan
