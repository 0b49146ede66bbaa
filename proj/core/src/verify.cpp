#include "addspan/verify.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "addspan/light_init.hpp"
#include "addspan/sampling.hpp"
#include "addspan/shortest_paths.hpp"

namespace addspan {

Weight StretchBound::value(Weight w_st, Weight w_max) const {
    switch (kind) {
        case BoundKind::six_w: return 6 * w_st;
        case BoundKind::two_w_subset: return 2 * w_st;
        case BoundKind::max_6w_2wmax: return std::max(6 * w_st, 2 * w_max);
        case BoundKind::four_w_eps_wmax: return 4 * w_st + (2 + epsilon) * w_max;
        case BoundKind::max_4w_2wmax: return std::max(4 * w_st, 2 * w_max);
        case BoundKind::custom: return coeff_w * w_st + coeff_wmax * w_max;
    }
    return 0;
}

std::string StretchBound::name() const {
    switch (kind) {
        case BoundKind::six_w: return "6w";
        case BoundKind::two_w_subset: return "2w-subset";
        case BoundKind::max_6w_2wmax: return "max-6w-2wmax";
        case BoundKind::four_w_eps_wmax: return "4w-eps-wmax(" + std::to_string(epsilon) + ")";
        case BoundKind::max_4w_2wmax: return "max-4w-2wmax";
        case BoundKind::custom:
            return "custom(" + std::to_string(coeff_w) + "," + std::to_string(coeff_wmax) + ")";
    }
    return "?";
}

std::size_t StretchReport::tree_violations() const {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(),
                      [](const Violation& v) { return v.violates_tree_bound; }));
}

StretchReport verify_stretch(const Graph& g, const EdgeSet& spanner, const StretchBound& bound,
                             std::span<const VertexId> subset, VertexId apsp_cap) {
    if (bound.kind == BoundKind::two_w_subset && subset.empty())
        throw std::invalid_argument("verify_stretch: the subsetwise bound needs a subset");
    if (g.num_vertices() > apsp_cap)
        throw std::invalid_argument("verify_stretch: n=" + std::to_string(g.num_vertices()) +
                                    " exceeds cap=" + std::to_string(apsp_cap) +
                                    "; raise the cap explicitly");
    for (VertexId v : subset)
        if (v >= g.num_vertices()) throw std::invalid_argument("verify_stretch: subset vertex out of range");

    std::vector<VertexId> all;
    if (subset.empty()) {
        all.resize(g.num_vertices());
        std::iota(all.begin(), all.end(), VertexId{0});
    }
    std::span<const VertexId> vertices = subset.empty() ? std::span<const VertexId>(all) : subset;

    StretchReport rep;
    rep.bound = bound;
    Weight w_max = g.w_max();
    for (std::size_t si = 0; si < vertices.size(); ++si) {
        VertexId s = vertices[si];
        BottleneckResult brow = bottleneck_dijkstra(g, s);
        SsspResult tree = dijkstra(g, s);
        std::vector<Weight> tb = tree_bottlenecks(g, tree);
        SsspResult hrow = dijkstra(g, s, &spanner);
        for (std::size_t ti = si + 1; ti < vertices.size(); ++ti) {
            VertexId t = vertices[ti];
            Weight d_g = brow.dist[t];
            if (d_g == kInf) {
                ++rep.pairs_skipped;
                continue;
            }
            ++rep.pairs_checked;
            Weight d_h = hrow.dist[t];
            Weight w_st = brow.bottleneck[t];
            Weight w_tree = tb[t];
            Weight excess = d_h == kInf ? kInf : d_h - d_g;
            assert(excess >= 0);
            Weight bv = bound.value(w_st, w_max);
            Weight slack = 1e-9 * (1.0 + d_g);
            double ratio = excess <= 0 ? 0.0 : (bv > 0 ? excess / bv : kInf);
            rep.max_excess = std::max(rep.max_excess, excess);
            rep.max_excess_ratio = std::max(rep.max_excess_ratio, ratio);
            if (excess > bv + slack) {
                Weight bv_tree = bound.value(w_tree, w_max);
                rep.violations.push_back(
                    {s, t, d_g, d_h, w_st, w_tree, excess, excess > bv_tree + slack});
            }
        }
    }
    return rep;
}

double size_ratio(std::size_t edges, VertexId n, unsigned exp_num, unsigned exp_den,
                  unsigned polylog_power) {
    if (n < 2) throw std::invalid_argument("size_ratio: need n >= 2");
    double denom = std::pow(static_cast<double>(n), static_cast<double>(exp_num) / exp_den) *
                   std::pow(std::log2(static_cast<double>(n)), static_cast<double>(polylog_power));
    return static_cast<double>(edges) / denom;
}

LemmaRates verify_sampling_lemmas(std::size_t trials, VertexId n, std::size_t d, std::size_t l,
                                  std::uint64_t seed, double gnp_p) {
    if (n < 2 || d == 0 || l == 0 || trials == 0)
        throw std::invalid_argument("verify_sampling_lemmas: need n >= 2, d >= 1, l >= 1, trials >= 1");

    Graph g = generate_gnp(n, gnp_p, 1.0, 10.0, detail::mix64(seed ^ 0xA5A5A5A5ull));
    SpannerBuild h = d_light_init(g, d);

    // Canonical pair: the one whose tree shortest path crosses the most
    // missing edges; all trial events refer to this fixed path.
    std::vector<VertexId> best_path;
    std::size_t best_missing = 0;
    VertexId bs = 0, bt = 0;
    for (VertexId s = 0; s < n; ++s) {
        SsspResult tree = dijkstra(g, s);
        for (VertexId t = s + 1; t < n; ++t) {
            if (tree.dist[t] == kInf) continue;
            std::vector<VertexId> path = tree.path_to(g, t);
            std::size_t miss = h.count_missing_on_path(path);
            if (best_path.empty() || miss > best_missing) {
                best_path = std::move(path);
                best_missing = miss;
                bs = s;
                bt = t;
            }
        }
    }

    LemmaRates rates;
    rates.trials = trials;
    rates.threshold = 1.0 - 5.0 / n;
    rates.s = bs;
    rates.t = bt;
    rates.path_missing = best_missing;

    std::vector<VertexId> heavy;
    for (VertexId v = 0; v < n; ++v)
        if (g.is_d_heavy(v, d)) heavy.push_back(v);

    Weight w_path = 0;
    std::vector<VertexId> missing_endpoints;
    std::vector<char> nbhd(n, 0);
    for (std::size_t i = 0; i < best_path.size(); ++i) {
        VertexId v = best_path[i];
        nbhd[v] = 1;
        for (const AdjEntry& a : g.neighbors(v)) nbhd[a.to] = 1;
        if (i == 0) continue;
        EdgeId e = *g.find_edge(best_path[i - 1], v);
        w_path = std::max(w_path, g.edge(e).w);
        if (h.missing(e)) {
            missing_endpoints.push_back(best_path[i - 1]);
            missing_endpoints.push_back(v);
        }
    }
    std::size_t nbhd_size = static_cast<std::size_t>(std::count(nbhd.begin(), nbhd.end(), 1));

    // A vertex of the path with a light H-edge of weight <= W into the sample.
    auto light_hit = [&](VertexId u, const std::vector<char>& sampled) {
        for (const AdjEntry& a : g.neighbors(u))
            if (h.contains(a.edge) && a.w <= w_path && sampled[a.to]) return true;
        return false;
    };
    auto to_bitmap = [&](const std::vector<VertexId>& ids) {
        std::vector<char> bm(n, 0);
        for (VertexId v : ids) bm[v] = 1;
        return bm;
    };

    double heavy_rate = rate_heavy_hit(n, d);
    double nbhd_rate = std::min(1.0, std::log(static_cast<double>(n)) / std::max<std::size_t>(1, nbhd_size));
    double path_rate = rate_path_hit(n, d, static_cast<double>(std::max<std::size_t>(1, std::min(l, best_missing))));

    std::size_t ok_heavy = 0, ok_nbhd = 0, ok_vertex = 0, ok_path = 0;
    for (std::size_t k = 0; k < trials; ++k) {
        std::string suffix = std::to_string(k);
        auto s1 = to_bitmap(sample_vertices(n, {heavy_rate, seed, "L1_" + suffix}));
        bool all_heavy = true;
        for (VertexId u : heavy) {
            bool hit = s1[u] != 0;
            for (const AdjEntry& a : g.neighbors(u)) {
                if (hit) break;
                hit = s1[a.to] != 0;
            }
            if (!hit) {
                all_heavy = false;
                break;
            }
        }
        if (all_heavy) ++ok_heavy;

        auto s2 = to_bitmap(sample_vertices(n, {nbhd_rate, seed, "L2_" + suffix}));
        bool nb = false;
        for (VertexId v = 0; v < n && !nb; ++v) nb = nbhd[v] && s2[v];
        if (nb || best_path.empty()) ++ok_nbhd;

        auto s3 = to_bitmap(sample_vertices(n, {heavy_rate, seed, "L3_" + suffix}));
        bool all_eps = true;
        for (VertexId u : missing_endpoints)
            if (!light_hit(u, s3)) {
                all_eps = false;
                break;
            }
        if (all_eps) ++ok_vertex;

        auto s4 = to_bitmap(sample_vertices(n, {path_rate, seed, "L4_" + suffix}));
        bool any = best_missing == 0;  // vacuous: nothing to repair
        for (std::size_t i = 0; i < best_path.size() && !any; ++i) any = light_hit(best_path[i], s4);
        if (any) ++ok_path;
    }

    rates.heavy_hit = static_cast<double>(ok_heavy) / trials;
    rates.nbhd_hit = static_cast<double>(ok_nbhd) / trials;
    rates.vertex_hit = static_cast<double>(ok_vertex) / trials;
    rates.path_hit = static_cast<double>(ok_path) / trials;
    return rates;
}

}  // namespace addspan
