#include "addspan/builders.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "addspan/constrained_paths.hpp"
#include "addspan/sampling.hpp"
#include "addspan/shortest_paths.hpp"

namespace addspan {

std::uint32_t ceil_pow(std::uint64_t n, unsigned num, unsigned den) {
    if (num > den) throw std::invalid_argument("ceil_pow: exponent must be <= 1");
    if (n <= 1) return 1;
    unsigned __int128 target = 1;
    for (unsigned i = 0; i < num; ++i) target *= n;
    auto pow_at_least = [&](std::uint64_t k) {
        unsigned __int128 p = 1;
        for (unsigned i = 0; i < den; ++i) {
            p *= k;
            if (p >= target) return true;  // also dodges overflow on large mids
        }
        return p >= target;
    };
    std::uint64_t lo = 1, hi = n;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (pow_at_least(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return static_cast<std::uint32_t>(lo);
}

std::uint32_t ceil_log2(std::uint64_t n) {
    std::uint32_t k = 0;
    while ((1ull << k) < n) ++k;
    return k;
}

namespace detail {

std::vector<std::size_t> alive_degrees(const Graph& g, const std::vector<char>& alive) {
    std::vector<std::size_t> deg(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!alive[e]) continue;
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    }
    return deg;
}

std::size_t remove_heavy_edges(const Graph& g, std::vector<char>& alive, std::size_t threshold) {
    std::vector<std::size_t> deg = alive_degrees(g, alive);
    std::size_t removed = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!alive[e]) continue;
        if (deg[g.edge(e).u] >= threshold || deg[g.edge(e).v] >= threshold) {
            alive[e] = 0;
            ++removed;
        }
    }
    return removed;
}

Subgraph extract_alive(const Graph& g, const std::vector<char>& alive) {
    Subgraph sub;
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!alive[e]) continue;
        edges.push_back(g.edge(e));
        sub.to_parent.push_back(e);
    }
    sub.graph = Graph::from_edges(g.num_vertices(), std::move(edges));
    return sub;
}

}  // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Records additions into a working-graph spanner and, when the working graph
// is a filtered copy, mirrors them into the output spanner under original ids.
struct MirroredBuild {
    SpannerBuild* local;
    SpannerBuild* master = nullptr;                // nullptr: local is the output
    const std::vector<EdgeId>* to_parent = nullptr;

    SpannerBuild& out() { return master ? *master : *local; }

    void add_edge(EdgeId e) {
        if (local->add_edge(e) && master) master->add_edge(to_parent ? (*to_parent)[e] : e);
    }

    void add_path(std::span<const VertexId> path) {
        const Graph& g = local->base();
        for (std::size_t i = 1; i < path.size(); ++i) add_edge(*g.find_edge(path[i - 1], path[i]));
    }

    void add_tree(const SsspResult& tree) {
        for (VertexId v = 0; v < local->base().num_vertices(); ++v)
            if (tree.parent_edge[v] != kNone) add_edge(tree.parent_edge[v]);
    }
};

void push_phase(BuildReport& rep, const std::string& name, std::size_t before, std::size_t after,
                Clock::time_point t0) {
    rep.phases.push_back({name, after - before, ms_since(t0)});
}

void record_sample(BuildReport& rep, const std::string& label, std::size_t size) {
    rep.sample_sizes.emplace_back(label, size);
}

std::uint32_t clamp_budget(std::uint64_t want, const Graph& g) {
    // A lightest constrained walk repeats no vertex, so budgets beyond n or
    // m+1 produce identical top layers.
    std::uint64_t cap = std::min<std::uint64_t>(g.num_vertices(), g.num_edges() + 1);
    return static_cast<std::uint32_t>(std::max<std::uint64_t>(1, std::min(want, cap)));
}

// Rounds i = 0..ceil(log2 n): sample sources at ln(n)/(d 2^i) and connect each
// to every target through the lightest path with < 2^(i+1) missing edges.
// per_pair reruns the search against the current spanner for every pair (the
// table is reused only while the spanner is unchanged); otherwise one table
// per source serves all targets.
void constrained_rounds(MirroredBuild& mb, std::uint32_t d, std::uint64_t seed,
                        std::span<const VertexId> targets, bool per_pair, BuildReport& rep) {
    const Graph& g = mb.local->base();
    VertexId n = g.num_vertices();
    if (n < 2 || targets.empty()) return;
    std::uint32_t imax = ceil_log2(n);
    for (std::uint32_t i = 0; i <= imax; ++i) {
        double rate = rate_path_hit(n, d, std::ldexp(1.0, static_cast<int>(i)));
        std::string label = "D" + std::to_string(i);
        auto sources = sample_vertices(n, {rate, seed, label});
        record_sample(rep, label, sources.size());
        std::uint32_t budget = clamp_budget(1ull << (i + 1), g);
        for (VertexId v : sources) {
            std::optional<MecspTable> table;
            std::uint64_t version = 0;
            for (VertexId u : targets) {
                if (u == v) continue;
                if (!table || (per_pair && mb.local->version() != version)) {
                    table = mecsp(g, *mb.local, v, budget);
                    version = mb.local->version();
                }
                auto path = table->path(budget - 1, u);
                if (!path) continue;  // no candidate within the budget
                mb.add_path(path->vertices);
            }
        }
    }
}

BuildResult sixw_core(const Graph& g, const BuildParams& params, bool per_pair, const char* name) {
    VertexId n = g.num_vertices();
    std::uint32_t d = params.d_override.value_or(ceil_pow(n, 1, 3));
    if (d == 0) throw std::invalid_argument("d must be >= 1");

    BuildReport rep{name, params.seed, n, g.num_edges()};
    rep.params.emplace_back("d", d);

    auto t0 = Clock::now();
    SpannerBuild h = d_light_init(g, d);
    push_phase(rep, "init", 0, h.size(), t0);

    t0 = Clock::now();
    std::size_t before = h.size();
    if (n >= 2) {
        auto r = sample_vertices(n, {rate_heavy_hit(n, d), params.seed, "R"});
        record_sample(rep, "R", r.size());
        MirroredBuild mb{&h};
        constrained_rounds(mb, d, params.seed, r, per_pair, rep);
    }
    push_phase(rep, "paths", before, h.size(), t0);

    rep.spanner_edges = h.size();
    return {std::move(h), std::move(rep)};
}

}  // namespace

BuildResult build_6w(const Graph& g, const BuildParams& params) {
    return sixw_core(g, params, /*per_pair=*/true, "6w");
}

BuildResult build_6w_fast(const Graph& g, const BuildParams& params) {
    return sixw_core(g, params, /*per_pair=*/false, "6w-fast");
}

BuildResult build_2w_subsetwise(const Graph& g, std::span<const VertexId> subset,
                                const BuildParams& params) {
    VertexId n = g.num_vertices();
    if (subset.empty()) throw std::invalid_argument("build_2w_subsetwise: subset must be nonempty");
    for (VertexId s : subset)
        if (s >= n) throw std::invalid_argument("build_2w_subsetwise: subset vertex out of range");

    std::uint32_t d = params.d_override.value_or(ceil_pow(subset.size(), 1, 2));
    if (d == 0) throw std::invalid_argument("d must be >= 1");

    BuildReport rep{"2w-subset", params.seed, n, g.num_edges()};
    rep.params.emplace_back("d", d);
    rep.params.emplace_back("subset_size", static_cast<double>(subset.size()));

    auto t0 = Clock::now();
    SpannerBuild h = d_light_init(g, d);
    push_phase(rep, "init", 0, h.size(), t0);

    t0 = Clock::now();
    std::size_t before = h.size();
    if (n >= 2) {
        MirroredBuild mb{&h};
        constrained_rounds(mb, d, params.seed, subset, /*per_pair=*/true, rep);
    }
    push_phase(rep, "paths", before, h.size(), t0);

    rep.spanner_edges = h.size();
    return {std::move(h), std::move(rep)};
}

BuildResult build_6wmax_fast(const Graph& g, const BuildParams& params) {
    VertexId n = g.num_vertices();
    std::uint32_t heavy = params.heavy_override.value_or(ceil_pow(n, 2, 3));
    std::uint32_t d = params.d_override.value_or(ceil_pow(n, 1, 3));
    if (heavy == 0 || d == 0) throw std::invalid_argument("schedule parameters must be >= 1");

    BuildReport rep{"6wmax-fast", params.seed, n, g.num_edges()};
    rep.params.emplace_back("heavy", heavy);
    rep.params.emplace_back("d", d);

    SpannerBuild master(g);

    // Trees from a sample hitting every heavy vertex's neighborhood, taken
    // before any deletion.
    auto t0 = Clock::now();
    if (n >= 2) {
        auto s = sample_vertices(n, {rate_heavy_hit(n, heavy), params.seed, "S"});
        record_sample(rep, "S", s.size());
        MirroredBuild mb{&master};
        for (VertexId v : s) mb.add_tree(dijkstra(g, v));
    }
    push_phase(rep, "trees", 0, master.size(), t0);

    std::vector<char> alive(g.num_edges(), 1);
    detail::remove_heavy_edges(g, alive, heavy);
    detail::Subgraph sub = detail::extract_alive(g, alive);

    t0 = Clock::now();
    std::size_t before = master.size();
    SpannerBuild local = d_light_init(sub.graph, d);
    {
        MirroredBuild mb{&local, &master, &sub.to_parent};
        // local init edges are fresh in local; mirror them into the output
        for (EdgeId e : local.edges().ids()) master.add_edge(sub.to_parent[e]);
        push_phase(rep, "init", before, master.size(), t0);

        t0 = Clock::now();
        before = master.size();
        if (n >= 2) {
            auto r = sample_vertices(n, {rate_heavy_hit(n, d), params.seed, "R"});
            record_sample(rep, "R", r.size());
            constrained_rounds(mb, d, params.seed, r, /*per_pair=*/false, rep);
        }
        push_phase(rep, "paths", before, master.size(), t0);
    }

    rep.spanner_edges = master.size();
    return {std::move(master), std::move(rep)};
}

BuildResult build_6eps_wmax(const Graph& g, double epsilon, const BuildParams& params) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("build_6eps_wmax: epsilon must lie in (0,1)");
    VertexId n = g.num_vertices();
    std::uint32_t d = params.d_override.value_or(ceil_pow(n, 1, 3));
    if (d == 0) throw std::invalid_argument("d must be >= 1");

    BuildReport rep{"6eps-wmax", params.seed, n, g.num_edges()};
    rep.params.emplace_back("d", d);
    rep.params.emplace_back("epsilon", epsilon);

    auto t0 = Clock::now();
    SpannerBuild master = d_light_init(g, d);
    push_phase(rep, "init", 0, master.size(), t0);

    t0 = Clock::now();
    std::size_t before = master.size();
    if (n >= 2) {
        double ln_n = std::log(static_cast<double>(n));
        auto r = sample_vertices(n, {rate_heavy_hit(n, d), params.seed, "R"});
        record_sample(rep, "R", r.size());

        std::uint32_t jmax = ceil_log2(n);
        std::vector<char> alive(g.num_edges(), 1);
        Weight wmax = g.w_max();

        for (std::uint32_t jj = 0; jj <= jmax; ++jj) {
            std::uint32_t j = jmax - jj;
            detail::Subgraph sub = detail::extract_alive(g, alive);
            SpannerBuild local(sub.graph);
            for (EdgeId e = 0; e < sub.graph.num_edges(); ++e)
                if (master.contains(sub.to_parent[e])) local.add_edge(e);
            MirroredBuild mb{&local, &master, &sub.to_parent};

            for (std::uint32_t ii = 0; ii <= jmax; ++ii) {
                std::uint32_t i = jmax - ii;
                double two_j = std::ldexp(1.0, static_cast<int>(j));
                double bucket = std::ldexp(1.0, static_cast<int>(i)) * d;
                double rate =
                    two_j > bucket ? std::min(1.0, 2.0 * ln_n / two_j) : std::min(1.0, ln_n / bucket);
                std::string label = "D_j" + std::to_string(j) + "_i" + std::to_string(i);
                auto dji = sample_vertices(n, {rate, params.seed, label});
                record_sample(rep, label, dji.size());

                ReweightConfig cfg{1u << (i + 1), epsilon / 2.0, wmax};
                for (VertexId v : dji) {
                    if (sub.graph.degree(v) == 0) continue;  // no alive edge: nothing reachable
                    WeakCssspResult res = weak_csssp(sub.graph, local, v, cfg);
                    for (VertexId u : r) {
                        if (u == v || res.delta_dist[u] == kInf) continue;
                        mb.add_path(res.path_to(sub.graph, u));
                    }
                }
            }
            // After round j no vertex of the working graph keeps degree >= 2^j.
            detail::remove_heavy_edges(g, alive, static_cast<std::size_t>(1) << j);
        }
    }
    push_phase(rep, "paths", before, master.size(), t0);

    rep.spanner_edges = master.size();
    return {std::move(master), std::move(rep)};
}

BuildResult build_4w_fast(const Graph& g, const BuildParams& params) {
    VertexId n = g.num_vertices();
    std::uint32_t heavy = params.heavy_override.value_or(ceil_pow(n, 3, 5));
    std::uint32_t d = params.d_override.value_or(ceil_pow(n, 2, 5));
    std::uint32_t l = params.miss_override.value_or(ceil_pow(n, 1, 5));
    if (heavy == 0 || d == 0 || l == 0) throw std::invalid_argument("schedule parameters must be >= 1");

    BuildReport rep{"4w-fast", params.seed, n, g.num_edges()};
    rep.params.emplace_back("heavy", heavy);
    rep.params.emplace_back("d", d);
    rep.params.emplace_back("l", l);

    SpannerBuild master(g);

    auto t0 = Clock::now();
    if (n >= 2) {
        auto s = sample_vertices(n, {rate_heavy_hit(n, heavy), params.seed, "S"});
        record_sample(rep, "S", s.size());
        MirroredBuild mb{&master};
        for (VertexId v : s) mb.add_tree(dijkstra(g, v));
    }
    push_phase(rep, "s_trees", 0, master.size(), t0);

    std::vector<char> alive(g.num_edges(), 1);
    detail::remove_heavy_edges(g, alive, heavy);
    detail::Subgraph sub = detail::extract_alive(g, alive);

    t0 = Clock::now();
    std::size_t before = master.size();
    SpannerBuild local = d_light_init(sub.graph, d);
    MirroredBuild mb{&local, &master, &sub.to_parent};
    for (EdgeId e : local.edges().ids()) master.add_edge(sub.to_parent[e]);
    push_phase(rep, "init", before, master.size(), t0);

    t0 = Clock::now();
    before = master.size();
    if (n >= 2) {
        auto r = sample_vertices(n, {rate_path_hit(n, d, l), params.seed, "R"});
        record_sample(rep, "R", r.size());
        for (VertexId v : r) mb.add_tree(dijkstra(sub.graph, v));
    }
    push_phase(rep, "r_trees", before, master.size(), t0);

    t0 = Clock::now();
    before = master.size();
    if (n >= 2) {
        auto dset = sample_vertices(n, {rate_heavy_hit(n, d), params.seed, "D"});
        record_sample(rep, "D", dset.size());
        std::uint32_t budget = clamp_budget(l, sub.graph);
        for (VertexId u : dset) {
            MecspTable table = mecsp(sub.graph, local, u, budget);
            for (VertexId v : dset) {
                if (v == u) continue;
                auto path = table.path(budget - 1, v);
                if (!path) continue;
                mb.add_path(path->vertices);
            }
        }
    }
    push_phase(rep, "paths", before, master.size(), t0);

    rep.spanner_edges = master.size();
    return {std::move(master), std::move(rep)};
}

}  // namespace addspan
