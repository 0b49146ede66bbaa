#pragma once

#include <optional>
#include <string>
#include <vector>

#include "addspan/graph.hpp"
#include "addspan/light_init.hpp"

namespace addspan {

struct BuildParams {
    std::uint64_t seed = 0;
    // Schedule overrides; every builder derives its defaults from n.
    std::optional<std::uint32_t> d_override;      // light-init degree
    std::optional<std::uint32_t> heavy_override;  // heavy-vertex cutoff
    std::optional<std::uint32_t> miss_override;   // missing-edge budget parameter
};

struct PhaseStats {
    std::string name;
    std::size_t edges_added = 0;  // edges new to the spanner in this phase
    double millis = 0;
};

struct BuildReport {
    std::string algorithm;
    std::uint64_t seed = 0;
    VertexId n = 0;
    std::size_t m = 0;
    std::size_t spanner_edges = 0;
    std::vector<PhaseStats> phases;  // edge counts sum to spanner_edges
    std::vector<std::pair<std::string, std::size_t>> sample_sizes;
    std::vector<std::pair<std::string, double>> params;  // resolved schedule
};

struct BuildResult {
    SpannerBuild spanner;
    BuildReport report;
};

// d-light init with d = ceil(n^(1/3)); per round i in [0, ceil(log2 n)] adds,
// for every sampled pair, the lightest path with < 2^(i+1) missing edges.
// Pairwise error +6 W_st. The search reruns per pair against the current
// spanner; build_6w_fast shares the schedule but queries one table per source.
BuildResult build_6w(const Graph& g, const BuildParams& params = {});
BuildResult build_6w_fast(const Graph& g, const BuildParams& params = {});

// Same construction aimed at subset pairs only, d = ceil(sqrt(|S|)).
// Error +2 W_st on S x S.
BuildResult build_2w_subsetwise(const Graph& g, std::span<const VertexId> subset,
                                const BuildParams& params = {});

// Shortest-path trees from a sample hitting every ceil(n^(2/3))-heavy vertex,
// then build_6w_fast on the graph with heavy vertices' edges removed.
// Error +max{6 W_st, 2 W_max}.
BuildResult build_6wmax_fast(const Graph& g, const BuildParams& params = {});

// Degree-descending rounds of surcharged Dijkstra searches.
// Error +4 W_st + (2+eps) W_max, hence +(6+eps) W_max. Requires eps in (0,1).
BuildResult build_6eps_wmax(const Graph& g, double epsilon, const BuildParams& params = {});

// Heavy-vertex trees, light init, path-hitting trees, then one constrained
// table per sampled source. Error +max{4 W_st, 2 W_max}; +4 on unit weights.
BuildResult build_4w_fast(const Graph& g, const BuildParams& params = {});

// Smallest k >= 1 with k^den >= n^num, i.e. ceil(n^(num/den)) for num <= den.
std::uint32_t ceil_pow(std::uint64_t n, unsigned num, unsigned den);

// Smallest k with 2^k >= n; 0 for n <= 1.
std::uint32_t ceil_log2(std::uint64_t n);

namespace detail {

// Working-copy edge deletion: the base graph stays immutable and spanner
// output keeps original edge ids.
std::vector<std::size_t> alive_degrees(const Graph& g, const std::vector<char>& alive);

// Removes every alive edge incident to a vertex of alive-degree >= threshold
// (degrees measured before removal). Returns the number removed.
std::size_t remove_heavy_edges(const Graph& g, std::vector<char>& alive, std::size_t threshold);

struct Subgraph {
    Graph graph;                    // same vertex set, alive edges only
    std::vector<EdgeId> to_parent;  // subgraph edge id -> base edge id
};
Subgraph extract_alive(const Graph& g, const std::vector<char>& alive);

}  // namespace detail

}  // namespace addspan
