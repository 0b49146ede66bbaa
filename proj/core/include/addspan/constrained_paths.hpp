#pragma once

#include <optional>

#include "addspan/graph.hpp"
#include "addspan/light_init.hpp"

namespace addspan {

struct ConstrainedPath {
    std::vector<VertexId> vertices;  // source..target
    Weight weight = 0;
    std::uint32_t missing = 0;       // missing edges at table-construction time
};

/// f[l][v] = min weight of a source-v path using at most l missing edges,
/// for l in [0, budget). Layer l is final before layer l+1 starts.
class MecspTable {
public:
    VertexId source() const { return source_; }
    std::uint32_t budget() const { return budget_; }

    Weight value(std::uint32_t layer, VertexId v) const { return dist_[idx(layer, v)]; }

    // Reconstructs a witness path for f[layer][target]; nullopt if infinite.
    // The recomputed weight equals value(layer, target) exactly and the
    // missing count never exceeds `layer`.
    std::optional<ConstrainedPath> path(std::uint32_t layer, VertexId target) const;

private:
    friend MecspTable mecsp(const Graph&, const SpannerBuild&, VertexId, std::uint32_t);

    std::size_t idx(std::uint32_t layer, VertexId v) const {
        return static_cast<std::size_t>(layer) * n_ + v;
    }

    const Graph* g_ = nullptr;
    VertexId n_ = 0;
    VertexId source_ = 0;
    std::uint32_t budget_ = 0;
    std::vector<Weight> dist_;
    std::vector<EdgeId> pred_edge_;            // kNone: root (v==source) or inherit from layer-1
    std::vector<std::uint32_t> pred_layer_;    // layer the predecessor label was read from
};

// Layer 0 is Dijkstra restricted to H. Layer l seeds every vertex with its
// layer l-1 label plus one-missing-edge candidates read from layer l-1, then
// runs Dijkstra over H edges only. Time O(budget * (m + n log n)), memory
// O(budget * n).
MecspTable mecsp(const Graph& g, const SpannerBuild& h, VertexId source, std::uint32_t budget);

struct ReweightConfig {
    std::uint32_t budget;  // missing-edge budget g, >= 1
    double epsilon0;       // in (0,1)
    Weight w_max;          // of the analysis graph, not recomputed locally

    Weight surcharge() const { return epsilon0 / budget * w_max; }
};

struct WeakCssspResult {
    VertexId source = 0;
    std::vector<Weight> delta_dist;   // under w'(e) = w(e) + surcharge * [e missing]
    std::vector<Weight> dist;         // original weight of the same tree path
    std::vector<EdgeId> parent_edge;

    std::vector<VertexId> path_to(const Graph& g, VertexId target) const;
};

// Exact Dijkstra under the surcharged weights; paths are returned with their
// original weights (the surcharge only steers the search away from missing
// edges).
WeakCssspResult weak_csssp(const Graph& g, const SpannerBuild& h, VertexId source,
                           const ReweightConfig& cfg);

}  // namespace addspan
