#pragma once

#include <span>

#include "addspan/graph.hpp"

namespace addspan {

/// Spanner under construction: a growing edge subset of a fixed base graph.
/// Edges outside the set are "missing". Grows monotonically.
class SpannerBuild {
public:
    explicit SpannerBuild(const Graph& g, std::size_t d = 0)
        : base_(&g), in_h_(g.num_edges()), d_(d) {}

    const Graph& base() const { return *base_; }
    const EdgeSet& edges() const { return in_h_; }
    std::size_t d() const { return d_; }
    std::size_t size() const { return in_h_.size(); }

    bool contains(EdgeId e) const { return in_h_.contains(e); }
    bool missing(EdgeId e) const { return !in_h_.contains(e); }

    // Bumped on every actual insertion; cheap "has H changed" check.
    std::uint64_t version() const { return version_; }

    bool add_edge(EdgeId e) {
        bool fresh = in_h_.insert(e);
        if (fresh) ++version_;
        return fresh;
    }

    // Consecutive vertices must be adjacent in the base graph (throws
    // std::invalid_argument otherwise). Returns how many edges were new.
    std::size_t add_path(std::span<const VertexId> path);

    std::size_t count_missing_on_path(std::span<const VertexId> path) const;

private:
    const Graph* base_;
    EdgeSet in_h_;
    std::size_t d_;
    std::uint64_t version_ = 0;
};

/// Keeps the min(deg(v), d) lightest edges at every vertex, ties broken by
/// smaller edge id, unioned over both endpoints. After this every edge in
/// v's chosen set weighs no more than any missing edge incident to v.
SpannerBuild d_light_init(const Graph& g, std::size_t d);

}  // namespace addspan
