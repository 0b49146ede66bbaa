#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace addspan {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = double;

inline constexpr Weight kInf = std::numeric_limits<Weight>::infinity();
inline constexpr std::uint32_t kNone = 0xFFFFFFFFu;

struct Edge {
    VertexId u;
    VertexId v;
    Weight w;
};

struct AdjEntry {
    VertexId to;
    Weight w;
    EdgeId edge;
};

/// Membership set over dense edge ids with O(1) queries.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::size_t universe) : bits_(universe, false) {}

    bool contains(EdgeId e) const { return e < bits_.size() && bits_[e]; }

    // Returns true if the id was newly inserted.
    bool insert(EdgeId e) {
        if (bits_[e]) return false;
        bits_[e] = true;
        ++count_;
        return true;
    }

    std::size_t size() const { return count_; }
    std::size_t universe() const { return bits_.size(); }

    std::vector<EdgeId> ids() const {
        std::vector<EdgeId> out;
        out.reserve(count_);
        for (EdgeId e = 0; e < bits_.size(); ++e)
            if (bits_[e]) out.push_back(e);
        return out;
    }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<bool> bits_;
    std::size_t count_ = 0;
};

/// Immutable weighted undirected simple graph. Vertex ids are dense 0..n-1,
/// edge ids dense 0..m-1 in construction order. Safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    // Validates: ids < n, no self-loops, no duplicate pairs, weights > 0.
    static Graph from_edges(VertexId n, std::vector<Edge> edges);

    VertexId num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    Weight w_max() const { return w_max_; }

    std::span<const AdjEntry> neighbors(VertexId v) const { return adj_[v]; }
    std::size_t degree(VertexId v) const { return adj_[v].size(); }
    bool is_d_heavy(VertexId v, std::size_t d) const { return degree(v) >= d; }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
    VertexId other_endpoint(EdgeId e, VertexId v) const {
        const Edge& ed = edges_[e];
        return ed.u == v ? ed.v : ed.u;
    }

private:
    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<AdjEntry>> adj_;
    Weight w_max_ = 0;
    std::unordered_map<std::uint64_t, EdgeId> index_;
};

/// Deterministic Erdős–Rényi instance: each unordered pair present with
/// probability p, weights uniform in [w_min, w_max]. Bit-reproducible for a
/// fixed (n, p, w_min, w_max, seed) tuple.
Graph generate_gnp(VertexId n, double p, Weight w_min, Weight w_max, std::uint64_t seed);

}  // namespace addspan
