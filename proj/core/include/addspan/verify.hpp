#pragma once

#include <string>

#include "addspan/graph.hpp"

namespace addspan {

enum class BoundKind {
    six_w,            // 6 W_st
    two_w_subset,     // 2 W_st over subset pairs; requires a subset
    max_6w_2wmax,     // max{6 W_st, 2 W_max}
    four_w_eps_wmax,  // 4 W_st + (2+eps) W_max
    max_4w_2wmax,     // max{4 W_st, 2 W_max}
    custom,           // coeff_w * W_st + coeff_wmax * W_max
};

struct StretchBound {
    BoundKind kind = BoundKind::six_w;
    double epsilon = 0;  // four_w_eps_wmax only
    double coeff_w = 0;
    double coeff_wmax = 0;  // custom only

    Weight value(Weight w_st, Weight w_max) const;
    std::string name() const;
};

struct Violation {
    VertexId s, t;
    Weight d_g, d_h;
    Weight w_st_min;   // min over shortest paths of the max edge weight
    Weight w_st_tree;  // max edge weight on the canonical shortest-path tree path
    Weight excess;     // d_h - d_g, kInf when t is unreachable in the spanner
    bool violates_tree_bound;
};

struct StretchReport {
    StretchBound bound;
    std::size_t pairs_checked = 0;
    std::size_t pairs_skipped = 0;  // disconnected in the base graph
    std::vector<Violation> violations;
    Weight max_excess = 0;
    double max_excess_ratio = 0;  // excess / bound value, over checked pairs

    bool ok() const { return violations.empty(); }
    std::size_t tree_violations() const;
};

// Exact per-pair check of d_H <= d_G + bound(W_st, W_max) with additive
// floating-point slack 1e-9 * (1 + d_G). Pairs disconnected in g are skipped;
// pairs disconnected in the spanner are violations. A nonempty subset
// restricts checking to subset pairs (required for the subsetwise bound).
// Every violation is re-evaluated against the tree-path bottleneck so tie
// artifacts in W_st are visible.
StretchReport verify_stretch(const Graph& g, const EdgeSet& spanner, const StretchBound& bound,
                             std::span<const VertexId> subset = {}, VertexId apsp_cap = 2000);

// edges / (n^(num/den) * log2(n)^polylog); sweep drivers assert this stays
// bounded across an n grid.
double size_ratio(std::size_t edges, VertexId n, unsigned exp_num, unsigned exp_den,
                  unsigned polylog_power);

/// Monte Carlo estimates of the sampling guarantees on one generated
/// instance, against the canonical pair with the most missing shortest-path
/// edges. Events that cannot occur (no heavy vertex, fully preserved path)
/// count as vacuous successes.
struct LemmaRates {
    std::size_t trials = 0;
    double heavy_hit = 0;     // every d-heavy vertex has a sampled closed neighbor
    double nbhd_hit = 0;      // N[pi] sampled at rate ln(n)/|N[pi]|
    double vertex_hit = 0;    // every missing endpoint on pi keeps a light H-edge into the sample
    double path_hit = 0;      // some vertex of pi has a light H-edge into the sample
    double threshold = 0;     // 1 - 5/n
    VertexId s = 0, t = 0;    // chosen pair
    std::size_t path_missing = 0;

    bool pass() const {
        return heavy_hit >= threshold && nbhd_hit >= threshold && vertex_hit >= threshold &&
               path_hit >= threshold;
    }
};

LemmaRates verify_sampling_lemmas(std::size_t trials, VertexId n, std::size_t d, std::size_t l,
                                  std::uint64_t seed = 0, double gnp_p = 0.3);

}  // namespace addspan
