#include "addspan/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace addspan {

std::vector<VertexId> sample_vertices(VertexId n, const SampleConfig& cfg) {
    double p = std::clamp(cfg.probability, 0.0, 1.0);
    std::vector<VertexId> out;
    if (n == 0 || p == 0.0) return out;
    std::uint64_t stream = detail::mix64(cfg.seed ^ detail::fnv1a64(cfg.label));
    for (VertexId v = 0; v < n; ++v) {
        std::uint64_t bits = detail::mix64(stream ^ (static_cast<std::uint64_t>(v) * 0x9E3779B97F4A7C15ull));
        if (detail::uniform01(bits) < p) out.push_back(v);
    }
    return out;
}

double rate_heavy_hit(double n, double d) {
    if (!(n >= 2) || !(d >= 1)) throw std::invalid_argument("rate_heavy_hit: need n >= 2 and d >= 1");
    return std::min(1.0, 2.0 * std::log(n) / d);
}

double rate_path_hit(double n, double d, double l) {
    if (!(n >= 2) || !(d >= 1) || !(l >= 1))
        throw std::invalid_argument("rate_path_hit: need n >= 2, d >= 1, l >= 1");
    return std::min(1.0, std::log(n) / (d * l));
}

}  // namespace addspan
