#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addspan/graph.hpp"

namespace addspan {

namespace detail {

// splitmix64 finalizer; also used as the sequential generator step.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Uniform in [0,1) from the top 53 bits; identical on every platform.
inline double uniform01(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

}  // namespace detail

/// One independent Bernoulli stream. Streams with different labels never
/// interfere: membership of vertex v depends only on (seed, label, v).
struct SampleConfig {
    double probability;  // clamped to [0,1]
    std::uint64_t seed;
    std::string label;
};

// Sorted ascending; each v included independently with cfg.probability.
std::vector<VertexId> sample_vertices(VertexId n, const SampleConfig& cfg);

// min(1, 2 ln n / d): hits the closed neighborhood of every d-heavy vertex whp.
double rate_heavy_hit(double n, double d);

// min(1, ln n / (d l)): hits a shortest path with l missing edges whp.
double rate_path_hit(double n, double d, double l);

}  // namespace addspan
