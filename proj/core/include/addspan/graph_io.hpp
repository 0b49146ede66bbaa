#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "addspan/graph.hpp"

namespace addspan {

/// Raised on malformed input files; carries the 1-based offending line.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Edge-list format. First data line "n m", then m lines "u v w" with 0-based
// vertex ids and positive decimal weights. Lines whose first non-blank
// character is '#' and blank lines are ignored.
Graph load_graph(const std::string& path);
Graph read_graph(std::istream& in, const std::string& source);

void save_graph(const Graph& g, const std::string& path);
void write_graph(const Graph& g, std::ostream& out);

// Subset file: one 0-based vertex id per line, same comment rules.
// Returns ids sorted ascending with duplicates rejected.
std::vector<VertexId> load_subset(const std::string& path, VertexId n);
std::vector<VertexId> read_subset(std::istream& in, const std::string& source, VertexId n);

void save_subset(std::span<const VertexId> subset, const std::string& path);

// Shortest round-trip-safe decimal rendering used by all writers.
std::string format_weight(Weight w);

}  // namespace addspan
