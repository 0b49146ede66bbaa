#include "addspan/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace addspan {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return true;
}

std::vector<std::string_view> split_tokens(const std::string& line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) toks.emplace_back(line.data() + start, i - start);
    }
    return toks;
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

// Pulls the next data line; returns false at EOF. `lineno` tracks raw lines.
bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!is_blank_or_comment(line)) return true;
    }
    return false;
}

}  // namespace

std::string format_weight(Weight w) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    return buf;
}

Graph read_graph(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_data_line(in, line, lineno))
        throw parse_error(source, lineno + 1, "missing header line \"n m\"");
    auto header = split_tokens(line);
    VertexId n = 0;
    std::size_t m = 0;
    if (header.size() != 2 || !parse_number(header[0], n) || !parse_number(header[1], m))
        throw parse_error(source, lineno, "header must be \"n m\"");

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_data_line(in, line, lineno))
            throw parse_error(source, lineno + 1,
                              "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        auto toks = split_tokens(line);
        Edge e{};
        if (toks.size() != 3 || !parse_number(toks[0], e.u) || !parse_number(toks[1], e.v) ||
            !parse_number(toks[2], e.w))
            throw parse_error(source, lineno, "edge line must be \"u v w\"");
        if (e.u >= n || e.v >= n) throw parse_error(source, lineno, "vertex id out of range");
        if (e.u == e.v) throw parse_error(source, lineno, "self-loop");
        if (!(e.w > 0) || e.w == kInf) throw parse_error(source, lineno, "weight must be positive and finite");
        edges.push_back(e);
    }
    if (next_data_line(in, line, lineno)) throw parse_error(source, lineno, "trailing content after edge list");

    try {
        return Graph::from_edges(n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw parse_error(source, lineno, ex.what());  // duplicate edges reach here
    }
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in, path);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_weight(e.w) << '\n';
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_graph(g, out);
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

std::vector<VertexId> read_subset(std::istream& in, const std::string& source, VertexId n) {
    std::vector<VertexId> out;
    std::string line;
    std::size_t lineno = 0;
    while (next_data_line(in, line, lineno)) {
        auto toks = split_tokens(line);
        VertexId v = 0;
        if (toks.size() != 1 || !parse_number(toks[0], v))
            throw parse_error(source, lineno, "subset line must hold one vertex id");
        if (v >= n) throw parse_error(source, lineno, "vertex id out of range");
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw parse_error(source, lineno, "duplicate vertex in subset");
    return out;
}

std::vector<VertexId> load_subset(const std::string& path, VertexId n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open subset file: " + path);
    return read_subset(in, path, n);
}

void save_subset(std::span<const VertexId> subset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    for (VertexId v : subset) out << v << '\n';
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace addspan
