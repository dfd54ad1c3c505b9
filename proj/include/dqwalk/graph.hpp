#pragma once

#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dqwalk {

// Directed multigraph over dense vertex ids 0..vertex_count-1. Parallel
// edges and self-loops are distinct edges; an edge is identified by its
// index in `edges`.
struct DirectedGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (source, target)

    bool operator==(const DirectedGraph&) const = default;
};

// Line of x_max forward edges with n-1 loops at every line vertex; each
// loop is a directed cycle of loop_length edges back to its base vertex
// (loop_length 1 is a plain self-loop).
struct LineWithLoopsSpec {
    std::size_t n = 2;
    std::size_t x_max = 1;
    std::size_t loop_length = 1;
};

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_arg),
          line(line_)
    {
    }
};

struct DegreeImbalance {
    std::size_t vertex;
    std::size_t in_degree;
    std::size_t out_degree;

    bool operator==(const DegreeImbalance&) const = default;
};

// Per-vertex report for the equal in/out degree condition. A graph admits
// a unitary walk exactly when `violations` is empty.
struct RealizabilityReport {
    bool realizable = true;
    std::vector<DegreeImbalance> violations;  // ascending by vertex
};

inline DirectedGraph build_line_with_loops(const LineWithLoopsSpec& spec)
{
    if (spec.n < 1)
        throw std::invalid_argument("build_line_with_loops: n must be >= 1");
    if (spec.x_max < 1)
        throw std::invalid_argument("build_line_with_loops: x_max must be >= 1");
    if (spec.loop_length < 1)
        throw std::invalid_argument("build_line_with_loops: loop_length must be >= 1");

    const std::size_t n = spec.n;
    const std::size_t L = spec.loop_length;
    const std::size_t line_vertices = spec.x_max + 1;
    const std::size_t aux_per_loop = L - 1;

    DirectedGraph g;
    g.vertex_count = line_vertices + line_vertices * (n - 1) * aux_per_loop;
    g.edges.reserve(spec.x_max + line_vertices * (n - 1) * L);

    // Auxiliary ids for loop (v, k) occupy a contiguous block after the
    // line vertices, in (v, k, depth) order.
    const auto aux_id = [&](std::size_t v, std::size_t k, std::size_t depth) {
        return line_vertices + (v * (n - 1) + (k - 1)) * aux_per_loop + (depth - 1);
    };

    for (std::size_t v = 0; v < line_vertices; ++v) {
        if (v < spec.x_max)
            g.edges.emplace_back(v, v + 1);
        for (std::size_t k = 1; k < n; ++k) {
            if (L == 1) {
                g.edges.emplace_back(v, v);
                continue;
            }
            g.edges.emplace_back(v, aux_id(v, k, 1));
            for (std::size_t d = 1; d + 1 < L; ++d)
                g.edges.emplace_back(aux_id(v, k, d), aux_id(v, k, d + 1));
            g.edges.emplace_back(aux_id(v, k, L - 1), v);
        }
    }
    return g;
}

namespace detail {

inline std::size_t parse_vertex_id(std::string_view token, std::size_t line_no)
{
    std::size_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(line_no, "expected a non-negative integer, got '" +
                                      std::string(token) + "'");
    return value;
}

}  // namespace detail

// Reads the edge-list text format: one "source target" pair per line,
// '#' starts a comment line, blank lines ignored. vertex_count becomes
// 1 + the largest id seen (0 for no edges).
inline DirectedGraph parse_edge_list(std::string_view text)
{
    DirectedGraph g;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            if (pos == text.size())
                break;
            eol = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;

        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t')
                ++i;
            if (i > start)
                tokens.push_back(line.substr(start, i - start));
        }
        if (tokens.empty())
            continue;
        if (tokens.front().front() == '#')
            continue;
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected 'source target', got " +
                                          std::to_string(tokens.size()) + " token(s)");

        const std::size_t src = detail::parse_vertex_id(tokens[0], line_no);
        const std::size_t dst = detail::parse_vertex_id(tokens[1], line_no);
        g.edges.emplace_back(src, dst);
        g.vertex_count = std::max(g.vertex_count, std::max(src, dst) + 1);
    }
    return g;
}

// Inverse of parse_edge_list: edges in sequence order, LF line endings.
inline std::string write_edge_list(const DirectedGraph& g)
{
    std::string out;
    for (const auto& [src, dst] : g.edges) {
        out += std::to_string(src);
        out += ' ';
        out += std::to_string(dst);
        out += '\n';
    }
    return out;
}

// Checks the structural condition for unitary evolution: every vertex has
// the same number of edges in and out.
inline RealizabilityReport check_unitary_realizable(const DirectedGraph& g)
{
    std::vector<std::size_t> in(g.vertex_count, 0), out(g.vertex_count, 0);
    for (const auto& [src, dst] : g.edges) {
        if (src >= g.vertex_count || dst >= g.vertex_count)
            throw std::invalid_argument("check_unitary_realizable: edge endpoint beyond vertex_count");
        ++out[src];
        ++in[dst];
    }
    RealizabilityReport report;
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        if (in[v] != out[v])
            report.violations.push_back({v, in[v], out[v]});
    report.realizable = report.violations.empty();
    return report;
}

}  // namespace dqwalk
