#ifndef LEAKY_GRAPH_IO_HPP
#define LEAKY_GRAPH_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "leaky/graph.hpp"

namespace leaky {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    size_t offset;
};

enum class GraphFormat { graph6, edge_list };

// graph6: standard ASCII encoding (all data bytes offset by 63), upper
// triangle read column by column.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge list: one "u v" pair per line, '#' starts a comment, blank lines
// ignored. The serializer emits a "# n=<count>" comment so graphs with
// isolated vertices round-trip; the parser honors it when present and
// otherwise uses max id + 1.
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

// Heuristic format detection: a first payload line of two integers is an
// edge list, anything else is tried as graph6.
Graph parse_graph_auto(std::string_view text);

// Graphviz export with the given set filled in.
std::string to_dot(const Graph& g, const VertexSet& blue);

}  // namespace leaky

#endif
