#include "leaky/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace leaky {

namespace {

constexpr int g6_bias = 63;

// Appends the graph6 representation of an 18- or 6-bit integer.
void g6_append_n(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6_bias));
    } else {
        out.push_back(126);  // '~'
        out.push_back(static_cast<char>(((n >> 12) & 63) + g6_bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + g6_bias));
        out.push_back(static_cast<char>((n & 63) + g6_bias));
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    g6_append_n(out, n);
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + g6_bias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + g6_bias));
    return out;
}

Graph from_graph6(std::string_view text) {
    // Tolerate a trailing newline and the optional ">>graph6<<" header.
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input", 0);

    size_t pos = 0;
    auto data_byte = [&](size_t at) -> int {
        unsigned char c = static_cast<unsigned char>(text[at]);
        if (c < g6_bias || c > 126) throw ParseError("graph6: invalid data byte", at);
        return c - g6_bias;
    };

    int n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw ParseError("graph6: vertex counts above 258047 unsupported", 0);
        if (text.size() < 4) throw ParseError("graph6: truncated vertex count", text.size());
        n = (data_byte(1) << 12) | (data_byte(2) << 6) | data_byte(3);
        pos = 4;
    } else {
        n = data_byte(0);
        pos = 1;
    }
    if (n > VertexSet::max_vertices)
        throw ParseError("graph6: vertex count " + std::to_string(n) + " exceeds supported maximum " +
                             std::to_string(VertexSet::max_vertices),
                         0);

    int needed_bits = n * (n - 1) / 2;
    size_t needed_bytes = (needed_bits + 5) / 6;
    if (text.size() - pos < needed_bytes)
        throw ParseError("graph6: truncated adjacency data", text.size());
    if (text.size() - pos > needed_bytes)
        throw ParseError("graph6: trailing bytes after adjacency data", pos + needed_bytes);

    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            int byte = data_byte(pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
            ++bit;
        }
    }
    // Padding bits must be zero.
    for (; bit < static_cast<int>(needed_bytes) * 6; ++bit) {
        int byte = data_byte(pos + bit / 6);
        if ((byte >> (5 - bit % 6)) & 1) throw ParseError("graph6: nonzero padding bit", pos + bit / 6);
    }
    return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out = "# n=" + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph from_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int declared_n = -1;
    int max_id = -1;
    size_t line_start = 0;
    while (line_start <= text.size()) {
        size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);

        size_t hash = line.find('#');
        std::string_view payload = hash == std::string_view::npos ? line : line.substr(0, hash);
        if (hash != std::string_view::npos) {
            // Recognize the serializer's "# n=<count>" vertex-count pin.
            std::string comment(line.substr(hash + 1));
            std::istringstream cs(comment);
            std::string tok;
            cs >> tok;
            if (tok.starts_with("n=")) {
                try {
                    declared_n = std::stoi(tok.substr(2));
                } catch (...) {
                    throw ParseError("edge list: malformed n= directive", line_start + hash);
                }
            }
        }

        std::istringstream ls{std::string(payload)};
        long long u, v;
        if (ls >> u) {
            if (!(ls >> v)) throw ParseError("edge list: expected two vertex ids", line_start);
            std::string extra;
            if (ls >> extra) throw ParseError("edge list: trailing tokens on line", line_start);
            if (u < 0 || v < 0) throw ParseError("edge list: negative vertex id", line_start);
            if (u == v) throw ParseError("edge list: self-loop at vertex " + std::to_string(u), line_start);
            if (u >= VertexSet::max_vertices || v >= VertexSet::max_vertices)
                throw ParseError("edge list: vertex id exceeds supported maximum", line_start);
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
        } else {
            // Lines with no leading integer must be blank or comment-only.
            for (size_t i = 0; i < payload.size(); ++i)
                if (!std::isspace(static_cast<unsigned char>(payload[i])))
                    throw ParseError("edge list: unparseable line", line_start + i);
        }
        line_start = line_end + 1;
    }
    int n = std::max(declared_n, max_id + 1);
    return Graph(n, edges);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::graph6 ? from_graph6(text) : from_edge_list(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? to_graph6(g) : to_edge_list(g);
}

Graph parse_graph_auto(std::string_view text) {
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i < line.size()) {
            bool digits = std::isdigit(static_cast<unsigned char>(line[i])) != 0;
            return digits ? from_edge_list(text) : from_graph6(text);
        }
        pos = end + 1;
    }
    // Nothing but comments/blank lines: an edge list of the declared size.
    return from_edge_list(text);
}

std::string to_dot(const Graph& g, const VertexSet& blue) {
    std::string out = "graph {\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v);
        if (blue.universe() == g.vertex_count() && blue.contains(v))
            out += " [style=filled, fillcolor=lightblue]";
        out += ";\n";
    }
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace leaky
