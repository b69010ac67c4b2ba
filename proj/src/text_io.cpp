#include "linlayout/text_io.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace linlayout {

namespace detail {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(std::move(t));
    return tokens;
}

std::uint64_t parse_unsigned(const std::string& token, std::size_t line) {
    std::uint64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError(line, "expected non-negative integer, got '" + token + "'");
    }
    return value;
}

}  // namespace detail

using detail::parse_unsigned;
using detail::tokenize;

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> vertex_count;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!vertex_count) {
            if (tokens.size() != 2 || tokens[0] != "graph") {
                throw ParseError(line_no, "expected header 'graph <vertex_count>'");
            }
            const auto count = parse_unsigned(tokens[1], line_no);
            if (count > std::numeric_limits<Vertex>::max()) {
                throw ParseError(line_no, "vertex count too large");
            }
            vertex_count = static_cast<std::size_t>(count);
            continue;
        }
        if (tokens.size() != 3 || tokens[0] != "e") {
            throw ParseError(line_no, "expected 'e <u> <v>'");
        }
        const auto u = parse_unsigned(tokens[1], line_no);
        const auto v = parse_unsigned(tokens[2], line_no);
        if (u >= *vertex_count || v >= *vertex_count) {
            throw ParseError(line_no, "edge endpoint out of range");
        }
        if (u == v) throw ParseError(line_no, "self-loop");
        const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
        edges.push_back(e);
    }
    if (!vertex_count) throw ParseError(0, "missing 'graph' header");
    try {
        return Graph(*vertex_count, std::move(edges), "file");
    } catch (const GraphError& e) {
        throw ParseError(0, e.what());
    }
}

Graph graph_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

}  // namespace linlayout
