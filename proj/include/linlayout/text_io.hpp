#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "linlayout/graph.hpp"

namespace linlayout {

/// Malformed text input. line() is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Graph format:
//   graph <vertex_count>
//   e <u> <v>        (one per edge, written in sorted order)
// '#' starts a comment anywhere on a line.
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);
Graph read_graph(std::istream& in);
Graph graph_from_string(const std::string& text);

namespace detail {

/// Splits a line into whitespace tokens after stripping a '#' comment.
std::vector<std::string> tokenize(const std::string& line);

/// Parses a non-negative decimal integer; rejects signs, junk and overflow.
std::uint64_t parse_unsigned(const std::string& token, std::size_t line);

}  // namespace detail

}  // namespace linlayout
