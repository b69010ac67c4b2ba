#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "linlayout/graph.hpp"

namespace linlayout {

enum class Colour : std::uint8_t { red, blue };

inline const char* to_string(Colour c) { return c == Colour::red ? "red" : "blue"; }

/// Vertex colouring of H_n indexed by grid id.
using Colouring = std::vector<Colour>;

struct GridPath {
    Colour colour = Colour::red;
    std::vector<Vertex> vertices;
};

/// Monochromatic path on at least n vertices in H_n.
///
/// A red component meeting both column x = 1 and column x = n is searched
/// first; failing that, a blue component meeting both row y = 1 and row y = n.
/// On this adjacency exactly one of the two exists. Components are scanned in
/// ascending order of their least vertex id, and the path returned is a
/// shortest crossing inside the chosen component (BFS from the lowest-id
/// sources). Since a step changes x (resp. y) by at most one, a crossing has
/// at least n vertices.
GridPath find_monochromatic_path(int n, const Colouring& colouring);

/// Checks the GridPath invariants: distinct vertices, consecutive ones
/// adjacent in H_n, all of the path's colour.
bool is_monochromatic_path(int n, const Colouring& colouring, const GridPath& path);

// Colouring format: one `c <vertex> <r|b>` line per grid vertex.
void write_colouring(std::ostream& out, const Colouring& colouring);
/// Reads a total colouring; n is inferred from the vertex count.
Colouring read_colouring(std::istream& in, int& n);

}  // namespace linlayout
