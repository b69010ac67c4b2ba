#pragma once

// Test-side generators and oracles; deliberately independent of the
// library's verification code paths.

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "linlayout/graph.hpp"
#include "linlayout/layout.hpp"
#include "linlayout/refuter.hpp"

namespace testsupport {

using namespace linlayout;

Graph random_graph(std::mt19937_64& rng, std::size_t vertices, double density);
LinearLayout random_layout(std::mt19937_64& rng, const Graph& g, LayoutKind kind, int pages);
std::vector<Vertex> random_order(std::mt19937_64& rng, std::size_t n);

/// Same-page pairs that cross (stack) or nest (queue), by direct comparison
/// of the four endpoint positions.
std::vector<std::pair<Edge, Edge>> naive_violations(const Graph& g, const LinearLayout& layout);

bool naive_crosses(std::span<const std::size_t> pos, const Edge& e, const Edge& f);
bool naive_nests(std::span<const std::size_t> pos, const Edge& e, const Edge& f);

/// Minimum pages for a fixed order by trying every page assignment.
int brute_force_pages(const Graph& g, std::span<const Vertex> order, LayoutKind kind);

/// Largest set of pairwise nesting edges under a fixed order, by subset search.
int largest_rainbow(const Graph& g, std::span<const Vertex> order);

/// Minimum over all orders of brute-force-coloured conflict graphs; tiny graphs only.
int brute_force_page_number(const Graph& g, LayoutKind kind);

enum class Arrangement {
    block_major,  // all copies of one cell consecutive, cells in row-major order
    leaf_major,   // all cells of one leaf consecutive; copy edges never meet
};

/// Layout of S_d [] H_n (ids as in StarHexFrame) with the roots first in
/// row-major order. The leaves of a cell run forward (ascending ids) when
/// forward(cell) and backward otherwise. In leaf_major form the forward cells
/// come first, grouped by ascending leaf, then the backward cells grouped by
/// descending leaf. Copy edges of grid edge i get grid_page(i); star edges
/// get star_page.
LinearLayout synthetic_star_hex(std::size_t d, int n, Arrangement arrangement,
                                const std::function<bool(Vertex)>& forward,
                                const std::function<int(std::size_t)>& grid_page, int star_page, int pages);

/// A random vertex order with an optimal page assignment for it.
LinearLayout valid_random_stack_layout(std::mt19937_64& rng, const Graph& g);

/// Moves one edge of a crossing pair on distinct pages onto the other's page.
std::optional<LinearLayout> plant_crossing(std::mt19937_64& rng, const Graph& g, const LinearLayout& layout);

/// Recomputes the pipeline size bounds from a refuter run with exact
/// arithmetic: a (n^2)! >= b, c s^(3n^2) >= a, d^(2^(n^2-1)) >= c, and per
/// twister level d_i 2^(i-1) >= d with separated group intervals; also
/// requires every recorded bound to hold.
bool pipeline_bounds_hold(const RefutationOutcome& outcome, std::string* why = nullptr);

}  // namespace testsupport
