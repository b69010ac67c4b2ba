#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "linlayout/graph.hpp"
#include "linlayout/layout.hpp"

namespace linlayout {

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FixedOrderResult {
    int count = 0;  // pages used; 0 for an edgeless graph
    LinearLayout layout;
};

/// Optimal queue count for a fixed order. Each edge goes to the queue given by
/// its nesting depth, so the count equals the largest rainbow.
FixedOrderResult min_queues_fixed_order(const Graph& g, std::span<const Vertex> order);

/// Optimal stack count for a fixed order: chromatic number of the crossing
/// graph of the edges, by DSatur branch and bound.
FixedOrderResult min_stacks_fixed_order(const Graph& g, std::span<const Vertex> order,
                                        std::size_t max_edges = 40);

/// Proper colouring of a conflict graph with at most k colours (1-based), or
/// nullopt if none exists. Exact.
std::optional<std::vector<int>> colour_conflicts(const std::vector<std::vector<std::size_t>>& adj,
                                                 int k);

/// Crossing graph of the edges of g under the given vertex positions.
std::vector<std::vector<std::size_t>> crossing_graph(const Graph& g,
                                                     std::span<const std::size_t> position);

struct ExactStats {
    std::uint64_t orders_examined = 0;
    double seconds = 0.0;
};

struct ExactResult {
    int count = 0;
    LinearLayout witness;  // lexicographically least optimal order
    ExactStats stats;
};

struct ExactOptions {
    std::size_t max_vertices = 10;
};

ExactResult stack_number_exact(const Graph& g, ExactOptions options = {});
ExactResult queue_number_exact(const Graph& g, ExactOptions options = {});
ExactResult exact_page_number(const Graph& g, LayoutKind kind, ExactOptions options = {});

}  // namespace linlayout
