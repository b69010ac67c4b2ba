#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linlayout/graph.hpp"
#include "linlayout/layout.hpp"

namespace linlayout {

class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Row-major order of H_n; horizontal edges on queue 1, vertical on 2,
/// diagonal on 3. Strict.
LinearLayout hexgrid_strict_queue_layout(int n);

/// Root first, then leaves by id, all edges on one queue.
LinearLayout star_queue_layout(std::size_t leaves);

/// Queue layout of g1 [] g2 using pages(L1) + pages(L2) queues.
///
/// Copies of g1 are laid out as consecutive blocks, one block per vertex of
/// g2 in L2 order; inside a block the L1 order is used. An edge inside a copy
/// keeps its L1 queue, an edge between copies takes the L2 queue of the
/// underlying g2 edge shifted past the L1 queues. L2 must be strict.
/// Factors without edges contribute no queues.
LinearLayout product_queue_layout(const Graph& g1, const LinearLayout& l1, const Graph& g2,
                                  const LinearLayout& l2);

/// Stack layout of g1 [] g2 using pages(L1) + pages(L2) stacks, for a
/// dispersable L2 and bipartite g2.
///
/// Blocks follow L2 as above; copies on side 0 of the bipartition use the L1
/// order and copies on side 1 use it reversed, so parallel copies of one g2
/// edge nest instead of crossing.
LinearLayout product_stack_layout(const Graph& g1, const LinearLayout& l1, const Graph& g2,
                                  const LinearLayout& l2, const std::vector<std::uint8_t>& sides);

/// As above with the bipartition computed; rejects non-bipartite g2.
LinearLayout product_stack_layout(const Graph& g1, const LinearLayout& l1, const Graph& g2,
                                  const LinearLayout& l2);

inline constexpr std::uint64_t default_search_seed = 0x5eed1a70u;

struct SearchOptions {
    /// Maximum number of vertex orders evaluated, over all restarts.
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = default_search_seed;
    /// Local-search moves attempted per restart before restarting.
    std::uint64_t moves_per_restart = 4000;
};

struct SearchResult {
    std::optional<LinearLayout> layout;
    std::uint64_t evaluations = 0;
    std::uint64_t restarts = 0;
};

/// Randomized restarts with local search over vertex orders; pages are
/// assigned per order by nesting depth for queues; for stacks two pages are
/// decided exactly by 2-colouring the crossing graph, more pages greedily by
/// fewest conflicts with an exact check when close. A returned layout is
/// verified; not finding one proves nothing.
SearchResult search_layout(const Graph& g, LayoutKind kind, int pages, SearchOptions options = {});

}  // namespace linlayout
