#include "linlayout/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace linlayout {

namespace {

std::vector<std::size_t> positions_of(std::span<const Vertex> order, std::size_t n) {
    if (order.size() != n) throw SolverError("order length does not match vertex count");
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pos(n, unset);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || pos[order[i]] != unset) throw SolverError("order is not a permutation");
        pos[order[i]] = i;
    }
    return pos;
}

// Nesting depth per edge; returns the maximum depth.
int nesting_depths(const Graph& g, std::span<const std::size_t> pos, std::vector<int>& depth,
                   int stop_at = -1) {
    const std::size_t m = g.edge_count();
    struct Span {
        std::size_t left, right, edge;
    };
    std::vector<Span> spans(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto [l, r] = ordered(pos[g.edge(i).u], pos[g.edge(i).v]);
        spans[i] = {l, r, i};
    }
    std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
        return a.left != b.left ? a.left < b.left : a.right > b.right;
    });
    depth.assign(m, 0);
    int best = 0;
    for (std::size_t i = 0; i < m; ++i) {
        int d = 1;
        for (std::size_t j = 0; j < i; ++j) {
            if (spans[j].left < spans[i].left && spans[i].right < spans[j].right) {
                d = std::max(d, depth[spans[j].edge] + 1);
            }
        }
        depth[spans[i].edge] = d;
        best = std::max(best, d);
        if (stop_at > 0 && best >= stop_at) return best;
    }
    return best;
}

class Colourer {
public:
    Colourer(const std::vector<std::vector<std::size_t>>& adj, int k)
        : adj_(adj), k_(k), colour_(adj.size(), 0),
          blocked_(adj.size(), std::vector<int>(static_cast<std::size_t>(k) + 1, 0)),
          saturation_(adj.size(), 0) {}

    bool solve() { return step(0, 0); }
    const std::vector<int>& colours() const { return colour_; }

private:
    void assign(std::size_t v, int c, int delta) {
        for (std::size_t w : adj_[v]) {
            int& b = blocked_[w][c];
            if (delta > 0 && b++ == 0) ++saturation_[w];
            if (delta < 0 && --b == 0) --saturation_[w];
        }
    }

    bool step(std::size_t coloured, int used) {
        const std::size_t n = adj_.size();
        if (coloured == n) return true;
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (colour_[v] != 0) continue;
            if (pick == n || saturation_[v] > saturation_[pick] ||
                (saturation_[v] == saturation_[pick] && adj_[v].size() > adj_[pick].size())) {
                pick = v;
            }
        }
        const int limit = std::min(k_, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (blocked_[pick][c] != 0) continue;
            colour_[pick] = c;
            assign(pick, c, +1);
            if (step(coloured + 1, std::max(used, c))) return true;
            assign(pick, c, -1);
            colour_[pick] = 0;
        }
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    int k_;
    std::vector<int> colour_;
    std::vector<std::vector<int>> blocked_;
    std::vector<int> saturation_;
};

LinearLayout layout_from_pages(const Graph& g, LayoutKind kind, std::span<const Vertex> order,
                               const std::vector<int>& pages) {
    std::vector<PagedEdge> assignment(g.edge_count());
    int page_count = 1;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        assignment[i] = {g.edge(i), pages[i]};
        page_count = std::max(page_count, pages[i]);
    }
    return LinearLayout(kind, {order.begin(), order.end()}, std::move(assignment), page_count);
}

// Smallest k with a proper k-colouring, searching below `below` only.
std::optional<std::pair<int, std::vector<int>>> min_colouring(
    const std::vector<std::vector<std::size_t>>& adj, int below) {
    if (adj.empty()) return std::pair{0, std::vector<int>{}};
    std::optional<std::pair<int, std::vector<int>>> best;
    for (int k = below - 1; k >= 1; --k) {
        auto colours = colour_conflicts(adj, k);
        if (!colours) break;
        const int used = *std::max_element(colours->begin(), colours->end());
        best = std::pair{used, std::move(*colours)};
        k = used;  // next attempt is used - 1
    }
    return best;
}

}  // namespace

std::vector<std::vector<std::size_t>> crossing_graph(const Graph& g,
                                                     std::span<const std::size_t> position) {
    const std::size_t m = g.edge_count();
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (edge_relation(position, g.edge(i), g.edge(j)) == EdgeRelation::crosses) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    return adj;
}

std::optional<std::vector<int>> colour_conflicts(const std::vector<std::vector<std::size_t>>& adj,
                                                 int k) {
    if (adj.empty()) return std::vector<int>{};
    if (k < 1) return std::nullopt;
    Colourer colourer(adj, k);
    if (!colourer.solve()) return std::nullopt;
    return colourer.colours();
}

FixedOrderResult min_queues_fixed_order(const Graph& g, std::span<const Vertex> order) {
    const auto pos = positions_of(order, g.vertex_count());
    std::vector<int> depth;
    const int count = nesting_depths(g, pos, depth);
    return {count, layout_from_pages(g, LayoutKind::queue, order, depth)};
}

FixedOrderResult min_stacks_fixed_order(const Graph& g, std::span<const Vertex> order,
                                        std::size_t max_edges) {
    if (g.edge_count() > max_edges) {
        throw SolverError("min_stacks_fixed_order: " + std::to_string(g.edge_count()) +
                          " edges exceeds cap " + std::to_string(max_edges));
    }
    const auto pos = positions_of(order, g.vertex_count());
    const auto adj = crossing_graph(g, pos);
    auto best = min_colouring(adj, static_cast<int>(g.edge_count()) + 2);
    return {best->first, layout_from_pages(g, LayoutKind::stack, order, best->second)};
}

ExactResult exact_page_number(const Graph& g, LayoutKind kind, ExactOptions options) {
    const std::size_t n = g.vertex_count();
    if (n > options.max_vertices) {
        throw SolverError("exact solver: " + std::to_string(n) + " vertices exceeds cap " +
                          std::to_string(options.max_vertices));
    }
    const auto start = std::chrono::steady_clock::now();
    ExactResult result;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    if (n == 0 || g.edge_count() == 0) {
        result.count = 0;
        result.witness = layout_from_pages(g, kind, order, std::vector<int>(g.edge_count(), 1));
        result.stats.orders_examined = 1;
        return result;
    }

    // Stack layouts are invariant under rotation, so vertex 0 can go first.
    // Both kinds are invariant under reversal: keep order[first] < order[last].
    const bool rotate = kind == LayoutKind::stack;
    const auto free_begin = order.begin() + (rotate ? 1 : 0);
    int best = static_cast<int>(g.edge_count()) + 1;
    std::vector<int> best_pages;
    std::vector<Vertex> best_order;
    std::vector<std::size_t> pos(n);
    std::vector<int> depth;
    do {
        if (free_begin != order.end() && *free_begin > order.back()) continue;
        ++result.stats.orders_examined;
        for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
        if (kind == LayoutKind::queue) {
            const int d = nesting_depths(g, pos, depth, best);
            if (d < best) {
                best = d;
                best_pages = depth;
                best_order = order;
            }
        } else {
            auto found = min_colouring(crossing_graph(g, pos), best);
            if (found) {
                best = found->first;
                best_pages = std::move(found->second);
                best_order = order;
            }
        }
        if (best == 1) break;
    } while (std::next_permutation(free_begin, order.end()));

    result.count = best;
    result.witness = layout_from_pages(g, kind, best_order, best_pages);
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

ExactResult stack_number_exact(const Graph& g, ExactOptions options) {
    return exact_page_number(g, LayoutKind::stack, options);
}

ExactResult queue_number_exact(const Graph& g, ExactOptions options) {
    return exact_page_number(g, LayoutKind::queue, options);
}

}  // namespace linlayout
