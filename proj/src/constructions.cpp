#include "linlayout/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "linlayout/exact.hpp"

namespace linlayout {

namespace {

void require_verified(const Graph& g, const LinearLayout& layout, const char* what) {
    if (auto v = first_violation(g, layout)) {
        throw ConstructionError(std::string(what) + " produced an invalid layout: " + describe(*v));
    }
}

void require_input(const Graph& g, const LinearLayout& layout, LayoutKind kind, const char* what) {
    if (layout.kind() != kind) {
        throw ConstructionError(std::string(what) + ": factor layout must be a " + to_string(kind) +
                                " layout");
    }
    try {
        require_matches(g, layout);
    } catch (const LayoutError& e) {
        throw ConstructionError(std::string(what) + ": " + e.what());
    }
    if (auto v = first_violation(g, layout)) {
        throw ConstructionError(std::string(what) + ": factor layout is invalid: " + describe(*v));
    }
}

struct ProductPlan {
    std::vector<Vertex> order;
    std::vector<PagedEdge> assignment;
    int page_count = 1;
};

// Shared skeleton of both product constructions; `reversed(v2)` selects the
// reversed g1 order inside block v2.
template <class Reversed>
ProductPlan plan_product(const Graph& g1, const LinearLayout& l1, const Graph& g2,
                         const LinearLayout& l2, Reversed reversed) {
    const Graph product = cartesian_product(g1, g2);  // validates id range
    const std::size_t n2 = g2.vertex_count();
    ProductPlan plan;
    plan.order.reserve(product.vertex_count());
    for (Vertex b : l2.order()) {
        if (reversed(b)) {
            for (auto it = l1.order().rbegin(); it != l1.order().rend(); ++it) {
                plan.order.push_back(static_cast<Vertex>(*it * n2 + b));
            }
        } else {
            for (Vertex a : l1.order()) plan.order.push_back(static_cast<Vertex>(a * n2 + b));
        }
    }
    const int offset = g1.edge_count() > 0 ? l1.page_count() : 0;
    plan.page_count = std::max(1, offset + (g2.edge_count() > 0 ? l2.page_count() : 0));
    plan.assignment.reserve(product.edge_count());
    for (std::size_t a = 0; a < g1.vertex_count(); ++a) {
        for (const PagedEdge& pe : l2.assignment()) {
            plan.assignment.push_back({Edge(static_cast<Vertex>(a * n2 + pe.edge.u),
                                            static_cast<Vertex>(a * n2 + pe.edge.v)),
                                       offset + pe.page});
        }
    }
    for (const PagedEdge& pe : l1.assignment()) {
        for (std::size_t b = 0; b < n2; ++b) {
            plan.assignment.push_back({Edge(static_cast<Vertex>(pe.edge.u * n2 + b),
                                            static_cast<Vertex>(pe.edge.v * n2 + b)),
                                       pe.page});
        }
    }
    return plan;
}

}  // namespace

LinearLayout hexgrid_strict_queue_layout(int n) {
    const Graph grid = make_hex_grid(n);
    std::vector<Vertex> order(grid.vertex_count());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::vector<PagedEdge> assignment;
    assignment.reserve(grid.edge_count());
    for (const Edge& e : grid.edges()) {
        const Vertex step = e.v - e.u;
        const int page = step == 1 ? 1 : (step == static_cast<Vertex>(n) ? 2 : 3);
        assignment.push_back({e, page});
    }
    LinearLayout layout(LayoutKind::queue, std::move(order), std::move(assignment), n > 1 ? 3 : 1);
    require_verified(grid, layout, "hexgrid_strict_queue_layout");
    return layout;
}

LinearLayout star_queue_layout(std::size_t leaves) {
    const Graph star = make_star(leaves);
    std::vector<Vertex> order(star.vertex_count());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::vector<PagedEdge> assignment;
    for (const Edge& e : star.edges()) assignment.push_back({e, 1});
    return LinearLayout(LayoutKind::queue, std::move(order), std::move(assignment), 1);
}

LinearLayout product_queue_layout(const Graph& g1, const LinearLayout& l1, const Graph& g2,
                                  const LinearLayout& l2) {
    constexpr const char* what = "product_queue_layout";
    require_input(g1, l1, LayoutKind::queue, what);
    require_input(g2, l2, LayoutKind::queue, what);
    if (auto strict = is_strict_queue(g2, l2); !strict.strict) {
        const auto& w = *strict.witness;
        throw ConstructionError(std::string(what) + ": second factor layout is not strict at vertex " +
                                std::to_string(w[0]) + " (neighbours " + std::to_string(w[1]) +
                                ", " + std::to_string(w[2]) + ")");
    }
    auto plan = plan_product(g1, l1, g2, l2, [](Vertex) { return false; });
    LinearLayout layout(LayoutKind::queue, std::move(plan.order), std::move(plan.assignment),
                        plan.page_count);
    require_verified(cartesian_product(g1, g2), layout, what);
    return layout;
}

LinearLayout product_stack_layout(const Graph& g1, const LinearLayout& l1, const Graph& g2,
                                  const LinearLayout& l2, const std::vector<std::uint8_t>& sides) {
    constexpr const char* what = "product_stack_layout";
    require_input(g1, l1, LayoutKind::stack, what);
    require_input(g2, l2, LayoutKind::stack, what);
    if (sides.size() != g2.vertex_count()) {
        throw ConstructionError(std::string(what) + ": bipartition size mismatch");
    }
    for (const Edge& e : g2.edges()) {
        if (sides[e.u] > 1 || sides[e.v] > 1 || sides[e.u] == sides[e.v]) {
            throw ConstructionError(std::string(what) + ": bipartition is not proper at edge " +
                                    std::to_string(e.u) + " " + std::to_string(e.v));
        }
    }
    if (auto disp = is_dispersable(g2, l2); !disp.dispersable) {
        throw ConstructionError(std::string(what) + ": second factor layout is not dispersable");
    }
    auto plan = plan_product(g1, l1, g2, l2, [&](Vertex b) { return sides[b] == 1; });
    LinearLayout layout(LayoutKind::stack, std::move(plan.order), std::move(plan.assignment),
                        plan.page_count);
    require_verified(cartesian_product(g1, g2), layout, what);
    return layout;
}

LinearLayout product_stack_layout(const Graph& g1, const LinearLayout& l1, const Graph& g2,
                                  const LinearLayout& l2) {
    auto check = is_bipartite(g2);
    if (!check.bipartite) {
        throw ConstructionError(
            "product_stack_layout: second factor is not bipartite (odd cycle of length " +
            std::to_string(check.odd_cycle.size()) + ")");
    }
    return product_stack_layout(g1, l1, g2, l2, check.sides);
}

namespace {

class SearchState {
public:
    SearchState(const Graph& g, LayoutKind kind, int pages)
        : g_(g), kind_(kind), pages_(pages), pos_(g.vertex_count()) {}

    // Number of edges that do not fit in the page budget; 0 means `pages()` is valid.
    std::size_t evaluate(std::span<const Vertex> order) {
        for (std::size_t i = 0; i < order.size(); ++i) pos_[order[i]] = i;
        const std::size_t m = g_.edge_count();
        spans_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const auto [l, r] = ordered(pos_[g_.edge(i).u], pos_[g_.edge(i).v]);
            spans_[i] = {l, r, i};
        }
        std::sort(spans_.begin(), spans_.end(), [](const Span& a, const Span& b) {
            return a.left != b.left ? a.left < b.left : a.right > b.right;
        });
        page_.assign(m, 0);
        return kind_ == LayoutKind::queue ? assign_queues() : assign_stacks();
    }

    const std::vector<int>& pages() const { return page_; }

private:
    struct Span {
        std::size_t left, right, edge;
    };

    std::size_t assign_queues() {
        std::size_t excess = 0;
        for (std::size_t i = 0; i < spans_.size(); ++i) {
            int d = 1;
            for (std::size_t j = 0; j < i; ++j) {
                if (spans_[j].left < spans_[i].left && spans_[i].right < spans_[j].right) {
                    d = std::max(d, page_[spans_[j].edge] + 1);
                }
            }
            page_[spans_[i].edge] = d;
            if (d > pages_) excess += static_cast<std::size_t>(d - pages_);
        }
        return excess;
    }

    // Same-page crossing pairs left by a min-conflict greedy over the
    // crossing graph; exact for two pages via a bipartiteness check.
    std::size_t assign_stacks() {
        const std::size_t m = spans_.size();
        crossing_.assign(m, {});
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m && spans_[j].left < spans_[i].right; ++j) {
                if (spans_[i].left < spans_[j].left && spans_[j].right > spans_[i].right) {
                    crossing_[spans_[i].edge].push_back(spans_[j].edge);
                    crossing_[spans_[j].edge].push_back(spans_[i].edge);
                }
            }
        }
        if (pages_ == 2 && two_colour()) return 0;
        std::vector<std::size_t> clash(static_cast<std::size_t>(pages_) + 1);
        std::size_t conflicts = 0;
        page_.assign(m, 0);
        for (const Span& s : spans_) {
            std::fill(clash.begin(), clash.end(), 0);
            for (std::size_t f : crossing_[s.edge]) ++clash[static_cast<std::size_t>(page_[f])];
            int best = 1;
            for (int p = 2; p <= pages_; ++p) {
                if (clash[static_cast<std::size_t>(p)] < clash[static_cast<std::size_t>(best)]) best = p;
            }
            page_[s.edge] = best;
            conflicts += clash[static_cast<std::size_t>(best)];
        }
        if (conflicts > 0 && conflicts <= 3 && pages_ > 2) {
            if (auto exact = colour_conflicts(crossing_, pages_)) {
                page_ = std::move(*exact);
                return 0;
            }
        }
        return conflicts;
    }

    bool two_colour() {
        const std::size_t m = crossing_.size();
        page_.assign(m, 0);
        std::vector<std::size_t> queue;
        for (std::size_t start = 0; start < m; ++start) {
            if (page_[start] != 0) continue;
            page_[start] = 1;
            queue.assign(1, start);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const std::size_t e = queue[head];
                for (std::size_t f : crossing_[e]) {
                    if (page_[f] == 0) {
                        page_[f] = 3 - page_[e];
                        queue.push_back(f);
                    } else if (page_[f] == page_[e]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    const Graph& g_;
    LayoutKind kind_;
    int pages_;
    std::vector<std::size_t> pos_;
    std::vector<Span> spans_;
    std::vector<int> page_;
    std::vector<std::vector<std::size_t>> crossing_;
};

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

std::vector<Vertex> initial_order(const Graph& g, std::mt19937_64& rng, bool bfs) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[below(rng, i)]);
    if (!bfs || n == 0) return order;

    std::vector<bool> seen(n, false);
    std::vector<Vertex> result;
    result.reserve(n);
    for (Vertex start : order) {
        if (seen[start]) continue;
        std::queue<Vertex> q;
        q.push(start);
        seen[start] = true;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            result.push_back(v);
            std::vector<Vertex> next(g.neighbours(v).begin(), g.neighbours(v).end());
            for (std::size_t i = next.size(); i > 1; --i) std::swap(next[i - 1], next[below(rng, i)]);
            for (Vertex w : next) {
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
    }
    return result;
}

}  // namespace

SearchResult search_layout(const Graph& g, LayoutKind kind, int pages, SearchOptions options) {
    if (pages < 1) throw ConstructionError("search_layout: pages must be positive");
    SearchResult result;
    const std::size_t n = g.vertex_count();
    std::mt19937_64 rng(options.seed);
    SearchState state(g, kind, pages);

    auto finish = [&](const std::vector<Vertex>& order) {
        std::vector<PagedEdge> assignment(g.edge_count());
        for (std::size_t i = 0; i < g.edge_count(); ++i) assignment[i] = {g.edge(i), state.pages()[i]};
        LinearLayout layout(kind, order, std::move(assignment), pages);
        require_verified(g, layout, "search_layout");
        result.layout = std::move(layout);
    };

    while (result.evaluations < options.budget) {
        std::vector<Vertex> order = initial_order(g, rng, result.restarts % 2 == 0);
        ++result.restarts;
        ++result.evaluations;
        std::size_t cost = state.evaluate(order);
        if (cost == 0) {
            finish(order);
            return result;
        }
        if (n < 2) continue;
        for (std::uint64_t move = 0;
             move < options.moves_per_restart && result.evaluations < options.budget; ++move) {
            std::vector<Vertex> candidate = order;
            const std::size_t i = below(rng, n);
            std::size_t j = below(rng, n - 1);
            if (j >= i) ++j;
            if (rng() & 1) {
                std::swap(candidate[i], candidate[j]);
            } else if (i < j) {
                std::rotate(candidate.begin() + i, candidate.begin() + i + 1, candidate.begin() + j + 1);
            } else {
                std::rotate(candidate.begin() + j, candidate.begin() + i, candidate.begin() + i + 1);
            }
            ++result.evaluations;
            const std::size_t c = state.evaluate(candidate);
            if (c == 0) {
                finish(candidate);
                return result;
            }
            if (c <= cost) {
                cost = c;
                order = std::move(candidate);
            }
        }
    }
    return result;
}

}  // namespace linlayout
