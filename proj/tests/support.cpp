#include "support.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "linlayout/exact.hpp"

namespace testsupport {

std::vector<Vertex> random_order(std::mt19937_64& rng, std::size_t n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

Graph random_graph(std::mt19937_64& rng, std::size_t vertices, double density) {
    std::bernoulli_distribution keep(density);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < vertices; ++u) {
        for (Vertex v = u + 1; v < vertices; ++v) {
            if (keep(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph(vertices, std::move(edges));
}

LinearLayout random_layout(std::mt19937_64& rng, const Graph& g, LayoutKind kind, int pages) {
    std::uniform_int_distribution<int> page(1, pages);
    std::vector<PagedEdge> assignment;
    for (const Edge& e : g.edges()) assignment.push_back({e, page(rng)});
    return LinearLayout(kind, random_order(rng, g.vertex_count()), std::move(assignment), pages);
}

bool naive_crosses(std::span<const std::size_t> pos, const Edge& e, const Edge& f) {
    std::size_t a = pos[e.u], b = pos[e.v], c = pos[f.u], d = pos[f.v];
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool naive_nests(std::span<const std::size_t> pos, const Edge& e, const Edge& f) {
    std::size_t a = pos[e.u], b = pos[e.v], c = pos[f.u], d = pos[f.v];
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    return (a < c && d < b) || (c < a && b < d);
}

std::vector<std::pair<Edge, Edge>> naive_violations(const Graph& g, const LinearLayout& layout) {
    std::vector<std::pair<Edge, Edge>> out;
    const auto pos = layout.positions();
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (layout.page_of(edges[i]) != layout.page_of(edges[j])) continue;
            const bool bad = layout.kind() == LayoutKind::stack ? naive_crosses(pos, edges[i], edges[j])
                                                                 : naive_nests(pos, edges[i], edges[j]);
            if (bad) out.emplace_back(edges[i], edges[j]);
        }
    }
    return out;
}

namespace {

std::vector<std::vector<bool>> conflicts(const Graph& g, std::span<const Vertex> order, LayoutKind kind) {
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    const auto edges = g.edges();
    std::vector<std::vector<bool>> out(edges.size(), std::vector<bool>(edges.size(), false));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i == j) continue;
            out[i][j] = kind == LayoutKind::stack ? naive_crosses(pos, edges[i], edges[j])
                                                  : naive_nests(pos, edges[i], edges[j]);
        }
    }
    return out;
}

// Plain odometer over all k^m assignments.
bool colourable(const std::vector<std::vector<bool>>& conflict, int k) {
    const std::size_t m = conflict.size();
    std::vector<int> colour(m, 0);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            for (std::size_t j = i + 1; j < m && ok; ++j) ok = !(conflict[i][j] && colour[i] == colour[j]);
        }
        if (ok) return true;
        std::size_t i = 0;
        while (i < m && ++colour[i] == k) colour[i++] = 0;
        if (i == m) return false;
    }
}

}  // namespace

int brute_force_pages(const Graph& g, std::span<const Vertex> order, LayoutKind kind) {
    if (g.edge_count() == 0) return 0;
    const auto conflict = conflicts(g, order, kind);
    for (int k = 1;; ++k) {
        if (colourable(conflict, k)) return k;
    }
}

int largest_rainbow(const Graph& g, std::span<const Vertex> order) {
    const auto conflict = conflicts(g, order, LayoutKind::queue);
    const std::size_t m = conflict.size();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        bool rainbow = true;
        for (std::size_t i = 0; i < m && rainbow; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = i + 1; j < m && rainbow; ++j) {
                if (mask >> j & 1) rainbow = conflict[i][j];
            }
        }
        if (rainbow) best = size;
    }
    return best;
}

int brute_force_page_number(const Graph& g, LayoutKind kind) {
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), Vertex{0});
    int best = static_cast<int>(g.edge_count());
    do {
        const auto conflict = conflicts(g, order, kind);
        for (int k = 1; k < best; ++k) {
            if (colourable(conflict, k)) {
                best = k;
                break;
            }
        }
    } while (best > 1 && std::next_permutation(order.begin(), order.end()));
    return g.edge_count() == 0 ? 0 : best;
}

LinearLayout synthetic_star_hex(std::size_t d, int n, Arrangement arrangement,
                                const std::function<bool(Vertex)>& forward,
                                const std::function<int(std::size_t)>& grid_page, int star_page, int pages) {
    const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    auto id = [&](std::size_t star, std::size_t cell) { return static_cast<Vertex>(star * cells + cell); };
    std::vector<Vertex> order;
    for (std::size_t p = 0; p < cells; ++p) order.push_back(id(0, p));
    if (arrangement == Arrangement::block_major) {
        for (std::size_t p = 0; p < cells; ++p) {
            for (std::size_t k = 1; k <= d; ++k) {
                order.push_back(id(forward(static_cast<Vertex>(p)) ? k : d + 1 - k, p));
            }
        }
    } else {
        // Forward cells first with leaves ascending, then the rest descending.
        for (bool region : {true, false}) {
            for (std::size_t k = 1; k <= d; ++k) {
                for (std::size_t p = 0; p < cells; ++p) {
                    if (forward(static_cast<Vertex>(p)) == region) order.push_back(id(region ? k : d + 1 - k, p));
                }
            }
        }
    }
    const Graph grid = make_hex_grid(n);
    std::vector<PagedEdge> assignment;
    for (std::size_t star = 0; star <= d; ++star) {
        for (std::size_t i = 0; i < grid.edge_count(); ++i) {
            assignment.push_back({Edge(id(star, grid.edge(i).u), id(star, grid.edge(i).v)), grid_page(i)});
        }
    }
    for (std::size_t k = 1; k <= d; ++k) {
        for (std::size_t p = 0; p < cells; ++p) assignment.push_back({Edge(id(0, p), id(k, p)), star_page});
    }
    return LinearLayout(LayoutKind::stack, std::move(order), std::move(assignment), pages);
}

LinearLayout valid_random_stack_layout(std::mt19937_64& rng, const Graph& g) {
    auto order = random_order(rng, g.vertex_count());
    auto result = min_stacks_fixed_order(g, order, 256);
    return result.layout;
}

std::optional<LinearLayout> plant_crossing(std::mt19937_64& rng, const Graph& g, const LinearLayout& layout) {
    const auto pos = layout.positions();
    std::vector<std::pair<Edge, Edge>> candidates;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (naive_crosses(pos, edges[i], edges[j]) && layout.page_of(edges[i]) != layout.page_of(edges[j])) {
                candidates.emplace_back(edges[i], edges[j]);
            }
        }
    }
    if (candidates.empty()) return std::nullopt;
    const auto [moved, anchor] = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    const int page = *layout.page_of(anchor);
    std::vector<PagedEdge> assignment(layout.assignment().begin(), layout.assignment().end());
    for (PagedEdge& pe : assignment) {
        if (pe.edge == moved) pe.page = page;
    }
    return LinearLayout(layout.kind(), std::vector<Vertex>(layout.order().begin(), layout.order().end()),
                        std::move(assignment), layout.page_count());
}

bool pipeline_bounds_hold(const RefutationOutcome& outcome, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    const auto& r = outcome.report;
    const auto& t = outcome.trace;
    const std::uint64_t cells = static_cast<std::uint64_t>(r.n) * static_cast<std::uint64_t>(r.n);
    auto big = [](std::size_t v) { return BigInt(static_cast<unsigned long>(v)); };
    if (big(r.a) * factorial(cells) < big(r.leaves)) return fail("a * (n^2)! < b");
    if (big(r.c) * power(BigInt(r.s), 3 * cells) < big(r.a)) return fail("c * s^(3n^2) < a");
    if (!power_of_two_power_at_least(big(r.d), cells - 1, big(r.c))) return fail("d^(2^(n^2-1)) < c");
    for (const auto& bound : t.bounds) {
        if (!bound.holds) return fail("recorded bound failed: " + bound.name);
    }
    for (const auto& level : t.twister.levels) {
        if (big(level.leaves.size()) * power(2, static_cast<std::uint64_t>(level.level - 1)) < big(r.d)) {
            return fail("C1 fails at level " + std::to_string(level.level));
        }
        for (std::size_t k = 1; k < level.groups.size(); ++k) {
            if (!(level.groups[k - 1].second < level.groups[k].first)) {
                return fail("C2 fails at level " + std::to_string(level.level));
            }
        }
    }
    if (!t.twister.certificate && t.twister.family.edges.size() < t.twister.guarantee) {
        return fail("family below its guarantee");
    }
    return true;
}

}  // namespace testsupport
