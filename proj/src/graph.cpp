#include "linlayout/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace linlayout {

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b, const char* what) {
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
        throw GraphError(std::string("id overflow in ") + what);
    }
    return a * b;
}

std::size_t checked_add(std::size_t a, std::size_t b, const char* what) {
    if (b > std::numeric_limits<std::size_t>::max() - a) {
        throw GraphError(std::string("id overflow in ") + what);
    }
    return a + b;
}

// Vertex ids are 32-bit; products must stay inside that range.
void check_vertex_range(std::size_t count, const char* what) {
    if (count > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) {
        throw GraphError(std::string("vertex count exceeds 32-bit ids in ") + what);
    }
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::string provenance,
             std::vector<VertexLabel> labels)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      labels_(std::move(labels)),
      provenance_(std::move(provenance)) {
    check_vertex_range(vertex_count_, "graph construction");
    for (const Edge& e : edges_) {
        if (e.u == e.v) {
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.v >= vertex_count_) {
            throw GraphError("edge endpoint " + std::to_string(e.v) + " out of range");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw GraphError("duplicate edge " + std::to_string(dup->u) + " " +
                         std::to_string(dup->v));
    }
    if (!labels_.empty()) {
        if (labels_.size() != vertex_count_) {
            throw GraphError("label count does not match vertex count");
        }
        std::vector<VertexLabel> sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw GraphError("vertex labels are not distinct");
        }
    }

    std::vector<std::size_t> deg(vertex_count_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(vertex_count_ + 1, 0);
    for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adjacency_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < vertex_count_; ++v) {
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
    }
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (std::size_t v = 0; v < vertex_count_; ++v) best = std::max(best, degree(v));
    return best;
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
    if (a == b) return std::nullopt;
    Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

const VertexLabel& Graph::label(Vertex v) const {
    static const VertexLabel none{};
    return labels_.empty() ? none : labels_.at(v);
}

Graph make_hex_grid(int n) {
    if (n < 1) throw GraphError("hex grid needs n >= 1");
    const auto count = checked_mul(static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                                   "make_hex_grid");
    std::vector<Edge> edges;
    std::vector<VertexLabel> labels(count);
    for (int y = 1; y <= n; ++y) {
        for (int x = 1; x <= n; ++x) {
            const Vertex id = grid_id(n, {x, y});
            labels[id] = GridCoord{x, y};
            if (x < n) edges.emplace_back(id, grid_id(n, {x + 1, y}));
            if (y < n) edges.emplace_back(id, grid_id(n, {x, y + 1}));
            if (x < n && y < n) edges.emplace_back(id, grid_id(n, {x + 1, y + 1}));
        }
    }
    return Graph(count, std::move(edges), "hexgrid " + std::to_string(n), std::move(labels));
}

Graph make_star(std::size_t leaves) {
    const auto count = checked_add(leaves, 1, "make_star");
    std::vector<Edge> edges;
    std::vector<VertexLabel> labels(count);
    labels[0] = StarRoot{};
    for (std::size_t i = 1; i <= leaves; ++i) {
        edges.emplace_back(0, static_cast<Vertex>(i));
        labels[i] = StarLeaf{static_cast<std::uint32_t>(i)};
    }
    return Graph(count, std::move(edges), "star " + std::to_string(leaves), std::move(labels));
}

Graph make_path(std::size_t vertices) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < vertices; ++i) {
        edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
    }
    return Graph(vertices, std::move(edges), "path " + std::to_string(vertices));
}

Graph make_cycle(std::size_t vertices) {
    if (vertices < 3) throw GraphError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % vertices));
    }
    return Graph(vertices, std::move(edges), "cycle " + std::to_string(vertices));
}

Graph make_complete(std::size_t vertices) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices; ++i) {
        for (std::size_t j = i + 1; j < vertices; ++j) {
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph(vertices, std::move(edges), "complete " + std::to_string(vertices));
}

namespace {

Graph product(const Graph& g1, const Graph& g2, bool strong) {
    const char* what = strong ? "strong_product" : "cartesian_product";
    const std::size_t n1 = g1.vertex_count();
    const std::size_t n2 = g2.vertex_count();
    const std::size_t count = checked_mul(n1, n2, what);
    check_vertex_range(count, what);
    auto id = [n2](std::size_t a, std::size_t b) { return static_cast<Vertex>(a * n2 + b); };

    std::vector<Edge> edges;
    edges.reserve(n1 * g2.edge_count() + g1.edge_count() * n2 +
                  (strong ? 2 * g1.edge_count() * g2.edge_count() : 0));
    for (std::size_t a = 0; a < n1; ++a) {
        for (const Edge& f : g2.edges()) edges.emplace_back(id(a, f.u), id(a, f.v));
    }
    for (const Edge& e : g1.edges()) {
        for (std::size_t b = 0; b < n2; ++b) edges.emplace_back(id(e.u, b), id(e.v, b));
    }
    if (strong) {
        for (const Edge& e : g1.edges()) {
            for (const Edge& f : g2.edges()) {
                edges.emplace_back(id(e.u, f.u), id(e.v, f.v));
                edges.emplace_back(id(e.u, f.v), id(e.v, f.u));
            }
        }
    }
    std::vector<VertexLabel> labels(count);
    for (std::size_t a = 0; a < n1; ++a) {
        for (std::size_t b = 0; b < n2; ++b) {
            labels[id(a, b)] = ProductPair{static_cast<Vertex>(a), static_cast<Vertex>(b)};
        }
    }
    std::string name = "(" + g1.provenance() + (strong ? ") x (" : ") [] (") + g2.provenance() + ")";
    return Graph(count, std::move(edges), std::move(name), std::move(labels));
}

}  // namespace

Graph cartesian_product(const Graph& g1, const Graph& g2) { return product(g1, g2, false); }

Graph strong_product(const Graph& g1, const Graph& g2) { return product(g1, g2, true); }

Graph subdivide(const Graph& g, std::size_t k) {
    if (k == 0) return g;
    const std::size_t extra = checked_mul(k, g.edge_count(), "subdivide");
    const std::size_t count = checked_add(g.vertex_count(), extra, "subdivide");
    check_vertex_range(count, "subdivide");

    std::vector<Edge> edges;
    edges.reserve((k + 1) * g.edge_count());
    std::vector<VertexLabel> labels(count);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) labels[v] = g.label(static_cast<Vertex>(v));
    const bool labelled = g.has_labels();
    Vertex next = static_cast<Vertex>(g.vertex_count());
    for (const Edge& e : g.edges()) {
        Vertex prev = e.u;
        for (std::size_t step = 1; step <= k; ++step) {
            labels[next] = SubdivisionVertex{e, static_cast<std::uint32_t>(step)};
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, e.v);
    }
    std::string name = "subdivide " + std::to_string(k) + " (" + g.provenance() + ")";
    if (!labelled) {
        // Original vertices have no label, which would break label distinctness.
        labels.clear();
    }
    return Graph(count, std::move(edges), std::move(name), std::move(labels));
}

BipartiteCheck is_bipartite(const Graph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::uint8_t unset = 2;
    std::vector<std::uint8_t> side(n, unset);
    std::vector<Vertex> parent(n, 0);

    for (std::size_t start = 0; start < n; ++start) {
        if (side[start] != unset) continue;
        side[start] = 0;
        parent[start] = static_cast<Vertex>(start);
        std::queue<Vertex> bfs;
        bfs.push(static_cast<Vertex>(start));
        while (!bfs.empty()) {
            const Vertex v = bfs.front();
            bfs.pop();
            for (Vertex w : g.neighbours(v)) {
                if (side[w] == unset) {
                    side[w] = static_cast<std::uint8_t>(1 - side[v]);
                    parent[w] = v;
                    bfs.push(w);
                } else if (side[w] == side[v]) {
                    // Same BFS level: walk both tree paths up to their meeting point.
                    std::vector<Vertex> left{v}, right{w};
                    Vertex a = v, b = w;
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    BipartiteCheck result;
                    result.odd_cycle = std::move(left);
                    result.odd_cycle.insert(result.odd_cycle.end(), right.rbegin(), right.rend());
                    return result;
                }
            }
        }
    }
    BipartiteCheck result;
    result.bipartite = true;
    result.sides = std::move(side);
    return result;
}

}  // namespace linlayout
