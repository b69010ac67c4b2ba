#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace linlayout {

using Vertex = std::uint32_t;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool touches(Vertex x) const { return u == x || v == x; }
    bool shares_endpoint(const Edge& other) const {
        return touches(other.u) || touches(other.v);
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Cell (x, y) of the n x n triangulated grid, both coordinates 1-based.
/// Flattened id is (y - 1) * n + (x - 1).
struct GridCoord {
    int x = 1;
    int y = 1;
    friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

inline Vertex grid_id(int n, GridCoord c) {
    return static_cast<Vertex>((c.y - 1) * n + (c.x - 1));
}

inline GridCoord grid_coord(int n, Vertex id) {
    return GridCoord{static_cast<int>(id % n) + 1, static_cast<int>(id / n) + 1};
}

struct StarRoot {
    friend auto operator<=>(const StarRoot&, const StarRoot&) = default;
};
struct StarLeaf {
    std::uint32_t index = 0;  // 1-based
    friend auto operator<=>(const StarLeaf&, const StarLeaf&) = default;
};
/// Vertex (first, second) of a product; the id is first * |V(G2)| + second.
struct ProductPair {
    Vertex first = 0;
    Vertex second = 0;
    friend auto operator<=>(const ProductPair&, const ProductPair&) = default;
};
struct SubdivisionVertex {
    Edge original;
    std::uint32_t step = 0;  // 1..k along the path from original.u
    friend auto operator<=>(const SubdivisionVertex&, const SubdivisionVertex&) = default;
};

using VertexLabel =
    std::variant<std::monostate, GridCoord, StarRoot, StarLeaf, ProductPair, SubdivisionVertex>;

/// Immutable simple undirected graph on vertex ids [0, vertex_count).
///
/// Edges are kept sorted, which gives every edge a stable index used by
/// layouts and verifiers. Construction validates the edge list: self-loops,
/// duplicates and out-of-range endpoints raise GraphError.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::vector<Edge> edges, std::string provenance = {},
          std::vector<VertexLabel> labels = {});

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_[index]; }

    std::span<const Vertex> neighbours(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const;

    bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
    std::optional<std::size_t> edge_index(const Edge& e) const { return edge_index(e.u, e.v); }

    const std::string& provenance() const { return provenance_; }
    bool has_labels() const { return !labels_.empty(); }
    const VertexLabel& label(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
    std::vector<VertexLabel> labels_;
    std::string provenance_;
};

// Generators. H_n uses horizontal, vertical and (x,y)(x+1,y+1) diagonal edges.
Graph make_hex_grid(int n);
Graph make_star(std::size_t leaves);
Graph make_path(std::size_t vertices);
Graph make_cycle(std::size_t vertices);
Graph make_complete(std::size_t vertices);

Graph cartesian_product(const Graph& g1, const Graph& g2);
Graph strong_product(const Graph& g1, const Graph& g2);

/// Replaces every edge by a path with k internal vertices. New vertices are
/// appended edge by edge in sorted edge order, walking from the smaller endpoint.
Graph subdivide(const Graph& g, std::size_t k);

struct BipartiteCheck {
    bool bipartite = false;
    std::vector<std::uint8_t> sides;  // proper 2-colouring when bipartite
    std::vector<Vertex> odd_cycle;    // closed walk v0..vk with v0 adjacent to vk otherwise
};

BipartiteCheck is_bipartite(const Graph& g);

}  // namespace linlayout
