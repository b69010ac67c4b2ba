#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "linlayout/graph.hpp"

namespace linlayout {

class LayoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class LayoutKind { stack, queue };

const char* to_string(LayoutKind kind);

struct PagedEdge {
    Edge edge;
    int page = 1;  // 1-based
    friend auto operator<=>(const PagedEdge&, const PagedEdge&) = default;
};

/// A total vertex order together with an edge-to-page assignment.
///
/// Assignments are kept sorted by edge, so for a layout of graph g the i-th
/// assignment belongs to g.edge(i). Pages are numbered 1..page_count.
class LinearLayout {
public:
    LinearLayout() = default;
    LinearLayout(LayoutKind kind, std::vector<Vertex> order, std::vector<PagedEdge> assignment,
                 int page_count);

    LayoutKind kind() const { return kind_; }
    int page_count() const { return page_count_; }
    std::size_t vertex_count() const { return order_.size(); }
    std::span<const Vertex> order() const { return order_; }
    std::span<const std::size_t> positions() const { return position_; }
    std::size_t position(Vertex v) const { return position_[v]; }
    std::span<const PagedEdge> assignment() const { return assignment_; }
    std::optional<int> page_of(const Edge& e) const;

    /// Number of distinct pages that carry at least one edge.
    int used_pages() const;

    friend bool operator==(const LinearLayout& a, const LinearLayout& b) {
        return a.kind_ == b.kind_ && a.page_count_ == b.page_count_ && a.order_ == b.order_ &&
               a.assignment_ == b.assignment_;
    }

private:
    LayoutKind kind_ = LayoutKind::stack;
    int page_count_ = 1;
    std::vector<Vertex> order_;
    std::vector<std::size_t> position_;
    std::vector<PagedEdge> assignment_;
};

/// (min, max) of two positions.
inline std::pair<std::size_t, std::size_t> ordered(std::size_t a, std::size_t b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

enum class EdgeRelation { shares_endpoint, crosses, nests, sequential };

const char* to_string(EdgeRelation relation);

EdgeRelation edge_relation(std::span<const std::size_t> position, const Edge& e, const Edge& f);

inline EdgeRelation edge_relation(const LinearLayout& layout, const Edge& e, const Edge& f) {
    return edge_relation(layout.positions(), e, f);
}

/// Two same-page edges in the relation forbidden by the layout kind.
struct ViolationCertificate {
    Edge first;   // first < second
    Edge second;
    int page = 1;
    LayoutKind kind = LayoutKind::stack;
    /// Positions of first.u, first.v, second.u, second.v.
    std::array<std::size_t, 4> positions{};

    friend bool operator==(const ViolationCertificate&, const ViolationCertificate&) = default;
};

ViolationCertificate make_certificate(const LinearLayout& layout, const Edge& a, const Edge& b,
                                      int page);

/// Re-checks a certificate against a layout from scratch.
bool recheck(const ViolationCertificate& cert, const LinearLayout& layout);

std::string describe(const ViolationCertificate& cert);

/// Throws LayoutError unless the layout orders exactly V(g) and pages exactly E(g).
void require_matches(const Graph& g, const LinearLayout& layout);

enum class VerifyMethod {
    pair_scan,  // every same-page pair; the reference
    sweep,      // per-page interval sweep, identical output
};

/// Every same-page crossing (stack) or nesting (queue) pair, ordered by
/// (page, first edge, second edge). Empty means the layout is valid.
std::vector<ViolationCertificate> verify_layout(const Graph& g, const LinearLayout& layout,
                                                VerifyMethod method = VerifyMethod::sweep);

std::optional<ViolationCertificate> first_violation(const Graph& g, const LinearLayout& layout);

inline bool is_valid(const Graph& g, const LinearLayout& layout) {
    return !first_violation(g, layout).has_value();
}

struct StrictnessCheck {
    bool strict = true;
    /// (u, v, w): v and w both precede or both follow u, and uv, uw share a queue.
    std::optional<std::array<Vertex, 3>> witness;
};

/// Requires a valid queue layout of g.
StrictnessCheck is_strict_queue(const Graph& g, const LinearLayout& layout);

struct DispersabilityCheck {
    bool dispersable = true;
    std::optional<std::pair<Edge, Edge>> witness;  // incident edges on one page
};

/// Requires a valid stack layout of g.
DispersabilityCheck is_dispersable(const Graph& g, const LinearLayout& layout);

/// True iff every pair of the given edges crosses. Edges must be pairwise
/// vertex-disjoint; LayoutError otherwise.
bool verify_pairwise_crossing(std::span<const std::size_t> position, std::span<const Edge> edges);

struct InducedLayout {
    Graph graph;
    LinearLayout layout;
};

/// Subgraph induced by `keep` (renumbered 0..k-1 in the given sequence) with
/// the inherited relative order and pages.
InducedLayout restrict_layout(const Graph& g, const LinearLayout& layout,
                              std::span<const Vertex> keep);

// Layout format:
//   layout <stack|queue> <page_count>
//   order v0 v1 ...
//   page <u> <v> <p>     (one per edge, sorted by edge)
void write_layout(std::ostream& out, const LinearLayout& layout);
std::string layout_to_string(const LinearLayout& layout);
LinearLayout read_layout(std::istream& in);
LinearLayout layout_from_string(const std::string& text);

}  // namespace linlayout
