#include "linlayout/layout.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "linlayout/text_io.hpp"

namespace linlayout {

const char* to_string(LayoutKind kind) { return kind == LayoutKind::stack ? "stack" : "queue"; }

const char* to_string(EdgeRelation relation) {
    switch (relation) {
        case EdgeRelation::shares_endpoint: return "shares_endpoint";
        case EdgeRelation::crosses: return "crosses";
        case EdgeRelation::nests: return "nests";
        case EdgeRelation::sequential: return "sequential";
    }
    return "?";
}

LinearLayout::LinearLayout(LayoutKind kind, std::vector<Vertex> order,
                           std::vector<PagedEdge> assignment, int page_count)
    : kind_(kind), page_count_(page_count), order_(std::move(order)), assignment_(std::move(assignment)) {
    if (page_count_ < 1) throw LayoutError("page count must be positive");
    const std::size_t n = order_.size();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    position_.assign(n, unset);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order_[i];
        if (v >= n || position_[v] != unset) {
            throw LayoutError("order is not a permutation of 0.." + std::to_string(n ? n - 1 : 0));
        }
        position_[v] = i;
    }
    std::sort(assignment_.begin(), assignment_.end());
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        const PagedEdge& pe = assignment_[i];
        if (pe.edge.u == pe.edge.v || pe.edge.v >= n) {
            throw LayoutError("paged edge has an invalid endpoint");
        }
        if (pe.page < 1 || pe.page > page_count_) {
            throw LayoutError("page " + std::to_string(pe.page) + " outside 1.." +
                              std::to_string(page_count_));
        }
        if (i > 0 && assignment_[i - 1].edge == pe.edge) {
            throw LayoutError("edge " + std::to_string(pe.edge.u) + " " +
                              std::to_string(pe.edge.v) + " assigned twice");
        }
    }
}

std::optional<int> LinearLayout::page_of(const Edge& e) const {
    auto it = std::lower_bound(assignment_.begin(), assignment_.end(), e,
                               [](const PagedEdge& pe, const Edge& key) { return pe.edge < key; });
    if (it == assignment_.end() || it->edge != e) return std::nullopt;
    return it->page;
}

int LinearLayout::used_pages() const {
    std::vector<bool> used(static_cast<std::size_t>(page_count_) + 1, false);
    for (const PagedEdge& pe : assignment_) used[pe.page] = true;
    return static_cast<int>(std::count(used.begin(), used.end(), true));
}

EdgeRelation edge_relation(std::span<const std::size_t> position, const Edge& e, const Edge& f) {
    if (e.shares_endpoint(f)) return EdgeRelation::shares_endpoint;
    auto a = ordered(position[e.u], position[e.v]);
    auto b = ordered(position[f.u], position[f.v]);
    if (b.first < a.first) std::swap(a, b);
    // a starts first
    if (a.second < b.first) return EdgeRelation::sequential;
    if (b.second < a.second) return EdgeRelation::nests;
    return EdgeRelation::crosses;
}

ViolationCertificate make_certificate(const LinearLayout& layout, const Edge& a, const Edge& b,
                                      int page) {
    ViolationCertificate cert;
    cert.first = std::min(a, b);
    cert.second = std::max(a, b);
    cert.page = page;
    cert.kind = layout.kind();
    cert.positions = {layout.position(cert.first.u), layout.position(cert.first.v),
                      layout.position(cert.second.u), layout.position(cert.second.v)};
    return cert;
}

bool recheck(const ViolationCertificate& cert, const LinearLayout& layout) {
    if (cert.kind != layout.kind()) return false;
    const std::size_t n = layout.vertex_count();
    for (Vertex v : {cert.first.u, cert.first.v, cert.second.u, cert.second.v}) {
        if (v >= n) return false;
    }
    const auto p1 = layout.page_of(cert.first);
    const auto p2 = layout.page_of(cert.second);
    if (!p1 || !p2 || *p1 != cert.page || *p2 != cert.page) return false;
    const EdgeRelation forbidden =
        layout.kind() == LayoutKind::stack ? EdgeRelation::crosses : EdgeRelation::nests;
    return edge_relation(layout, cert.first, cert.second) == forbidden;
}

std::string describe(const ViolationCertificate& cert) {
    std::ostringstream out;
    out << "edges " << cert.first.u << "-" << cert.first.v << " and " << cert.second.u << "-"
        << cert.second.v << " " << (cert.kind == LayoutKind::stack ? "cross" : "nest")
        << " on page " << cert.page << " (positions " << cert.positions[0] << ","
        << cert.positions[1] << " / " << cert.positions[2] << "," << cert.positions[3] << ")";
    return out.str();
}

void require_matches(const Graph& g, const LinearLayout& layout) {
    if (layout.vertex_count() != g.vertex_count()) {
        throw LayoutError("layout orders " + std::to_string(layout.vertex_count()) +
                          " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    const auto assignment = layout.assignment();
    if (assignment.size() != g.edge_count()) {
        throw LayoutError("layout pages " + std::to_string(assignment.size()) +
                          " edges, graph has " + std::to_string(g.edge_count()));
    }
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i].edge != g.edge(i)) {
            throw LayoutError("layout edge " + std::to_string(assignment[i].edge.u) + " " +
                              std::to_string(assignment[i].edge.v) + " is not a graph edge");
        }
    }
}

namespace {

struct Interval {
    std::size_t left;
    std::size_t right;
    std::size_t edge;  // index into the assignment
};

std::vector<std::vector<std::size_t>> edges_by_page(const LinearLayout& layout) {
    std::vector<std::vector<std::size_t>> pages(static_cast<std::size_t>(layout.page_count()) + 1);
    const auto assignment = layout.assignment();
    for (std::size_t i = 0; i < assignment.size(); ++i) pages[assignment[i].page].push_back(i);
    return pages;
}

bool forbidden(const LinearLayout& layout, const Edge& e, const Edge& f) {
    const EdgeRelation r = edge_relation(layout, e, f);
    return layout.kind() == LayoutKind::stack ? r == EdgeRelation::crosses : r == EdgeRelation::nests;
}

template <class Emit>
void scan_pairs(const LinearLayout& layout, Emit&& emit) {
    const auto assignment = layout.assignment();
    const auto pages = edges_by_page(layout);
    for (int p = 1; p <= layout.page_count(); ++p) {
        const auto& ids = pages[p];
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                const Edge& e = assignment[ids[i]].edge;
                const Edge& f = assignment[ids[j]].edge;
                if (forbidden(layout, e, f) && !emit(e, f, p)) return;
            }
        }
    }
}

// Only pairs whose intervals overlap can cross or nest, so for each interval
// it suffices to look at intervals starting strictly inside it.
template <class Emit>
void sweep_pages(const LinearLayout& layout, Emit&& emit) {
    const auto assignment = layout.assignment();
    const auto pages = edges_by_page(layout);
    const bool stack = layout.kind() == LayoutKind::stack;
    for (int p = 1; p <= layout.page_count(); ++p) {
        std::vector<Interval> intervals;
        intervals.reserve(pages[p].size());
        for (std::size_t id : pages[p]) {
            const Edge& e = assignment[id].edge;
            const auto [l, r] = ordered(layout.position(e.u), layout.position(e.v));
            intervals.push_back({l, r, id});
        }
        std::sort(intervals.begin(), intervals.end(),
                  [](const Interval& a, const Interval& b) { return a.left < b.left; });
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            const Interval& outer = intervals[i];
            for (std::size_t j = i + 1; j < intervals.size() && intervals[j].left < outer.right; ++j) {
                const Interval& inner = intervals[j];
                if (inner.left == outer.left || inner.right == outer.right) continue;
                const bool hit = stack ? inner.right > outer.right : inner.right < outer.right;
                if (hit && !emit(assignment[outer.edge].edge, assignment[inner.edge].edge, p)) return;
            }
        }
    }
}

bool certificate_less(const ViolationCertificate& a, const ViolationCertificate& b) {
    return std::tie(a.page, a.first, a.second) < std::tie(b.page, b.first, b.second);
}

}  // namespace

std::vector<ViolationCertificate> verify_layout(const Graph& g, const LinearLayout& layout,
                                                VerifyMethod method) {
    require_matches(g, layout);
    std::vector<ViolationCertificate> out;
    auto emit = [&](const Edge& e, const Edge& f, int page) {
        out.push_back(make_certificate(layout, e, f, page));
        return true;
    };
    if (method == VerifyMethod::pair_scan) {
        scan_pairs(layout, emit);
    } else {
        sweep_pages(layout, emit);
    }
    std::sort(out.begin(), out.end(), certificate_less);
    return out;
}

std::optional<ViolationCertificate> first_violation(const Graph& g, const LinearLayout& layout) {
    require_matches(g, layout);
    std::optional<ViolationCertificate> found;
    sweep_pages(layout, [&](const Edge& e, const Edge& f, int page) {
        found = make_certificate(layout, e, f, page);
        return false;
    });
    return found;
}

namespace {

void require_valid(const Graph& g, const LinearLayout& layout, LayoutKind kind, const char* what) {
    if (layout.kind() != kind) {
        throw LayoutError(std::string(what) + " needs a " + to_string(kind) + " layout");
    }
    if (auto v = first_violation(g, layout)) {
        throw LayoutError(std::string(what) + " needs a valid layout; " + describe(*v));
    }
}

}  // namespace

StrictnessCheck is_strict_queue(const Graph& g, const LinearLayout& layout) {
    require_valid(g, layout, LayoutKind::queue, "is_strict_queue");
    StrictnessCheck result;
    for (std::size_t ui = 0; ui < g.vertex_count(); ++ui) {
        const Vertex u = static_cast<Vertex>(ui);
        // (page, side) -> first neighbour seen there; side 0 = before u, 1 = after u
        std::vector<std::array<std::optional<Vertex>, 2>> seen(
            static_cast<std::size_t>(layout.page_count()) + 1);
        for (Vertex v : g.neighbours(u)) {
            const int page = *layout.page_of(Edge(u, v));
            const int side = layout.position(v) > layout.position(u) ? 1 : 0;
            auto& slot = seen[page][side];
            if (slot) {
                result.strict = false;
                result.witness = std::array<Vertex, 3>{u, *slot, v};
                return result;
            }
            slot = v;
        }
    }
    return result;
}

DispersabilityCheck is_dispersable(const Graph& g, const LinearLayout& layout) {
    require_valid(g, layout, LayoutKind::stack, "is_dispersable");
    DispersabilityCheck result;
    for (std::size_t ui = 0; ui < g.vertex_count(); ++ui) {
        const Vertex u = static_cast<Vertex>(ui);
        std::vector<std::optional<Vertex>> seen(static_cast<std::size_t>(layout.page_count()) + 1);
        for (Vertex v : g.neighbours(u)) {
            const int page = *layout.page_of(Edge(u, v));
            if (seen[page]) {
                result.dispersable = false;
                result.witness = std::pair{Edge(u, *seen[page]), Edge(u, v)};
                return result;
            }
            seen[page] = v;
        }
    }
    return result;
}

bool verify_pairwise_crossing(std::span<const std::size_t> position, std::span<const Edge> edges) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (edges[i].shares_endpoint(edges[j])) {
                throw LayoutError("crossing family edges share an endpoint");
            }
        }
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (edge_relation(position, edges[i], edges[j]) != EdgeRelation::crosses) return false;
        }
    }
    return true;
}

InducedLayout restrict_layout(const Graph& g, const LinearLayout& layout,
                              std::span<const Vertex> keep) {
    require_matches(g, layout);
    constexpr Vertex absent = static_cast<Vertex>(-1);
    std::vector<Vertex> renumber(g.vertex_count(), absent);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= g.vertex_count() || renumber[keep[i]] != absent) {
            throw LayoutError("restrict_layout: invalid or repeated vertex");
        }
        renumber[keep[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    std::vector<PagedEdge> pages;
    for (const PagedEdge& pe : layout.assignment()) {
        const Vertex a = renumber[pe.edge.u];
        const Vertex b = renumber[pe.edge.v];
        if (a == absent || b == absent) continue;
        edges.emplace_back(a, b);
        pages.push_back({Edge(a, b), pe.page});
    }
    std::vector<Vertex> order;
    for (Vertex v : layout.order()) {
        if (renumber[v] != absent) order.push_back(renumber[v]);
    }
    Graph sub(keep.size(), std::move(edges), "induced (" + g.provenance() + ")");
    return {std::move(sub),
            LinearLayout(layout.kind(), std::move(order), std::move(pages), layout.page_count())};
}

void write_layout(std::ostream& out, const LinearLayout& layout) {
    out << "layout " << to_string(layout.kind()) << ' ' << layout.page_count() << '\n';
    out << "order";
    for (Vertex v : layout.order()) out << ' ' << v;
    out << '\n';
    for (const PagedEdge& pe : layout.assignment()) {
        out << "page " << pe.edge.u << ' ' << pe.edge.v << ' ' << pe.page << '\n';
    }
}

std::string layout_to_string(const LinearLayout& layout) {
    std::ostringstream out;
    write_layout(out, layout);
    return out.str();
}

LinearLayout read_layout(std::istream& in) {
    using detail::parse_unsigned;
    std::string line;
    std::size_t line_no = 0;
    std::optional<LayoutKind> kind;
    std::uint64_t page_count = 0;
    std::optional<std::vector<Vertex>> order;
    std::vector<PagedEdge> pages;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        if (!kind) {
            if (tokens.size() != 3 || tokens[0] != "layout" ||
                (tokens[1] != "stack" && tokens[1] != "queue")) {
                throw ParseError(line_no, "expected header 'layout <stack|queue> <page_count>'");
            }
            kind = tokens[1] == "stack" ? LayoutKind::stack : LayoutKind::queue;
            page_count = parse_unsigned(tokens[2], line_no);
            if (page_count < 1 || page_count > 1'000'000) {
                throw ParseError(line_no, "page count out of range");
            }
            continue;
        }
        if (!order) {
            if (tokens[0] != "order") throw ParseError(line_no, "expected 'order v0 v1 ...'");
            order.emplace();
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const auto v = parse_unsigned(tokens[i], line_no);
                if (v >= tokens.size() - 1) throw ParseError(line_no, "order entry out of range");
                order->push_back(static_cast<Vertex>(v));
            }
            std::vector<Vertex> check = *order;
            std::sort(check.begin(), check.end());
            if (std::adjacent_find(check.begin(), check.end()) != check.end()) {
                throw ParseError(line_no, "order repeats a vertex");
            }
            continue;
        }
        if (tokens.size() != 4 || tokens[0] != "page") {
            throw ParseError(line_no, "expected 'page <u> <v> <p>'");
        }
        const auto u = parse_unsigned(tokens[1], line_no);
        const auto v = parse_unsigned(tokens[2], line_no);
        const auto p = parse_unsigned(tokens[3], line_no);
        if (u >= order->size() || v >= order->size() || u == v) {
            throw ParseError(line_no, "invalid edge endpoints");
        }
        if (p < 1 || p > page_count) throw ParseError(line_no, "page index out of range");
        pages.push_back({Edge(static_cast<Vertex>(u), static_cast<Vertex>(v)), static_cast<int>(p)});
    }
    if (!kind) throw ParseError(0, "missing 'layout' header");
    if (!order) throw ParseError(0, "missing 'order' line");
    try {
        return LinearLayout(*kind, std::move(*order), std::move(pages), static_cast<int>(page_count));
    } catch (const LayoutError& e) {
        throw ParseError(0, e.what());
    }
}

LinearLayout layout_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_layout(in);
}

}  // namespace linlayout
