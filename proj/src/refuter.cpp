#include "linlayout/refuter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

namespace linlayout {

StarHexFrame::StarHexFrame(std::size_t leaves, int n)
    : leaves_(leaves), n_(n), cells_(0), grid_(n >= 1 ? make_hex_grid(n) : Graph()) {
    if (n < 1) throw RefuterError("grid side must be positive");
    cells_ = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
}

Graph StarHexFrame::product() const { return cartesian_product(make_star(leaves_), grid_); }

StarHexFrame infer_star_hex(const Graph& g) {
    const std::size_t vertices = g.vertex_count();
    for (std::size_t n = 1; n * n <= vertices; ++n) {
        const std::size_t cells = n * n;
        if (vertices % cells != 0) continue;
        const std::size_t b = vertices / cells - 1;
        const std::size_t grid_edges = 2 * n * (n - 1) + (n - 1) * (n - 1);
        if (g.edge_count() != (b + 1) * grid_edges + b * cells) continue;
        StarHexFrame frame(b, static_cast<int>(n));
        if (frame.product() == g) return frame;
    }
    throw RefuterError("graph is not a star-hexgrid product under the standard id map");
}

namespace {

template <class Key>
std::pair<const Key*, const std::vector<Vertex>*> largest_class(
    const std::map<Key, std::vector<Vertex>>& classes) {
    const Key* key = nullptr;
    const std::vector<Vertex>* members = nullptr;
    // Ascending key order, strict improvement: ties go to the least key.
    for (const auto& [k, v] : classes) {
        if (members == nullptr || v.size() > members->size()) {
            key = &k;
            members = &v;
        }
    }
    return {key, members};
}

std::vector<std::size_t> copy_positions(const StarHexFrame& frame, const LinearLayout& layout,
                                        std::span<const Vertex> leaves, Vertex cell) {
    std::vector<std::size_t> out(leaves.size());
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        out[i] = layout.position(frame.vertex(leaves[i], cell));
    }
    return out;
}

}  // namespace

LeafClassification classify_by_order(const StarHexFrame& frame, const LinearLayout& layout) {
    if (layout.vertex_count() != (frame.leaves() + 1) * frame.cells()) {
        throw RefuterError("layout does not order the vertices of S_b [] H_n");
    }
    std::map<std::vector<Vertex>, std::vector<Vertex>> classes;
    std::vector<Vertex> perm(frame.cells());
    for (std::size_t leaf = 1; leaf <= frame.leaves(); ++leaf) {
        std::iota(perm.begin(), perm.end(), Vertex{0});
        const Vertex v = static_cast<Vertex>(leaf);
        std::sort(perm.begin(), perm.end(), [&](Vertex p, Vertex q) {
            return layout.position(frame.vertex(v, p)) < layout.position(frame.vertex(v, q));
        });
        classes[perm].push_back(v);
    }
    LeafClassification out;
    out.class_count = classes.size();
    if (auto [key, members] = largest_class(classes); key != nullptr) {
        out.permutation = *key;
        out.leaves = *members;
    }
    return out;
}

ColourClassification classify_by_colour(const StarHexFrame& frame, const LeafClassification& cls,
                                        const LinearLayout& layout) {
    const Graph& grid = frame.grid();
    std::map<std::vector<int>, std::vector<Vertex>> classes;
    std::vector<int> pages(grid.edge_count());
    for (Vertex v : cls.leaves) {
        for (std::size_t i = 0; i < grid.edge_count(); ++i) {
            const Edge& e = grid.edge(i);
            const auto page = layout.page_of(Edge(frame.vertex(v, e.u), frame.vertex(v, e.v)));
            if (!page) throw RefuterError("layout misses a grid-copy edge of leaf " + std::to_string(v));
            pages[i] = *page;
        }
        classes[pages].push_back(v);
    }
    ColourClassification out;
    out.class_count = classes.size();
    if (auto [key, members] = largest_class(classes); key != nullptr) {
        out.edge_pages = *key;
        out.leaves = *members;
    }
    return out;
}

MonotoneSubsequence erdos_szekeres_monotone(std::span<const std::size_t> values) {
    const std::size_t m = values.size();
    {
        std::vector<std::size_t> sorted(values.begin(), values.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("erdos_szekeres_monotone: values must be distinct");
        }
    }
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    auto longest = [&](auto before) {
        std::vector<std::size_t> tails;  // index of the smallest tail per length
        std::vector<std::size_t> prev(m, none);
        for (std::size_t i = 0; i < m; ++i) {
            auto it = std::lower_bound(tails.begin(), tails.end(), i, [&](std::size_t t, std::size_t x) {
                return before(values[t], values[x]);
            });
            if (it != tails.begin()) prev[i] = *(it - 1);
            if (it == tails.end()) {
                tails.push_back(i);
            } else {
                *it = i;
            }
        }
        std::vector<std::size_t> out;
        for (std::size_t i = tails.empty() ? none : tails.back(); i != none; i = prev[i]) out.push_back(i);
        std::reverse(out.begin(), out.end());
        return out;
    };
    MonotoneSubsequence inc{longest(std::less<>{}), true};
    MonotoneSubsequence dec{longest(std::greater<>{}), false};
    return dec.indices.size() > inc.indices.size() ? dec : inc;
}

MonotoneLeaves monotone_leaf_sequence(const StarHexFrame& frame, const ColourClassification& cc,
                                      const LinearLayout& layout) {
    MonotoneLeaves out;
    std::vector<Vertex> seq = cc.leaves;
    std::sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) {
        return layout.position(frame.vertex(a, 0)) < layout.position(frame.vertex(b, 0));
    });
    out.stage_sizes.push_back(seq.size());
    for (Vertex cell = 1; cell < frame.cells(); ++cell) {
        const auto pos = copy_positions(frame, layout, seq, cell);
        const auto mono = erdos_szekeres_monotone(pos);
        std::vector<Vertex> next;
        next.reserve(mono.indices.size());
        for (std::size_t i : mono.indices) next.push_back(seq[i]);
        seq = std::move(next);
        out.stage_sizes.push_back(seq.size());
    }
    out.forward.assign(frame.cells(), true);
    for (Vertex cell = 0; cell < frame.cells(); ++cell) {
        const auto pos = copy_positions(frame, layout, seq, cell);
        if (pos.size() < 2) continue;
        const bool forward = pos[0] < pos[1];
        for (std::size_t i = 1; i < pos.size(); ++i) {
            if ((pos[i - 1] < pos[i]) != forward) {
                throw std::logic_error("monotone_leaf_sequence: cell " + std::to_string(cell) +
                                       " is not monotone (defect)");
            }
        }
        out.forward[cell] = forward;
    }
    out.leaves = std::move(seq);
    return out;
}

Colouring red_blue_colouring(const MonotoneLeaves& ml) {
    Colouring out(ml.forward.size(), Colour::red);
    if (ml.leaves.size() < 2) return out;
    for (std::size_t p = 0; p < ml.forward.size(); ++p) {
        out[p] = ml.forward[p] ? Colour::red : Colour::blue;
    }
    return out;
}

namespace {

bool separated(const std::vector<std::pair<std::size_t, std::size_t>>& groups) {
    for (std::size_t k = 1; k < groups.size(); ++k) {
        if (!(groups[k - 1].second < groups[k].first)) return false;
    }
    return true;
}

bool halving_bound(std::size_t size, int level, std::size_t d) {
    return BigInt(static_cast<unsigned long>(size)) * power(2, static_cast<std::uint64_t>(level - 1)) >=
           BigInt(static_cast<unsigned long>(d));
}

}  // namespace

TwisterOutcome twister_extract(const StarHexFrame& frame, const LinearLayout& layout,
                               std::span<const Vertex> leaves, const GridPath& path,
                               std::span<const int> edge_pages) {
    const int n = frame.n();
    if (path.vertices.size() < static_cast<std::size_t>(n)) {
        throw RefuterError("twister: path has fewer than n cells");
    }
    if (edge_pages.size() != frame.grid().edge_count()) {
        throw RefuterError("twister: edge colouring does not cover the grid");
    }
    const std::span<const Vertex> cells(path.vertices.data(), static_cast<std::size_t>(n));
    const std::size_t d = leaves.size();
    auto pos = [&](Vertex leaf, Vertex cell) { return layout.position(frame.vertex(leaf, cell)); };
    auto edge_of = [&](Vertex leaf, Vertex a, Vertex b) {
        return Edge(frame.vertex(leaf, a), frame.vertex(leaf, b));
    };

    TwisterOutcome out;
    out.guarantee = std::min<std::size_t>(n < 64 ? d >> n : 0, static_cast<std::size_t>((n + 1) / 2));
    if (d == 0) return out;

    TwisterLevel level;
    level.level = 1;
    level.leaves.assign(leaves.begin(), leaves.end());
    std::sort(level.leaves.begin(), level.leaves.end(),
              [&](Vertex a, Vertex b) { return pos(a, cells[0]) < pos(b, cells[0]); });
    for (Vertex v : level.leaves) level.groups.emplace_back(pos(v, cells[0]), pos(v, cells[0]));
    level.c1 = true;
    level.c2 = separated(level.groups);
    out.levels.push_back(level);

    for (int i = 2; i <= n; ++i) {
        const TwisterLevel& prev = out.levels.back();
        const Vertex q = cells[i - 2];
        const Vertex p = cells[i - 1];
        const auto grid_edge = frame.grid().edge_index(q, p);
        if (!grid_edge) {
            throw RefuterError("twister: path cells " + std::to_string(q) + " and " +
                               std::to_string(p) + " are not adjacent");
        }
        const int page = edge_pages[*grid_edge];

        // v_1..v_m ordered by their copy of the previous cell.
        std::vector<std::size_t> label(prev.leaves.size());
        std::iota(label.begin(), label.end(), std::size_t{0});
        std::sort(label.begin(), label.end(), [&](std::size_t a, std::size_t b) {
            return pos(prev.leaves[a], q) < pos(prev.leaves[b], q);
        });
        const std::size_t m = label.size();
        const bool ahead = pos(prev.leaves[label[0]], q) < pos(prev.leaves[label[0]], p);
        for (std::size_t j = 0; j < m; ++j) {
            const Vertex v = prev.leaves[label[j]];
            const auto actual = layout.page_of(edge_of(v, q, p));
            if (!actual || *actual != page) {
                throw RefuterError("twister: copy edge of leaf " + std::to_string(v) + " on cells " +
                                   std::to_string(q) + "-" + std::to_string(p) +
                                   " is not on the common page");
            }
            if ((pos(v, q) < pos(v, p)) != ahead) {
                throw RefuterError("twister: leaf " + std::to_string(v) + " orders cells " +
                                   std::to_string(q) + ", " + std::to_string(p) +
                                   " against the common direction");
            }
            if (j > 0 && pos(prev.leaves[label[j - 1]], p) > pos(v, p)) {
                throw RefuterError("twister: leaf " + std::to_string(v) + " breaks the common order on cell " +
                                   std::to_string(p));
            }
        }

        TwisterLevel next;
        next.level = i;
        next.direction = ahead ? 0 : 1;
        // Perfect interleaving; a gap means two same-page copy edges cross.
        for (std::size_t j = 0; j + 1 < m; ++j) {
            const Vertex a = prev.leaves[label[j]];
            const Vertex b = prev.leaves[label[j + 1]];
            const bool ok = ahead ? pos(a, p) < pos(b, q) : pos(a, q) < pos(b, p);
            if (ok) continue;
            auto cert = make_certificate(layout, edge_of(a, q, p), edge_of(b, q, p), page);
            if (!recheck(cert, layout)) {
                throw std::logic_error("twister: interleaving gap without a crossing (defect)");
            }
            out.certificate = cert;
            return out;
        }
        for (std::size_t j = 0; j < m; j += 2) {
            const Vertex v = prev.leaves[label[j]];
            auto group = prev.groups[label[j]];
            group.first = std::min(group.first, pos(v, p));
            group.second = std::max(group.second, pos(v, p));
            next.leaves.push_back(v);
            next.groups.push_back(group);
        }
        next.c1 = halving_bound(next.leaves.size(), i, d);
        next.c2 = separated(next.groups);
        if (!next.c1 || !next.c2) {
            throw std::logic_error("twister: level " + std::to_string(i) + " violates " +
                                   (next.c1 ? "separation" : "the size bound") + " (defect)");
        }
        out.levels.push_back(std::move(next));
    }

    const TwisterLevel& last = out.levels.back();
    const std::size_t groups = last.leaves.size();
    const std::size_t half = groups / 2;
    const std::size_t median = static_cast<std::size_t>((n + 1) / 2);  // ceil(n/2), 1-based
    std::vector<std::size_t> roots(static_cast<std::size_t>(n));     // path indices by root position
    std::iota(roots.begin(), roots.end(), std::size_t{0});
    auto root_pos = [&](std::size_t j) { return layout.position(frame.vertex(0, cells[j])); };
    std::sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) { return root_pos(a) < root_pos(b); });

    if (half > 0) {
        const std::size_t k = std::min(half, median);
        auto star_edge = [&](std::size_t group, std::size_t root) {
            const Vertex cell = cells[roots[root]];
            return Edge(frame.vertex(0, cell), frame.vertex(last.leaves[group], cell));
        };
        if (last.groups[half - 1].second < root_pos(roots[median - 1])) {
            out.family.median_case = 1;
            for (std::size_t i = 0; i < k; ++i) out.family.edges.push_back(star_edge(i, median - 1 + i));
        } else {
            const std::size_t first_group = (groups + 1) / 2;
            if (!(root_pos(roots[median - 1]) < last.groups[first_group].first)) {
                throw std::logic_error("twister: neither median case applies (defect)");
            }
            out.family.median_case = 2;
            for (std::size_t i = 0; i < k; ++i) out.family.edges.push_back(star_edge(first_group + i, i));
        }
        if (!verify_pairwise_crossing(layout.positions(), out.family.edges)) {
            throw std::logic_error("twister: extracted family is not pairwise crossing (defect)");
        }
    }
    if (out.family.edges.size() < out.guarantee) {
        throw std::logic_error("twister: family smaller than guaranteed (defect)");
    }
    return out;
}

RefutationOutcome refute(const Graph& g, const LinearLayout& layout, int s) {
    const StarHexFrame frame = infer_star_hex(g);
    return refute(frame, layout, s);
}

RefutationOutcome refute(const StarHexFrame& frame, const LinearLayout& layout, int s) {
    if (s < 1) throw RefuterError("s must be at least 1");
    if (layout.kind() != LayoutKind::stack) throw RefuterError("refute needs a stack layout");
    if (layout.page_count() > s) {
        throw RefuterError("layout uses " + std::to_string(layout.page_count()) + " pages, more than s = " +
                           std::to_string(s));
    }
    try {
        require_matches(frame.product(), layout);
    } catch (const LayoutError& e) {
        throw RefuterError(std::string("layout does not match S_b [] H_n: ") + e.what());
    }

    RefutationOutcome outcome;
    RefutationTrace& trace = outcome.trace;
    RefutationReport& report = outcome.report;
    const int n = frame.n();
    const std::uint64_t cells = frame.cells();
    report.leaves = frame.leaves();
    report.n = n;
    report.s = s;
    report.required = required_parameters(s);

    auto big = [](std::size_t v) { return BigInt(static_cast<unsigned long>(v)); };

    trace.order_class = classify_by_order(frame, layout);
    report.a = trace.order_class.size();
    trace.bounds.push_back({"a * (n^2)! >= b", big(report.a) * factorial(cells) >= big(report.leaves)});

    trace.colour_class = classify_by_colour(frame, trace.order_class, layout);
    report.c = trace.colour_class.size();
    trace.bounds.push_back(
        {"c * s^(3n^2) >= a", big(report.c) * power(BigInt(s), 3 * cells) >= big(report.a)});

    trace.monotone = monotone_leaf_sequence(frame, trace.colour_class, layout);
    report.d = trace.monotone.leaves.size();
    trace.bounds.push_back({"d^(2^(n^2-1)) >= c",
                            power_of_two_power_at_least(big(report.d), cells - 1, big(report.c))});

    trace.colouring = red_blue_colouring(trace.monotone);
    trace.path = find_monochromatic_path(n, trace.colouring);
    report.path_colour = trace.path.colour;
    report.path_length = trace.path.vertices.size();

    trace.oriented_leaves = trace.monotone.leaves;
    if (trace.path.colour == Colour::blue) {
        std::reverse(trace.oriented_leaves.begin(), trace.oriented_leaves.end());
    }
    trace.twister = twister_extract(frame, layout, trace.oriented_leaves, trace.path,
                                    trace.colour_class.edge_pages);
    for (const TwisterLevel& level : trace.twister.levels) {
        const std::string tag = "level " + std::to_string(level.level);
        trace.bounds.push_back({tag + " (C1) d_i * 2^(i-1) >= d", level.c1});
        trace.bounds.push_back({tag + " (C2) groups separated", level.c2});
    }
    report.family_size = trace.twister.family.edges.size();
    report.guarantee = trace.twister.guarantee;

    for (const BoundCheck& check : trace.bounds) {
        if (!check.holds) throw std::logic_error("refute: bound failed: " + check.name + " (defect)");
    }

    if (trace.twister.certificate) {
        outcome.certificate = trace.twister.certificate;
        outcome.certificate_stage = "interleave";
        return outcome;
    }
    const auto& family = trace.twister.family.edges;
    if (family.size() >= static_cast<std::size_t>(s) + 1) {
        // s+1 crossing edges on at most s pages: two share one.
        std::map<int, Edge> first_on_page;
        for (const Edge& e : family) {
            const int page = *layout.page_of(e);
            auto [it, fresh] = first_on_page.emplace(page, e);
            if (fresh) continue;
            auto cert = make_certificate(layout, it->second, e, page);
            if (!recheck(cert, layout)) throw std::logic_error("refute: pigeonhole pair does not cross (defect)");
            outcome.certificate = cert;
            outcome.certificate_stage = "pigeonhole";
            return outcome;
        }
        throw std::logic_error("refute: pigeonhole found no shared page (defect)");
    }
    return outcome;
}

namespace {

template <class Range>
void write_list(std::ostream& out, const Range& values) {
    for (const auto& v : values) out << ' ' << v;
}

}  // namespace

void write_trace(std::ostream& out, const RefutationOutcome& outcome) {
    const RefutationReport& r = outcome.report;
    const RefutationTrace& t = outcome.trace;
    out << "refutation b " << r.leaves << " n " << r.n << " s " << r.s << '\n';
    out << "order-class size " << r.a << " classes " << t.order_class.class_count << " permutation";
    write_list(out, t.order_class.permutation);
    out << "\norder-class leaves";
    write_list(out, t.order_class.leaves);
    out << "\ncolour-class size " << r.c << " classes " << t.colour_class.class_count << " pages";
    write_list(out, t.colour_class.edge_pages);
    out << "\ncolour-class leaves";
    write_list(out, t.colour_class.leaves);
    out << "\nmonotone size " << r.d << " stages";
    write_list(out, t.monotone.stage_sizes);
    out << "\nmonotone leaves";
    write_list(out, t.monotone.leaves);
    out << "\ncolouring ";
    for (Colour c : t.colouring) out << (c == Colour::red ? 'r' : 'b');
    out << "\npath " << to_string(t.path.colour) << ' ' << t.path.vertices.size();
    write_list(out, t.path.vertices);
    out << "\noriented leaves";
    write_list(out, t.oriented_leaves);
    out << '\n';
    for (const TwisterLevel& level : t.twister.levels) {
        out << "level " << level.level << " size " << level.leaves.size() << " t " << level.direction
            << " c1 " << (level.c1 ? "ok" : "fail") << " c2 " << (level.c2 ? "ok" : "fail") << " groups";
        for (std::size_t k = 0; k < level.leaves.size(); ++k) {
            out << ' ' << level.leaves[k] << ':' << level.groups[k].first << '-' << level.groups[k].second;
        }
        out << '\n';
    }
    out << "family case " << t.twister.family.median_case << " size " << t.twister.family.edges.size()
        << " guarantee " << t.twister.guarantee << " edges";
    for (const Edge& e : t.twister.family.edges) out << ' ' << e.u << '-' << e.v;
    out << '\n';
    for (const BoundCheck& check : t.bounds) {
        out << "bound " << (check.holds ? "ok" : "fail") << ' ' << check.name << '\n';
    }
    if (outcome.certificate) {
        const ViolationCertificate& c = *outcome.certificate;
        out << "outcome certificate " << outcome.certificate_stage << ' ' << c.first.u << ' ' << c.first.v
            << ' ' << c.second.u << ' ' << c.second.v << " page " << c.page << '\n';
    } else {
        out << "outcome report\n";
    }
}

}  // namespace linlayout
