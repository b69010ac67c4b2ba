#include "linlayout/hex_lemma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "linlayout/text_io.hpp"

namespace linlayout {

namespace {

// Neighbour offsets of H_n: horizontal, vertical and the (+1,+1) diagonal.
constexpr std::array<std::array<int, 2>, 6> kSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}};

template <class Visit>
void for_each_neighbour(int n, Vertex v, Visit&& visit) {
    const GridCoord c = grid_coord(n, v);
    for (const auto& [dx, dy] : kSteps) {
        const int x = c.x + dx;
        const int y = c.y + dy;
        if (x >= 1 && x <= n && y >= 1 && y <= n) visit(grid_id(n, {x, y}));
    }
}

bool adjacent(int n, Vertex a, Vertex b) {
    const GridCoord p = grid_coord(n, a);
    const GridCoord q = grid_coord(n, b);
    const int dx = q.x - p.x;
    const int dy = q.y - p.y;
    return std::any_of(kSteps.begin(), kSteps.end(),
                       [&](const auto& s) { return s[0] == dx && s[1] == dy; });
}

}  // namespace

GridPath find_monochromatic_path(int n, const Colouring& colouring) {
    if (n < 1) throw std::invalid_argument("find_monochromatic_path: n must be positive");
    const std::size_t count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (colouring.size() != count) {
        throw std::invalid_argument("find_monochromatic_path: colouring is not total on H_n");
    }

    // Components, numbered in ascending order of their least vertex.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> component(count, none);
    struct Touch {
        Colour colour = Colour::red;
        bool first = false;  // column 1 (red) / row 1 (blue)
        bool last = false;   // column n / row n
    };
    std::vector<Touch> touches;
    for (std::size_t start = 0; start < count; ++start) {
        if (component[start] != none) continue;
        const std::size_t id = touches.size();
        const Colour colour = colouring[start];
        Touch touch;
        touch.colour = colour;
        std::vector<Vertex> stack{static_cast<Vertex>(start)};
        component[start] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            const GridCoord c = grid_coord(n, v);
            const int along = colour == Colour::red ? c.x : c.y;
            touch.first |= along == 1;
            touch.last |= along == n;
            for_each_neighbour(n, v, [&](Vertex w) {
                if (component[w] == none && colouring[w] == colour) {
                    component[w] = id;
                    stack.push_back(w);
                }
            });
        }
        touches.push_back(touch);
    }

    std::size_t chosen = none;
    for (Colour colour : {Colour::red, Colour::blue}) {
        for (std::size_t id = 0; id < touches.size() && chosen == none; ++id) {
            if (touches[id].colour == colour && touches[id].first && touches[id].last) chosen = id;
        }
        if (chosen != none) break;
    }
    if (chosen == none) {
        throw std::logic_error("find_monochromatic_path: no crossing component (defect)");
    }

    // Shortest crossing path inside the chosen component.
    GridPath path;
    path.colour = touches[chosen].colour;
    auto along = [&](Vertex v) {
        const GridCoord c = grid_coord(n, v);
        return path.colour == Colour::red ? c.x : c.y;
    };
    std::vector<Vertex> parent(count, static_cast<Vertex>(-1));
    std::vector<bool> seen(count, false);
    std::queue<Vertex> bfs;
    for (std::size_t v = 0; v < count; ++v) {
        if (component[v] == chosen && along(static_cast<Vertex>(v)) == 1) {
            seen[v] = true;
            parent[v] = static_cast<Vertex>(v);
            bfs.push(static_cast<Vertex>(v));
        }
    }
    while (!bfs.empty()) {
        const Vertex v = bfs.front();
        bfs.pop();
        if (along(v) == n) {
            for (Vertex cur = v;; cur = parent[cur]) {
                path.vertices.push_back(cur);
                if (parent[cur] == cur) break;
            }
            std::reverse(path.vertices.begin(), path.vertices.end());
            return path;
        }
        for_each_neighbour(n, v, [&](Vertex w) {
            if (!seen[w] && component[w] == chosen) {
                seen[w] = true;
                parent[w] = v;
                bfs.push(w);
            }
        });
    }
    throw std::logic_error("find_monochromatic_path: component lost its crossing (defect)");
}

bool is_monochromatic_path(int n, const Colouring& colouring, const GridPath& path) {
    const std::size_t count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<bool> used(count, false);
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        const Vertex v = path.vertices[i];
        if (v >= count || used[v] || colouring[v] != path.colour) return false;
        used[v] = true;
        if (i > 0 && !adjacent(n, path.vertices[i - 1], v)) return false;
    }
    return true;
}

void write_colouring(std::ostream& out, const Colouring& colouring) {
    for (std::size_t v = 0; v < colouring.size(); ++v) {
        out << "c " << v << ' ' << (colouring[v] == Colour::red ? 'r' : 'b') << '\n';
    }
}

Colouring read_colouring(std::istream& in, int& n) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::pair<std::uint64_t, Colour>> entries;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 3 || tokens[0] != "c" || (tokens[2] != "r" && tokens[2] != "b")) {
            throw ParseError(line_no, "expected 'c <vertex> <r|b>'");
        }
        entries.emplace_back(detail::parse_unsigned(tokens[1], line_no),
                             tokens[2] == "r" ? Colour::red : Colour::blue);
    }
    const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
    if (entries.empty() || side * side != entries.size()) {
        throw ParseError(0, "colouring must list n*n vertices, got " + std::to_string(entries.size()));
    }
    Colouring colouring(entries.size(), Colour::red);
    std::vector<bool> set(entries.size(), false);
    for (const auto& [v, c] : entries) {
        if (v >= entries.size() || set[v]) {
            throw ParseError(0, "colouring vertex " + std::to_string(v) + " out of range or repeated");
        }
        set[v] = true;
        colouring[v] = c;
    }
    n = static_cast<int>(side);
    return colouring;
}

}  // namespace linlayout
