#include "linlayout/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace linlayout {

namespace {

constexpr double kSpacing = 40.0;
constexpr double kMargin = 30.0;
constexpr double kLabelRoom = 18.0;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd",
                                              "#8c564b", "#e377c2", "#17becf", "#bcbd22"};

void append(std::string& out, const char* format, auto... args) {
    char buffer[256];
    const int written = std::snprintf(buffer, sizeof buffer, format, args...);
    out.append(buffer, static_cast<std::size_t>(std::max(written, 0)));
}

}  // namespace

std::string render_svg(const Graph& g, const LinearLayout& layout,
                       const std::optional<ViolationCertificate>& highlight) {
    require_matches(g, layout);
    if (highlight) {
        if (!recheck(*highlight, layout)) throw LayoutError("render: certificate does not re-check");
    } else if (const auto bad = first_violation(g, layout)) {
        throw LayoutError("render: layout is invalid: " + describe(*bad));
    }

    const bool two_sided = layout.page_count() == 2;
    const std::size_t count = layout.vertex_count();
    auto below = [&](int page) { return two_sided && page == 2; };
    auto x_of = [&](std::size_t position) { return kMargin + kSpacing * static_cast<double>(position); };

    double up = 0.0;
    double down = 0.0;
    for (const PagedEdge& pe : layout.assignment()) {
        const auto [l, r] = ordered(layout.position(pe.edge.u), layout.position(pe.edge.v));
        const double radius = kSpacing * static_cast<double>(r - l) / 2.0;
        (below(pe.page) ? down : up) = std::max(below(pe.page) ? down : up, radius);
    }
    const double width = 2 * kMargin + kSpacing * static_cast<double>(count > 0 ? count - 1 : 0);
    const double baseline = kMargin + up;
    const double height = baseline + std::max(down, kLabelRoom) + kMargin;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    append(out,
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.1f\" height=\"%.1f\" "
           "viewBox=\"0 0 %.1f %.1f\">\n",
           width, height, width, height);
    append(out, "<title>%s layout, %d page%s</title>\n", to_string(layout.kind()), layout.page_count(),
           layout.page_count() == 1 ? "" : "s");
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (count > 1) {
        append(out, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#999999\" stroke-width=\"1\"/>\n",
               x_of(0), baseline, x_of(count - 1), baseline);
    }

    out += "<g fill=\"none\">\n";
    auto marked = [&](const Edge& e) { return highlight && (e == highlight->first || e == highlight->second); };
    // Highlighted arcs last so they sit on top.
    for (int pass = 0; pass < 2; ++pass) {
        for (const PagedEdge& pe : layout.assignment()) {
            if (marked(pe.edge) != (pass == 1)) continue;
            const auto [l, r] = ordered(layout.position(pe.edge.u), layout.position(pe.edge.v));
            const double radius = kSpacing * static_cast<double>(r - l) / 2.0;
            const char* colour = kPalette[static_cast<std::size_t>(pe.page - 1) % kPalette.size()];
            double stroke = 1.5;
            if (highlight) {
                colour = pass == 1 ? "#d62728" : "#cccccc";
                stroke = pass == 1 ? 3.0 : 1.0;
            }
            append(out,
                   "<path d=\"M %.1f %.1f A %.1f %.1f 0 0 %d %.1f %.1f\" stroke=\"%s\" stroke-width=\"%.1f\">"
                   "<title>%u-%u page %d</title></path>\n",
                   x_of(l), baseline, radius, radius, below(pe.page) ? 0 : 1, x_of(r), baseline, colour,
                   stroke, pe.edge.u, pe.edge.v, pe.page);
        }
    }
    out += "</g>\n";

    out += "<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
    for (std::size_t i = 0; i < count; ++i) {
        const Vertex v = layout.order()[i];
        append(out, "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"4\" fill=\"black\"/>", x_of(i), baseline);
        append(out, "<text x=\"%.1f\" y=\"%.1f\">%u</text>\n", x_of(i), baseline + kLabelRoom - 4.0, v);
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace linlayout
