#pragma once

#include <optional>
#include <string>

#include "linlayout/graph.hpp"
#include "linlayout/layout.hpp"

namespace linlayout {

/// Arc diagram of a linear layout as an SVG 1.1 document. Vertices sit on a
/// horizontal baseline in layout order. With exactly two pages, page 1 is
/// drawn above and page 2 below; otherwise every page is drawn above in its
/// own colour.
///
/// Without a certificate the layout must be valid (LayoutError otherwise).
/// With one, the certificate must re-check against the layout; its two edges
/// are highlighted and everything else is drawn muted.
std::string render_svg(const Graph& g, const LinearLayout& layout,
                       const std::optional<ViolationCertificate>& highlight = std::nullopt);

}  // namespace linlayout
