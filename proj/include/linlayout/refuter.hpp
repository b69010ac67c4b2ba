#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "linlayout/bounds.hpp"
#include "linlayout/graph.hpp"
#include "linlayout/hex_lemma.hpp"
#include "linlayout/layout.hpp"

namespace linlayout {

/// Malformed refuter input or a violated stage precondition.
class RefuterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Id bookkeeping for S_b [] H_n: vertex (star, cell) has id star * n^2 + cell,
/// the root is star vertex 0 and leaves are 1..b.
class StarHexFrame {
public:
    StarHexFrame(std::size_t leaves, int n);

    std::size_t leaves() const { return leaves_; }
    int n() const { return n_; }
    std::size_t cells() const { return cells_; }
    const Graph& grid() const { return grid_; }
    Vertex vertex(Vertex star, Vertex cell) const {
        return static_cast<Vertex>(star * cells_ + cell);
    }
    Graph product() const;

private:
    std::size_t leaves_;
    int n_;
    std::size_t cells_;
    Graph grid_;
};

/// Recovers (b, n) for a graph that is exactly S_b [] H_n under the id map.
StarHexFrame infer_star_hex(const Graph& g);

/// Largest class of leaves sharing the order of their grid copy.
struct LeafClassification {
    std::vector<Vertex> permutation;  // grid cells in layout order, common to the class
    std::vector<Vertex> leaves;       // ascending leaf ids
    std::size_t class_count = 0;
    std::size_t size() const { return leaves.size(); }
};

LeafClassification classify_by_order(const StarHexFrame& frame, const LinearLayout& layout);

/// Largest subclass whose grid copies carry the same page on every grid edge.
struct ColourClassification {
    std::vector<int> edge_pages;  // indexed by grid edge index
    std::vector<Vertex> leaves;   // ascending leaf ids
    std::size_t class_count = 0;
    std::size_t size() const { return leaves.size(); }
};

ColourClassification classify_by_colour(const StarHexFrame& frame, const LeafClassification& cls,
                                        const LinearLayout& layout);

struct MonotoneSubsequence {
    std::vector<std::size_t> indices;  // ascending positions in the input
    bool increasing = true;
};

/// A longest increasing or longest decreasing subsequence, whichever is
/// longer (increasing on ties). Patience sorting, O(m log m). Values must be
/// distinct; the result has at least ceil(sqrt(m)) entries.
MonotoneSubsequence erdos_szekeres_monotone(std::span<const std::size_t> values);

/// Leaves u_1..u_d whose copies of every grid cell appear in monotone order.
struct MonotoneLeaves {
    std::vector<Vertex> leaves;
    std::vector<bool> forward;             // per grid cell; true when increasing
    std::vector<std::size_t> stage_sizes;  // |V_1|, ..., |V_{n^2}|
};

/// Starts from the colour class ordered by the copies of cell 0 and refines
/// by one monotone subsequence per further cell, cells taken in row-major order.
MonotoneLeaves monotone_leaf_sequence(const StarHexFrame& frame, const ColourClassification& cc,
                                      const LinearLayout& layout);

/// Red where the leaf copies run forward, blue where they run backward; all
/// red when fewer than two leaves remain.
Colouring red_blue_colouring(const MonotoneLeaves& ml);

/// One halving step of the twister. Groups are the position intervals of
/// Z_{i,v} for v in `leaves`, in the same (left to right) order.
struct TwisterLevel {
    int level = 1;
    std::vector<Vertex> leaves;
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    int direction = 0;  // t: 0 when (v,p_{i-1}) precedes (v,p_i), 1 otherwise
    bool c1 = false;    // d_i * 2^(i-1) >= d
    bool c2 = false;    // groups pairwise separated
};

struct CrossingFamily {
    std::vector<Edge> edges;  // product edges, pairwise crossing
    int median_case = 0;      // 1: groups before the median root, 2: after, 0: empty
};

struct TwisterOutcome {
    std::vector<TwisterLevel> levels;
    std::optional<ViolationCertificate> certificate;  // interleaving failed
    CrossingFamily family;
    std::size_t guarantee = 0;  // min(floor(d / 2^n), ceil(n / 2))
};

/// Runs the halving construction along the first n cells of `path` for the
/// leaf sequence `leaves`, which must run forward on every path cell. Checks
/// the uniform-page, order-consistency and uniform-direction preconditions
/// and reports a failure with the offending leaf and cell as RefuterError.
TwisterOutcome twister_extract(const StarHexFrame& frame, const LinearLayout& layout,
                               std::span<const Vertex> leaves, const GridPath& path,
                               std::span<const int> edge_pages);

struct BoundCheck {
    std::string name;
    bool holds = false;
};

struct RefutationReport {
    std::size_t leaves = 0;  // b
    int n = 0;
    int s = 0;
    std::size_t a = 0;
    std::size_t c = 0;
    std::size_t d = 0;
    Colour path_colour = Colour::red;
    std::size_t path_length = 0;
    std::size_t family_size = 0;
    std::size_t guarantee = 0;
    RequiredParameters required;
};

struct RefutationTrace {
    LeafClassification order_class;
    ColourClassification colour_class;
    MonotoneLeaves monotone;
    Colouring colouring;
    GridPath path;
    std::vector<Vertex> oriented_leaves;
    TwisterOutcome twister;
    std::vector<BoundCheck> bounds;
};

struct RefutationOutcome {
    std::optional<ViolationCertificate> certificate;
    std::string certificate_stage;  // "interleave" or "pigeonhole"
    RefutationReport report;
    RefutationTrace trace;
};

/// Executes the stack-number lower bound argument on a claimed stack layout
/// with at most s pages. Certificates are re-verified before being returned;
/// a layout without same-page crossings always yields a report.
RefutationOutcome refute(const Graph& g, const LinearLayout& layout, int s);
RefutationOutcome refute(const StarHexFrame& frame, const LinearLayout& layout, int s);

void write_trace(std::ostream& out, const RefutationOutcome& outcome);

}  // namespace linlayout
