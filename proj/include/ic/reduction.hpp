#pragma once

#include "ic/cnf.hpp"
#include "ic/drawing.hpp"
#include "ic/envelope.hpp"
#include "ic/search.hpp"

#include <vector>

namespace ic {

// One arrangement segment L_i: upper endpoint (0, i), pre-extension
// lower endpoint (2a-i+1, 0), then extended downward keeping the upper
// endpoint fixed so the total length scales by (2a+1).
struct ArrangementLine {
    Line line;
    Point upper;
    Point lower_pre;  // on l_h
    Point lower_ext;
};

// Interval of a line on the upper envelope of the pre-extension
// arrangement, stored top (left) to bottom (right); the chain descends.
struct LambdaInterval {
    Point top;
    Point bottom;
};

struct ReductionLayout {
    int alpha = 0;
    Rational epsilon;                   // 1/alpha^3
    std::vector<ArrangementLine> lines; // L_1..L_{2a}; index i-1
    std::vector<LambdaInterval> lambda; // per line, same indexing

    Point lv_top{Rational(0), Rational(0)};    // (2a+1, 2a)
    Point lv_bottom{Rational(0), Rational(0)}; // (2a+1, -5a^2) = s
    Point r_point{Rational(0), Rational(0)};   // chosen depth of r

    // Drawing vertex ids (filled in as the construction proceeds).
    int s = -1, t = -1, r = -1;
    std::vector<int> p_vertex;          // intersection with l_v, per line
    std::vector<int> pprime_vertex;     // foot on l'_v, per line
    std::vector<int> peak_vertex;       // per clause, 0-based

    struct LiteralPoint {
        int clause = 0;                 // 1-based clause index
        Literal lit;
        int q_vertex = -1;
        int anchor_vertex = -1;
    };
    std::vector<LiteralPoint> literal_points;

    /// 0-based index of the line carrying this literal (L_{2j-1} or L_{2j}).
    int line_index(const Literal& l) const { return 2 * (l.var - 1) + (l.positive ? 0 : 1); }
};

struct GammaBuild {
    Drawing drawing;
    ReductionLayout layout;
};

/// Lines of the arrangement only; the envelope intervals and drawing
/// come with build_hb.
ReductionLayout build_arrangement(int alpha);

/// Envelope intervals of the pre-extension segments, one per line, in
/// line order; checks they appear in variable order right to left.
std::vector<LambdaInterval> arrangement_envelope_intervals(const ReductionLayout& layout);

/// Variable-gadget drawing H_b: needles, level-to-level cross edges,
/// and the s/t hooks, with the needle slab-disjointness claim checked.
GammaBuild build_hb(int alpha);

/// True iff the path runs s to t and visits exactly one of
/// {p_{x_j}, p_{not x_j}} for every variable.
bool check_variable_path(const GammaBuild& hb, const std::vector<int>& path_vertices);
bool check_variable_path(const GammaBuild& hb, const VertexPath& path);

/// H = H_b plus clause gadgets (peaks and literal-points).
GammaBuild build_h(const CnfInstance& inst);

/// Full reduction output: H plus the root r, anchors, and anchor paths,
/// with every geometric claim of the construction verified exactly.
GammaBuild build_gamma(const CnfInstance& inst);

/// Spanning witness tree for a satisfying assignment; verified before
/// being returned. Rejects non-satisfying assignments.
RootedTree witness_tree_from_assignment(const GammaBuild& gamma, const CnfInstance& inst,
                                        const Assignment& asg);

/// Reads the assignment off the r -> t tree path and checks it satisfies
/// the instance.
Assignment assignment_from_tree(const GammaBuild& gamma, const CnfInstance& inst,
                                const RootedTree& tree);

/// Largest numerator/denominator bit length over all coordinates.
std::uint64_t max_coordinate_bits(const Drawing& d);

} // namespace ic
