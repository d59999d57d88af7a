#pragma once

#include "ic/cnf.hpp"
#include "ic/drawing.hpp"
#include "ic/envelope.hpp"
#include "ic/reduction.hpp"

#include <vector>

namespace ic {

// One literal slot of a stage arrangement: the line carrying the
// slot's envelope interval, the interval itself (bottom to top along
// the ladder), and the per-strand q-point copies on it.
struct StageSlot {
    Literal lit;
    Line line;
    Point interval_lo; // lower end of the usable interval, on the line
    Point interval_hi; // upper end
    Point primary;     // strand-0 q position; anchors the next stage's line
    std::vector<int> q_vertex;      // per strand
    std::vector<int> qprime_vertex; // per strand, filled by attach_s_segments
};

// Stage i of the drawing D: the arrangement A^i, its terminals, and
// the clause ladder for c_{i+1} (one strand per satisfying assignment
// of the clause's variables).
struct GadgetStage {
    int index = 0;
    int travel_sign = -1;          // horizontal direction of the ladder: -1 for
                                   // stage 0 (up-left), +1 for the later stages
    std::vector<StageSlot> slots;  // bottom to top, 2*alpha entries
    int strand_count = 0;
    int t_lo_vertex = -1;          // t_{c_i}
    int t_hi_vertex = -1;          // t_{c_{i+1}}
    std::vector<std::vector<int>> strand_edges; // bookkeeping only

    // Ray data for A^i (i >= 1).
    Point ray_origin{Rational(0), Rational(0)};
    Rational ray_slope = Rational(0);
    Point a_point{Rational(0), Rational(0)};
    Point b_point{Rational(0), Rational(0)};
    Rational delta_prev = Rational(0); // largest x over stages 0..i-1

    bool has_s_segments = false;
};

struct IcPathGadget {
    Drawing drawing;
    std::vector<GadgetStage> stages;
    int t_start = -1; // t = t_{c_0}
    int t_end = -1;   // t' = t_{c_beta}
};

inline constexpr int kGadgetAlphaCap = 3;
inline constexpr int kGadgetBetaCap = 2;

// Step-by-step builder, exposed so the stage operations can be tested
// in isolation. The free function build_gadget drives the whole thing.
class GadgetBuilder {
public:
    GadgetBuilder(const CnfInstance& inst, bool allow_large = false);

    /// Stage 0: arrangement A^0 (the reduction's pre-extension lines),
    /// terminals at the extreme interval endpoints, and the ladder of c_1.
    void build_stage0();

    /// Stage i >= 1: ray r^i with slope alpha^{2i+1} (doubled upward if
    /// the exact value cannot clear the earlier slabs), points a^i and
    /// b^i by doubling searches, the lines of A^i through the previous
    /// primaries, and the ladder of c_{i+1}.
    void build_stage(int i);

    /// Replaces every stage-i q-point by a short segment perpendicular
    /// to its A^{i+1} line, rewires the incoming higher edges to the new
    /// endpoint, and shrinks the length until the slab conditions that
    /// carry Condition (A) all hold exactly.
    void attach_s_segments(int i);

    IcPathGadget finish();

private:
    const CnfInstance& inst_;
    IcPathGadget out_;
    int alpha_;

    struct Strip { Point q, qprime; Point dir; int stage; };
    std::vector<Strip> strips_; // all attached s-segments so far

    std::vector<Literal> slot_literals(int stage_index) const;
    std::vector<std::vector<bool>> strand_keeps(int clause_index,
                                                const std::vector<Literal>& slots) const;
    void add_ladder(GadgetStage& st, int clause_index);
    void validate_stage_against_old_strips(const GadgetStage& st) const;
    void check_condition_b(const GadgetStage& st, int first_new_edge) const;
};

IcPathGadget build_gadget(const CnfInstance& inst, bool allow_large = false);

/// Reads the assignment off an increasing-chord t -> t' path: stage-0
/// polarity comes from the traversed s-segments (or q-points on the
/// final stage), and every stage must agree.
Assignment extract_assignment(const IcPathGadget& gadget, const CnfInstance& inst,
                              const std::vector<int>& path);

} // namespace ic
