#include "ic/gadget.hpp"

#include <algorithm>
#include <set>

namespace ic {

namespace {

Literal negate(const Literal& l) { return {l.var, !l.positive}; }

std::string lit_tag(const Literal& l) {
    return (l.positive ? std::string("x") : std::string("nx")) + ":" + std::to_string(l.var);
}

Point point_on_line_at_y(const Line& line, const Rational& y) { return {line.x_at(y), y}; }

// Boundary line of the slab of (u, v) through `through`, evaluated at x.
Rational slab_boundary_y_at(const Point& u, const Point& v, const Point& through,
                            const Rational& x) {
    Point d = v - u;
    if (d.y == 0) throw ConstructionError("construction check failed: horizontal edge has a "
                                          "vertical slab boundary");
    // (P - through) . d = 0 solved for y at the given x.
    return through.y - (x - through.x) * d.x / d.y;
}

} // namespace

GadgetBuilder::GadgetBuilder(const CnfInstance& inst, bool allow_large)
    : inst_(inst), alpha_(inst.alpha) {
    if (!allow_large && (inst.alpha > kGadgetAlphaCap || inst.beta() > kGadgetBetaCap))
        throw InputError("gadget: instance above the desk-scale cap (alpha <= 3, beta <= 2); "
                         "pass allow_large to override");
    if (inst.beta() < 1) throw InputError("gadget: needs at least one clause");
}

std::vector<Literal> GadgetBuilder::slot_literals(int stage_index) const {
    // Stage 0, bottom to top: x_1, nx_1, ..., x_a, nx_a. Each later stage
    // is the reverse of the previous with every literal negated, which
    // alternates between the two fixed orders.
    std::vector<Literal> out;
    if (stage_index % 2 == 0) {
        for (int j = 1; j <= alpha_; ++j) {
            out.push_back({j, true});
            out.push_back({j, false});
        }
    } else {
        for (int j = alpha_; j >= 1; --j) {
            out.push_back({j, true});
            out.push_back({j, false});
        }
    }
    return out;
}

std::vector<std::vector<bool>> GadgetBuilder::strand_keeps(
    int clause_index, const std::vector<Literal>& slots) const {
    const Clause& clause = inst_.clauses[clause_index];
    int kappa = static_cast<int>(clause.size());
    std::vector<std::vector<bool>> keeps;
    for (int mask = 0; mask < (1 << kappa); ++mask) {
        // Bit b set = literal b of the clause true under this assignment.
        if (mask == 0) continue; // the one falsifying assignment
        std::vector<bool> keep(slots.size(), true);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            for (int b = 0; b < kappa; ++b) {
                if (clause[b].var != slots[s].var) continue;
                bool lit_true = (mask >> b) & 1;
                bool slot_true = (slots[s].positive == clause[b].positive) ? lit_true : !lit_true;
                if (!slot_true) keep[s] = false;
            }
        }
        keeps.push_back(std::move(keep));
    }
    return keeps;
}

void GadgetBuilder::add_ladder(GadgetStage& st, int clause_index) {
    Drawing& d = out_.drawing;
    std::vector<Literal> lits;
    for (const auto& slot : st.slots) lits.push_back(slot.lit);
    auto keeps = strand_keeps(clause_index, lits);
    st.strand_count = static_cast<int>(keeps.size());

    for (int m = 0; m < static_cast<int>(st.slots.size()); ++m) {
        StageSlot& slot = st.slots[m];
        slot.primary = midpoint(slot.interval_lo, slot.interval_hi);
        construction_check(slot.line.contains(slot.primary), "q primary lies on its line");
        slot.q_vertex.assign(st.strand_count, -1);
        for (int k = 0; k < st.strand_count; ++k) {
            // Copies slide from the midpoint toward the interval top;
            // the projection of that shift onto the next stage's strip
            // direction is what keeps every copy's slab forcing exact.
            Point pos = slot.primary;
            if (k > 0) {
                Rational f = rat(k, 2 * st.strand_count);
                pos = {slot.primary.x + (slot.interval_hi.x - slot.primary.x) * f,
                       slot.primary.y + (slot.interval_hi.y - slot.primary.y) * f};
            }
            slot.q_vertex[k] =
                d.add_vertex(pos, "qpt:" + std::to_string(st.index) + ":" + std::to_string(k) +
                                      ":" + lit_tag(slot.lit));
        }
    }
    // Copies of consecutive slots must stay strictly separated in y.
    for (std::size_t m = 0; m + 1 < st.slots.size(); ++m) {
        for (int a : st.slots[m].q_vertex)
            for (int b : st.slots[m + 1].q_vertex)
                construction_check(d.point(a).y < d.point(b).y,
                                   "q copies respect the slot order");
    }

    for (int k = 0; k < st.strand_count; ++k) {
        const auto& keep = keeps[k];
        for (int level = 0; level < alpha_; ++level) {
            int lo0 = 2 * level, lo1 = 2 * level + 1;
            if (level == 0) {
                for (int s : {lo0, lo1})
                    if (keep[s]) d.add_edge(st.t_lo_vertex, st.slots[s].q_vertex[k]);
            }
            if (level + 1 < alpha_) {
                for (int s : {lo0, lo1})
                    for (int u : {2 * level + 2, 2 * level + 3})
                        if (keep[s] && keep[u])
                            d.add_edge(st.slots[s].q_vertex[k], st.slots[u].q_vertex[k]);
            } else {
                for (int s : {lo0, lo1})
                    if (keep[s]) d.add_edge(st.slots[s].q_vertex[k], st.t_hi_vertex);
            }
        }
    }
}

void GadgetBuilder::build_stage0() {
    construction_check(out_.stages.empty(), "stage 0 built first");
    Drawing& d = out_.drawing;
    GadgetStage st;
    st.index = 0;
    st.travel_sign = -1;
    st.delta_prev = Rational(0);

    ReductionLayout arr = build_arrangement(alpha_);
    auto lambdas = arrangement_envelope_intervals(arr);

    std::vector<Literal> lits = slot_literals(0);
    for (int m = 0; m < 2 * alpha_; ++m) {
        const Literal& lit = lits[m];
        int li = arr.line_index(lit);
        StageSlot slot;
        slot.lit = lit;
        slot.line = arr.lines[li].line;
        // Stage 0 intervals descend rightward: lo = right end, hi = left.
        slot.interval_lo = lambdas[li].bottom;
        slot.interval_hi = lambdas[li].top;
        st.slots.push_back(std::move(slot));
    }

    // Terminals at the extreme interval endpoints; those two intervals
    // are then shrunk by an eighth so the terminals leave them.
    Point t_lo_pt = st.slots.front().interval_lo;  // (2a, 0)
    Point t_hi_pt = st.slots.back().interval_hi;   // (0, 2a)
    st.t_lo_vertex = d.add_vertex(t_lo_pt, "terminal:0");
    st.t_hi_vertex = d.add_vertex(t_hi_pt, "terminal:1");
    {
        StageSlot& first = st.slots.front();
        Point dir = first.interval_hi - first.interval_lo;
        first.interval_lo = {first.interval_lo.x + dir.x / 8, first.interval_lo.y + dir.y / 8};
        StageSlot& last = st.slots.back();
        Point dir2 = last.interval_lo - last.interval_hi;
        last.interval_hi = {last.interval_hi.x + dir2.x / 8, last.interval_hi.y + dir2.y / 8};
    }

    add_ladder(st, 0);
    out_.stages.push_back(std::move(st));
    out_.t_start = out_.stages[0].t_lo_vertex;
    out_.t_end = out_.stages[0].t_hi_vertex;
}

void GadgetBuilder::validate_stage_against_old_strips(const GadgetStage& st) const {
    // Strips of stages <= index-2 (the (index-1)-stage strips are
    // validated by attach_s_segments once this stage exists): every new
    // vertex must sit strictly past the far strip boundary.
    const Drawing& d = out_.drawing;
    for (const auto& strip : strips_) {
        if (strip.stage >= st.index - 1) continue;
        auto past = [&](const Point& v) {
            construction_check(dot(v - strip.qprime, strip.dir) > 0,
                               "later-stage vertex clears an old s-segment slab");
        };
        for (const auto& slot : st.slots)
            for (int qv : slot.q_vertex) past(d.point(qv));
        past(d.point(st.t_hi_vertex));
    }
}

void GadgetBuilder::check_condition_b(const GadgetStage& st, int first_new_edge) const {
    // Condition (B): slabs of the new stage's segments do not properly
    // intersect any earlier segment.
    const Drawing& d = out_.drawing;
    const auto& edges = d.edges();
    for (std::size_t e = first_new_edge; e < edges.size(); ++e) {
        Segment seg_e(d.point(edges[e].first), d.point(edges[e].second));
        Slab slab_e(seg_e);
        for (std::size_t f = 0; f < static_cast<std::size_t>(first_new_edge); ++f) {
            Segment seg_f(d.point(edges[f].first), d.point(edges[f].second));
            construction_check(!segment_meets_slab_interior(slab_e, seg_f),
                               "stage slab avoids all earlier-stage segments");
        }
    }
    (void)st;
}

void GadgetBuilder::build_stage(int i) {
    construction_check(i >= 1 && static_cast<int>(out_.stages.size()) == i,
                       "stages are built in order");
    Drawing& d = out_.drawing;
    const GadgetStage& prev = out_.stages[i - 1];
    int first_new_edge = d.edge_count();

    GadgetStage st;
    st.index = i;
    st.travel_sign = +1;
    for (const auto& p : d.points()) st.delta_prev = std::max(st.delta_prev, p.x);

    // Previous primaries in decreasing x; the extreme one seeds the ray.
    struct Anchor { Point pt; Literal lit; };
    std::vector<Anchor> anchors;
    for (const auto& slot : prev.slots) anchors.push_back({slot.primary, slot.lit});
    std::sort(anchors.begin(), anchors.end(),
              [](const Anchor& a, const Anchor& b) { return a.pt.x > b.pt.x; });

    // Ray slope alpha^{2i+1}, doubled while any earlier slab boundary is
    // at least as steep (at alpha = 1 the paper's value is too small).
    Rational slope = Rational(1);
    for (int e = 0; e < 2 * i + 1; ++e) slope *= alpha_;
    {
        Rational steepest(0);
        for (const auto& [u, v] : d.edges()) {
            Point dd = d.point(v) - d.point(u);
            construction_check(dd.x != 0, "gadget edges are never vertical");
            Rational m = dd.y / dd.x;
            if (m < 0) steepest = std::max(steepest, -1 / m);
        }
        while (slope <= steepest) slope *= 2;
    }
    st.ray_origin = anchors[0].pt;
    st.ray_slope = slope;
    Line ray_line = Line::with_slope(st.ray_origin, slope);

    // a^i: first ray point, by doubling, above every earlier slab.
    {
        Rational step(1);
        bool ok = false;
        for (int tries = 0; tries < 64 && !ok; ++tries, step *= 2) {
            Point a = point_on_line_at_y(ray_line, st.ray_origin.y + step);
            ok = true;
            for (const auto& [u, v] : d.edges()) {
                const Point pu = d.point(u), pv = d.point(v);
                if (!(a.y > slab_boundary_y_at(pu, pv, pu, a.x) &&
                      a.y > slab_boundary_y_at(pu, pv, pv, a.x))) {
                    ok = false;
                    break;
                }
            }
            if (ok) st.a_point = a;
        }
        construction_check(ok, "a^i clears every earlier slab");
    }

    // b^i: above a^i, x past Delta_{i-1}, and the slab of t_{c_i} b^i
    // clear of all earlier segments.
    Point t_lo_pt = d.point(prev.t_hi_vertex);
    {
        Rational step(1);
        bool ok = false;
        for (int tries = 0; tries < 64 && !ok; ++tries, step *= 2) {
            Point b = point_on_line_at_y(ray_line, st.a_point.y + step);
            if (!(b.x > st.delta_prev)) continue;
            Slab sl{Segment(t_lo_pt, b)};
            ok = true;
            for (const auto& [u, v] : d.edges()) {
                if (segment_meets_slab_interior(sl, Segment(d.point(u), d.point(v)))) {
                    ok = false;
                    break;
                }
            }
            if (ok) st.b_point = b;
        }
        construction_check(ok, "b^i exists with the t_{c_i} b^i slab clear");
    }

    // Lines of A^i through the previous primaries, crossing the ray at
    // ascending heights above b^i; the whole bundle is retried with a
    // halved spacing until the envelope comes out in slot order.
    std::vector<Literal> lits = slot_literals(i);
    bool built = false;
    for (int halving = 0; halving < 10 && !built; ++halving) {
        Rational step = rat(1, BigInt(1) << halving);
        std::vector<StageSlot> slots(2 * alpha_);
        bool ok = true;

        for (int m = 0; ok && m < 2 * alpha_; ++m) {
            Literal slot_lit = negate(anchors[m].lit);
            int slot_pos = 2 * alpha_ - 1 - m; // bottom-to-top position
            construction_check(slot_lit == lits[slot_pos],
                               "slot labels follow the inverted correspondence");
            StageSlot slot;
            slot.lit = slot_lit;
            if (m == 0) {
                slot.line = ray_line;
            } else {
                Point crossing = point_on_line_at_y(ray_line, st.b_point.y + step * m);
                if (crossing == anchors[m].pt) { ok = false; break; }
                slot.line = Line::through(anchors[m].pt, crossing);
                if (slot.line.is_vertical()) { ok = false; break; }
            }
            slots[slot_pos] = std::move(slot);
        }
        if (ok) {
            std::vector<Line> lines;
            for (const auto& s : slots) lines.push_back(s.line);
            UpperEnvelope env = upper_envelope(lines);
            if (env.pieces.size() != lines.size()) ok = false;
            for (std::size_t k = 0; ok && k < env.pieces.size(); ++k)
                if (env.pieces[k].line_id != static_cast<int>(k)) ok = false;
            if (ok) {
                // Usable intervals: breakpoints, the b-level clip at the
                // bottom, and a t_hi-level clip at the top.
                for (std::size_t k = 0; ok && k < slots.size(); ++k) {
                    const auto& piece = env.pieces[k];
                    if (k == 0) {
                        slots[k].interval_lo = point_on_line_at_y(slots[k].line, st.b_point.y);
                        if (!(slots[k].interval_lo.x > st.delta_prev)) ok = false;
                    } else {
                        slots[k].interval_lo = *piece.left;
                    }
                    if (piece.right) slots[k].interval_hi = *piece.right;
                }
                if (ok) {
                    // Top terminal: vertically above the last breakpoint,
                    // doubling the height until old strips are cleared.
                    Point top_bp = *env.pieces.back().left;
                    Rational h(1);
                    bool t_ok = false;
                    for (int tries = 0; tries < 64 && !t_ok; ++tries, h *= 2) {
                        Point cand{top_bp.x, top_bp.y + h};
                        t_ok = true;
                        for (const auto& strip : strips_) {
                            if (strip.stage >= i - 1) continue;
                            if (!(dot(cand - strip.qprime, strip.dir) > 0)) { t_ok = false; break; }
                        }
                        if (t_ok) {
                            slots.back().interval_hi =
                                point_on_line_at_y(slots.back().line, top_bp.y + h);
                            st.t_hi_vertex =
                                d.add_vertex(cand, "terminal:" + std::to_string(i + 1));
                        }
                    }
                    if (!t_ok) ok = false;
                }
            }
        }
        if (ok) {
            st.slots = std::move(slots);
            built = true;
        }
    }
    construction_check(built, "A^i lines admit the required envelope order");

    st.t_lo_vertex = prev.t_hi_vertex;
    add_ladder(st, i);

    for (const auto& slot : st.slots)
        for (int qv : slot.q_vertex)
            construction_check(d.point(qv).x > st.delta_prev,
                               "stage vertices lie past Delta_{i-1}");
    construction_check(d.point(st.t_hi_vertex).x > st.delta_prev,
                       "stage terminal lies past Delta_{i-1}");

    validate_stage_against_old_strips(st);
    check_condition_b(st, first_new_edge);
    out_.stages.push_back(std::move(st));
    out_.t_end = out_.stages.back().t_hi_vertex;
}

void GadgetBuilder::attach_s_segments(int i) {
    construction_check(i >= 0 && i + 1 < static_cast<int>(out_.stages.size()),
                       "s-segments need the next stage's lines");
    Drawing& d = out_.drawing;
    GadgetStage& st = out_.stages[i];
    const GadgetStage& next = out_.stages[i + 1];
    construction_check(!st.has_s_segments, "s-segments attached once");

    // The A^{i+1} line through a slot's primary is the one labelled with
    // the negated literal; the s-segment is perpendicular to it.
    auto next_line_for = [&](const Literal& lit) -> const StageSlot& {
        Literal want = negate(lit);
        for (const auto& slot : next.slots)
            if (slot.lit == want) return slot;
        throw ConstructionError("construction check failed: missing next-stage line");
    };

    Rational w = rat(1, 8);
    for (int halving = 0; halving <= 10; ++halving, w /= 2) {
        // Candidate q' offsets for the whole stage at this length.
        std::vector<std::vector<Point>> qprime(st.slots.size());
        bool ok = true;
        std::vector<Point> dirs(st.slots.size(), Point{Rational(0), Rational(0)});
        for (std::size_t m = 0; ok && m < st.slots.size(); ++m) {
            const StageSlot& slot = st.slots[m];
            const StageSlot& carrier = next_line_for(slot.lit);
            construction_check(carrier.line.contains(slot.primary),
                               "next-stage line passes through the primary q-point");
            Rational mu = carrier.line.slope();
            construction_check(mu > 0, "next-stage lines have positive slope");
            Point dir{Rational(st.travel_sign), Rational(-st.travel_sign) / mu};
            dirs[m] = dir;
            qprime[m].resize(slot.q_vertex.size());
            for (std::size_t k = 0; k < slot.q_vertex.size(); ++k) {
                const Point q = d.point(slot.q_vertex[k]);
                qprime[m][k] = {q.x + dir.x * w, q.y + dir.y * w};
            }
        }

        // Exact slab conditions, per strip.
        for (std::size_t m = 0; ok && m < st.slots.size(); ++m) {
            const StageSlot& slot = st.slots[m];
            const Point dir = dirs[m];
            for (std::size_t k = 0; ok && k < slot.q_vertex.size(); ++k) {
                const Point q = d.point(slot.q_vertex[k]);
                const Point qp = qprime[m][k];

                // Copy shifts project forward onto the strip direction.
                if (!(dot(d.point(slot.q_vertex[k]) - d.point(slot.q_vertex[0]), dir) >= 0))
                    ok = false;

                // Forbidden side: next-stage copies of the negated slot
                // sit on (or behind) the near boundary.
                Literal forb = negate(slot.lit);
                for (const auto& nslot : next.slots) {
                    if (!ok) break;
                    for (int v : nslot.q_vertex) {
                        Point pv = d.point(v);
                        if (nslot.lit == forb) {
                            if (!(dot(pv - q, dir) <= 0 && dot(pv - qp, dir) < 0)) ok = false;
                        } else {
                            if (!(dot(pv - qp, dir) > 0)) ok = false;
                        }
                        if (!ok) break;
                    }
                }
                // Terminals after this stage sit on the allowed side.
                if (ok && !(dot(d.point(st.t_hi_vertex) - qp, dir) > 0)) ok = false;
                if (ok && !(dot(d.point(next.t_hi_vertex) - qp, dir) > 0)) ok = false;
                // Same-stage later material (higher slots) is allowed-side.
                for (std::size_t m2 = m + 1; ok && m2 < st.slots.size(); ++m2)
                    for (int v : st.slots[m2].q_vertex)
                        if (!(dot(d.point(v) - qp, dir) > 0)) { ok = false; break; }
                // Everything earlier sits behind the q boundary.
                for (std::size_t m2 = 0; ok && m2 < m; ++m2)
                    for (int v : st.slots[m2].q_vertex)
                        if (!(dot(d.point(v) - q, dir) <= 0)) { ok = false; break; }
                if (ok && !(dot(d.point(st.t_lo_vertex) - q, dir) <= 0)) ok = false;
                for (int si = 0; ok && si < st.index; ++si) {
                    const GadgetStage& old = out_.stages[si];
                    for (const auto& oslot : old.slots) {
                        for (int v : oslot.q_vertex)
                            if (!(dot(d.point(v) - q, dir) <= 0)) { ok = false; break; }
                        if (!ok) break;
                        for (int v : oslot.qprime_vertex)
                            if (!(dot(d.point(v) - q, dir) <= 0)) { ok = false; break; }
                        if (!ok) break;
                    }
                    if (ok && !(dot(d.point(old.t_lo_vertex) - q, dir) <= 0)) ok = false;
                }
            }
        }
        if (!ok) continue;

        // Commit: create the q' vertices, rewire the higher edges, and
        // record the strips for later stages to check against.
        for (std::size_t m = 0; m < st.slots.size(); ++m) {
            StageSlot& slot = st.slots[m];
            slot.qprime_vertex.resize(slot.q_vertex.size());
            for (std::size_t k = 0; k < slot.q_vertex.size(); ++k) {
                int qv = slot.q_vertex[k];
                const Point q = d.point(qv);
                int qpv = d.add_vertex(qprime[m][k], "sseg:" + std::to_string(st.index) + ":" +
                                                         std::to_string(k) + ":" +
                                                         lit_tag(slot.lit));
                slot.qprime_vertex[k] = qpv;
                std::vector<int> above;
                for (int n : d.neighbors(qv))
                    if (d.point(n).y > q.y) above.push_back(n);
                for (int n : above) {
                    d.remove_edge(n, qv);
                    d.add_edge(n, qpv);
                }
                d.add_edge(qv, qpv);
                strips_.push_back({q, qprime[m][k], dirs[m], st.index});
            }
        }
        st.has_s_segments = true;
        return;
    }
    throw ConstructionError("construction check failed: no s-segment length satisfies the "
                            "slab conditions after 10 halvings");
}

IcPathGadget GadgetBuilder::finish() {
    construction_check(static_cast<int>(out_.stages.size()) == inst_.beta(),
                       "one stage per clause");
    return std::move(out_);
}

IcPathGadget build_gadget(const CnfInstance& inst, bool allow_large) {
    GadgetBuilder builder(inst, allow_large);
    builder.build_stage0();
    for (int i = 1; i < inst.beta(); ++i) {
        builder.build_stage(i);
        builder.attach_s_segments(i - 1);
    }
    return builder.finish();
}

Assignment extract_assignment(const IcPathGadget& gadget, const CnfInstance& inst,
                              const std::vector<int>& path) {
    if (path.size() < 2 || path.front() != gadget.t_start || path.back() != gadget.t_end)
        throw InputError("extract_assignment: path must run t to t'");
    std::set<int> on_path(path.begin(), path.end());

    Assignment result(inst.alpha);
    bool first_stage = true;
    for (const auto& st : gadget.stages) {
        Assignment stage_asg(inst.alpha);
        for (int j = 1; j <= inst.alpha; ++j) {
            int chosen = 0;
            bool value = false;
            for (const auto& slot : st.slots) {
                if (slot.lit.var != j) continue;
                bool visited = false;
                for (int qv : slot.q_vertex)
                    if (on_path.count(qv)) visited = true;
                if (visited) {
                    ++chosen;
                    value = slot.lit.positive;
                }
            }
            if (chosen != 1)
                throw ConstructionError(
                    "construction check failed: stage " + std::to_string(st.index) +
                    " path visits " + std::to_string(chosen) + " q-points for variable " +
                    std::to_string(j) + " (expected exactly one)");
            stage_asg.set(j, value);
        }
        if (first_stage) {
            result = stage_asg;
            first_stage = false;
        } else {
            for (int j = 1; j <= inst.alpha; ++j)
                if (result.get(j) != stage_asg.get(j))
                    throw ConstructionError(
                        "construction check failed: stages disagree on variable " +
                        std::to_string(j) + " (Condition (A) violated)");
        }
    }
    construction_check(satisfies(inst, result),
                       "extracted assignment satisfies the instance");
    return result;
}

} // namespace ic
