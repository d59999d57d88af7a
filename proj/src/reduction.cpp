#include "ic/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ic {

namespace {

std::string lit_tag(const Literal& l) {
    return (l.positive ? std::string("x") : std::string("nx")) + ":" + std::to_string(l.var);
}

} // namespace

ReductionLayout build_arrangement(int alpha) {
    if (alpha < 1) throw InputError("build_arrangement: alpha must be >= 1");
    ReductionLayout layout;
    layout.alpha = alpha;
    layout.epsilon = rat(1, BigInt(alpha) * alpha * alpha);
    for (int i = 1; i <= 2 * alpha; ++i) {
        Point upper{Rational(0), Rational(i)};
        Point lower_pre{Rational(2 * alpha - i + 1), Rational(0)};
        // Extend downward, upper endpoint fixed, length scaled by (2a+1).
        Point lower_ext{Rational((2 * alpha + 1) * (2 * alpha - i + 1)),
                        Rational(-2 * alpha * i)};
        Line line = Line::through(upper, lower_pre);
        construction_check(line.contains(lower_ext), "extended endpoint lies on L_i");
        Rational slope = line.slope();
        construction_check(slope >= rat(-2 * alpha, 1) && slope <= rat(-1, 2 * alpha),
                           "slope of L_i within [-2a, -1/(2a)]");
        layout.lines.push_back({line, upper, lower_pre, lower_ext});
    }
    return layout;
}

// Envelope intervals of the pre-extension segments: the line envelope,
// clipped at the extreme ends to the segment endpoints (0, 2a) and
// (2a, 0). The chain must descend through the lines in variable order.
std::vector<LambdaInterval> arrangement_envelope_intervals(const ReductionLayout& layout) {
    std::vector<Line> lines;
    for (const auto& al : layout.lines) lines.push_back(al.line);
    UpperEnvelope env = upper_envelope(lines);
    int n = static_cast<int>(lines.size());
    construction_check(static_cast<int>(env.pieces.size()) == n,
                       "every arrangement line contributes an envelope interval");
    for (int k = 0; k < n; ++k)
        construction_check(env.pieces[k].line_id == n - 1 - k,
                           "envelope order is L_{2a}..L_1 left to right");
    std::vector<LambdaInterval> lambdas(n);
    for (int k = 0; k < n; ++k) {
        const auto& piece = env.pieces[k];
        const auto& al = layout.lines[piece.line_id];
        Point top = piece.left ? *piece.left : al.upper;
        Point bottom = piece.right ? *piece.right : al.lower_pre;
        construction_check(top.x >= al.upper.x && bottom.x <= al.lower_pre.x,
                           "envelope interval lies within the pre-extension segment");
        construction_check(top.x < bottom.x && top.y > bottom.y,
                           "envelope interval descends left to right");
        lambdas[piece.line_id] = {top, bottom};
    }
    return lambdas;
}

GammaBuild build_hb(int alpha) {
    GammaBuild out;
    ReductionLayout& layout = out.layout;
    layout = build_arrangement(alpha);
    layout.lambda = arrangement_envelope_intervals(layout);
    Drawing& d = out.drawing;

    Rational lv_x(2 * alpha + 1);
    Rational lpv_x = lv_x - layout.epsilon;
    Line l_v = Line::vertical(lv_x);
    Line l_h = Line::horizontal(Rational(0));
    layout.lv_top = Point{lv_x, Rational(2 * alpha)};
    layout.lv_bottom = Point{lv_x, Rational(-5 * alpha * alpha)};

    auto t_point = line_intersection(l_h, l_v);
    construction_check(t_point.has_value(), "l_h and l_v intersect");
    layout.t = d.add_vertex(*t_point, "t");
    layout.s = d.add_vertex(layout.lv_bottom, "s");

    layout.p_vertex.assign(2 * alpha, -1);
    layout.pprime_vertex.assign(2 * alpha, -1);
    for (int i = 1; i <= 2 * alpha; ++i) {
        const auto& al = layout.lines[i - 1];
        auto p = line_intersection(al.line, l_v);
        construction_check(p.has_value(), "L_i intersects l_v");
        construction_check(p->y >= layout.lv_bottom.y && p->y <= layout.lv_top.y,
                           "p point lies on the segment l_v");
        Literal lit{(i + 1) / 2, i % 2 == 1};
        layout.p_vertex[i - 1] = d.add_vertex(*p, "p:" + lit_tag(lit));
        Point pp = perpendicular_foot_on_vertical(*p, al.line, lpv_x);
        layout.pprime_vertex[i - 1] = d.add_vertex(pp, "pprime:" + lit_tag(lit));
    }

    // Needles, then the level-to-level cross edges, then the s/t hooks.
    for (int i = 0; i < 2 * alpha; ++i) d.add_edge(layout.p_vertex[i], layout.pprime_vertex[i]);
    for (int k = 2; k <= alpha; ++k) {
        for (int pk : {layout.p_vertex[2 * k - 2], layout.p_vertex[2 * k - 1]}) {
            d.add_edge(pk, layout.pprime_vertex[2 * k - 4]);
            d.add_edge(pk, layout.pprime_vertex[2 * k - 3]);
        }
    }
    d.add_edge(layout.s, layout.pprime_vertex[2 * alpha - 2]);
    d.add_edge(layout.s, layout.pprime_vertex[2 * alpha - 1]);
    d.add_edge(layout.t, layout.p_vertex[0]);
    d.add_edge(layout.t, layout.p_vertex[1]);

    // The slab of a needle must stay clear of every other needle, even
    // at the boundary; this is what makes Lemma 1's case analysis work.
    for (int i = 0; i < 2 * alpha; ++i) {
        Slab slab(Segment(d.point(layout.p_vertex[i]), d.point(layout.pprime_vertex[i])));
        for (int j = 0; j < 2 * alpha; ++j) {
            if (i == j) continue;
            Segment other(d.point(layout.p_vertex[j]), d.point(layout.pprime_vertex[j]));
            construction_check(!segment_meets_slab_closed(slab, other),
                               "needle slab avoids every other needle");
        }
    }
    for (const auto& [u, v] : d.edges())
        construction_check(d.point(u).y != d.point(v).y, "H_b edges are never horizontal");
    return out;
}

bool check_variable_path(const GammaBuild& hb, const std::vector<int>& path_vertices) {
    if (path_vertices.size() < 2) throw InputError("check_variable_path: too short");
    if (path_vertices.front() != hb.layout.s || path_vertices.back() != hb.layout.t)
        throw InputError("check_variable_path: path must run s to t");
    for (int j = 1; j <= hb.layout.alpha; ++j) {
        int pos = hb.layout.p_vertex[2 * j - 2];
        int neg = hb.layout.p_vertex[2 * j - 1];
        int hits = 0;
        for (int v : path_vertices) hits += (v == pos) + (v == neg);
        if (hits != 1) return false;
    }
    return true;
}

bool check_variable_path(const GammaBuild& hb, const VertexPath& path) {
    std::vector<int> idx;
    for (const auto& pt : path.points) {
        int found = -1;
        for (int v = 0; v < hb.drawing.vertex_count(); ++v)
            if (hb.drawing.point(v) == pt) { found = v; break; }
        if (found < 0) throw InputError("check_variable_path: point is not a drawing vertex");
        idx.push_back(found);
    }
    return check_variable_path(hb, idx);
}

namespace {

// The fixed material every witness root path draws on: chain vertices
// (r, s, all needle endpoints) and the chain edges oriented toward t.
// A path through a literal-point never contains that literal's own
// needle, so those two vertices and their edges are exempt.
struct ChainGeometry {
    std::vector<Point> vertices; // r, s, and non-exempt needle endpoints
    std::vector<Segment> edges;  // oriented ascending in y (toward t)
};

ChainGeometry collect_chain(const GammaBuild& g, const Point& r_point, int exempt_line_index) {
    ChainGeometry out;
    const Drawing& d = g.drawing;
    const ReductionLayout& lay = g.layout;
    std::set<int> chain_ids{lay.s, lay.t};
    for (int i = 0; i < 2 * lay.alpha; ++i) {
        if (i == exempt_line_index) continue;
        chain_ids.insert(lay.p_vertex[i]);
        chain_ids.insert(lay.pprime_vertex[i]);
    }
    for (int v : chain_ids)
        if (v != lay.t) out.vertices.push_back(d.point(v));
    out.vertices.push_back(r_point);
    for (const auto& [u, v] : d.edges()) {
        if (!chain_ids.count(u) || !chain_ids.count(v)) continue;
        Point a = d.point(u), b = d.point(v);
        if (a.y > b.y) std::swap(a, b);
        out.edges.emplace_back(a, b);
    }
    // The rs edge belongs to every witness path as well.
    out.edges.emplace_back(r_point, d.point(lay.s));
    return out;
}

// Exact feasibility of a literal-point position: the path
// (r, s, ..., t, q, peak) must be able to pass the half-plane checks
// for every admissible variable chain, and q has to sit in the open
// cell directly below its literal's envelope interval.
bool literal_point_position_ok(const GammaBuild& g, const ChainGeometry& chain, const Point& q,
                               const Point& peak, const Point& r_point, int lit_line_index) {
    const Drawing& d = g.drawing;
    const ReductionLayout& lay = g.layout;
    const Point t = d.point(lay.t);
    const Point s = d.point(lay.s);

    if (!(q.y > 0)) return false;
    for (int i = 0; i < 2 * lay.alpha; ++i) {
        Rational h = lay.lines[i].line.y_at(q.x);
        if (i == lit_line_index) {
            if (!(q.y < h)) return false;
        } else {
            if (!(q.y > h)) return false;
        }
    }

    Point dq = q - t;
    for (const auto& v : chain.vertices)
        if (dot(v - t, dq) > 0) return false;
    Point dp = peak - q;
    for (const auto& v : chain.vertices)
        if (dot(v - q, dp) > 0) return false;
    if (dot(t - q, dp) > 0) return false;
    for (const auto& e : chain.edges) {
        Point de = e.b - e.a;
        if (dot(q - e.b, de) < 0) return false;
        if (dot(peak - e.b, de) < 0) return false;
    }
    if (dot(peak - q, dq) < 0) return false;
    // Forward half-plane of the rs edge.
    if (!(dot(q - s, s - r_point) > 0)) return false;
    return true;
}

// Chooses the depth of r and places every literal-point, jointly. The
// paper puts r "sufficiently below" H with (0, -a^5) as its example
// position; that value is kept when it passes every exact check and
// doubled downward otherwise (it cannot work at alpha <= 2).
void place_r_and_literal_points(GammaBuild& g, const CnfInstance& inst) {
    Drawing& d = g.drawing;
    ReductionLayout& lay = g.layout;
    int alpha = inst.alpha;
    BigInt a5 = BigInt(alpha) * alpha * alpha * alpha * alpha;
    Point s_point = d.point(lay.s);

    Rational depth(-a5);
    for (int attempt = 0; attempt < 64; ++attempt, depth *= 2) {
        Point r_point{Rational(0), depth};
        Point dir = s_point - r_point;

        // Every H vertex except s must sit strictly past the s-side
        // boundary of the rs slab, and r must sit behind every chain
        // edge it precedes.
        bool ok = true;
        for (int v = 0; v < d.vertex_count() && ok; ++v) {
            if (v == lay.s) continue;
            if (!(dot(d.point(v) - s_point, dir) > 0)) ok = false;
        }
        for (const auto& [u, v] : d.edges()) {
            if (!ok) break;
            Point a = d.point(u), b = d.point(v);
            if (a.y > b.y) std::swap(a, b);
            if (dot(r_point - a, b - a) > 0) ok = false;
        }
        if (!ok) continue;

        // Literal-point placement under this r. The spot is found
        // deterministically: slide x from the interval midpoint toward
        // its upper end, halving the vertical drop each round; the k-th
        // coincident point of a literal stacks a further fraction of
        // the drop so the copies stay distinct.
        std::vector<ReductionLayout::LiteralPoint> placed;
        std::vector<Point> placed_points;
        std::map<std::pair<int, bool>, int> coincidence;
        bool all_placed = true;
        for (int ci = 1; ci <= inst.beta() && all_placed; ++ci) {
            for (const auto& lit : inst.clauses[ci - 1]) {
                int li = lay.line_index(lit);
                const auto& lam = lay.lambda[li];
                ChainGeometry chain = collect_chain(g, r_point, li);
                Point peak = d.point(lay.peak_vertex[ci - 1]);
                int k = coincidence[{lit.var, lit.positive}]++;

                bool found = false;
                Point chosen{Rational(0), Rational(0)};
                for (int slide = 0; slide < 24 && !found; ++slide) {
                    Rational qx =
                        lam.top.x + (lam.bottom.x - lam.top.x) / (BigInt(1) << (slide + 1));
                    Rational ceiling = lay.lines[li].line.y_at(qx);
                    Rational delta = rat(1, BigInt(alpha) * alpha * alpha * alpha);
                    for (int halved = 0; halved < 48 && !found; ++halved, delta /= 2) {
                        Rational drop = delta + delta * k / (k + 2);
                        Point q{qx, ceiling - drop};
                        if (!literal_point_position_ok(g, chain, q, peak, r_point, li)) continue;
                        bool fresh = true;
                        for (const auto& prev : placed_points)
                            if (prev == q) fresh = false;
                        if (!fresh) continue;
                        chosen = q;
                        found = true;
                    }
                }
                if (!found) { all_placed = false; break; }
                ReductionLayout::LiteralPoint lp;
                lp.clause = ci;
                lp.lit = lit;
                lp.q_vertex = -1; // vertices added once the attempt commits
                placed.push_back(lp);
                placed_points.push_back(chosen);
            }
        }
        if (!all_placed) continue;

        lay.r_point = r_point;
        for (std::size_t i = 0; i < placed.size(); ++i) {
            placed[i].q_vertex = d.add_vertex(
                placed_points[i],
                "lit:" + lit_tag(placed[i].lit) + ":c:" + std::to_string(placed[i].clause));
            d.add_edge(lay.t, placed[i].q_vertex);
            d.add_edge(placed[i].q_vertex, lay.peak_vertex[placed[i].clause - 1]);
        }
        lay.literal_points = std::move(placed);
        return;
    }
    throw ConstructionError("construction check failed: no depth of r admits all "
                            "literal-point placements");
}

} // namespace

GammaBuild build_h(const CnfInstance& inst) {
    GammaBuild g = build_hb(inst.alpha);
    Drawing& d = g.drawing;
    ReductionLayout& lay = g.layout;

    lay.peak_vertex.assign(inst.beta(), -1);
    for (int i = 1; i <= inst.beta(); ++i)
        lay.peak_vertex[i - 1] =
            d.add_vertex(Point{Rational(0), Rational(2 * inst.alpha + i)},
                         "peak:" + std::to_string(i));

    place_r_and_literal_points(g, inst);
    return g;
}

GammaBuild build_gamma(const CnfInstance& inst) {
    GammaBuild g = build_h(inst);
    Drawing& d = g.drawing;
    ReductionLayout& lay = g.layout;
    int alpha = inst.alpha;

    Point r_point = lay.r_point;
    Point s_point = d.point(lay.s);
    lay.r = d.add_vertex(r_point, "root");
    d.add_edge(lay.r, lay.s);

    {
        // rs against H: the slab of rs touches H only at s, no edge slab
        // of H properly crosses rs, and the arrangement segments stay
        // clear of the rs slab.
        Point dir = s_point - r_point;
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (v == lay.s || v == lay.r) continue;
            construction_check(dot(d.point(v) - s_point, dir) > 0,
                               "slab of rs meets H only at s");
        }
        Segment rs(r_point, s_point);
        Slab rs_slab(rs);
        for (const auto& [u, v] : d.edges()) {
            if ((u == lay.r) || (v == lay.r)) continue;
            Segment e(d.point(u), d.point(v));
            construction_check(!segment_meets_slab_interior(rs_slab, e),
                               "slab of rs avoids the edges of H");
            construction_check(!segment_meets_slab_interior(Slab(e), rs),
                               "no edge slab of H crosses rs");
        }
        for (const auto& al : lay.lines) {
            construction_check(
                !segment_meets_slab_interior(rs_slab, Segment(al.upper, al.lower_ext)),
                "slab of rs avoids every segment L_i");
            construction_check(
                !segment_meets_slab_interior(Slab(Segment(al.upper, al.lower_pre)), rs),
                "no pre-extension L_i slab crosses rs");
        }
    }

    // Anchors: a at (x_r, y_q), nudged rightward so no two r-edges
    // overlap; (r, a, q) stays x- and y-monotone, hence increasing-chord.
    BigInt a6 = BigInt(alpha) * alpha * alpha * alpha * alpha * alpha;
    int k = 0;
    for (auto& lp : lay.literal_points) {
        ++k;
        Point q = d.point(lp.q_vertex);
        Rational shift = rat(k, a6);
        construction_check(shift < q.x, "anchor stays left of its literal-point");
        Point a{r_point.x + shift, q.y};
        lp.anchor_vertex =
            d.add_vertex(a, "anchor:" + lit_tag(lp.lit) + ":c:" + std::to_string(lp.clause));
        d.add_edge(lay.r, lp.anchor_vertex);
        d.add_edge(lp.anchor_vertex, lp.q_vertex);
    }

    // No two edges at r may be collinear (the point of the perturbation).
    {
        const auto& nbrs = d.neighbors(lay.r);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                construction_check(
                    cross(d.point(nbrs[i]) - r_point, d.point(nbrs[j]) - r_point) != 0,
                    "edges at r do not overlap");
    }

    // Each anchor path is increasing-chord and admits no extension.
    for (const auto& lp : lay.literal_points) {
        Point a = d.point(lp.anchor_vertex);
        Point q = d.point(lp.q_vertex);
        VertexPath raq({r_point, a, q});
        construction_check(is_increasing_chord(raq), "(r, a, q) is increasing-chord");
        for (int w : d.neighbors(lp.q_vertex)) {
            if (w == lp.anchor_vertex) continue;
            construction_check(!is_increasing_chord(VertexPath({r_point, a, q, d.point(w)})),
                               "(r, a, q) cannot be extended through any neighbor of q");
        }
    }
    return g;
}

RootedTree witness_tree_from_assignment(const GammaBuild& gamma, const CnfInstance& inst,
                                        const Assignment& asg) {
    if (!satisfies(inst, asg))
        throw InputError("witness_tree_from_assignment: assignment does not satisfy the instance");
    const ReductionLayout& lay = gamma.layout;
    std::map<int, int> parent;

    // P: r -> s -> chain -> t, through p_{not x_j} when x_j is true.
    parent[lay.s] = lay.r;
    int prev = lay.s;
    for (int j = lay.alpha; j >= 1; --j) {
        int li = asg.get(j) ? (2 * j - 1) : (2 * j - 2); // needle of the opposite polarity
        parent[lay.pprime_vertex[li]] = prev;
        parent[lay.p_vertex[li]] = lay.pprime_vertex[li];
        prev = lay.p_vertex[li];
    }
    parent[lay.t] = prev;

    // Q: the complementary chain hangs off s.
    prev = lay.s;
    for (int j = lay.alpha; j >= 1; --j) {
        int li = asg.get(j) ? (2 * j - 2) : (2 * j - 1);
        parent[lay.pprime_vertex[li]] = prev;
        parent[lay.p_vertex[li]] = lay.pprime_vertex[li];
        prev = lay.p_vertex[li];
    }

    // One true literal-point carries each peak; the rest arrive via
    // their anchors, and the anchors of the carriers via r directly.
    std::set<int> used_q;
    for (int ci = 1; ci <= inst.beta(); ++ci) {
        int carrier = -1;
        for (const auto& lp : lay.literal_points) {
            if (lp.clause != ci) continue;
            if (asg.get(lp.lit.var) == lp.lit.positive) { carrier = lp.q_vertex; break; }
        }
        construction_check(carrier >= 0, "satisfied clause has a true literal-point");
        parent[carrier] = lay.t;
        parent[lay.peak_vertex[ci - 1]] = carrier;
        used_q.insert(carrier);
    }
    for (const auto& lp : lay.literal_points) {
        parent[lp.anchor_vertex] = lay.r;
        if (!used_q.count(lp.q_vertex)) parent[lp.q_vertex] = lp.anchor_vertex;
    }

    RootedTree tree(lay.r, std::move(parent));
    construction_check(verify_ic_rooted_tree(gamma.drawing, tree),
                       "witness tree is spanning and increasing-chord");
    return tree;
}

Assignment assignment_from_tree(const GammaBuild& gamma, const CnfInstance& inst,
                                const RootedTree& tree) {
    if (!verify_ic_rooted_tree(gamma.drawing, tree))
        throw InputError("assignment_from_tree: tree fails verification");
    const ReductionLayout& lay = gamma.layout;
    std::vector<int> rt = tree.path_from_root(lay.t);
    std::vector<int> st(rt.begin() + 1, rt.end());
    if (st.empty() || st.front() != lay.s || !check_variable_path(gamma, st))
        throw InputError("assignment_from_tree: r->t path does not select one needle per "
                         "variable (contradicts Lemma 1)");
    Assignment asg(inst.alpha);
    for (int j = 1; j <= inst.alpha; ++j) {
        bool through_pos = std::find(st.begin(), st.end(), lay.p_vertex[2 * j - 2]) != st.end();
        asg.set(j, !through_pos); // through p_{x_j} means x_j false
    }
    construction_check(satisfies(inst, asg),
                       "assignment read from the tree satisfies the instance");
    return asg;
}

std::uint64_t max_coordinate_bits(const Drawing& d) {
    std::uint64_t best = 0;
    for (const auto& p : d.points()) {
        best = std::max(best, bit_length(p.x));
        best = std::max(best, bit_length(p.y));
    }
    return best;
}

} // namespace ic
