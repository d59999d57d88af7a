#pragma once

#include "ic/errors.hpp"
#include "ic/rational.hpp"

#include <optional>
#include <string>

namespace ic {

// ------------------------------------------------------------------
// Exact 2-D primitives. Every predicate below is decided by rational
// sign computations; there is no floating point anywhere in this file.
// ------------------------------------------------------------------

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational squared_norm(const Point& a) { return dot(a, a); }
inline Rational squared_distance(const Point& a, const Point& b) { return squared_norm(a - b); }

inline Point midpoint(const Point& a, const Point& b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

inline std::string point_to_string(const Point& p) {
    return "(" + rat_to_string(p.x) + ", " + rat_to_string(p.y) + ")";
}

struct Segment {
    Point a;
    Point b;

    Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == b) throw std::invalid_argument("segment: endpoints coincide");
    }

    Point direction() const { return b - a; }
};

// Line Ax + By = C with integer coefficients, gcd 1, and the first
// nonzero of (A, B) positive. The canonical form makes equality of
// coincident lines a plain field comparison.
struct Line {
    BigInt A, B, C;

    Line(const Rational& a, const Rational& b, const Rational& c) { normalize(a, b, c); }

    static Line through(const Point& p, const Point& q) {
        if (p == q) throw std::invalid_argument("line: points coincide");
        // (q.y - p.y) x - (q.x - p.x) y = (q.y - p.y) p.x - (q.x - p.x) p.y
        Rational a = q.y - p.y;
        Rational b = p.x - q.x;
        Rational c = a * p.x + b * p.y;
        return Line(a, b, c);
    }

    static Line vertical(const Rational& x) { return Line(1, 0, x); }
    static Line horizontal(const Rational& y) { return Line(0, 1, y); }

    /// Line through p with the given slope.
    static Line with_slope(const Point& p, const Rational& slope) {
        // y - p.y = slope (x - p.x)  =>  -slope x + y = p.y - slope p.x
        return Line(-slope, 1, p.y - slope * p.x);
    }

    bool is_vertical() const { return B == 0; }

    Rational slope() const {
        if (is_vertical()) throw std::invalid_argument("line: vertical line has no slope");
        return rat(-A, B);
    }

    /// y at the given x; rejects vertical lines.
    Rational y_at(const Rational& x) const {
        if (is_vertical()) throw std::invalid_argument("line: y_at on vertical line");
        return rat(Rational(C) - Rational(A) * x, Rational(B));
    }

    Rational x_at(const Rational& y) const {
        if (A == 0) throw std::invalid_argument("line: x_at on horizontal line");
        return rat(Rational(C) - Rational(B) * y, Rational(A));
    }

    bool contains(const Point& p) const { return Rational(A) * p.x + Rational(B) * p.y == Rational(C); }

    bool operator==(const Line& o) const { return A == o.A && B == o.B && C == o.C; }

private:
    void normalize(const Rational& a, const Rational& b, const Rational& c) {
        if (a == 0 && b == 0) throw std::invalid_argument("line: degenerate coefficients");
        // Clear denominators, then divide by the gcd and fix the sign.
        BigInt l = den_of(a);
        l = l / gcd(l, den_of(b)) * den_of(b);
        l = l / gcd(l, den_of(c)) * den_of(c);
        BigInt ia = num_of(a * Rational(l));
        BigInt ib = num_of(b * Rational(l));
        BigInt ic_ = num_of(c * Rational(l));
        BigInt g = gcd(gcd(abs(ia), abs(ib)), abs(ic_));
        if (g == 0) g = 1;
        ia /= g; ib /= g; ic_ /= g;
        BigInt lead = (ia != 0) ? ia : ib;
        if (lead < 0) { ia = -ia; ib = -ib; ic_ = -ic_; }
        A = ia; B = ib; C = ic_;
    }
};

// The infinite strip between the two lines perpendicular to `base`
// through its endpoints. Membership reduces to comparing projections
// onto the base direction.
struct Slab {
    Segment base;

    explicit Slab(Segment s) : base(std::move(s)) {}
};

enum class SlabPosition { StrictlyInside, OnBoundary, Outside };

inline Slab slab_of(const Segment& seg) { return Slab(seg); }

inline SlabPosition slab_position(const Slab& slab, const Point& p) {
    Point d = slab.base.direction();
    Rational s1 = dot(p - slab.base.a, d);
    Rational s2 = dot(p - slab.base.b, d);
    if (s1 > 0 && s2 < 0) return SlabPosition::StrictlyInside;
    if (s1 == 0 || s2 == 0) return SlabPosition::OnBoundary;
    return SlabPosition::Outside;
}

/// True iff some point of `seg` lies strictly inside the open slab.
inline bool segment_meets_slab_interior(const Slab& slab, const Segment& seg) {
    Point d = slab.base.direction();
    Rational lo = dot(slab.base.a, d);
    Rational hi = dot(slab.base.b, d);
    if (lo > hi) std::swap(lo, hi);
    Rational p1 = dot(seg.a, d);
    Rational p2 = dot(seg.b, d);
    if (p1 > p2) std::swap(p1, p2);
    return p2 > lo && p1 < hi;
}

/// True iff some point of `seg` lies in the closed slab.
inline bool segment_meets_slab_closed(const Slab& slab, const Segment& seg) {
    Point d = slab.base.direction();
    Rational lo = dot(slab.base.a, d);
    Rational hi = dot(slab.base.b, d);
    if (lo > hi) std::swap(lo, hi);
    Rational p1 = dot(seg.a, d);
    Rational p2 = dot(seg.b, d);
    if (p1 > p2) std::swap(p1, p2);
    return p2 >= lo && p1 <= hi;
}

inline std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
    Rational det = Rational(l1.A) * Rational(l2.B) - Rational(l2.A) * Rational(l1.B);
    if (det == 0) return std::nullopt; // parallel or coincident
    Rational x = rat(Rational(l1.C) * Rational(l2.B) - Rational(l2.C) * Rational(l1.B), det);
    Rational y = rat(Rational(l1.A) * Rational(l2.C) - Rational(l2.A) * Rational(l1.C), det);
    return Point{x, y};
}

/// Point at x = vertical_x on the perpendicular to `through` at p.
/// Requires p on `through`; a vertical `through` degenerates to the
/// horizontal move (vertical_x, p.y), which is allowed.
inline Point perpendicular_foot_on_vertical(const Point& p, const Line& through,
                                            const Rational& vertical_x) {
    if (!through.contains(p))
        throw std::invalid_argument("perpendicular_foot_on_vertical: p not on line");
    if (through.is_vertical()) return Point{vertical_x, p.y};
    Rational m = through.slope();
    if (m == 0) {
        // Perpendicular is vertical; only x = p.x is reachable.
        if (vertical_x != p.x)
            throw std::invalid_argument("perpendicular_foot_on_vertical: horizontal line, x mismatch");
        return p;
    }
    // Perpendicular slope is -1/m.
    Rational perp = rat(Rational(-1), m);
    return Point{vertical_x, p.y + perp * (vertical_x - p.x)};
}

} // namespace ic
