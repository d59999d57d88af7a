#pragma once

#include "ic/geometry.hpp"

#include <vector>

namespace ic {

enum class Direction { Forward, Backward };

// Polygonal chain on >= 2 distinct vertices. Construction rejects
// repeated vertices and consecutive segments that double back over
// each other; those are modelling errors, not "false" answers.
struct VertexPath {
    std::vector<Point> points;

    explicit VertexPath(std::vector<Point> pts);

    std::size_t size() const { return points.size(); }
    const Point& operator[](std::size_t i) const { return points[i]; }

    VertexPath reversed() const;
    VertexPath prefix(std::size_t count) const; // first `count` vertices
};

// ------------------------------------------------------------------
// Decision procedures. A path is increasing-chord iff no perpendicular
// through a path point properly crosses the path; for a polygonal
// chain this reduces to one closed half-plane test per (edge, vertex)
// pair, decided exactly. Boundary contact is allowed.
// ------------------------------------------------------------------

bool is_increasing_chord(const VertexPath& path);

bool is_self_approaching(const VertexPath& path, Direction dir);

/// Re-verifies `extended`, insisting that `base` is a point-exact prefix.
bool is_ic_extension(const VertexPath& base, const VertexPath& extended);

/// Strictly decreasing distance to the final vertex along the chain.
bool is_greedy_path(const VertexPath& path);

/// Path length over endpoint distance; rejects closed paths.
double dilation(const VertexPath& path);

// Incremental forms used by the search routines: `points[0..n-2]` is
// assumed increasing-chord already; both run the O(n) checks that
// involve the newly appended vertex only.
bool extension_keeps_increasing_chord(const std::vector<Point>& points);

} // namespace ic
