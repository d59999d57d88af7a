#pragma once

#include "ic/geometry.hpp"

#include <optional>
#include <vector>

namespace ic {

// One maximal interval of the upper envelope. The extreme pieces are
// unbounded on one side; interior endpoints are shared breakpoints.
struct EnvelopePiece {
    int line_id = -1;              // index into the caller's line list
    std::optional<Point> left;     // absent on the leftmost piece
    std::optional<Point> right;    // absent on the rightmost piece
};

// Left-to-right chain of the points visible from (0, +infinity).
struct UpperEnvelope {
    std::vector<Line> lines;            // the input arrangement
    std::vector<EnvelopePiece> pieces;  // ordered by x

    /// Exact envelope height at x.
    Rational height_at(const Rational& x) const;

    /// The piece carried by the given input line, if it appears.
    std::optional<EnvelopePiece> piece_for_line(int line_id) const;
};

/// Computes the upper envelope of non-vertical lines. Coincident lines
/// collapse onto the smallest id. Throws on vertical or empty input.
UpperEnvelope upper_envelope(const std::vector<Line>& lines);

} // namespace ic
