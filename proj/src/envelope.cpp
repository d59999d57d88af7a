#include "ic/envelope.hpp"

#include <algorithm>
#include <stdexcept>

namespace ic {

namespace {

struct SlopedLine {
    Rational slope;
    Rational intercept;
    int id;
};

// x-coordinate where a overtakes b (slopes differ).
Rational crossing_x(const SlopedLine& a, const SlopedLine& b) {
    return rat(b.intercept - a.intercept, a.slope - b.slope);
}

} // namespace

UpperEnvelope upper_envelope(const std::vector<Line>& lines) {
    if (lines.empty()) throw std::invalid_argument("upper_envelope: no lines");

    std::vector<SlopedLine> sl;
    sl.reserve(lines.size());
    for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
        if (lines[i].is_vertical())
            throw std::invalid_argument("upper_envelope: vertical line rejected");
        sl.push_back({lines[i].slope(), lines[i].y_at(0), i});
    }

    // Sort by slope, then intercept descending, then id; for equal slopes
    // only the highest line can appear, and coincident lines keep the
    // smallest id.
    std::sort(sl.begin(), sl.end(), [](const SlopedLine& a, const SlopedLine& b) {
        if (a.slope != b.slope) return a.slope < b.slope;
        if (a.intercept != b.intercept) return a.intercept > b.intercept;
        return a.id < b.id;
    });
    std::vector<SlopedLine> distinct;
    for (const auto& l : sl) {
        if (!distinct.empty() && distinct.back().slope == l.slope) continue;
        distinct.push_back(l);
    }

    // Incremental hull over slope order: pop the top while the new line
    // overtakes it no later than the top overtook its predecessor, so
    // every surviving interval has positive length.
    std::vector<SlopedLine> stack;
    for (const auto& l : distinct) {
        while (stack.size() >= 2 &&
               crossing_x(stack[stack.size() - 2], l) <=
                   crossing_x(stack[stack.size() - 2], stack.back())) {
            stack.pop_back();
        }
        stack.push_back(l);
    }

    UpperEnvelope env;
    env.lines = lines;
    env.pieces.resize(stack.size());
    for (std::size_t i = 0; i < stack.size(); ++i) {
        env.pieces[i].line_id = stack[i].id;
        if (i + 1 < stack.size()) {
            Rational bx = crossing_x(stack[i], stack[i + 1]);
            Point bp{bx, stack[i].slope * bx + stack[i].intercept};
            env.pieces[i].right = bp;
            env.pieces[i + 1].left = bp;
        }
    }
    return env;
}

Rational UpperEnvelope::height_at(const Rational& x) const {
    // Walk the pieces; sizes here are small and queries exact.
    for (const auto& p : pieces) {
        bool left_ok = !p.left || p.left->x <= x;
        bool right_ok = !p.right || x <= p.right->x;
        if (left_ok && right_ok) return lines[p.line_id].y_at(x);
    }
    throw std::logic_error("upper_envelope: no piece covers query x");
}

std::optional<EnvelopePiece> UpperEnvelope::piece_for_line(int line_id) const {
    for (const auto& p : pieces)
        if (p.line_id == line_id) return p;
    return std::nullopt;
}

} // namespace ic
