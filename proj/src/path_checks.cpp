#include "ic/path_checks.hpp"

#include <cmath>
#include <stdexcept>

namespace ic {

VertexPath::VertexPath(std::vector<Point> pts) : points(std::move(pts)) {
    if (points.size() < 2) throw std::invalid_argument("path: needs at least 2 vertices");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("path: repeated vertex");
    for (std::size_t i = 2; i < points.size(); ++i) {
        Point u = points[i - 1] - points[i - 2];
        Point v = points[i] - points[i - 1];
        if (cross(u, v) == 0 && dot(u, v) < 0)
            throw std::invalid_argument("path: consecutive segments double back");
    }
}

VertexPath VertexPath::reversed() const {
    return VertexPath(std::vector<Point>(points.rbegin(), points.rend()));
}

VertexPath VertexPath::prefix(std::size_t count) const {
    if (count < 2 || count > points.size())
        throw std::invalid_argument("path: bad prefix length");
    return VertexPath(std::vector<Point>(points.begin(), points.begin() + count));
}

bool is_increasing_chord(const VertexPath& path) {
    const auto& p = path.points;
    for (std::size_t e = 0; e + 1 < p.size(); ++e) {
        Point d = p[e + 1] - p[e];
        for (std::size_t q = e + 2; q < p.size(); ++q)
            if (dot(p[q] - p[e + 1], d) < 0) return false;
        for (std::size_t q = 0; q < e; ++q)
            if (dot(p[q] - p[e], d) > 0) return false;
    }
    return true;
}

bool is_self_approaching(const VertexPath& path, Direction dir) {
    const auto& p = path.points;
    if (dir == Direction::Backward) return is_self_approaching(path.reversed(), Direction::Forward);
    for (std::size_t e = 0; e + 1 < p.size(); ++e) {
        Point d = p[e + 1] - p[e];
        for (std::size_t q = e + 2; q < p.size(); ++q)
            if (dot(p[q] - p[e + 1], d) < 0) return false;
    }
    return true;
}

bool is_ic_extension(const VertexPath& base, const VertexPath& extended) {
    if (base.size() > extended.size())
        throw std::invalid_argument("ic_extension: base longer than extension");
    for (std::size_t i = 0; i < base.size(); ++i)
        if (base[i] != extended[i])
            throw std::invalid_argument("ic_extension: base is not a prefix");
    return is_increasing_chord(extended);
}

bool is_greedy_path(const VertexPath& path) {
    const auto& p = path.points;
    const Point& goal = p.back();
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (squared_distance(p[i], goal) <= squared_distance(p[i + 1], goal)) return false;
    return true;
}

double dilation(const VertexPath& path) {
    const auto& p = path.points;
    if (p.front() == p.back()) throw std::invalid_argument("dilation: closed path");
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        len += std::sqrt(to_double(squared_distance(p[i], p[i + 1])));
    return len / std::sqrt(to_double(squared_distance(p.front(), p.back())));
}

bool extension_keeps_increasing_chord(const std::vector<Point>& points) {
    // New edge (u, w) with w = points.back(): earlier vertices must sit
    // behind the perpendicular at u; w must sit ahead of every earlier
    // edge's perpendicular at that edge's head.
    std::size_t n = points.size();
    if (n < 2) return true;
    const Point& u = points[n - 2];
    const Point& w = points[n - 1];
    Point d = w - u;
    for (std::size_t q = 0; q + 2 < n; ++q)
        if (dot(points[q] - u, d) > 0) return false;
    for (std::size_t e = 0; e + 2 < n; ++e) {
        Point de = points[e + 1] - points[e];
        if (dot(w - points[e + 1], de) < 0) return false;
    }
    return true;
}

} // namespace ic
