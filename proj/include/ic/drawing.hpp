#pragma once

#include "ic/errors.hpp"
#include "ic/geometry.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ic {

// Straight-line drawing: exact vertex coordinates, undirected edges,
// optional role tags (root, s, t, p:x:1, lit:x:1:c:2, anchor:..., peak:1,
// qpt:..., sseg:..., terminal:i). Tags are plain strings; the reduction
// modules document their grammar where they emit them.
class Drawing {
public:
    int add_vertex(Point p, std::string label = "");
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void set_label(int v, std::string label);

    int vertex_count() const { return static_cast<int>(points_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Point& point(int v) const { return points_.at(v); }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }

    const std::string& label(int v) const { return labels_.at(v); }
    /// First vertex carrying exactly this label, or -1.
    int find_label(const std::string& label) const;
    /// All vertices whose label starts with the given prefix.
    std::vector<int> find_label_prefix(const std::string& prefix) const;

    bool has_edge(int u, int v) const;

private:
    std::vector<Point> points_;
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_; // stored with u < v
    std::vector<std::vector<int>> adjacency_;
};

// Rooted tree as a partial parent map over a host drawing's vertices.
// Construction validates acyclicity and that every mapped vertex
// reaches the root.
struct RootedTree {
    int root = -1;
    std::map<int, int> parent; // child -> parent; root not mapped

    RootedTree(int root_vertex, std::map<int, int> parent_map);

    /// Vertices of the tree (root plus every mapped child).
    std::vector<int> vertices() const;
    /// Root-to-v vertex index sequence.
    std::vector<int> path_from_root(int v) const;
    bool contains(int v) const { return v == root || parent.count(v) > 0; }
};

// --------------------------------------------------------------------
// Drawing file format:
//   vertices N
//   <id> <x as num/den> <y as num/den> [role]     (N lines, ids 0..N-1)
//   edges M
//   <u> <v>                                        (M lines)
// Rationals are serialized in lowest terms, always with the slash.
// --------------------------------------------------------------------

std::string serialize_drawing(const Drawing& d);
Drawing parse_drawing(const std::string& text);

// Tree file format: "root R" then one "child parent" line per edge.
std::string serialize_tree(const RootedTree& t);
RootedTree parse_tree(const std::string& text);

} // namespace ic
