#include "ic/drawing.hpp"

#include <algorithm>
#include <sstream>

namespace ic {

int Drawing::add_vertex(Point p, std::string label) {
    for (const auto& q : points_)
        if (q == p)
            throw InputError("drawing: duplicate vertex at " + point_to_string(p) +
                             (label.empty() ? "" : " (" + label + ")"));
    points_.push_back(std::move(p));
    labels_.push_back(std::move(label));
    adjacency_.emplace_back();
    return static_cast<int>(points_.size()) - 1;
}

void Drawing::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw InputError("drawing: edge endpoint out of range");
    if (u == v) throw InputError("drawing: self-loop rejected");
    if (u > v) std::swap(u, v);
    if (has_edge(u, v)) throw InputError("drawing: duplicate edge");
    edges_.emplace_back(u, v);
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

void Drawing::remove_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::find(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end()) throw InputError("drawing: removing a non-edge");
    edges_.erase(it);
    auto drop = [](std::vector<int>& adj, int w) {
        adj.erase(std::find(adj.begin(), adj.end(), w));
    };
    drop(adjacency_[u], v);
    drop(adjacency_[v], u);
}

void Drawing::set_label(int v, std::string label) { labels_.at(v) = std::move(label); }

int Drawing::find_label(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

std::vector<int> Drawing::find_label_prefix(const std::string& prefix) const {
    std::vector<int> out;
    for (int i = 0; i < vertex_count(); ++i)
        if (labels_[i].rfind(prefix, 0) == 0) out.push_back(i);
    return out;
}

bool Drawing::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges_.begin(), edges_.end(), std::make_pair(u, v)) != edges_.end();
}

RootedTree::RootedTree(int root_vertex, std::map<int, int> parent_map)
    : root(root_vertex), parent(std::move(parent_map)) {
    if (parent.count(root)) throw InputError("tree: root has a parent");
    for (const auto& [child, _] : parent) {
        // Walk to the root; a cycle or a dangling parent fails.
        int cur = child;
        std::size_t steps = 0;
        while (cur != root) {
            auto it = parent.find(cur);
            if (it == parent.end()) throw InputError("tree: vertex does not reach root");
            cur = it->second;
            if (++steps > parent.size()) throw InputError("tree: parent map has a cycle");
        }
    }
}

std::vector<int> RootedTree::vertices() const {
    std::vector<int> out{root};
    for (const auto& [child, _] : parent) out.push_back(child);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> RootedTree::path_from_root(int v) const {
    std::vector<int> rev;
    int cur = v;
    while (cur != root) {
        rev.push_back(cur);
        auto it = parent.find(cur);
        if (it == parent.end()) throw InputError("tree: vertex not in tree");
        cur = it->second;
    }
    rev.push_back(root);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

std::string serialize_drawing(const Drawing& d) {
    std::ostringstream out;
    out << "vertices " << d.vertex_count() << "\n";
    for (int i = 0; i < d.vertex_count(); ++i) {
        out << i << " " << rat_to_string(d.point(i).x) << " " << rat_to_string(d.point(i).y);
        if (!d.label(i).empty()) out << " " << d.label(i);
        out << "\n";
    }
    out << "edges " << d.edge_count() << "\n";
    for (const auto& [u, v] : d.edges()) out << u << " " << v << "\n";
    return out.str();
}

Drawing parse_drawing(const std::string& text) {
    std::istringstream in(text);
    std::string kw;
    int n = 0;
    if (!(in >> kw >> n) || kw != "vertices" || n < 0)
        throw InputError("drawing file: expected 'vertices N' header");
    Drawing d;
    for (int i = 0; i < n; ++i) {
        int id;
        std::string xs, ys;
        if (!(in >> id >> xs >> ys)) throw InputError("drawing file: truncated vertex list");
        if (id != i) throw InputError("drawing file: vertex ids must be 0..N-1 in order");
        std::string rest;
        std::getline(in, rest);
        std::string label;
        std::istringstream restin(rest);
        restin >> label; // empty if no role tag
        d.add_vertex(Point{rat_from_string(xs), rat_from_string(ys)}, label);
    }
    int m = 0;
    if (!(in >> kw >> m) || kw != "edges" || m < 0)
        throw InputError("drawing file: expected 'edges M' header");
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw InputError("drawing file: truncated edge list");
        d.add_edge(u, v);
    }
    return d;
}

std::string serialize_tree(const RootedTree& t) {
    std::ostringstream out;
    out << "root " << t.root << "\n";
    for (const auto& [child, par] : t.parent) out << child << " " << par << "\n";
    return out.str();
}

RootedTree parse_tree(const std::string& text) {
    std::istringstream in(text);
    std::string kw;
    int root;
    if (!(in >> kw >> root) || kw != "root") throw InputError("tree file: expected 'root R' header");
    std::map<int, int> parent;
    int c, p;
    while (in >> c >> p) {
        if (parent.count(c)) throw InputError("tree file: vertex listed twice");
        parent[c] = p;
    }
    return RootedTree(root, std::move(parent));
}

} // namespace ic
