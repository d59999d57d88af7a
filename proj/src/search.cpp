#include "ic/search.hpp"

#include <algorithm>
#include <set>

namespace ic {

VertexPath path_from_indices(const Drawing& d, const std::vector<int>& idx) {
    std::vector<Point> pts;
    pts.reserve(idx.size());
    for (int v : idx) pts.push_back(d.point(v));
    return VertexPath(std::move(pts));
}

namespace {

struct PathSearcher {
    const Drawing& d;
    int target;
    std::uint64_t budget;
    std::uint64_t expansions = 0;
    std::vector<int> path;
    std::vector<Point> pts;
    std::vector<char> on_path;
    bool exhausted = false;

    PathSearcher(const Drawing& dr, int t, std::uint64_t b)
        : d(dr), target(t), budget(b), on_path(dr.vertex_count(), 0) {}

    bool dfs(int v) {
        if (++expansions > budget) {
            exhausted = true;
            return false;
        }
        if (v == target) return true;
        // Deterministic order: closer to the target first, then index.
        std::vector<int> nbrs = d.neighbors(v);
        std::sort(nbrs.begin(), nbrs.end(), [&](int a, int b) {
            Rational da = squared_distance(d.point(a), d.point(target));
            Rational db = squared_distance(d.point(b), d.point(target));
            if (da != db) return da < db;
            return a < b;
        });
        for (int w : nbrs) {
            if (on_path[w]) continue;
            pts.push_back(d.point(w));
            if (extension_keeps_increasing_chord(pts)) {
                path.push_back(w);
                on_path[w] = 1;
                if (dfs(w)) return true;
                on_path[w] = 0;
                path.pop_back();
                if (exhausted) { pts.pop_back(); return false; }
            }
            pts.pop_back();
        }
        return false;
    }
};

} // namespace

PathSearchResult find_ic_path(const Drawing& d, int s, int t, SearchBudget budget) {
    if (s == t) throw InputError("find_ic_path: s and t coincide");
    if (s < 0 || t < 0 || s >= d.vertex_count() || t >= d.vertex_count())
        throw InputError("find_ic_path: vertex out of range");
    PathSearcher searcher(d, t, budget.max_expansions);
    searcher.path.push_back(s);
    searcher.pts.push_back(d.point(s));
    searcher.on_path[s] = 1;
    PathSearchResult res;
    if (searcher.dfs(s)) {
        res.status = SearchStatus::Found;
        res.path = searcher.path;
    } else {
        res.status = searcher.exhausted ? SearchStatus::Unknown : SearchStatus::Absent;
    }
    res.expansions = searcher.expansions;
    return res;
}

namespace {

struct TreeSearcher {
    const Drawing& d;
    int root;
    std::uint64_t budget;
    std::uint64_t expansions = 0;
    bool exhausted = false;

    std::vector<int> parent;                 // -1 = not in tree
    std::vector<std::vector<int>> root_path; // filled for tree vertices
    int in_tree = 0;

    explicit TreeSearcher(const Drawing& dr, int r, std::uint64_t b)
        : d(dr), root(r), budget(b), parent(dr.vertex_count(), -1),
          root_path(dr.vertex_count()) {}

    bool attach_is_ic(int u, int v) const {
        std::vector<Point> pts;
        pts.reserve(root_path[u].size() + 1);
        for (int w : root_path[u]) pts.push_back(d.point(w));
        pts.push_back(d.point(v));
        // The prefix is already verified; check the conditions the new
        // vertex participates in.
        std::size_t n = pts.size();
        const Point& a = pts[n - 2];
        const Point& b = pts[n - 1];
        Point dd = b - a;
        for (std::size_t q = 0; q + 2 < n; ++q)
            if (dot(pts[q] - a, dd) > 0) return false;
        for (std::size_t e = 0; e + 2 < n; ++e) {
            Point de = pts[e + 1] - pts[e];
            if (dot(b - pts[e + 1], de) < 0) return false;
        }
        return true;
    }

    // Gabow-Myers style enumeration: the i-th branch commits to frontier
    // edge e_i and forbids e_1..e_{i-1}; IC-failing frontier edges are
    // forbidden permanently because the root path of an attached vertex
    // never changes.
    bool search(std::set<std::pair<int, int>>& forbidden, std::optional<RootedTree>& out) {
        if (++expansions > budget) {
            exhausted = true;
            return false;
        }
        if (in_tree == d.vertex_count()) {
            std::map<int, int> pm;
            for (int v = 0; v < d.vertex_count(); ++v)
                if (v != root) pm[v] = parent[v];
            out.emplace(root, std::move(pm));
            return true;
        }

        std::vector<std::pair<int, int>> valid;
        std::vector<std::pair<int, int>> invalid;
        for (const auto& [a, b] : d.edges()) {
            int u = -1, v = -1;
            bool a_in = parent[a] != -1 || a == root;
            bool b_in = parent[b] != -1 || b == root;
            if (a_in == b_in) continue;
            u = a_in ? a : b;
            v = a_in ? b : a;
            if (forbidden.count({u, v})) continue;
            if (attach_is_ic(u, v))
                valid.emplace_back(u, v);
            else
                invalid.emplace_back(u, v);
        }
        if (valid.empty()) return false;

        // Attach nearer-to-root vertices first; the reduction's witness
        // trees are layered by distance, so this order finds them fast.
        std::sort(valid.begin(), valid.end(), [&](const auto& e1, const auto& e2) {
            Rational d1 = squared_distance(d.point(e1.second), d.point(root));
            Rational d2 = squared_distance(d.point(e2.second), d.point(root));
            if (d1 != d2) return d1 < d2;
            return e1 < e2;
        });

        std::vector<std::pair<int, int>> added_forbidden(invalid);
        for (const auto& e : added_forbidden) forbidden.insert(e);
        bool found = false;
        for (std::size_t i = 0; i < valid.size() && !found && !exhausted; ++i) {
            auto [u, v] = valid[i];
            parent[v] = u;
            root_path[v] = root_path[u];
            root_path[v].push_back(v);
            ++in_tree;
            found = search(forbidden, out);
            --in_tree;
            root_path[v].clear();
            parent[v] = -1;
            if (!found && !exhausted) {
                forbidden.insert(valid[i]);
                added_forbidden.push_back(valid[i]);
            }
        }
        for (const auto& e : added_forbidden) forbidden.erase(e);
        return found;
    }
};

} // namespace

TreeSearchResult find_ic_rooted_spanning_tree(const Drawing& d, int r, SearchBudget budget) {
    if (r < 0 || r >= d.vertex_count()) throw InputError("find_ic_rooted_spanning_tree: bad root");
    TreeSearcher searcher(d, r, budget.max_expansions);
    searcher.root_path[r] = {r};
    searcher.in_tree = 1;
    TreeSearchResult res;
    std::set<std::pair<int, int>> forbidden;
    std::optional<RootedTree> out;
    if (d.vertex_count() == 1) {
        res.status = SearchStatus::Found;
        res.tree.emplace(r, std::map<int, int>{});
        res.expansions = 0;
        return res;
    }
    bool found = searcher.search(forbidden, out);
    res.expansions = searcher.expansions;
    if (found) {
        res.status = SearchStatus::Found;
        res.tree = std::move(out);
    } else {
        res.status = searcher.exhausted ? SearchStatus::Unknown : SearchStatus::Absent;
    }
    return res;
}

bool verify_ic_rooted_tree(const Drawing& d, const RootedTree& t) {
    for (const auto& [child, par] : t.parent) {
        if (child < 0 || child >= d.vertex_count() || par < 0 || par >= d.vertex_count())
            throw InputError("verify_ic_rooted_tree: vertex out of range");
        if (!d.has_edge(child, par))
            throw InputError("verify_ic_rooted_tree: tree uses a non-edge of the drawing");
    }
    if (t.root < 0 || t.root >= d.vertex_count())
        throw InputError("verify_ic_rooted_tree: root out of range");
    if (static_cast<int>(t.parent.size()) + 1 != d.vertex_count()) return false; // not spanning
    for (const auto& [child, _] : t.parent) {
        auto idx = t.path_from_root(child);
        if (!is_increasing_chord(path_from_indices(d, idx))) return false;
    }
    return true;
}

bool verify_ic_tree_drawing(const Drawing& d) {
    int n = d.vertex_count();
    if (n < 1) throw InputError("verify_ic_tree_drawing: empty drawing");
    if (d.edge_count() != n - 1) throw InputError("verify_ic_tree_drawing: not a tree");
    // Connectivity via BFS from 0.
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : d.neighbors(v))
            if (!seen[w]) { seen[w] = 1; ++count; stack.push_back(w); }
    }
    if (count != n) throw InputError("verify_ic_tree_drawing: not a tree (disconnected)");
    if (n == 1) return true;

    // Unique tree paths for all pairs, via BFS parents per source.
    for (int s = 0; s < n; ++s) {
        std::vector<int> par(n, -2);
        par[s] = -1;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : d.neighbors(v))
                if (par[w] == -2) { par[w] = v; queue.push_back(w); }
        }
        for (int v = s + 1; v < n; ++v) {
            std::vector<int> rev;
            for (int cur = v; cur != -1; cur = par[cur]) rev.push_back(cur);
            std::reverse(rev.begin(), rev.end());
            if (!is_increasing_chord(path_from_indices(d, rev))) return false;
        }
    }
    return true;
}

} // namespace ic
