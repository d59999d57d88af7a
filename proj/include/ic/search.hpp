#pragma once

#include "ic/drawing.hpp"
#include "ic/path_checks.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ic {

// Exceeding the node budget is a distinct outcome, never reported as
// absence.
enum class SearchStatus { Found, Absent, Unknown };

struct SearchBudget {
    std::uint64_t max_expansions = 10'000'000;
};

inline constexpr std::uint64_t kDefaultTreeBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultPathBudget = 1'000'000;

struct PathSearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::vector<int> path; // vertex indices, only when Found
    std::uint64_t expansions = 0;
};

struct TreeSearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<RootedTree> tree;
    std::uint64_t expansions = 0;
};

/// Exhaustive backtracking over simple s-t paths, pruning every prefix
/// that stops being increasing-chord. Complete within budget.
PathSearchResult find_ic_path(const Drawing& d, int s, int t,
                              SearchBudget budget = {kDefaultPathBudget});

/// Exhaustive search for a spanning tree whose root-to-vertex paths are
/// all increasing-chord. Grows the tree one frontier edge at a time;
/// branches enumerate each spanning tree at most once, and an edge whose
/// root path fails the check is excluded permanently (the path to an
/// attached vertex never changes afterwards).
TreeSearchResult find_ic_rooted_spanning_tree(const Drawing& d, int r,
                                              SearchBudget budget = {kDefaultTreeBudget});

/// True iff `t` spans the drawing and every root path is increasing-chord.
/// Trees using non-edges of `d` are rejected with an exception.
bool verify_ic_rooted_tree(const Drawing& d, const RootedTree& t);

/// All-pairs check for a drawing that is itself a tree.
bool verify_ic_tree_drawing(const Drawing& d);

/// Path through the listed drawing vertices.
VertexPath path_from_indices(const Drawing& d, const std::vector<int>& idx);

} // namespace ic
