#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hopcolor/graph.hpp"

namespace hopcolor {

enum class ColoringMode { general, strategic };

struct SolveResult {
    int chromatic = 0;        // minimal colors; an upper bound only if budget ran out
    Coloring witness;         // valid coloring with exactly `chromatic` colors
    std::uint64_t nodes_explored = 0;
    bool budget_exhausted = false;
};

/// Exact h-hop chromatic number by branch and bound on the power graph:
/// vertices picked by descending saturation, then descending power-graph
/// degree, then smallest id; greedy clique lower bound, greedy upper bound.
/// In strategic mode every node's color must strictly exceed its tree
/// parent's, and branches violating that are pruned.
///
/// `budget` caps the number of search-node expansions (reproducible across
/// machines, unlike wall clock). When it runs out the result carries the
/// best coloring found with budget_exhausted set: an upper bound, never a
/// silently wrong answer.
SolveResult exact_chromatic(const Graph& g, int h, ColoringMode mode = ColoringMode::general,
                            const Tree* tree = nullptr,
                            std::uint64_t budget = 50'000'000);

/// Greedy coloring of the h-th power graph in the given node order: each
/// node takes the first color unused among its already-colored conflict
/// neighbors. `order` must be a permutation of the nodes.
Coloring firstfit(const Graph& g, int h, const std::vector<int>& order);

}  // namespace hopcolor
