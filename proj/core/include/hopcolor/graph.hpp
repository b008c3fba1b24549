#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hopcolor/error.hpp"

namespace hopcolor {

/// Undirected simple graph over dense node ids 0..n-1.
///
/// Adjacency lists are kept sorted so iteration order is deterministic.
/// Edges are symmetric and self-loops are rejected; adding an existing
/// edge is a no-op. Instances are immutable by convention once built,
/// and all free functions below are pure, so graphs can be shared
/// freely across threads.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int node_count);

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    void remove_edge(int u, int v);

    const std::vector<int>& neighbors(int u) const;
    int degree(int u) const { return static_cast<int>(neighbors(u).size()); }

    /// All edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

    void require_node(int u) const;

  private:
    std::vector<std::vector<int>> adjacency_;
    int edge_count_ = 0;
};

/// Partial mapping node -> color. Colors are natural integers from 0;
/// kNone marks an uncolored node.
class Coloring {
  public:
    static constexpr int kNone = -1;

    Coloring() = default;
    explicit Coloring(int node_count) : colors_(node_count, kNone) {}

    int node_count() const { return static_cast<int>(colors_.size()); }
    bool has(int v) const { return colors_.at(v) != kNone; }
    int get(int v) const { return colors_.at(v); }
    void set(int v, int color);
    void unset(int v) { colors_.at(v) = kNone; }

    bool total() const;
    int colored_count() const;

    /// Number of distinct colors in use.
    int count_colors() const;
    std::vector<int> used_colors() const;

    bool operator==(const Coloring& other) const = default;

  private:
    std::vector<int> colors_;
};

/// Rooted spanning tree given by parent links; parent[root] == -1.
struct Tree {
    int root = 0;
    std::vector<int> parent;

    int node_count() const { return static_cast<int>(parent.size()); }
    /// Throws unless the parent links form a tree spanning 0..n-1 rooted
    /// at `root` (acyclic, every node reaches the root).
    void validate(int node_count) const;
    int depth() const;
    int depth_of(int v) const;
};

/// Nodes at graph distance 1..h from u (u excluded), sorted ascending.
/// This is the conflict set N(u): the nodes that cannot share u's color.
std::vector<int> khop_neighbors(const Graph& g, int u, int h);

/// Graph on the same nodes with an edge between every pair at distance <= h.
Graph power_graph(const Graph& g, int h);

/// First conflicting pair (u, v), u < v, in lexicographic order, among
/// pairs at distance <= h that share a color. Uncolored nodes are ignored,
/// so this also works on partial colorings.
std::optional<std::pair<int, int>> find_coloring_violation(const Graph& g, const Coloring& c, int h);

/// True iff no two nodes within h hops share a color. The coloring must be
/// total; a partial coloring throws (so "incomplete" is never confused with
/// "invalid").
bool is_valid_coloring(const Graph& g, const Coloring& c, int h);

/// Valid h-hop coloring that additionally gives every non-root node a color
/// strictly higher than its tree parent's.
bool is_valid_strategic(const Graph& g, const Coloring& c, int h, const Tree& tree);

}  // namespace hopcolor
