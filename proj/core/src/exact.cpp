#include "hopcolor/exact.hpp"

#include <algorithm>
#include <string>

namespace hopcolor {

namespace {

struct Searcher {
    const std::vector<std::vector<int>>& adj;  // power-graph adjacency
    ColoringMode mode;
    const Tree* tree;
    std::uint64_t budget;
    std::uint64_t explored = 0;
    int n;
    int k = 0;  // colors allowed in the current decision problem
    std::vector<int> color;
    std::vector<std::vector<int>> children;
    bool out_of_budget = false;

    Searcher(const std::vector<std::vector<int>>& a, ColoringMode m, const Tree* t,
             std::uint64_t b)
        : adj(a), mode(m), tree(t), budget(b), n(static_cast<int>(a.size())),
          color(a.size(), -1) {
        if (mode == ColoringMode::strategic) {
            children.resize(n);
            for (int v = 0; v < n; ++v)
                if (v != tree->root) children[tree->parent[v]].push_back(v);
        }
    }

    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        std::vector<bool> used(k, false);
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            std::fill(used.begin(), used.end(), false);
            int sat = 0;
            for (int w : adj[v])
                if (color[w] != -1 && !used[color[w]]) {
                    used[color[w]] = true;
                    ++sat;
                }
            int deg = static_cast<int>(adj[v].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool allowed(int v, int c) const {
        for (int w : adj[v])
            if (color[w] == c) return false;
        if (mode == ColoringMode::strategic) {
            if (v != tree->root && color[tree->parent[v]] != -1 && c <= color[tree->parent[v]])
                return false;
            for (int w : children[v])
                if (color[w] != -1 && color[w] <= c) return false;
        }
        return true;
    }

    // Can the k-coloring problem be satisfied from the current partial state?
    bool solve(int colored_count) {
        if (explored >= budget) {
            out_of_budget = true;
            return false;
        }
        ++explored;
        if (colored_count == n) return true;
        int v = pick_vertex();
        int max_used = -1;
        for (int w = 0; w < n; ++w) max_used = std::max(max_used, color[w]);
        // In general mode unused colors are interchangeable, so only the
        // first fresh one is tried. Strategic color values are ordered by
        // Constraint 1 and every color must be considered.
        int limit = mode == ColoringMode::general ? std::min(max_used + 1, k - 1) : k - 1;
        for (int c = 0; c <= limit; ++c) {
            if (!allowed(v, c)) continue;
            color[v] = c;
            if (solve(colored_count + 1)) return true;
            color[v] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

std::vector<std::vector<int>> power_adjacency(const Graph& g, int h) {
    Graph p = power_graph(g, h);
    std::vector<std::vector<int>> adj(p.node_count());
    for (int v = 0; v < p.node_count(); ++v) adj[v] = p.neighbors(v);
    return adj;
}

int greedy_clique_bound(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return adj[a].size() != adj[b].size() ? adj[a].size() > adj[b].size() : a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
        bool fits = std::all_of(clique.begin(), clique.end(), [&](int w) {
            return std::binary_search(adj[v].begin(), adj[v].end(), w);
        });
        if (fits) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

// DSATUR greedy upper bound for general mode.
Coloring greedy_general(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    Coloring c(n);
    std::vector<int> color(n, -1);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            std::vector<bool> used(n, false);
            int sat = 0;
            for (int w : adj[v])
                if (color[w] != -1 && !used[color[w]]) {
                    used[color[w]] = true;
                    ++sat;
                }
            int deg = static_cast<int>(adj[v].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        std::vector<bool> used(n + 1, false);
        for (int w : adj[best])
            if (color[w] != -1) used[color[w]] = true;
        int pick = 0;
        while (used[pick]) ++pick;
        color[best] = pick;
    }
    for (int v = 0; v < n; ++v) c.set(v, color[v]);
    return c;
}

// Tree-order greedy for strategic mode: parents first, each node taking the
// smallest conflict-free color above its parent's; then compacted to
// 0..k-1 by a monotone relabel, which preserves Constraint 1.
Coloring greedy_strategic(const std::vector<std::vector<int>>& adj, const Tree& tree) {
    int n = static_cast<int>(adj.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = tree.depth_of(a), db = tree.depth_of(b);
        return da != db ? da < db : a < b;
    });
    std::vector<int> color(n, -1);
    for (int v : order) {
        int floor = v == tree.root ? 0 : color[tree.parent[v]] + 1;
        std::vector<bool> used(n + floor + 1, false);
        for (int w : adj[v])
            if (color[w] != -1) used[color[w]] = true;
        int pick = floor;
        while (used[pick]) ++pick;
        color[v] = pick;
    }
    std::vector<int> values(color);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Coloring c(n);
    for (int v = 0; v < n; ++v)
        c.set(v, static_cast<int>(std::lower_bound(values.begin(), values.end(), color[v]) -
                                  values.begin()));
    return c;
}

}  // namespace

SolveResult exact_chromatic(const Graph& g, int h, ColoringMode mode, const Tree* tree,
                            std::uint64_t budget) {
    if (g.node_count() == 0) throw Error::invalid("chromatic number of an empty graph");
    if (h < 1) throw Error::invalid("hop count h must be >= 1");
    if (mode == ColoringMode::strategic) {
        if (tree == nullptr) throw Error::invalid("strategic mode needs a spanning tree");
        tree->validate(g.node_count());
    }

    auto adj = power_adjacency(g, h);
    Coloring best = mode == ColoringMode::general ? greedy_general(adj)
                                                  : greedy_strategic(adj, *tree);
    int ub = best.count_colors();
    int lb = std::max(1, greedy_clique_bound(adj));
    if (mode == ColoringMode::strategic) lb = std::max(lb, tree->depth() + 1);

    SolveResult result;
    result.witness = best;
    result.chromatic = ub;
    for (int k = lb; k < ub; ++k) {
        Searcher s(adj, mode, tree, budget - std::min<std::uint64_t>(budget, result.nodes_explored));
        bool sat = s.solve(0);
        result.nodes_explored += s.explored;
        if (s.out_of_budget) {
            result.budget_exhausted = true;  // chromatic stays an upper bound
            return result;
        }
        if (sat) {
            Coloring witness(g.node_count());
            for (int v = 0; v < g.node_count(); ++v) witness.set(v, s.color[v]);
            result.chromatic = k;
            result.witness = witness;
            return result;
        }
    }
    return result;
}

Coloring firstfit(const Graph& g, int h, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.node_count())
        throw Error::invalid("order must be a permutation of the graph's nodes");
    std::vector<bool> seen(g.node_count(), false);
    for (int v : order) {
        if (v < 0 || v >= g.node_count() || seen[v])
            throw Error::invalid("order must be a permutation of the graph's nodes");
        seen[v] = true;
    }
    Coloring c(g.node_count());
    for (int v : order) {
        std::vector<bool> used(g.node_count() + 1, false);
        for (int w : khop_neighbors(g, v, h))
            if (c.has(w)) used[c.get(w)] = true;
        int pick = 0;
        while (used[pick]) ++pick;
        c.set(v, pick);
    }
    return c;
}

}  // namespace hopcolor
