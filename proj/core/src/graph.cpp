#include "hopcolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace hopcolor {

Graph::Graph(int node_count) {
    if (node_count < 0) throw Error::invalid("graph node count must be >= 0");
    adjacency_.resize(node_count);
}

void Graph::require_node(int u) const {
    if (u < 0 || u >= node_count())
        throw Error::invalid("unknown node id " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
    require_node(u);
    require_node(v);
    if (u == v) throw Error::invalid("self-loop on node " + std::to_string(u));
    auto& nu = adjacency_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;  // already present
    nu.insert(it, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    require_node(u);
    require_node(v);
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

void Graph::remove_edge(int u, int v) {
    require_node(u);
    require_node(v);
    auto& nu = adjacency_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it == nu.end() || *it != v) return;
    nu.erase(it);
    auto& nv = adjacency_[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
}

const std::vector<int>& Graph::neighbors(int u) const {
    require_node(u);
    return adjacency_[u];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < node_count(); ++u)
        for (int v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Coloring::set(int v, int color) {
    if (color < 0) throw Error::invalid("colors are natural integers starting at 0");
    colors_.at(v) = color;
}

bool Coloring::total() const {
    return std::none_of(colors_.begin(), colors_.end(), [](int c) { return c == kNone; });
}

int Coloring::colored_count() const {
    return static_cast<int>(std::count_if(colors_.begin(), colors_.end(),
                                          [](int c) { return c != kNone; }));
}

std::vector<int> Coloring::used_colors() const {
    std::vector<int> used;
    for (int c : colors_)
        if (c != kNone) used.push_back(c);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return used;
}

int Coloring::count_colors() const { return static_cast<int>(used_colors().size()); }

void Tree::validate(int n) const {
    if (node_count() != n)
        throw Error::invalid("tree does not span the graph: has " +
                             std::to_string(node_count()) + " nodes, graph has " +
                             std::to_string(n));
    if (root < 0 || root >= n || parent[root] != -1)
        throw Error::invalid("tree root must be a node with parent -1");
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        int hops = 0;
        int cur = v;
        while (cur != root) {
            if (cur < 0 || cur >= n || parent[cur] == -1 || ++hops > n)
                throw Error::invalid("tree node " + std::to_string(v) +
                                     " does not reach the root");
            cur = parent[cur];
        }
    }
}

int Tree::depth_of(int v) const {
    int d = 0;
    while (v != root) {
        v = parent.at(v);
        ++d;
    }
    return d;
}

int Tree::depth() const {
    int best = 0;
    for (int v = 0; v < node_count(); ++v) best = std::max(best, depth_of(v));
    return best;
}

namespace {

// BFS truncated at depth h; calls visit(v, dist) for every reached v != u.
template <typename Visit>
void bounded_bfs(const Graph& g, int u, int h, Visit&& visit) {
    std::vector<int> dist(g.node_count(), -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (dist[x] == h) continue;
        for (int y : g.neighbors(x)) {
            if (dist[y] != -1) continue;
            dist[y] = dist[x] + 1;
            visit(y, dist[y]);
            q.push(y);
        }
    }
}

}  // namespace

std::vector<int> khop_neighbors(const Graph& g, int u, int h) {
    g.require_node(u);
    if (h < 1) throw Error::invalid("hop count h must be >= 1");
    std::vector<int> out;
    bounded_bfs(g, u, h, [&](int v, int) { out.push_back(v); });
    std::sort(out.begin(), out.end());
    return out;
}

Graph power_graph(const Graph& g, int h) {
    if (h < 1) throw Error::invalid("hop count h must be >= 1");
    Graph p(g.node_count());
    for (int u = 0; u < g.node_count(); ++u)
        bounded_bfs(g, u, h, [&](int v, int) {
            if (u < v) p.add_edge(u, v);
        });
    return p;
}

std::optional<std::pair<int, int>> find_coloring_violation(const Graph& g, const Coloring& c,
                                                           int h) {
    if (c.node_count() != g.node_count())
        throw Error::invalid("coloring covers " + std::to_string(c.node_count()) +
                             " nodes, graph has " + std::to_string(g.node_count()));
    if (h < 1) throw Error::invalid("hop count h must be >= 1");
    for (int u = 0; u < g.node_count(); ++u) {
        if (!c.has(u)) continue;
        std::optional<int> hit;
        bounded_bfs(g, u, h, [&](int v, int) {
            if (v > u && c.has(v) && c.get(v) == c.get(u) && (!hit || v < *hit)) hit = v;
        });
        if (hit) return std::make_pair(u, *hit);
    }
    return std::nullopt;
}

bool is_valid_coloring(const Graph& g, const Coloring& c, int h) {
    if (c.node_count() != g.node_count() || !c.total())
        throw Error::invalid("incomplete coloring: " +
                             std::to_string(c.node_count() == g.node_count() ? c.colored_count() : 0) +
                             " of " + std::to_string(g.node_count()) + " nodes colored");
    return !find_coloring_violation(g, c, h).has_value();
}

bool is_valid_strategic(const Graph& g, const Coloring& c, int h, const Tree& tree) {
    tree.validate(g.node_count());
    if (!is_valid_coloring(g, c, h)) return false;
    for (int v = 0; v < g.node_count(); ++v) {
        if (v == tree.root) continue;
        if (c.get(v) <= c.get(tree.parent[v])) return false;
    }
    return true;
}

}  // namespace hopcolor
