#include "hopcolor/topology.hpp"

#include <cmath>
#include <numeric>
#include <queue>

namespace hopcolor {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw Error::invalid("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw Error::invalid("empty rational literal");
    auto parse_ll = [&](const std::string& s) {
        size_t pos = 0;
        long long v;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw Error::invalid("bad rational literal '" + text + "'");
        }
        if (pos != s.size()) throw Error::invalid("bad rational literal '" + text + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return Rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_ll(text));
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) return Rational(parse_ll(text.substr(0, dot)));
    long long den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::string digits = text.substr(0, dot) + frac;  // sign travels with the digits
    return Rational(parse_ll(digits), den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    // decimal expansion terminates iff den = 2^a * 5^b
    long long d = den;
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    if (d != 1) return std::to_string(num) + "/" + std::to_string(den);
    long long ip = num / den;
    long long rem = (num < 0 ? -num : num) % den;
    std::string frac;
    long long r = rem;
    long long scale = den;
    while (r != 0) {
        r *= 10;
        frac += static_cast<char>('0' + r / scale);
        r %= scale;
    }
    std::string sign = (num < 0 && ip == 0) ? "-" : "";
    return sign + std::to_string(ip) + "." + frac;
}

Grid build_grid(const GridSpec& spec) {
    if (spec.width < 1 || spec.height < 1)
        throw Error::invalid("grid dimensions must be >= 1");
    if (spec.range < Rational(1))
        throw Error::invalid("transmission range " + spec.range.str() +
                             " is below the grid step: the grid would be disconnected");

    Grid grid;
    grid.spec = spec;
    grid.graph = Graph(spec.node_count());
    grid.coords.resize(spec.node_count());
    for (int y = 0; y < spec.height; ++y)
        for (int x = 0; x < spec.width; ++x) grid.coords[y * spec.width + x] = {x, y};

    // dx^2 + dy^2 <= (num/den)^2, cross-multiplied to stay in integers
    const long long num2 = spec.range.num * spec.range.num;
    const long long den2 = spec.range.den * spec.range.den;
    const int reach = static_cast<int>(spec.range.num / spec.range.den) + 1;
    for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) {
            int u = y * spec.width + x;
            for (int dy = 0; dy <= reach; ++dy) {
                for (int dx = -reach; dx <= reach; ++dx) {
                    if (dy == 0 && dx <= 0) continue;  // each pair once
                    long long d2 = 1LL * dx * dx + 1LL * dy * dy;
                    if (d2 * den2 > num2) continue;
                    int nx = x + dx, ny = y + dy;
                    if (nx < 0 || nx >= spec.width || ny >= spec.height) continue;
                    grid.graph.add_edge(u, ny * spec.width + nx);
                }
            }
        }
    }
    return grid;
}

double average_density(const Graph& g) {
    if (g.node_count() == 0) throw Error::invalid("density of an empty graph");
    long long total = 0;
    for (int v = 0; v < g.node_count(); ++v) total += g.degree(v);
    return static_cast<double>(total) / g.node_count();
}

Tree build_gathering_tree(const Graph& g, int root) {
    g.require_node(root);
    std::vector<int> dist(g.node_count(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    Tree tree;
    tree.root = root;
    tree.parent.assign(g.node_count(), -1);
    for (int v = 0; v < g.node_count(); ++v) {
        if (v == root) continue;
        if (dist[v] == -1)
            throw Error::invalid("graph is disconnected: node " + std::to_string(v) +
                                 " is unreachable from root " + std::to_string(root));
        // neighbors are sorted, so the first one a level up is the smallest id
        for (int u : g.neighbors(v))
            if (dist[u] == dist[v] - 1) {
                tree.parent[v] = u;
                break;
            }
    }
    return tree;
}

int interior_degree(const Rational& range) {
    if (range < Rational(1)) throw Error::invalid("range must be >= 1");
    const long long num2 = range.num * range.num;
    const long long den2 = range.den * range.den;
    const int reach = static_cast<int>(range.num / range.den) + 1;
    int count = 0;
    for (int dx = -reach; dx <= reach; ++dx)
        for (int dy = -reach; dy <= reach; ++dy) {
            if (dx == 0 && dy == 0) continue;
            long long d2 = 1LL * dx * dx + 1LL * dy * dy;
            if (d2 * den2 <= num2) ++count;
        }
    return count;
}

}  // namespace hopcolor
