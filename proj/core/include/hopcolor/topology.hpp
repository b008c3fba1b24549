#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopcolor/graph.hpp"

namespace hopcolor {

/// Exact rational, used for the transmission range R in grid-step units.
/// R=1.5 and R=2.5 sit next to lattice distances (sqrt 2, sqrt 5), so the
/// disk test d(u,v) <= R is evaluated in integers and must not go through
/// floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    Rational(long long n) : Rational(n, 1) {}  // NOLINT: implicit by design

    /// Accepts "2", "1.5", "0.75" or "3/2".
    static Rational parse(const std::string& text);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// Decimal form when it terminates ("1.5"), else "num/den".
    std::string str() const;

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
};

struct NodeCoord {
    int x = 0;  // column
    int y = 0;  // row
    bool operator==(const NodeCoord&) const = default;
};

struct GridSpec {
    int width = 1;
    int height = 1;
    Rational range{1};

    int node_count() const { return width * height; }
};

/// A grid topology: the unit-disk graph, node coordinates, and the spec
/// that produced them. Node id = y * width + x (row-major).
struct Grid {
    Graph graph;
    std::vector<NodeCoord> coords;
    GridSpec spec;
};

/// Unit-disk graph over the grid points: edge (u,v) iff the Euclidean
/// distance between them is <= range, compared exactly in integers.
/// range < 1 is rejected (the grid would be disconnected).
Grid build_grid(const GridSpec& spec);

/// Average number of neighbors per node.
double average_density(const Graph& g);

/// Breadth-first spanning tree rooted at `root`; among candidate parents at
/// the same depth the smallest node id wins. Throws if some node is
/// unreachable, naming it.
Tree build_gathering_tree(const Graph& g, int root);

/// Number of integer lattice points at Euclidean distance in (0, range]
/// from the origin: the degree of any grid node far enough from the border.
int interior_degree(const Rational& range);

}  // namespace hopcolor
