#include "hopcolor/pattern.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hopcolor {

namespace {

// Reference tiles, 1-based colors as drawn.
constexpr const char* kPatternR1 =
    "7 2 6 4\n"
    "3 1 5 8\n";

constexpr const char* kPatternR15 =
    "10 11 12 13\n"
    "14  5  4  3\n"
    "15  6  1  2\n"
    "16  7  8  9\n";

constexpr const char* kPatternR2 =
    " .  .  . 20  .  .  .\n"
    " .  . 21 10 19  .  .\n"
    " . 22 11  3  9 18  .\n"
    "23 12  4  1  2  8 17\n"
    " . 24 13  5  7 16  .\n"
    " .  . 25  6 15  .  .\n"
    " .  .  . 14  .  .  .\n";

}  // namespace

int ColorPattern::cell_count() const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(),
                                          [](int c) { return c != kAbsent; }));
}

std::vector<std::pair<NodeCoord, int>> ColorPattern::present_cells() const {
    std::vector<std::pair<NodeCoord, int>> out;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (at(x, y) != kAbsent) out.push_back({{x, y}, at(x, y)});
    return out;
}

void ColorPattern::validate() const {
    if (width < 1 || height < 1 || cells.size() != static_cast<size_t>(width) * height)
        throw Error::invalid("pattern dimensions do not match its cells");
    if (color_count < 1) throw Error::invalid("pattern must use at least one color");
    if (cell_count() < color_count)
        throw Error::invalid("pattern has fewer cells than colors");
    std::vector<bool> seen(color_count, false);
    for (int c : cells) {
        if (c == kAbsent) continue;
        if (c < 0 || c >= color_count)
            throw Error::invalid("pattern cell color " + std::to_string(c + 1) +
                                 " outside 1.." + std::to_string(color_count));
        seen[c] = true;
    }
    for (int c = 0; c < color_count; ++c)
        if (!seen[c])
            throw Error::invalid("pattern never uses color " + std::to_string(c + 1));
}

ColorPattern parse_pattern_text(const std::string& text, const Rational& range) {
    ColorPattern p;
    p.range = range;
    std::istringstream lines(text);
    std::string line;
    std::vector<std::vector<int>> rows;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::vector<int> row;
        std::string tok;
        while (fields >> tok) {
            if (tok == ".") {
                row.push_back(ColorPattern::kAbsent);
            } else {
                int label;
                try {
                    label = std::stoi(tok);
                } catch (const std::exception&) {
                    throw Error::invalid("bad pattern cell '" + tok + "'");
                }
                if (label < 1) throw Error::invalid("pattern colors are 1-based");
                row.push_back(label - 1);
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error::invalid("empty pattern");
    p.height = static_cast<int>(rows.size());
    p.width = static_cast<int>(rows[0].size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != p.width)
            throw Error::invalid("pattern rows have unequal lengths");
    for (const auto& row : rows) p.cells.insert(p.cells.end(), row.begin(), row.end());
    p.color_count = *std::max_element(p.cells.begin(), p.cells.end()) + 1;
    p.validate();
    return p;
}

std::string pattern_text(const ColorPattern& p) {
    int digits = p.color_count >= 10 ? 2 : 1;
    std::ostringstream out;
    for (int y = 0; y < p.height; ++y) {
        for (int x = 0; x < p.width; ++x) {
            if (x) out << ' ';
            std::string tok = p.at(x, y) == ColorPattern::kAbsent
                                  ? "."
                                  : std::to_string(p.at(x, y) + 1);
            out << std::string(static_cast<size_t>(std::max(0, digits - static_cast<int>(tok.size()))), ' ')
                << tok;
        }
        out << '\n';
    }
    return out.str();
}

ColorPattern builtin_pattern(const Rational& range) {
    if (range == Rational(1)) return parse_pattern_text(kPatternR1, range);
    if (range == Rational(3, 2)) return parse_pattern_text(kPatternR15, range);
    if (range == Rational(2)) return parse_pattern_text(kPatternR2, range);
    throw Error::invalid("no builtin pattern for range " + range.str() +
                         "; supported ranges: 1, 1.5, 2");
}

namespace {

// Is d an integer combination of u and v? Cramer's rule over the lattice
// determinant: a*u + b*v = d has an integer solution iff both numerators
// divide evenly.
bool in_lattice(const LatticeBasis& b, long long dx, long long dy) {
    long long det = b.det();
    long long a_num = dx * b.v[1] - dy * b.v[0];
    long long b_num = static_cast<long long>(b.u[0]) * dy - static_cast<long long>(b.u[1]) * dx;
    return a_num % det == 0 && b_num % det == 0;
}

}  // namespace

Tiling::Tiling(const ColorPattern& p, const LatticeBasis& b) {
    p.validate();
    long long det = b.det();
    if (det == 0) throw Error::invalid("lattice basis vectors are linearly dependent");
    if (std::abs(det) != p.color_count)
        throw Error::invalid("lattice determinant " + std::to_string(std::abs(det)) +
                             " != pattern color count " + std::to_string(p.color_count));
    color_count_ = p.color_count;
    period_ = static_cast<int>(std::abs(det));

    // det * Z^2 is a sublattice of the basis lattice, so the tiling repeats
    // with period |det| on both axes and a period x period table suffices.
    auto cells = p.present_cells();
    if (static_cast<int>(cells.size()) != color_count_)
        throw Error::invalid("pattern cell count != color count; cannot tile bijectively");
    table_.assign(static_cast<size_t>(period_) * period_, -1);
    anchor_of_.assign(color_count_, NodeCoord{});
    for (int y = 0; y < period_; ++y) {
        for (int x = 0; x < period_; ++x) {
            int found = -1;
            for (const auto& [cell, color] : cells) {
                if (in_lattice(b, x - cell.x, y - cell.y)) {
                    if (found != -1)
                        throw Error::invalid(
                            "pattern cells are not distinct modulo the lattice");
                    found = color;
                }
            }
            if (found == -1)
                throw Error::invalid("pattern cells do not cover the plane under this lattice");
            table_[static_cast<size_t>(y) * period_ + x] = found;
        }
    }
    for (int y = 0; y < period_; ++y)
        for (int x = 0; x < period_; ++x) anchor_of_[table_[static_cast<size_t>(y) * period_ + x]] = {x, y};
}

int Tiling::color_at(int x, int y, int anchor_color) const {
    if (anchor_color < 0 || anchor_color >= color_count_)
        throw Error::invalid("anchor color " + std::to_string(anchor_color) +
                             " outside 0.." + std::to_string(color_count_ - 1));
    const NodeCoord o = anchor_of_[anchor_color];
    auto wrap = [&](long long a) {
        long long m = a % period_;
        return static_cast<int>(m < 0 ? m + period_ : m);
    };
    return table_[static_cast<size_t>(wrap(static_cast<long long>(y) + o.y)) * period_ +
                  wrap(static_cast<long long>(x) + o.x)];
}

namespace {

// Lattice canonical form (Hermite-style): basis ((g, y1), (0, d)) with
// d = |det|/g and y1 reduced mod d. Distinct bases of one lattice share it.
struct LatticeKey {
    long long g, y1, d;
    auto operator<=>(const LatticeKey&) const = default;
};

LatticeKey lattice_key(const LatticeBasis& b) {
    long long ux = b.u[0], uy = b.u[1], vx = b.v[0], vy = b.v[1];
    // Euclid on the x-components, applying the same ops to both vectors,
    // until one x-component is zero.
    while (vx != 0) {
        long long q = ux / vx;
        ux -= q * vx;
        uy -= q * vy;
        std::swap(ux, vx);
        std::swap(uy, vy);
    }
    long long g = ux < 0 ? -ux : ux;
    long long y1 = ux < 0 ? -uy : uy;
    long long d = vy < 0 ? -vy : vy;
    y1 %= d;
    if (y1 < 0) y1 += d;
    return {g, y1, d};
}

// 0, 1, -1, 2, -2, ...
int unfold(int i) { return (i % 2 == 1) ? (i + 1) / 2 : -i / 2; }

}  // namespace

LatticeBasis infer_lattice(const ColorPattern& p, const Grid& grid, int h) {
    p.validate();
    const int k = p.color_count;
    const int span = 2 * k + 1;
    std::map<LatticeKey, bool> memo;

    Coloring coloring(grid.graph.node_count());
    for (int iuy = 0; iuy < span; ++iuy) {
        for (int iux = 0; iux < span; ++iux) {
            const int uy = unfold(iuy), ux = unfold(iux);
            for (int ivy = 0; ivy < span; ++ivy) {
                for (int ivx = 0; ivx < span; ++ivx) {
                    LatticeBasis b{{ux, uy}, {unfold(ivx), unfold(ivy)}};
                    if (std::abs(b.det()) != k) continue;
                    auto key = lattice_key(b);
                    auto it = memo.find(key);
                    if (it != memo.end()) {
                        if (it->second) return b;
                        continue;
                    }
                    bool ok = false;
                    try {
                        Tiling tiling(p, b);
                        for (int node = 0; node < grid.graph.node_count(); ++node) {
                            const auto& c = grid.coords[node];
                            coloring.set(node, tiling.color_at(c.x, c.y));
                        }
                        ok = !find_coloring_violation(grid.graph, coloring, h).has_value();
                    } catch (const Error&) {
                        ok = false;  // cells not a residue system under this lattice
                    }
                    memo[key] = ok;
                    if (ok) return b;
                }
            }
        }
    }
    throw Error::infeasible("no lattice basis tiles the grid validly with this pattern "
                            "(mistranscribed pattern?)");
}

int tile_color(const ColorPattern& p, const LatticeBasis& b, NodeCoord coord, int anchor_color) {
    return Tiling(p, b).color_at(coord.x, coord.y, anchor_color);
}

Coloring color_grid_by_pattern(const Grid& grid, const ColorPattern& p, const LatticeBasis& b,
                               int anchor_color) {
    if (!(p.range == grid.spec.range))
        throw Error::invalid("pattern is for range " + p.range.str() + ", grid has range " +
                             grid.spec.range.str());
    Tiling tiling(p, b);
    Coloring c(grid.graph.node_count());
    for (int node = 0; node < grid.graph.node_count(); ++node) {
        const auto& coord = grid.coords[node];
        c.set(node, tiling.color_at(coord.x, coord.y, anchor_color));
    }
    return c;
}

Coloring permute_colors(const Coloring& c, const std::map<int, int>& perm) {
    std::map<int, int> image;
    for (int color : c.used_colors()) {
        auto it = perm.find(color);
        if (it == perm.end())
            throw Error::invalid("permutation does not map used color " + std::to_string(color));
        if (it->second < 0) throw Error::invalid("permutation maps to a negative color");
        if (!image.emplace(it->second, color).second)
            throw Error::invalid("mapping is not a bijection: two colors map to " +
                                 std::to_string(it->second));
    }
    Coloring out(c.node_count());
    for (int v = 0; v < c.node_count(); ++v)
        if (c.has(v)) out.set(v, perm.at(c.get(v)));
    return out;
}

const std::vector<Rational>& reference_ranges() {
    static const std::vector<Rational> ranges = {Rational(1), Rational(3, 2), Rational(2),
                                                 Rational(5, 2), Rational(3)};
    return ranges;
}

const std::vector<Rational>& pattern_ranges() {
    static const std::vector<Rational> ranges = {Rational(1), Rational(3, 2), Rational(2)};
    return ranges;
}

int optimal_reference(const Rational& range) {
    if (range == Rational(1)) return 8;
    if (range == Rational(3, 2)) return 16;
    if (range == Rational(2)) return 25;
    if (range == Rational(5, 2)) return 45;
    if (range == Rational(3)) return 68;
    throw Error::invalid("no reference optimal for range " + range.str() +
                         "; known ranges: 1, 1.5, 2, 2.5, 3");
}

}  // namespace hopcolor
