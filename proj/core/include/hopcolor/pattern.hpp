#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopcolor/topology.hpp"

namespace hopcolor {

/// A rectangular tile of colors (0-based internally), possibly with absent
/// cells so diamond-shaped tiles can be expressed. Repeated along a lattice
/// it colors the whole grid.
///
/// Text form, one row per line: 1-based colors separated by spaces, `.` for
/// an absent cell. This is the on-disk pattern format and matches how such
/// tiles are usually drawn, so files diff cleanly against references.
struct ColorPattern {
    static constexpr int kAbsent = -1;

    int width = 0;
    int height = 0;
    std::vector<int> cells;  // row-major, kAbsent where the tile has a hole
    int color_count = 0;
    Rational range{1};

    int at(int x, int y) const { return cells.at(static_cast<size_t>(y) * width + x); }
    int cell_count() const;

    /// Present cells as (coordinate, color) pairs, row-major order.
    std::vector<std::pair<NodeCoord, int>> present_cells() const;

    /// Throws unless every color in [0, color_count) appears at least once
    /// and there are at least color_count present cells.
    void validate() const;
};

ColorPattern parse_pattern_text(const std::string& text, const Rational& range);
std::string pattern_text(const ColorPattern& p);

/// Two integer translation vectors under which a tiling is invariant.
/// |det| equals the color count of the pattern it tiles: one fundamental
/// cell holds each color exactly once.
struct LatticeBasis {
    std::array<int, 2> u{0, 0};
    std::array<int, 2> v{0, 0};

    long long det() const {
        return static_cast<long long>(u[0]) * v[1] - static_cast<long long>(u[1]) * v[0];
    }
    bool operator==(const LatticeBasis&) const = default;
};

/// A pattern repeated along a lattice basis, with O(1) color lookup at any
/// grid coordinate. Construction fails unless the pattern's present cells
/// form a complete residue system modulo the lattice (each color exactly
/// once per fundamental cell).
class Tiling {
  public:
    Tiling(const ColorPattern& p, const LatticeBasis& b);

    /// Color at (x, y), translated so that (0,0) gets anchor_color.
    int color_at(int x, int y, int anchor_color = 0) const;

    int color_count() const { return color_count_; }

  private:
    int color_count_;
    int period_;                        // |det|: the tiling repeats with this period on both axes
    std::vector<int> table_;            // period_ x period_ color lookup
    std::vector<NodeCoord> anchor_of_;  // a coordinate holding each color
};

/// The optimal basic color pattern for range 1, 1.5 or 2, transcribed from
/// the reference tiles (8, 16 and 25 colors). Other ranges throw, listing
/// the supported ones.
ColorPattern builtin_pattern(const Rational& range);

/// Exhaustive search for the translation lattice that tiles `grid` validly
/// with pattern `p` under h-hop validity. Vector components are tried over
/// [-color_count, color_count] in the order 0, 1, -1, 2, -2, ... on
/// (u.y, u.x, v.y, v.x); the first basis whose induced tiling is a valid
/// h-hop coloring of the grid wins, which makes the result deterministic.
/// Throws if no basis works (a mistranscribed pattern).
LatticeBasis infer_lattice(const ColorPattern& p, const Grid& grid, int h);

/// Color of the node at `coord` when the plane is tiled by (p, b) with
/// anchor_color at the origin. Constant-time per node once the tiling is
/// built; use Tiling directly to amortize over many lookups.
int tile_color(const ColorPattern& p, const LatticeBasis& b, NodeCoord coord, int anchor_color);

/// Total coloring of the grid by the tiled pattern. The pattern must have
/// been built for the grid's transmission range.
Coloring color_grid_by_pattern(const Grid& grid, const ColorPattern& p, const LatticeBasis& b,
                               int anchor_color = 0);

/// Recolor through a color mapping; must be injective over the used colors.
Coloring permute_colors(const Coloring& c, const std::map<int, int>& perm);

/// Reference optimal 3-hop color counts per range (8, 16, 25, 45, 68 for
/// R = 1, 1.5, 2, 2.5, 3). The 45 and 68 entries are reference constants
/// only; no pattern is known for them here.
int optimal_reference(const Rational& range);

/// Ranges accepted by optimal_reference.
const std::vector<Rational>& reference_ranges();

/// Ranges with a builtin pattern (1, 1.5, 2).
const std::vector<Rational>& pattern_ranges();

}  // namespace hopcolor
