#pragma once

// Lattice classification of the (n, m) plane, m = d - n, by which families
// of Abel-Jacobi faces are known to exist. Only interior cells (n, m >= 1)
// carry flags.

#include "symtaut/curve.hpp"

#include <map>
#include <string>
#include <vector>

namespace symtaut {

struct RegionCell {
    int n = 0;
    int m = 0;
    bool colored = false;           // 2d >= n+g+1
    bool subordinate = false;       // d >= gon_n(C), when decidable
    bool theta = false;             // g <= max{n, m}
    std::vector<int> bn_ray_r;      // r with (r+1)m + rn = r^2 + rg, r <= n <= g-1
    bool bn_dim_g_minus_1 = false;  // n = g-1, g <= d <= 2g-2
    bool facet = false;
    bool very_general_facet = false;

    int degree() const noexcept { return n + m; }
    friend bool operator==(const RegionCell&, const RegionCell&) = default;
};

struct RegionMap {
    int genus = 0;
    CurveKind kind = CurveKind::BrillNoetherGeneral;
    int extent = 0;
    std::vector<RegionCell> cells;  // row-major by m, then n, both ascending

    const RegionCell& at(int n, int m) const;
};

/// Cells for 0 <= n, m <= extent. Requires g >= 1.
RegionMap region_map(int genus, CurveKind kind, int extent, const std::map<int, int>& gonality_overrides = {});

char glyph(const RegionCell& cell);

/// One glyph per cell, m decreasing downwards, with a legend.
std::string render_text(const RegionMap& map);

std::string render_svg(const RegionMap& map);

}  // namespace symtaut
