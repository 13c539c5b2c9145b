#include "symtaut/region.hpp"

#include "symtaut/bn_classes.hpp"
#include "symtaut/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <sstream>

namespace symtaut {

namespace {

RegionCell classify(const CurveParams& curve, int n, int m) {
    RegionCell cell;
    cell.n = n;
    cell.m = m;
    if (n < 1 || m < 1) {
        return cell;
    }
    const int g = curve.genus();
    const int d = n + m;
    cell.colored = 2 * d >= n + g + 1;
    cell.subordinate = degree_reaches_gonality(curve, n, d);
    cell.theta = g <= std::max(n, m);
    if (curve.kind() == CurveKind::BrillNoetherGeneral) {
        for (int r = 1; r <= std::min(n, g - 1); ++r) {
            if (n <= g - 1 && (r + 1) * m + r * n == r * r + r * g) {
                cell.bn_ray_r.push_back(r);
            }
        }
    }
    cell.bn_dim_g_minus_1 = n == g - 1 && g <= d && d <= 2 * g - 2;
    cell.facet = cell.theta || cell.subordinate || n == g - 1;
    cell.very_general_facet = d >= g;
    return cell;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* fill_for(const RegionCell& c) {
    if (c.subordinate) {
        return "#7f7f7f";
    }
    if (c.colored) {
        return "#c6dbef";
    }
    return "#ffffff";
}

}  // namespace

const RegionCell& RegionMap::at(int n, int m) const {
    if (n < 0 || m < 0 || n > extent || m > extent) {
        throw ParameterError("cell outside the region map");
    }
    return cells[static_cast<std::size_t>(m) * static_cast<std::size_t>(extent + 1) + static_cast<std::size_t>(n)];
}

RegionMap region_map(int genus, CurveKind kind, int extent, const std::map<int, int>& gonality_overrides) {
    if (genus < 1) {
        throw ParameterError("region_map needs g >= 1");
    }
    if (extent < 0) {
        throw ParameterError("region extent must be non-negative");
    }
    const CurveParams curve(genus, 1, kind, gonality_overrides);
    RegionMap map{genus, kind, extent, {}};
    // Rows are independent; each is computed on its own task and merged in order.
    std::vector<std::future<std::vector<RegionCell>>> rows;
    rows.reserve(static_cast<std::size_t>(extent + 1));
    for (int m = 0; m <= extent; ++m) {
        rows.push_back(std::async(std::launch::async, [&curve, extent, m] {
            std::vector<RegionCell> row;
            for (int n = 0; n <= extent; ++n) {
                row.push_back(classify(curve, n, m));
            }
            return row;
        }));
    }
    for (auto& f : rows) {
        auto row = f.get();
        map.cells.insert(map.cells.end(), row.begin(), row.end());
    }
    return map;
}

char glyph(const RegionCell& c) {
    const bool line = !c.bn_ray_r.empty();
    if (line && c.bn_dim_g_minus_1) {
        return 'O';
    }
    if (line) {
        return '*';
    }
    if (c.bn_dim_g_minus_1) {
        return 'o';
    }
    if (c.theta) {
        return c.subordinate ? '@' : c.colored ? '%' : '=';
    }
    return c.subordinate ? '#' : c.colored ? ':' : '.';
}

std::string render_text(const RegionMap& map) {
    std::ostringstream os;
    os << "region g=" << map.genus << " curve=" << to_string(map.kind) << " extent=" << map.extent << '\n';
    const int width = static_cast<int>(std::to_string(map.extent).size());
    for (int m = map.extent; m >= 0; --m) {
        std::string label = std::to_string(m);
        os << std::string(static_cast<std::size_t>(width) - label.size(), ' ') << label << ' ';
        for (int n = 0; n <= map.extent; ++n) {
            os << glyph(map.at(n, m));
        }
        os << '\n';
    }
    os << std::string(static_cast<std::size_t>(width) + 1, ' ');
    for (int n = 0; n <= map.extent; ++n) {
        os << static_cast<char>('0' + n % 10);
    }
    os << '\n';
    os << "legend: . none  : colored  # subordinate  = theta  % theta+colored  @ theta+subordinate"
          "  * bn ray  o n=g-1 dot  O both\n";
    return os.str();
}

std::string render_svg(const RegionMap& map) {
    const int cell = 16;
    const int margin = 32;
    const int side = (map.extent + 1) * cell;
    const int size = side + 2 * margin;
    // Lattice point (n, m) maps to the centre of its cell; m grows upwards.
    auto px = [&](double n) { return margin + n * cell + cell / 2.0; };
    auto py = [&](double m) { return margin + side - (m * cell + cell / 2.0); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    os << "<title>region g=" << map.genus << " curve=" << to_string(map.kind) << "</title>\n";
    os << "<g id=\"cells\" stroke=\"none\">\n";
    for (const auto& c : map.cells) {
        os << "<rect x=\"" << margin + c.n * cell << "\" y=\"" << margin + side - (c.m + 1) * cell
           << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"" << fill_for(c) << "\"/>\n";
    }
    os << "</g>\n<g id=\"theta\" stroke=\"#333333\" stroke-width=\"0.5\">\n";
    for (const auto& c : map.cells) {
        if (!c.theta) {
            continue;
        }
        const int x0 = margin + c.n * cell;
        const int y0 = margin + side - (c.m + 1) * cell;
        os << "<path d=\"M" << x0 << ' ' << y0 + cell / 2 << "h" << cell << "M" << x0 + cell / 2 << ' ' << y0
           << "v" << cell << "\"/>\n";
    }
    os << "</g>\n";
    const int g = map.genus;
    if (map.kind == CurveKind::BrillNoetherGeneral) {
        os << "<g id=\"bn-lines\" stroke=\"#000000\" stroke-width=\"2.5\">\n";
        for (int r = 1; r <= g - 1; ++r) {
            // From (r, rg/(r+1)) to (g-1, r).
            const double m0 = static_cast<double>(r) * g / (r + 1);
            os << "<line x1=\"" << fmt(px(r)) << "\" y1=\"" << fmt(py(m0)) << "\" x2=\"" << fmt(px(g - 1))
               << "\" y2=\"" << fmt(py(r)) << "\"/>\n";
        }
        os << "</g>\n";
    }
    os << "<g id=\"dots\" fill=\"#000000\">\n";
    for (const auto& c : map.cells) {
        if (c.bn_dim_g_minus_1) {
            os << "<circle cx=\"" << fmt(px(c.n)) << "\" cy=\"" << fmt(py(c.m)) << "\" r=\"3\"/>\n";
        }
    }
    os << "</g>\n";
    os << "<line id=\"very-general\" x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(g)) << "\" x2=\"" << fmt(px(g))
       << "\" y2=\"" << fmt(py(0)) << "\" stroke=\"#000000\" stroke-dasharray=\"4 3\"/>\n";
    os << "<text x=\"" << size / 2 << "\" y=\"" << size - 8 << "\" font-size=\"12\" text-anchor=\"middle\">n</text>\n";
    os << "<text x=\"10\" y=\"" << size / 2 << "\" font-size=\"12\">m</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace symtaut
