#include "depdist/export.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "depdist/format.hpp"
#include "depdist/json_util.hpp"

namespace depdist {
namespace {

std::string esc_xml(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string rgb_hex(int r, int g, int b) {
    static const char* digits = "0123456789abcdef";
    std::string out = "#";
    for (int channel : {r, g, b}) {
        out += digits[(channel >> 4) & 0xf];
        out += digits[channel & 0xf];
    }
    return out;
}

/// Two-stop blue-to-red map through a light midpoint; t in [0, 1].
std::string heat_color(double t) {
    const auto lerp = [](double a, double b, double u) { return a + (b - a) * u; };
    const double stops[3][3] = {{33, 102, 172}, {247, 247, 247}, {178, 24, 43}};
    const int lo = t < 0.5 ? 0 : 1;
    const double u = t < 0.5 ? t * 2.0 : (t - 0.5) * 2.0;
    return rgb_hex(static_cast<int>(std::lround(lerp(stops[lo][0], stops[lo + 1][0], u))),
                   static_cast<int>(std::lround(lerp(stops[lo][1], stops[lo + 1][1], u))),
                   static_cast<int>(std::lround(lerp(stops[lo][2], stops[lo + 1][2], u))));
}

/// Smallest {1, 2, 2.5, 5} x 10^k step covering raw.
double nice_step(double raw) {
    if (!(raw > 0)) return 1.0;
    const double k = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
        if (m * k >= raw - 1e-12 * k) return m * k;
    return 10.0 * k;
}

}  // namespace

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string star_landscape_csv(const StarLandscape& ls) {
    std::string out = "l,value\n";
    for (int l = 1; l <= ls.n; ++l)
        out += format_number(l) + "," + format_number(ls.value(l)) + "\n";
    return out;
}

std::string star_landscape_json(const StarLandscape& ls) {
    nlohmann::json j;
    j["n"] = ls.n;
    j["cost"] = ls.cost_spec;
    j["tolerance"] = ls.tolerance;
    j["min"] = json_number(ls.min_value);
    j["argmin"] = ls.optimal_positions;
    nlohmann::json values = nlohmann::json::array();
    for (double v : ls.values) values.push_back(json_number(v));
    j["values"] = std::move(values);
    return j.dump(2) + "\n";
}

std::string grid_csv(const QuasistarGrid& grid) {
    std::string out = "l,p,q,value\n";
    grid.values.for_each([&](const std::vector<int>& point, double value) {
        out += format_number(point[0]) + "," + format_number(point[1]) + "," +
               format_number(point[2]) + "," + format_number(value) + "\n";
    });
    return out;
}

std::string grid_json(const QuasistarGrid& grid) {
    nlohmann::json j;
    j["n"] = grid.n;
    j["cost"] = grid.cost_spec;
    j["planar"] = grid.planar_only;
    j["tolerance"] = grid.tolerance;
    j["filled"] = grid.filled();
    j["min"] = json_number(grid.min_value);
    j["max"] = json_number(grid.max_value);
    const auto cell_list = [](const std::vector<std::array<int, 3>>& cells) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& c : cells) out.push_back({c[0], c[1], c[2]});
        return out;
    };
    j["argmin"] = cell_list(grid.argmin);
    j["argmax"] = cell_list(grid.argmax);
    nlohmann::json cells = nlohmann::json::array();
    grid.values.for_each([&](const std::vector<int>& point, double value) {
        cells.push_back({point[0], point[1], point[2], json_number(value)});
    });
    j["cells"] = std::move(cells);
    return j.dump(2) + "\n";
}

std::string slice_csv(const GridSlice& s) {
    std::string out;
    out += s.row_axis;
    out += '\\';
    out += s.col_axis;
    for (int col = 1; col <= s.n; ++col) out += "," + format_number(col);
    out += "\n";
    for (int row = 1; row <= s.n; ++row) {
        out += format_number(row);
        for (int col = 1; col <= s.n; ++col) {
            const auto& cell = s.cells[static_cast<std::size_t>(row) - 1]
                                      [static_cast<std::size_t>(col) - 1];
            out += ",";
            if (cell) out += format_number(*cell);
        }
        out += "\n";
    }
    return out;
}

std::string grid_heatmap_svg(const QuasistarGrid& grid) {
    const int n = grid.n;
    const int cell = 16;
    const int panel_w = n * cell;
    const int panel_h = n * cell + 20;  // title strip above the matrix
    const int gap = 26;
    const int per_row = std::min(4, n);
    const int panel_rows = (n + per_row - 1) / per_row;
    const int margin = 16;
    const int caption_h = 46;
    const int width = margin * 2 + per_row * panel_w + (per_row - 1) * gap;
    const int height = caption_h + margin + panel_rows * (panel_h + gap);
    const double lo = grid.min_value;
    const double span = grid.max_value - grid.min_value;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << width << "\" height=\"" << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
    svg << "<text x=\"" << margin << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\" "
        << "font-weight=\"bold\">quasistar landscape, n = " << n << ", cost "
        << esc_xml(grid.cost_spec) << (grid.planar_only ? ", planar cells only" : "")
        << "</text>\n";
    svg << "<text x=\"" << margin << "\" y=\"38\" font-family=\"sans-serif\" font-size=\"11\" "
        << "fill=\"#444444\">one panel per q; rows l (top to bottom), columns p (left to "
        << "right); blank cells are holes</text>\n";

    // Shared color legend, top right.
    const int legend_w = 180;
    const int legend_x = width - margin - legend_w;
    const int swatches = 32;
    for (int i = 0; i < swatches; ++i) {
        const double t = swatches == 1 ? 0.5 : static_cast<double>(i) / (swatches - 1);
        svg << "<rect x=\"" << format_number(legend_x + i * legend_w / double(swatches))
            << "\" y=\"10\" width=\"" << format_number(legend_w / double(swatches) + 0.5)
            << "\" height=\"12\" fill=\"" << heat_color(t) << "\"/>\n";
    }
    svg << "<text x=\"" << legend_x << "\" y=\"36\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << format_number(grid.min_value) << "</text>\n";
    svg << "<text x=\"" << legend_x + legend_w << "\" y=\"36\" font-family=\"sans-serif\" "
        << "font-size=\"11\" text-anchor=\"end\">" << format_number(grid.max_value)
        << "</text>\n";

    for (int q = 1; q <= n; ++q) {
        const int idx = q - 1;
        const int px = margin + (idx % per_row) * (panel_w + gap);
        const int py = caption_h + margin + (idx / per_row) * (panel_h + gap);
        svg << "<g transform=\"translate(" << px << "," << py << ")\">\n";
        svg << "<text x=\"0\" y=\"12\" font-family=\"sans-serif\" font-size=\"12\">q = " << q
            << "</text>\n";
        const GridSlice panel = slice(grid, 'q', q);
        for (int row = 1; row <= n; ++row)
            for (int col = 1; col <= n; ++col) {
                const auto& v = panel.cells[static_cast<std::size_t>(row) - 1]
                                           [static_cast<std::size_t>(col) - 1];
                if (!v) continue;
                const double t = span > 0 ? (*v - lo) / span : 0.5;
                svg << "<rect x=\"" << (col - 1) * cell << "\" y=\"" << 20 + (row - 1) * cell
                    << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
                    << heat_color(t) << "\"/>\n";
            }
        svg << "<rect x=\"0\" y=\"20\" width=\"" << panel_w << "\" height=\"" << n * cell
            << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
    std::string out = "n,family,d_min,d_max,d_random,source\n";
    for (const auto& row : rows) {
        out += format_number(row.n);
        out += ",";
        out += csv_field(family_tag_name(row.family));
        out += ",";
        if (row.d_min) out += format_number(*row.d_min);
        out += ",";
        if (row.d_max) out += format_number(*row.d_max);
        out += ",";
        out += csv_field(row.random_baseline.str());
        out += ",";
        out += csv_field(row.source);
        out += "\n";
    }
    return out;
}

std::string bounds_json(const std::vector<BoundsRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json j;
        j["n"] = row.n;
        j["family"] = family_tag_name(row.family);
        j["d_min"] = row.d_min ? nlohmann::json(*row.d_min) : nlohmann::json();
        j["d_max"] = row.d_max ? nlohmann::json(*row.d_max) : nlohmann::json();
        j["d_random"] = row.random_baseline.str();
        j["source"] = row.source;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<PlotSeries> bounds_figure_data(const std::vector<BoundsRow>& rows) {
    std::vector<FamilyTag> family_order;
    for (const auto& row : rows)
        if (std::find(family_order.begin(), family_order.end(), row.family) ==
            family_order.end())
            family_order.push_back(row.family);

    const auto family_points = [&](FamilyTag family, bool want_min) {
        std::vector<std::pair<int, double>> pts;
        for (const auto& row : rows) {
            if (row.family != family) continue;
            const auto& cell = want_min ? row.d_min : row.d_max;
            if (cell) pts.emplace_back(row.n, static_cast<double>(*cell));
        }
        return pts;
    };
    std::vector<std::pair<int, double>> random_points;
    for (const auto& row : rows)
        if (random_points.empty() || random_points.back().first != row.n)
            random_points.emplace_back(row.n, row.random_baseline.to_double());

    std::vector<PlotSeries> out;
    const auto add = [&](const std::string& panel, const std::string& series, bool dashed,
                         std::vector<std::pair<int, double>> pts) {
        if (pts.empty()) return;
        out.push_back(PlotSeries{panel, series, dashed, std::move(pts)});
    };

    for (const char* panel : {"d_min", "d_max"}) {
        const bool want_min = std::string(panel) == "d_min";
        for (FamilyTag family : family_order)
            add(panel, family_tag_name(family), false, family_points(family, want_min));
        add(panel, "random", true, random_points);
    }
    for (FamilyTag family : {FamilyTag::star, FamilyTag::quasistar}) {
        if (std::find(family_order.begin(), family_order.end(), family) == family_order.end())
            continue;
        const std::string name = family_tag_name(family);
        add("star_band", name + " d_min", false, family_points(family, true));
        add("star_band", name + " d_max", false, family_points(family, false));
    }
    if (!out.empty() && out.back().panel == "star_band")
        add("star_band", "random", true, random_points);
    if (std::find(family_order.begin(), family_order.end(), FamilyTag::path) !=
        family_order.end()) {
        add("path_band", "path d_min", false, family_points(FamilyTag::path, true));
        add("path_band", "path d_max", false, family_points(FamilyTag::path, false));
        add("path_band", "random", true, random_points);
    }
    return out;
}

std::string plot_data_csv(const std::vector<PlotSeries>& series) {
    std::string out = "panel,series,n,value\n";
    for (const auto& s : series)
        for (const auto& [n, value] : s.points)
            out += csv_field(s.panel) + "," + csv_field(s.series) + "," + format_number(n) +
                   "," + format_number(value) + "\n";
    return out;
}

std::string line_chart_svg(const std::vector<PlotSeries>& series, const std::string& x_label) {
    static const char* palette[] = {"#1b6ca8", "#b2182b", "#2e7d32", "#8e44ad",
                                    "#e67e22", "#455a64"};
    std::vector<std::string> panels;
    for (const auto& s : series)
        if (std::find(panels.begin(), panels.end(), s.panel) == panels.end())
            panels.push_back(s.panel);

    const int plot_w = 420, plot_h = 220;
    const int ml = 60, mr = 16, mt = 30, mb = 36;
    const int legend_w = 180, gap = 18;
    const int width = plot_w + legend_w + 24;
    const int height = 12 + static_cast<int>(panels.size()) * (plot_h + gap);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

    int panel_index = 0;
    for (const auto& panel : panels) {
        const int top = 12 + panel_index * (plot_h + gap);
        ++panel_index;
        std::vector<const PlotSeries*> members;
        for (const auto& s : series)
            if (s.panel == panel) members.push_back(&s);

        int x_lo = 0, x_hi = 0;
        double y_hi = 0.0;
        bool first = true;
        for (const auto* s : members)
            for (const auto& [n, value] : s->points) {
                if (first) {
                    x_lo = x_hi = n;
                    first = false;
                }
                x_lo = std::min(x_lo, n);
                x_hi = std::max(x_hi, n);
                y_hi = std::max(y_hi, value);
            }
        if (first) continue;
        if (y_hi <= 0) y_hi = 1.0;
        const double y_top = y_hi * 1.06;
        const auto sx = [&](double n) {
            if (x_hi == x_lo) return ml + (plot_w - ml - mr) / 2.0;
            return ml + (n - x_lo) / (x_hi - x_lo) * (plot_w - ml - mr);
        };
        const auto sy = [&](double v) { return top + mt + (1.0 - v / y_top) * (plot_h - mt - mb); };

        svg << "<g font-family=\"sans-serif\">\n";
        svg << "<text x=\"" << ml << "\" y=\"" << top + 18
            << "\" font-size=\"13\" font-weight=\"bold\">" << esc_xml(panel) << "</text>\n";
        // Axes.
        svg << "<line x1=\"" << ml << "\" y1=\"" << format_number(sy(0)) << "\" x2=\""
            << plot_w - mr << "\" y2=\"" << format_number(sy(0))
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        svg << "<line x1=\"" << ml << "\" y1=\"" << format_number(sy(0)) << "\" x2=\"" << ml
            << "\" y2=\"" << top + mt << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        const int x_step = std::max(1, (x_hi - x_lo + 7) / 8);
        for (int n = x_lo; n <= x_hi; n += x_step) {
            svg << "<line x1=\"" << format_number(sx(n)) << "\" y1=\"" << format_number(sy(0))
                << "\" x2=\"" << format_number(sx(n)) << "\" y2=\""
                << format_number(sy(0) + 4) << "\" stroke=\"#333333\"/>\n";
            svg << "<text x=\"" << format_number(sx(n)) << "\" y=\""
                << format_number(sy(0) + 16) << "\" font-size=\"11\" text-anchor=\"middle\">"
                << n << "</text>\n";
        }
        svg << "<text x=\"" << format_number((ml + plot_w - mr) / 2.0) << "\" y=\""
            << format_number(sy(0) + 30) << "\" font-size=\"11\" text-anchor=\"middle\" "
            << "fill=\"#444444\">" << esc_xml(x_label) << "</text>\n";
        const double y_step = nice_step(y_top / 4.0);
        for (double v = 0.0; v <= y_top + 1e-9; v += y_step) {
            svg << "<line x1=\"" << ml - 4 << "\" y1=\"" << format_number(sy(v)) << "\" x2=\""
                << ml << "\" y2=\"" << format_number(sy(v)) << "\" stroke=\"#333333\"/>\n";
            svg << "<text x=\"" << ml - 7 << "\" y=\"" << format_number(sy(v) + 4)
                << "\" font-size=\"11\" text-anchor=\"end\">" << format_number(v)
                << "</text>\n";
        }
        // Series and legend.
        int solid_index = 0, legend_row = 0;
        for (const auto* s : members) {
            const std::string color =
                s->dashed ? "#666666" : palette[solid_index++ % 6];
            const std::string dash = s->dashed ? " stroke-dasharray=\"6,4\"" : "";
            if (s->points.size() > 1) {
                svg << "<polyline fill=\"none\" stroke=\"" << color
                    << "\" stroke-width=\"1.8\"" << dash << " points=\"";
                bool first_pt = true;
                for (const auto& [n, value] : s->points) {
                    if (!first_pt) svg << " ";
                    first_pt = false;
                    svg << format_number(sx(n)) << "," << format_number(sy(value));
                }
                svg << "\"/>\n";
            }
            for (const auto& [n, value] : s->points)
                svg << "<circle cx=\"" << format_number(sx(n)) << "\" cy=\""
                    << format_number(sy(value)) << "\" r=\"2.4\" fill=\"" << color
                    << "\"/>\n";
            const int ly = top + mt + legend_row * 18;
            ++legend_row;
            svg << "<line x1=\"" << plot_w + 12 << "\" y1=\"" << ly - 4 << "\" x2=\""
                << plot_w + 34 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
                << "\" stroke-width=\"1.8\"" << dash << "/>\n";
            svg << "<text x=\"" << plot_w + 40 << "\" y=\"" << ly
                << "\" font-size=\"11\">" << esc_xml(s->series) << "</text>\n";
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string star_landscape_svg(const StarLandscape& ls) {
    PlotSeries curve;
    curve.panel = "star landscape, cost " + ls.cost_spec;
    curve.series = "D(l)";
    for (int l = 1; l <= ls.n; ++l) curve.points.emplace_back(l, ls.value(l));
    return line_chart_svg({curve}, "l");
}

}  // namespace depdist
