#pragma once

#include <string>
#include <utility>
#include <vector>

#include "depdist/bounds.hpp"
#include "depdist/landscape.hpp"

namespace depdist {

/// RFC-4180-style quoting: fields containing commas, quotes or
/// newlines are wrapped in double quotes with inner quotes doubled.
std::string csv_field(const std::string& raw);

// --- landscape exports ---

std::string star_landscape_csv(const StarLandscape& ls);   // header "l,value"
std::string star_landscape_json(const StarLandscape& ls);
std::string star_landscape_svg(const StarLandscape& ls);   // single-panel line chart

std::string grid_csv(const QuasistarGrid& grid);  // header "l,p,q,value", holes omitted
std::string grid_json(const QuasistarGrid& grid);
std::string slice_csv(const GridSlice& s);        // matrix; empty fields mark holes

/// One heatmap panel per q slice, every panel's color scale pinned to
/// the global [min, max] of the grid; hole cells are blank.
std::string grid_heatmap_svg(const QuasistarGrid& grid);

// --- bounds exports ---

std::string bounds_csv(const std::vector<BoundsRow>& rows);  // n,family,d_min,d_max,d_random,source
std::string bounds_json(const std::vector<BoundsRow>& rows);

struct PlotSeries {
    std::string panel;
    std::string series;
    bool dashed = false;
    std::vector<std::pair<int, double>> points;  // (n, value), n ascending
};

/// Figure layout: four panels (d_min, d_max, star_band, path_band),
/// family series plus the dashed random baseline in each.
std::vector<PlotSeries> bounds_figure_data(const std::vector<BoundsRow>& rows);

std::string plot_data_csv(const std::vector<PlotSeries>& series);  // panel,series,n,value

/// Stacked line-chart panels in the order the series introduce them.
std::string line_chart_svg(const std::vector<PlotSeries>& series,
                           const std::string& x_label = "n");

}  // namespace depdist
