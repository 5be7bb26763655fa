#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "depdist/arrangement.hpp"
#include "depdist/cost_function.hpp"
#include "depdist/grid_function.hpp"

namespace depdist {

/// D(l) = sum_{d=1..l-1} g(d) + sum_{d=1..n-l} g(d): total cost of a
/// star of n vertices with the hub at position l.
double star_cost(int n, int l, const CostFunction& g);

struct StarLandscape {
    int n = 0;
    std::string cost_spec;
    double tolerance = 0.0;
    std::vector<double> values;          // values[l-1] = D(l)
    double min_value = 0.0;
    std::vector<int> optimal_positions;  // argmin positions, ascending

    double value(int l) const;
    /// The landscape as a 1-D grid over positions 1..n.
    GridFunction grid() const;
};

StarLandscape star_landscape(int n, const CostFunction& g);

/// D_q(l,p,q) = D_s(n,l) - g(|l-q|) + g(|p-q|): cost of the quasistar
/// whose hub sits at l after the leaf at q is re-attached to the leaf
/// at p. Non-distinct l,p,q are holes of the landscape (hole_error).
double quasistar_cost(int n, int l, int p, int q, const CostFunction& g);

struct QuasistarGrid {
    int n = 0;
    std::string cost_spec;
    bool planar_only = false;
    double tolerance = 0.0;
    GridFunction values;  // axes (l, p, q), box [1..n]^3, holes at collisions
    double min_value = 0.0;
    double max_value = 0.0;
    std::vector<std::array<int, 3>> argmin;  // lexicographic
    std::vector<std::array<int, 3>> argmax;

    long long filled() const { return values.filled(); }
};

/// All pairwise-distinct cells; with planar_only only cells where
/// |p - q| = 1 are filled (the crossing-free case).
QuasistarGrid quasistar_grid(int n, const CostFunction& g, bool planar_only = false);

/// One panel of the grid: the 2-D matrix obtained by fixing one axis.
struct GridSlice {
    char axis = 'q';
    int value = 0;
    char row_axis = 'l';
    char col_axis = 'p';
    int n = 0;
    /// cells[row-1][col-1]; nullopt marks a hole.
    std::vector<std::vector<std::optional<double>>> cells;
    long long filled = 0;
};

GridSlice slice(const QuasistarGrid& grid, char axis, int value);

/// The star landscape on n-1 positions governing the crossing-free
/// quasistar: the adjacent p-q pair collapses to one unit, every
/// arrangement cost gains the constant g(1). Minimizers predict the
/// hub positions of minimum-cost planar cells.
StarLandscape planar_effective_star(int n, const CostFunction& g);

/// The rewiring expression D_s(n,l) - z(|l-q|) + z(|p-q|) on the full
/// box [1..n]^3 with z(0) = 0 and z(d) = g(d) otherwise: collisions
/// collapse an edge to zero length instead of puncturing the domain.
/// Local submodularity probes need this box because every l/q crossing
/// perturbation walks through an l = q cell.
GridFunction quasistar_rewiring_box(int n, const CostFunction& g);

/// Canonical arrangement of make_quasistar(n) realizing grid cell
/// (l, p, q): hub at l, its degree-2 neighbor at p, the far leaf at q,
/// remaining leaves filling the free positions in ascending order.
LinearArrangement quasistar_arrangement(int n, int l, int p, int q);

}  // namespace depdist
