#include "depdist/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "depdist/errors.hpp"
#include "depdist/format.hpp"

namespace depdist {

double star_cost(int n, int l, const CostFunction& g) {
    if (n < 3) throw std::invalid_argument("star landscape needs n >= 3");
    if (l < 1 || l > n)
        throw std::domain_error("hub position " + format_number(l) + " outside 1.." +
                                format_number(n));
    return g.prefix_sum(l - 1) + g.prefix_sum(n - l);
}

double StarLandscape::value(int l) const {
    if (l < 1 || l > n)
        throw std::domain_error("position " + format_number(l) + " outside 1.." +
                                format_number(n));
    return values[static_cast<std::size_t>(l) - 1];
}

GridFunction StarLandscape::grid() const {
    GridFunction gf({1}, {n});
    for (int l = 1; l <= n; ++l) gf.set({l}, values[static_cast<std::size_t>(l) - 1]);
    return gf;
}

namespace {

StarLandscape landscape_from_values(int n, const CostFunction& g, std::vector<double> values) {
    StarLandscape ls;
    ls.n = n;
    ls.cost_spec = g.spec();
    ls.tolerance = g.tolerance();
    ls.values = std::move(values);
    ls.min_value = *std::min_element(ls.values.begin(), ls.values.end());
    for (int l = 1; l <= n; ++l)
        if (std::fabs(ls.values[static_cast<std::size_t>(l) - 1] - ls.min_value) <= ls.tolerance)
            ls.optimal_positions.push_back(l);
    return ls;
}

}  // namespace

StarLandscape star_landscape(int n, const CostFunction& g) {
    if (n < 3) throw std::invalid_argument("star landscape needs n >= 3");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int l = 1; l <= n; ++l) values.push_back(star_cost(n, l, g));
    return landscape_from_values(n, g, std::move(values));
}

double quasistar_cost(int n, int l, int p, int q, const CostFunction& g) {
    if (n < 4) throw std::invalid_argument("quasistar landscape needs n >= 4");
    for (int coord : {l, p, q})
        if (coord < 1 || coord > n)
            throw std::domain_error("grid coordinate " + format_number(coord) + " outside 1.." +
                                    format_number(n));
    if (l == p || l == q || p == q)
        throw hole_error("cell (" + format_number(l) + "," + format_number(p) + "," +
                         format_number(q) + ") is a hole: positions must be pairwise distinct");
    return star_cost(n, l, g) - g.evaluate(std::abs(l - q)) + g.evaluate(std::abs(p - q));
}

QuasistarGrid quasistar_grid(int n, const CostFunction& g, bool planar_only) {
    if (n < 4) throw std::invalid_argument("quasistar landscape needs n >= 4");
    QuasistarGrid grid{n, g.spec(), planar_only, g.tolerance(),
                       GridFunction({1, 1, 1}, {n, n, n}),
                       0.0,  0.0,      {},           {}};
    bool first = true;
    for (int l = 1; l <= n; ++l)
        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q) {
                if (l == p || l == q || p == q) continue;
                if (planar_only && std::abs(p - q) != 1) continue;
                const double value = quasistar_cost(n, l, p, q, g);
                grid.values.set({l, p, q}, value);
                if (first || value < grid.min_value) grid.min_value = value;
                if (first || value > grid.max_value) grid.max_value = value;
                first = false;
            }
    grid.values.for_each([&](const std::vector<int>& point, double value) {
        const std::array<int, 3> cell{point[0], point[1], point[2]};
        if (std::fabs(value - grid.min_value) <= grid.tolerance) grid.argmin.push_back(cell);
        if (std::fabs(value - grid.max_value) <= grid.tolerance) grid.argmax.push_back(cell);
    });
    return grid;
}

GridSlice slice(const QuasistarGrid& grid, char axis, int value) {
    if (axis != 'l' && axis != 'p' && axis != 'q')
        throw std::invalid_argument("slice axis must be one of l, p, q");
    if (value < 1 || value > grid.n)
        throw std::domain_error("slice value " + format_number(value) + " outside 1.." +
                                format_number(grid.n));
    GridSlice out;
    out.axis = axis;
    out.value = value;
    out.row_axis = axis == 'l' ? 'p' : 'l';
    out.col_axis = axis == 'q' ? 'p' : 'q';
    out.n = grid.n;
    out.cells.assign(static_cast<std::size_t>(grid.n),
                     std::vector<std::optional<double>>(static_cast<std::size_t>(grid.n)));
    for (int row = 1; row <= grid.n; ++row)
        for (int col = 1; col <= grid.n; ++col) {
            std::vector<int> point(3);
            point[axis == 'l' ? 1 : 0] = row;  // row axis: p when slicing l, else l
            point[axis == 'q' ? 1 : 2] = col;  // col axis: p when slicing q, else q
            point[axis == 'l' ? 0 : axis == 'p' ? 1 : 2] = value;
            const auto cell = grid.values.value(point);
            out.cells[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(col) - 1] = cell;
            if (cell) ++out.filled;
        }
    return out;
}

StarLandscape planar_effective_star(int n, const CostFunction& g) {
    if (n < 4) throw std::invalid_argument("quasistar landscape needs n >= 4");
    const double pair_cost = g.evaluate(1);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n) - 1);
    for (int l = 1; l <= n - 1; ++l) values.push_back(star_cost(n - 1, l, g) + pair_cost);
    return landscape_from_values(n - 1, g, std::move(values));
}

GridFunction quasistar_rewiring_box(int n, const CostFunction& g) {
    if (n < 4) throw std::invalid_argument("quasistar landscape needs n >= 4");
    GridFunction box({1, 1, 1}, {n, n, n});
    const auto zero_extended = [&](int d) { return d == 0 ? 0.0 : g.evaluate(d); };
    for (int l = 1; l <= n; ++l) {
        const double base = star_cost(n, l, g);
        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q)
                box.set({l, p, q},
                        base - zero_extended(std::abs(l - q)) + zero_extended(std::abs(p - q)));
    }
    return box;
}

LinearArrangement quasistar_arrangement(int n, int l, int p, int q) {
    if (n < 4) throw std::invalid_argument("quasistar arrangement needs n >= 4");
    for (int coord : {l, p, q})
        if (coord < 1 || coord > n)
            throw std::domain_error("position " + format_number(coord) + " outside 1.." +
                                    format_number(n));
    if (l == p || l == q || p == q)
        throw hole_error("cell (" + format_number(l) + "," + format_number(p) + "," +
                         format_number(q) + ") is a hole: positions must be pairwise distinct");
    std::vector<int> positions(static_cast<std::size_t>(n), 0);
    positions[0] = l;
    positions[1] = p;
    positions[static_cast<std::size_t>(n) - 1] = q;
    std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
    taken[static_cast<std::size_t>(l)] = taken[static_cast<std::size_t>(p)] = true;
    taken[static_cast<std::size_t>(q)] = true;
    int next = 1;
    for (int v = 2; v <= n - 2; ++v) {
        while (taken[static_cast<std::size_t>(next)]) ++next;
        positions[static_cast<std::size_t>(v)] = next;
        taken[static_cast<std::size_t>(next)] = true;
    }
    return LinearArrangement(std::move(positions));
}

}  // namespace depdist
