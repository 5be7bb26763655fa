#pragma once

#include <string>
#include <vector>

namespace depdist {

/// Link-cost function g(d), strictly increasing on integer distances
/// 1..max_distance. Values and prefix sums are precomputed at
/// construction, so evaluation is a bounds-checked lookup.
///
/// Kinds whose values are integers (identity, integer-exponent powers,
/// integer bases, integer tables) are flagged exact: their landscape
/// arithmetic stays within the integers doubles represent exactly, and
/// convexity comparisons on them use tolerance 0.
class CostFunction {
public:
    static CostFunction identity(int max_distance);
    static CostFunction power(double exponent, int max_distance);
    static CostFunction exponential(double base, int max_distance);
    static CostFunction table(std::vector<double> values);

    /// Parses "identity", "power:E", "exp:B" or "table:v1,v2,..." .
    static CostFunction from_spec(const std::string& spec, int max_distance);

    /// g(d) for 1 <= d <= max_distance.
    double evaluate(int d) const;

    /// sum_{d=1..m} g(d); m = 0 gives 0, m > max_distance is an error.
    double prefix_sum(int m) const;

    int max_distance() const { return max_distance_; }
    bool exact() const { return exact_; }
    /// Comparison tolerance audits should use for values of this function.
    double tolerance() const { return exact_ ? 0.0 : 1e-9; }
    /// Canonical spec string ("identity", "power:2", ...).
    const std::string& spec() const { return spec_; }

private:
    CostFunction(std::string spec, int max_distance, std::vector<double> values, bool exact);

    std::string spec_;
    int max_distance_;
    std::vector<double> values_;  // values_[d-1] = g(d)
    std::vector<double> prefix_;  // prefix_[m] = sum_{d<=m} g(d)
    bool exact_;
};

}  // namespace depdist
