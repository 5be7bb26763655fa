#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace depdist {

/// A real-valued function on a finite integer box with holes: cells
/// are either filled (carry a value) or holes. Holes are a first-class
/// state, not sentinel numbers, so audits can skip them explicitly.
/// Dimensions 1..3; iteration is lexicographic over coordinates.
class GridFunction {
public:
    /// Inclusive bounds per axis, e.g. lower={1,1,1}, upper={n,n,n}.
    GridFunction(std::vector<int> lower, std::vector<int> upper);

    int dims() const { return static_cast<int>(lower_.size()); }
    const std::vector<int>& lower() const { return lower_; }
    const std::vector<int>& upper() const { return upper_; }

    bool in_box(const std::vector<int>& point) const;
    /// True when the point is in the box and filled.
    bool contains(const std::vector<int>& point) const;
    /// Value at a filled point; nullopt for holes and points outside.
    std::optional<double> value(const std::vector<int>& point) const;
    /// Value at a filled point; throws on holes or points outside.
    double at(const std::vector<int>& point) const;

    void set(const std::vector<int>& point, double value);

    long long filled() const { return filled_count_; }
    /// All filled points in lexicographic order.
    std::vector<std::vector<int>> domain_points() const;
    void for_each(const std::function<void(const std::vector<int>&, double)>& fn) const;

private:
    std::size_t index(const std::vector<int>& point) const;

    std::vector<int> lower_;
    std::vector<int> upper_;
    std::vector<std::size_t> strides_;
    std::vector<double> values_;
    std::vector<bool> present_;
    long long filled_count_ = 0;
};

}  // namespace depdist
