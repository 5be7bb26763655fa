#include "depdist/grid_function.hpp"

#include <stdexcept>

#include "depdist/format.hpp"

namespace depdist {

GridFunction::GridFunction(std::vector<int> lower, std::vector<int> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != upper_.size() || lower_.empty() || lower_.size() > 3)
        throw std::invalid_argument("grid function needs 1 to 3 matching bounds");
    std::size_t cells = 1;
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (lower_[i] > upper_[i]) throw std::invalid_argument("grid bound lower > upper");
        cells *= static_cast<std::size_t>(upper_[i] - lower_[i] + 1);
    }
    strides_.assign(lower_.size(), 1);
    for (std::size_t i = lower_.size(); i-- > 1;)
        strides_[i - 1] = strides_[i] * static_cast<std::size_t>(upper_[i] - lower_[i] + 1);
    values_.assign(cells, 0.0);
    present_.assign(cells, false);
}

std::size_t GridFunction::index(const std::vector<int>& point) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < lower_.size(); ++i)
        idx += strides_[i] * static_cast<std::size_t>(point[i] - lower_[i]);
    return idx;
}

bool GridFunction::in_box(const std::vector<int>& point) const {
    if (point.size() != lower_.size()) return false;
    for (std::size_t i = 0; i < lower_.size(); ++i)
        if (point[i] < lower_[i] || point[i] > upper_[i]) return false;
    return true;
}

bool GridFunction::contains(const std::vector<int>& point) const {
    return in_box(point) && present_[index(point)];
}

std::optional<double> GridFunction::value(const std::vector<int>& point) const {
    if (!in_box(point)) return std::nullopt;
    const std::size_t idx = index(point);
    if (!present_[idx]) return std::nullopt;
    return values_[idx];
}

double GridFunction::at(const std::vector<int>& point) const {
    const auto v = value(point);
    if (!v) {
        std::string where;
        for (std::size_t i = 0; i < point.size(); ++i)
            where += (i ? "," : "(") + format_number(point[i]);
        throw std::domain_error("grid function has no value at " + where + ")");
    }
    return *v;
}

void GridFunction::set(const std::vector<int>& point, double value) {
    if (!in_box(point)) throw std::domain_error("grid point outside the box");
    const std::size_t idx = index(point);
    if (!present_[idx]) ++filled_count_;
    present_[idx] = true;
    values_[idx] = value;
}

void GridFunction::for_each(const std::function<void(const std::vector<int>&, double)>& fn) const {
    std::vector<int> point = lower_;
    const std::size_t d = lower_.size();
    while (true) {
        const std::size_t idx = index(point);
        if (present_[idx]) fn(point, values_[idx]);
        std::size_t i = d;
        while (i-- > 0) {
            if (point[i] < upper_[i]) {
                ++point[i];
                break;
            }
            point[i] = lower_[i];
            if (i == 0) return;
        }
    }
}

std::vector<std::vector<int>> GridFunction::domain_points() const {
    std::vector<std::vector<int>> points;
    points.reserve(static_cast<std::size_t>(filled_count_));
    for_each([&](const std::vector<int>& p, double) { points.push_back(p); });
    return points;
}

}  // namespace depdist
