#include "depdist/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "depdist/errors.hpp"
#include "depdist/format.hpp"
#include "depdist/json_util.hpp"

namespace depdist {

LinearArrangement::LinearArrangement(std::vector<int> positions) : positions_(std::move(positions)) {
    const int n = static_cast<int>(positions_.size());
    if (n == 0) throw std::invalid_argument("arrangement needs at least one vertex");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        const int p = positions_[static_cast<std::size_t>(v)];
        if (p < 1 || p > n)
            throw std::invalid_argument("arrangement position " + format_number(p) +
                                        " of vertex " + format_number(v) + " outside 1.." +
                                        format_number(n));
        if (seen[static_cast<std::size_t>(p - 1)])
            throw std::invalid_argument("arrangement repeats position " + format_number(p));
        seen[static_cast<std::size_t>(p - 1)] = true;
    }
}

LinearArrangement LinearArrangement::trivial(int n) {
    std::vector<int> positions(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) positions[static_cast<std::size_t>(v)] = v + 1;
    return LinearArrangement(std::move(positions));
}

int LinearArrangement::position(int vertex) const {
    if (vertex < 0 || vertex >= n())
        throw std::out_of_range("vertex " + format_number(vertex) + " outside 0.." +
                                format_number(n() - 1));
    return positions_[static_cast<std::size_t>(vertex)];
}

std::vector<int> LinearArrangement::vertex_order() const {
    std::vector<int> order(positions_.size());
    for (int v = 0; v < n(); ++v) order[static_cast<std::size_t>(positions_[static_cast<std::size_t>(v)] - 1)] = v;
    return order;
}

double total_cost(const FreeTree& tree, const std::vector<int>& positions,
                  const CostFunction& cost) {
    if (static_cast<int>(positions.size()) != tree.n())
        throw std::invalid_argument("arrangement size does not match tree order");
    double sum = 0.0;
    for (const auto& [u, v] : tree.edges())
        sum += cost.evaluate(std::abs(positions[static_cast<std::size_t>(u)] -
                                      positions[static_cast<std::size_t>(v)]));
    return sum;
}

double total_cost(const FreeTree& tree, const LinearArrangement& arr, const CostFunction& cost) {
    return total_cost(tree, arr.positions(), cost);
}

long long total_length(const FreeTree& tree, const std::vector<int>& positions) {
    if (static_cast<int>(positions.size()) != tree.n())
        throw std::invalid_argument("arrangement size does not match tree order");
    long long sum = 0;
    for (const auto& [u, v] : tree.edges())
        sum += std::abs(positions[static_cast<std::size_t>(u)] -
                        positions[static_cast<std::size_t>(v)]);
    return sum;
}

bool is_planar(const FreeTree& tree, const std::vector<int>& positions) {
    if (static_cast<int>(positions.size()) != tree.n())
        throw std::invalid_argument("arrangement size does not match tree order");
    std::vector<std::pair<int, int>> spans;
    spans.reserve(tree.edges().size());
    for (const auto& [u, v] : tree.edges()) {
        const int a = positions[static_cast<std::size_t>(u)];
        const int b = positions[static_cast<std::size_t>(v)];
        spans.emplace_back(std::min(a, b), std::max(a, b));
    }
    // Strict interleaving a1 < b1 < a2 < b2 needs four distinct
    // positions, so edges sharing an endpoint never register.
    for (std::size_t i = 0; i < spans.size(); ++i)
        for (std::size_t j = i + 1; j < spans.size(); ++j) {
            const auto& [a1, a2] = spans[i];
            const auto& [b1, b2] = spans[j];
            if ((a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)) return false;
        }
    return true;
}

bool is_planar(const FreeTree& tree, const LinearArrangement& arr) {
    return is_planar(tree, arr.positions());
}

namespace {

/// Uniform draw from [0, bound) by rejection, so the result depends
/// only on the mt19937_64 stream and never on library distributions.
std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

}  // namespace

LinearArrangement random_arrangement(int n, std::mt19937_64& rng) {
    std::vector<int> positions(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) positions[static_cast<std::size_t>(v)] = v + 1;
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(bounded_random(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(positions[static_cast<std::size_t>(i)], positions[j]);
    }
    return LinearArrangement(std::move(positions));
}

void for_each_arrangement(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 1) throw std::invalid_argument("arrangement enumeration needs n >= 1");
    std::vector<int> positions(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) positions[static_cast<std::size_t>(v)] = v + 1;
    do {
        fn(positions);
    } while (std::next_permutation(positions.begin(), positions.end()));
}

int default_oracle_cap() {
    if (const char* raw = std::getenv("DEPDIST_ORACLE_CAP")) {
        char* end = nullptr;
        const long value = std::strtol(raw, &end, 10);
        if (end != raw && *end == '\0' && value > 0 && value <= 20) return static_cast<int>(value);
    }
    return 9;
}

OracleResult brute_force(const FreeTree& tree, const CostFunction& cost, int cap,
                         bool planar_only) {
    const int n = tree.n();
    if (n > cap) throw oracle_cap_error(n, cap);
    const double tol = cost.tolerance();
    OracleResult result;
    // First pass pins the exact extrema; the second counts ties
    // against them, so tolerance grouping cannot drift.
    bool first = true;
    for_each_arrangement(n, [&](const std::vector<int>& positions) {
        if (planar_only && !is_planar(tree, positions)) return;
        const double value = total_cost(tree, positions, cost);
        ++result.arrangements;
        if (first || value < result.min) result.min = value;
        if (first || value > result.max) result.max = value;
        first = false;
    });
    if (result.arrangements == 0) throw std::logic_error("no arrangement survived the filter");
    for_each_arrangement(n, [&](const std::vector<int>& positions) {
        if (planar_only && !is_planar(tree, positions)) return;
        const double value = total_cost(tree, positions, cost);
        if (std::fabs(value - result.min) <= tol) {
            if (result.argmin_count == 0) result.sample_argmin = positions;
            ++result.argmin_count;
        }
        if (std::fabs(value - result.max) <= tol) {
            if (result.argmax_count == 0) result.sample_argmax = positions;
            ++result.argmax_count;
        }
    });
    return result;
}

std::string OracleResult::to_json_string() const {
    nlohmann::json j;
    j["min"] = json_number(min);
    j["max"] = json_number(max);
    j["argmin_count"] = argmin_count;
    j["argmax_count"] = argmax_count;
    j["sample_argmin"] = sample_argmin;
    return j.dump(2);
}

Rational average_length(const FreeTree& tree, int cap) {
    const int n = tree.n();
    if (n > cap) throw oracle_cap_error(n, cap);
    long long sum = 0;
    long long count = 0;
    for_each_arrangement(n, [&](const std::vector<int>& positions) {
        sum += total_length(tree, positions);
        ++count;
    });
    return Rational(sum, count);
}

double sampled_average_length(const FreeTree& tree, long long samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("sampling needs at least one draw");
    std::mt19937_64 rng(seed);
    long long sum = 0;
    for (long long i = 0; i < samples; ++i)
        sum += total_length(tree, random_arrangement(tree.n(), rng).positions());
    return static_cast<double>(sum) / static_cast<double>(samples);
}

}  // namespace depdist
