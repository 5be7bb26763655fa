#include "depdist/cost_function.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "depdist/format.hpp"

namespace depdist {

namespace {

constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53

bool is_exact_integer(double v) {
    return std::floor(v) == v && std::fabs(v) < kExactIntegerLimit;
}

/// x^e for integer e >= 0 by repeated multiplication, so integer bases
/// stay exact as long as every partial product fits in 2^53.
double integer_pow(double x, long long e) {
    double result = 1.0;
    for (long long i = 0; i < e; ++i) result *= x;
    return result;
}

void require_strictly_increasing(const std::vector<double>& values, const std::string& spec) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw std::invalid_argument("cost function '" + spec + "' is not finite at d=" +
                                        format_number(static_cast<long long>(i + 1)));
        if (i > 0 && !(values[i] > values[i - 1]))
            throw std::invalid_argument("cost function '" + spec +
                                        "' is not strictly increasing at d=" +
                                        format_number(static_cast<long long>(i + 1)));
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.push_back("");
    return parts;
}

}  // namespace

CostFunction::CostFunction(std::string spec, int max_distance, std::vector<double> values,
                           bool exact)
    : spec_(std::move(spec)), max_distance_(max_distance), values_(std::move(values)) {
    if (max_distance_ < 1) throw std::invalid_argument("cost function needs max_distance >= 1");
    require_strictly_increasing(values_, spec_);
    exact_ = exact;
    for (double v : values_)
        if (!is_exact_integer(v)) exact_ = false;
    prefix_.resize(static_cast<std::size_t>(max_distance_) + 1);
    prefix_[0] = 0.0;
    for (int d = 1; d <= max_distance_; ++d)
        prefix_[static_cast<std::size_t>(d)] =
            prefix_[static_cast<std::size_t>(d) - 1] + values_[static_cast<std::size_t>(d) - 1];
}

CostFunction CostFunction::identity(int max_distance) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(max_distance));
    for (int d = 1; d <= max_distance; ++d) values.push_back(static_cast<double>(d));
    return CostFunction("identity", max_distance, std::move(values), true);
}

CostFunction CostFunction::power(double exponent, int max_distance) {
    const bool integral = std::floor(exponent) == exponent && exponent >= 0 && exponent <= 60;
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(max_distance));
    for (int d = 1; d <= max_distance; ++d) {
        values.push_back(integral
                             ? integer_pow(static_cast<double>(d), static_cast<long long>(exponent))
                             : std::pow(static_cast<double>(d), exponent));
    }
    return CostFunction("power:" + format_number(exponent), max_distance, std::move(values),
                        integral);
}

CostFunction CostFunction::exponential(double base, int max_distance) {
    const bool integral = std::floor(base) == base && base >= 2 && base <= kExactIntegerLimit;
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(max_distance));
    for (int d = 1; d <= max_distance; ++d) {
        values.push_back(integral ? integer_pow(base, d) : std::pow(base, static_cast<double>(d)));
    }
    return CostFunction("exp:" + format_number(base), max_distance, std::move(values), integral);
}

CostFunction CostFunction::table(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("table cost function needs at least one value");
    std::string spec = "table:";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) spec += ',';
        spec += format_number(values[i]);
    }
    const int max_distance = static_cast<int>(values.size());
    return CostFunction(std::move(spec), max_distance, std::move(values), true);
}

CostFunction CostFunction::from_spec(const std::string& spec, int max_distance) {
    if (spec == "identity") return identity(max_distance);
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "power") {
        if (arg.empty()) throw std::invalid_argument("power cost needs an exponent: 'power:2'");
        return power(parse_number(arg), max_distance);
    }
    if (kind == "exp") {
        if (arg.empty()) throw std::invalid_argument("exp cost needs a base: 'exp:2'");
        return exponential(parse_number(arg), max_distance);
    }
    if (kind == "table") {
        if (arg.empty()) throw std::invalid_argument("table cost needs values: 'table:1,3,7'");
        std::vector<double> values;
        for (const auto& item : split(arg, ',')) values.push_back(parse_number(item));
        if (static_cast<int>(values.size()) < max_distance)
            throw std::invalid_argument("table cost covers distances up to " +
                                        format_number(static_cast<long long>(values.size())) +
                                        " but distance " + format_number(max_distance) +
                                        " is needed");
        return table(std::move(values));
    }
    throw std::invalid_argument("unknown cost function '" + spec +
                                "' (expected identity, power:E, exp:B or table:v1,v2,...)");
}

double CostFunction::evaluate(int d) const {
    if (d < 1 || d > max_distance_)
        throw std::domain_error("cost function evaluated at d=" + format_number(d) +
                                " outside 1.." + format_number(max_distance_));
    return values_[static_cast<std::size_t>(d) - 1];
}

double CostFunction::prefix_sum(int m) const {
    if (m < 0 || m > max_distance_)
        throw std::domain_error("cost prefix sum at m=" + format_number(m) + " outside 0.." +
                                format_number(max_distance_));
    return prefix_[static_cast<std::size_t>(m)];
}

}  // namespace depdist
