#include "depdist/bounds.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "depdist/cost_function.hpp"
#include "depdist/errors.hpp"
#include "depdist/format.hpp"

namespace depdist {
namespace {

void require_family_n(FamilyTag family, int n, int least) {
    if (n < least)
        throw std::domain_error(std::string(family_tag_name(family)) + " needs n >= " +
                                format_number(least) + ", got " + format_number(n));
}

int family_min_n(FamilyTag family) {
    switch (family) {
        case FamilyTag::star: return 3;
        case FamilyTag::quasistar: return 4;
        case FamilyTag::path: return 2;
        case FamilyTag::balanced_bistar: return 4;
        default: break;
    }
    throw unsupported_family_error(std::string("no generator for family ") +
                                   family_tag_name(family));
}

}  // namespace

Rational d_random(int n) {
    if (n < 2) throw std::domain_error("d_random needs n >= 2, got " + format_number(n));
    const long long nn = n;
    return Rational((nn - 1) * (nn + 1), 3);
}

long long d_min_formula(FamilyTag family, int n) {
    const long long nn = n;
    switch (family) {
        case FamilyTag::star:
            require_family_n(family, n, 3);
            return nn * nn / 4;
        case FamilyTag::path:
            require_family_n(family, n, 2);
            return nn - 1;
        case FamilyTag::quasistar:
            require_family_n(family, n, 4);
            return (nn - 1) * (nn - 1) / 4 + 1;
        default: break;
    }
    throw unsupported_family_error(std::string("no d_min formula for family ") +
                                   family_tag_name(family));
}

long long d_max_formula(FamilyTag family, int n) {
    const long long nn = n;
    switch (family) {
        case FamilyTag::star:
            require_family_n(family, n, 3);
            return nn * (nn - 1) / 2;
        case FamilyTag::quasistar:
            require_family_n(family, n, 4);
            return (nn + 3) * (nn - 2) / 2;
        case FamilyTag::balanced_bistar: {
            require_family_n(family, n, 4);
            const long long numerator = 3 * (nn - 1) * (nn - 1) + 1 - nn % 2;
            return numerator / 4;  // divisible by 4 for every parity
        }
        default: break;
    }
    throw unsupported_family_error(std::string("no d_max formula for family ") +
                                   family_tag_name(family));
}

long long caterpillar_d_min(const FreeTree& tree) {
    if (!classify(tree).has(FamilyTag::caterpillar))
        throw unsupported_family_error("caterpillar_d_min needs a caterpillar");
    long long degree_square_sum = 0;  // n<k^2> without the division
    long long odd_degrees = 0;
    for (int k : tree.degrees()) {
        degree_square_sum += static_cast<long long>(k) * k;
        odd_degrees += k % 2;
    }
    const Rational exact(degree_square_sum + odd_degrees, 4);
    if (!exact.is_integer())
        throw std::logic_error("caterpillar minimum (n<k^2>+z)/4 = " + exact.str() +
                               " is not an integer");
    return exact.num();
}

double iordanskii_curve(int n, int k_max, double c) {
    if (n < 3) throw std::domain_error("iordanskii_curve needs n >= 3, got " + format_number(n));
    if (k_max < 2)
        throw std::domain_error("iordanskii_curve needs k_max >= 2, got " + format_number(k_max));
    if (!(c > 0))
        throw std::domain_error("iordanskii_curve needs c > 0, got " + format_number(c));
    return c * static_cast<double>(k_max) / std::log(static_cast<double>(k_max)) *
           static_cast<double>(n) * std::log(static_cast<double>(n));
}

std::vector<BoundsRow> bounds_table(int n_min, int n_max,
                                    const std::vector<FamilyTag>& families, int oracle_cap) {
    if (n_min > n_max)
        throw std::invalid_argument("bounds_table: empty range " + format_number(n_min) + ".." +
                                    format_number(n_max));
    std::vector<BoundsRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        for (FamilyTag family : families) {
            if (n < family_min_n(family)) continue;
            BoundsRow row;
            row.n = n;
            row.family = family;
            row.random_baseline = d_random(n);

            std::optional<OracleResult> oracle;
            const auto oracle_cell = [&](bool want_min) -> std::optional<long long> {
                if (n > oracle_cap) return std::nullopt;
                if (!oracle)
                    oracle = brute_force(make_family(family, n),
                                         CostFunction::identity(n - 1), oracle_cap);
                return std::llround(want_min ? oracle->min : oracle->max);
            };

            std::string min_source = "formula";
            try {
                row.d_min = family == FamilyTag::balanced_bistar
                                ? caterpillar_d_min(make_balanced_bistar(n))
                                : d_min_formula(family, n);
            } catch (const unsupported_family_error&) {
                row.d_min = oracle_cell(true);
                min_source = row.d_min ? "oracle" : "none";
            }
            std::string max_source = "formula";
            try {
                row.d_max = d_max_formula(family, n);
            } catch (const unsupported_family_error&) {
                row.d_max = oracle_cell(false);
                max_source = row.d_max ? "oracle" : "none";
            }
            row.source = min_source + "/" + max_source;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace depdist
