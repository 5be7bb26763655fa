#pragma once

#include <optional>
#include <string>
#include <vector>

#include "depdist/arrangement.hpp"
#include "depdist/free_tree.hpp"
#include "depdist/rational.hpp"

namespace depdist {

/// Expected total dependency distance of a uniformly random arrangement
/// of any tree of n vertices: (n - 1)(n + 1)/3, exact. Requires n >= 2.
Rational d_random(int n);

/// Closed-form identity-cost minimum: star floor(n^2/4), path n - 1,
/// quasistar floor((n-1)^2/4) + 1. Other families throw
/// unsupported_family_error; n below the family's validity range throws
/// std::domain_error.
long long d_min_formula(FamilyTag family, int n);

/// Closed-form identity-cost maximum: star n(n-1)/2, quasistar
/// (n+3)(n-2)/2, balanced bistar (3(n-1)^2 + 1 - (n mod 2))/4. Other
/// families throw unsupported_family_error.
long long d_max_formula(FamilyTag family, int n);

/// (n<k^2> + z)/4 with z the number of odd-degree vertices: the exact
/// identity-cost minimum of any caterpillar. Evaluated in exact rational
/// arithmetic and checked to be integral. Non-caterpillars throw
/// unsupported_family_error.
long long caterpillar_d_min(const FreeTree& tree);

/// Reference growth curve c * k_max/ln(k_max) * n * ln(n) for the
/// minimum over trees of maximum degree k_max. Natural logarithms.
/// Requires n >= 3, k_max >= 2, c > 0. Reference only: it bounds the
/// asymptotic order, not any specific finite tree here.
double iordanskii_curve(int n, int k_max, double c = 1.0);

struct BoundsRow {
    int n = 0;
    FamilyTag family = FamilyTag::other;
    std::optional<long long> d_min;
    std::optional<long long> d_max;
    Rational random_baseline;
    /// "<d_min provenance>/<d_max provenance>", each of formula, oracle
    /// or none. A "none" cell is empty in every export.
    std::string source;
};

/// One row per (n, family) pair whose n lies in the family's validity
/// range, n ascending and families in the given order. d_min/d_max come
/// from the closed forms where the catalog has one (balanced bistar
/// minima via the caterpillar formula) and from the exhaustive identity
/// oracle otherwise while n <= oracle_cap; beyond the cap the cell stays
/// empty, never extrapolated.
std::vector<BoundsRow> bounds_table(int n_min, int n_max,
                                    const std::vector<FamilyTag>& families,
                                    int oracle_cap = default_oracle_cap());

}  // namespace depdist
