#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "depdist/grid_function.hpp"

namespace depdist {

/// One point of a failure witness, with the value it had at audit time.
struct WitnessPoint {
    std::vector<int> point;
    double value = 0.0;
};

/// Verdict of one property check. A "fails" verdict always carries a
/// witness that re-evaluates to a violated inequality; instances that
/// needed missing (hole/out-of-box) points are skipped and counted,
/// never failed.
struct ReportEntry {
    std::string property;
    std::string verdict;  // "holds" | "fails" | "not-applicable"
    std::vector<WitnessPoint> witness;
    std::string note;      // human-readable context (u, alpha, domain, reason)
    int coordinate = -1;   // aggregate-monotonicity witness axis (0-based)
    int alpha_num = 0;     // discrete-convexity witness alpha = alpha_num/alpha_den
    int alpha_den = 0;
    long long checked = 0;
    long long skipped = 0;
    double tolerance = 0.0;

    bool holds() const { return verdict == "holds"; }
    bool fails() const { return verdict == "fails"; }
};

struct ConvexityReport {
    std::vector<ReportEntry> entries;

    const ReportEntry* find(std::string_view property) const;
    bool all_hold() const;
    std::string to_json_string() const;
};

// --- Sequence properties (values at positions first_index, first_index+1, ...) ---

/// No interior value exceeds both of any flanking pair.
ReportEntry check_quasiconvex(const std::vector<double>& seq, double tolerance,
                              int first_index = 1);
/// Every interior value is at most the average of its neighbors.
ReportEntry check_convex_sequence(const std::vector<double>& seq, double tolerance,
                                  int first_index = 1);
/// First forward differences are non-decreasing. Evaluates the same
/// scaled comparison as check_convex_sequence, so the two agree on
/// every input by construction.
ReportEntry check_forward_differences(const std::vector<double>& seq, double tolerance,
                                      int first_index = 1);
/// Every point lies on or below the chord between any two others.
ReportEntry check_secant_line(const std::vector<double>& seq, double tolerance,
                              int first_index = 1);

// --- Grid properties (1-D to 3-D, holes skipped and counted) ---

/// Componentwise midpoint convexity: for every domain point x and
/// every axis pair (x, y = x + 2e_d), f(x)/2 + f(y)/2 is at least the
/// minimum of f over the max-norm neighborhood of the midpoint
/// z = x + e_d (N(z) = {z} here, so the midpoint value when present).
/// Instances whose pair or midpoint leaves the domain are skipped and
/// counted. For 1-D inputs this coincides with midpoint convexity over
/// arbitrary pairs (and hence with check_secant_line); on grids it is
/// the specialization that the rewiring landscapes actually satisfy —
/// their axis sections are convex, while chords across the coordinate
/// crossings are not, so the unrestricted pairwise form would reject
/// them. Compared in 2-scaled integer form so exact cost kinds never
/// round.
ReportEntry check_discrete_convexity(const GridFunction& gf, double tolerance);
/// f(x+u) + f(x) >= f(x v u) + f(x ^ u) for all u in {-1,0,+1}^dims.
ReportEntry check_local_submodularity(const GridFunction& gf, double tolerance);
/// Aggregate second differences sum_j Delta_ij f(x) >= 0 for every
/// coordinate i.
ReportEntry check_aggregate_monotonicity(const GridFunction& gf, double tolerance);

/// The ladder's property names, in order: quasiconvex,
/// convex_sequence, forward_differences, secant_line,
/// discrete_convexity, local_submodularity, aggregate_monotonicity.
const std::vector<std::string>& all_properties();
/// All seven for 1-D inputs; the three grid properties otherwise.
std::vector<std::string> default_properties(int dims);

/// Runs the requested checks against the grid. Sequence properties
/// apply to 1-D hole-free grids and report not-applicable otherwise.
ConvexityReport audit(const GridFunction& gf, const std::vector<std::string>& properties,
                      double tolerance);

/// Wraps a sequence as a 1-D grid over positions first_index, ... .
GridFunction sequence_grid(const std::vector<double>& values, int first_index = 1);

/// Re-evaluates a failure witness against the grid from scratch;
/// true when the recorded inequality is violated beyond the entry's
/// tolerance. False for entries that are not failures.
bool witness_violates(const GridFunction& gf, const ReportEntry& entry);

// --- Fixture functions from the convexity figure ---

/// Q(l) = 2n sqrt(|l* - l|) with l* = ceil(n/2): quasiconvex vee that
/// is not convex.
std::vector<double> fixture_sqrt_vee(int n);
/// R(l) = n (2 + (-1)^l): alternating, not even quasiconvex.
std::vector<double> fixture_alternating(int n);

}  // namespace depdist
