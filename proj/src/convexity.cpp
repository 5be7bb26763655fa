#include "depdist/convexity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "depdist/format.hpp"
#include "depdist/json_util.hpp"

namespace depdist {

namespace {

ReportEntry make_entry(const char* property, double tolerance) {
    ReportEntry entry;
    entry.property = property;
    entry.verdict = "holds";
    entry.tolerance = tolerance;
    return entry;
}

ReportEntry not_applicable(const char* property, double tolerance, std::string reason) {
    ReportEntry entry = make_entry(property, tolerance);
    entry.verdict = "not-applicable";
    entry.note = std::move(reason);
    return entry;
}

WitnessPoint seq_point(int index, double value) { return WitnessPoint{{index}, value}; }

std::string point_str(const std::vector<int>& point) {
    std::string s = "(";
    for (std::size_t i = 0; i < point.size(); ++i) s += (i ? "," : "") + format_number(point[i]);
    return s + ")";
}

long long floor_div(long long num, long long den) {
    return num >= 0 ? num / den : -((-num + den - 1) / den);
}

/// Minimum of f over the max-norm neighborhood of z = (t x + (K-t) y) / K
/// intersected with the domain: N(z) = {u in S : ||u - z|| < 1}. Per
/// coordinate the integers within distance < 1 of z are floor(z) and
/// ceil(z) (just z itself when z is integral), so at most 2^dims
/// candidates arise. Returns nullopt (instance skipped) when the whole
/// neighborhood falls on holes.
std::optional<double> neighborhood_min(const GridFunction& gf, const std::vector<int>& x,
                                       const std::vector<int>& y, int t, int K,
                                       std::vector<int>& best_point) {
    const int dims = gf.dims();
    std::array<std::array<int, 2>, 3> options{};
    std::array<int, 3> option_count{};
    for (int d = 0; d < dims; ++d) {
        const auto sd = static_cast<std::size_t>(d);
        const long long num = static_cast<long long>(t) * x[sd] +
                              static_cast<long long>(K - t) * y[sd];
        const long long lo = floor_div(num, K);
        options[sd][0] = static_cast<int>(lo);
        if (num == lo * K) {
            option_count[sd] = 1;
        } else {
            options[sd][1] = static_cast<int>(lo) + 1;
            option_count[sd] = 2;
        }
    }
    long long combos = 1;
    for (int d = 0; d < dims; ++d) combos *= option_count[static_cast<std::size_t>(d)];
    std::optional<double> best;
    std::vector<int> candidate(static_cast<std::size_t>(dims));
    for (long long c = 0; c < combos; ++c) {
        long long rem = c;
        for (int d = 0; d < dims; ++d) {
            const auto sd = static_cast<std::size_t>(d);
            candidate[sd] = options[sd][static_cast<std::size_t>(rem % option_count[sd])];
            rem /= option_count[sd];
        }
        if (const auto v = gf.value(candidate)) {
            if (!best || *v < *best) {
                best = *v;
                best_point = candidate;
            }
        }
    }
    return best;
}

}  // namespace

ReportEntry check_quasiconvex(const std::vector<double>& seq, double tolerance, int first_index) {
    ReportEntry entry = make_entry("quasiconvex", tolerance);
    const int len = static_cast<int>(seq.size());
    if (len < 3) return not_applicable("quasiconvex", tolerance, "needs at least 3 values");
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            for (int k = j + 1; k < len; ++k) {
                ++entry.checked;
                const auto si = static_cast<std::size_t>(i);
                const auto sj = static_cast<std::size_t>(j);
                const auto sk = static_cast<std::size_t>(k);
                if (seq[sj] > std::max(seq[si], seq[sk]) + tolerance) {
                    entry.verdict = "fails";
                    entry.witness = {seq_point(first_index + i, seq[si]),
                                     seq_point(first_index + j, seq[sj]),
                                     seq_point(first_index + k, seq[sk])};
                    entry.note = "f(" + format_number(first_index + j) +
                                 ") exceeds both flanking values";
                    return entry;
                }
            }
    return entry;
}

namespace {

/// First interior index violating 2 f(i) <= f(i-1) + f(i+1) + 2 tol,
/// or -1. Shared by the convex-sequence and forward-difference checks
/// so the two verdicts agree by construction.
int first_midpoint_violation(const std::vector<double>& seq, double tolerance) {
    for (int i = 1; i + 1 < static_cast<int>(seq.size()); ++i) {
        const auto si = static_cast<std::size_t>(i);
        if (2.0 * seq[si] > seq[si - 1] + seq[si + 1] + 2.0 * tolerance) return i;
    }
    return -1;
}

void fill_midpoint_failure(ReportEntry& entry, const std::vector<double>& seq, int i,
                           int first_index, std::string note) {
    const auto si = static_cast<std::size_t>(i);
    entry.verdict = "fails";
    entry.witness = {seq_point(first_index + i - 1, seq[si - 1]),
                     seq_point(first_index + i, seq[si]),
                     seq_point(first_index + i + 1, seq[si + 1])};
    entry.note = std::move(note);
}

}  // namespace

ReportEntry check_convex_sequence(const std::vector<double>& seq, double tolerance,
                                  int first_index) {
    ReportEntry entry = make_entry("convex_sequence", tolerance);
    const int len = static_cast<int>(seq.size());
    if (len < 3) return not_applicable("convex_sequence", tolerance, "needs at least 3 values");
    const int i = first_midpoint_violation(seq, tolerance);
    entry.checked = i < 0 ? len - 2 : i;
    if (i >= 0)
        fill_midpoint_failure(entry, seq, i, first_index,
                              "f(" + format_number(first_index + i) +
                                  ") exceeds the average of its neighbors");
    return entry;
}

ReportEntry check_forward_differences(const std::vector<double>& seq, double tolerance,
                                      int first_index) {
    ReportEntry entry = make_entry("forward_differences", tolerance);
    const int len = static_cast<int>(seq.size());
    if (len < 3) return not_applicable("forward_differences", tolerance, "needs at least 3 values");
    const int i = first_midpoint_violation(seq, tolerance);
    entry.checked = i < 0 ? len - 2 : i;
    if (i >= 0)
        fill_midpoint_failure(entry, seq, i, first_index,
                              "forward difference decreases after position " +
                                  format_number(first_index + i - 1));
    return entry;
}

ReportEntry check_secant_line(const std::vector<double>& seq, double tolerance, int first_index) {
    ReportEntry entry = make_entry("secant_line", tolerance);
    const int len = static_cast<int>(seq.size());
    if (len < 3) return not_applicable("secant_line", tolerance, "needs at least 3 values");
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            for (int k = j + 1; k < len; ++k) {
                ++entry.checked;
                const auto si = static_cast<std::size_t>(i);
                const auto sj = static_cast<std::size_t>(j);
                const auto sk = static_cast<std::size_t>(k);
                // (k-i) f(j) <= (k-j) f(i) + (j-i) f(k), scaled to
                // avoid dividing exact integer values.
                const double lhs = static_cast<double>(k - i) * seq[sj];
                const double rhs = static_cast<double>(k - j) * seq[si] +
                                   static_cast<double>(j - i) * seq[sk];
                if (lhs > rhs + static_cast<double>(k - i) * tolerance) {
                    entry.verdict = "fails";
                    entry.witness = {seq_point(first_index + i, seq[si]),
                                     seq_point(first_index + j, seq[sj]),
                                     seq_point(first_index + k, seq[sk])};
                    entry.note = "f(" + format_number(first_index + j) + ") lies above the chord " +
                                 format_number(first_index + i) + ".." +
                                 format_number(first_index + k);
                    return entry;
                }
            }
    return entry;
}

// The audited form is the componentwise midpoint condition: pairs
// (x, x + 2 e_d) with midpoint z = x + e_d, i.e. the univariate
// convex-sequence condition applied along every axis, with holes
// skipping the instance. For 1-D inputs this coincides with the
// unrestricted pairwise condition (midpoint convexity of an integer
// sequence implies chord convexity), so the star ladder is unaffected.
// The unrestricted pairwise form over arbitrary (x, y) is strictly
// stronger and is NOT satisfied by the rewiring landscapes this audit
// certifies: the cost surface has concave creases along the coordinate
// crossings (the -g(|l-q|) term), so long chords that straddle a crease
// can dip below the neighborhood minimum even though every axis section
// is convex.
ReportEntry check_discrete_convexity(const GridFunction& gf, double tolerance) {
    ReportEntry entry = make_entry("discrete_convexity", tolerance);
    entry.note = "componentwise midpoint condition (pairs x, x+2e_d)";
    const auto points = gf.domain_points();
    const int dims = gf.dims();
    std::vector<int> best_point(static_cast<std::size_t>(dims));
    std::vector<int> y(static_cast<std::size_t>(dims));
    for (const auto& x : points) {
        const double fx = gf.at(x);
        for (int d = 0; d < dims; ++d) {
            const auto sd = static_cast<std::size_t>(d);
            y = x;
            y[sd] += 2;
            ++entry.checked;
            const auto fy = gf.value(y);
            if (!fy) {
                // y outside the box or a hole: the pair leaves the domain.
                ++entry.skipped;
                continue;
            }
            const auto best = neighborhood_min(gf, x, y, 1, 2, best_point);
            if (!best) {
                // N(z) = {x + e_d} fell on a hole.
                ++entry.skipped;
                continue;
            }
            // f(x)/2 + f(y)/2 >= min, scaled by 2 so exact kinds compare
            // exactly.
            const double lhs = fx + *fy;
            if (lhs < 2.0 * (*best - tolerance)) {
                entry.verdict = "fails";
                entry.witness = {WitnessPoint{x, fx}, WitnessPoint{y, *fy},
                                 WitnessPoint{best_point, *best}};
                entry.alpha_num = 1;
                entry.alpha_den = 2;
                entry.note = "alpha=1/2: alpha f(x) + (1-alpha) f(y) < min over N(z), "
                             "attained at " +
                             point_str(best_point);
                return entry;
            }
        }
    }
    return entry;
}

ReportEntry check_local_submodularity(const GridFunction& gf, double tolerance) {
    ReportEntry entry = make_entry("local_submodularity", tolerance);
    const auto points = gf.domain_points();
    const int dims = gf.dims();
    std::vector<std::vector<int>> directions;
    int total = 1;
    for (int d = 0; d < dims; ++d) total *= 3;
    for (int code = 0; code < total; ++code) {
        std::vector<int> u(static_cast<std::size_t>(dims));
        int rem = code;
        for (int d = dims - 1; d >= 0; --d) {
            u[static_cast<std::size_t>(d)] = rem % 3 - 1;
            rem /= 3;
        }
        if (std::any_of(u.begin(), u.end(), [](int c) { return c != 0; })) directions.push_back(u);
    }
    std::vector<int> xu(static_cast<std::size_t>(dims));
    std::vector<int> xhi(static_cast<std::size_t>(dims));
    std::vector<int> xlo(static_cast<std::size_t>(dims));
    for (const auto& x : points) {
        const double fx = gf.at(x);
        for (const auto& u : directions) {
            for (int d = 0; d < dims; ++d) {
                const auto sd = static_cast<std::size_t>(d);
                xu[sd] = x[sd] + u[sd];
                xhi[sd] = x[sd] + std::max(u[sd], 0);
                xlo[sd] = x[sd] + std::min(u[sd], 0);
            }
            const auto fu = gf.value(xu);
            const auto fhi = gf.value(xhi);
            const auto flo = gf.value(xlo);
            if (!fu || !fhi || !flo) {
                ++entry.skipped;
                continue;
            }
            ++entry.checked;
            if (*fu + fx < *fhi + *flo - tolerance) {
                entry.verdict = "fails";
                entry.witness = {WitnessPoint{x, fx}, WitnessPoint{xu, *fu},
                                 WitnessPoint{xhi, *fhi}, WitnessPoint{xlo, *flo}};
                entry.note =
                    "u=" + point_str(u) + ": f(x+u) + f(x) < f(x v u) + f(x ^ u)";
                return entry;
            }
        }
    }
    return entry;
}

ReportEntry check_aggregate_monotonicity(const GridFunction& gf, double tolerance) {
    ReportEntry entry = make_entry("aggregate_monotonicity", tolerance);
    const auto points = gf.domain_points();
    const int dims = gf.dims();
    std::vector<int> xi(static_cast<std::size_t>(dims));
    std::vector<int> xj(static_cast<std::size_t>(dims));
    std::vector<int> xij(static_cast<std::size_t>(dims));
    for (const auto& x : points) {
        const double fx = gf.at(x);
        for (int i = 0; i < dims; ++i) {
            xi = x;
            ++xi[static_cast<std::size_t>(i)];
            const auto fxi = gf.value(xi);
            bool complete = fxi.has_value();
            double sum = 0.0;
            for (int j = 0; complete && j < dims; ++j) {
                xj = x;
                ++xj[static_cast<std::size_t>(j)];
                xij = xi;
                ++xij[static_cast<std::size_t>(j)];
                const auto fxj = gf.value(xj);
                const auto fxij = gf.value(xij);
                if (!fxj || !fxij) {
                    complete = false;
                    break;
                }
                sum += *fxij - *fxi - *fxj + fx;
            }
            if (!complete) {
                ++entry.skipped;
                continue;
            }
            ++entry.checked;
            if (sum < -tolerance) {
                entry.verdict = "fails";
                entry.witness = {WitnessPoint{x, fx}, WitnessPoint{xi, *fxi}};
                entry.coordinate = i;
                entry.note = "coordinate " + format_number(i) +
                             ": sum_j Delta_ij f(x) = " + format_number(sum);
                return entry;
            }
        }
    }
    return entry;
}

const std::vector<std::string>& all_properties() {
    static const std::vector<std::string> names = {
        "quasiconvex",        "convex_sequence",     "forward_differences", "secant_line",
        "discrete_convexity", "local_submodularity", "aggregate_monotonicity"};
    return names;
}

std::vector<std::string> default_properties(int dims) {
    if (dims == 1) return all_properties();
    return {"discrete_convexity", "local_submodularity", "aggregate_monotonicity"};
}

GridFunction sequence_grid(const std::vector<double>& values, int first_index) {
    if (values.empty()) throw std::invalid_argument("sequence grid needs at least one value");
    GridFunction gf({first_index}, {first_index + static_cast<int>(values.size()) - 1});
    for (std::size_t i = 0; i < values.size(); ++i)
        gf.set({first_index + static_cast<int>(i)}, values[i]);
    return gf;
}

ConvexityReport audit(const GridFunction& gf, const std::vector<std::string>& properties,
                      double tolerance) {
    static const std::vector<std::string> sequence_properties = {
        "quasiconvex", "convex_sequence", "forward_differences", "secant_line"};
    ConvexityReport report;
    std::vector<double> seq;
    bool contiguous = false;
    int first_index = 1;
    if (gf.dims() == 1) {
        first_index = gf.lower()[0];
        const int len = gf.upper()[0] - first_index + 1;
        if (gf.filled() == len) {
            for (int l = first_index; l < first_index + len; ++l) seq.push_back(gf.at({l}));
            contiguous = true;
        }
    }
    for (const auto& name : properties) {
        const bool is_sequence = std::find(sequence_properties.begin(), sequence_properties.end(),
                                           name) != sequence_properties.end();
        if (is_sequence) {
            if (gf.dims() != 1)
                report.entries.push_back(not_applicable(name.c_str(), tolerance,
                                                        "sequence property needs a 1-D input"));
            else if (!contiguous)
                report.entries.push_back(
                    not_applicable(name.c_str(), tolerance, "1-D input has holes"));
            else if (name == "quasiconvex")
                report.entries.push_back(check_quasiconvex(seq, tolerance, first_index));
            else if (name == "convex_sequence")
                report.entries.push_back(check_convex_sequence(seq, tolerance, first_index));
            else if (name == "forward_differences")
                report.entries.push_back(check_forward_differences(seq, tolerance, first_index));
            else
                report.entries.push_back(check_secant_line(seq, tolerance, first_index));
        } else if (name == "discrete_convexity") {
            report.entries.push_back(check_discrete_convexity(gf, tolerance));
        } else if (name == "local_submodularity") {
            report.entries.push_back(check_local_submodularity(gf, tolerance));
        } else if (name == "aggregate_monotonicity") {
            report.entries.push_back(check_aggregate_monotonicity(gf, tolerance));
        } else {
            throw std::invalid_argument("unknown convexity property '" + name + "'");
        }
    }
    return report;
}

const ReportEntry* ConvexityReport::find(std::string_view property) const {
    for (const auto& entry : entries)
        if (entry.property == property) return &entry;
    return nullptr;
}

bool ConvexityReport::all_hold() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const ReportEntry& e) { return e.holds(); });
}

std::string ConvexityReport::to_json_string() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& entry : entries) {
        nlohmann::json j;
        j["property"] = entry.property;
        j["verdict"] = entry.verdict;
        if (entry.fails()) {
            nlohmann::json witness;
            nlohmann::json points = nlohmann::json::array();
            for (const auto& wp : entry.witness)
                points.push_back({{"point", wp.point}, {"value", json_number(wp.value)}});
            witness["points"] = points;
            if (entry.alpha_den > 0)
                witness["alpha"] =
                    format_number(entry.alpha_num) + "/" + format_number(entry.alpha_den);
            if (entry.coordinate >= 0) witness["coordinate"] = entry.coordinate;
            j["witness"] = witness;
        } else {
            j["witness"] = nullptr;
        }
        if (!entry.note.empty()) j["note"] = entry.note;
        j["checked"] = entry.checked;
        j["skipped"] = entry.skipped;
        j["tolerance"] = entry.tolerance;
        arr.push_back(j);
    }
    return arr.dump(2);
}

bool witness_violates(const GridFunction& gf, const ReportEntry& entry) {
    if (!entry.fails() || entry.witness.empty()) return false;
    const double tol = entry.tolerance;
    const auto value = [&](std::size_t i) { return gf.at(entry.witness[i].point); };
    if (entry.property == "quasiconvex")
        return value(1) > std::max(value(0), value(2)) + tol;
    if (entry.property == "convex_sequence" || entry.property == "forward_differences")
        return 2.0 * value(1) > value(0) + value(2) + 2.0 * tol;
    if (entry.property == "secant_line") {
        const int i = entry.witness[0].point[0];
        const int j = entry.witness[1].point[0];
        const int k = entry.witness[2].point[0];
        return static_cast<double>(k - i) * value(1) >
               static_cast<double>(k - j) * value(0) + static_cast<double>(j - i) * value(2) +
                   static_cast<double>(k - i) * tol;
    }
    if (entry.property == "discrete_convexity") {
        std::vector<int> best_point(static_cast<std::size_t>(gf.dims()));
        const auto best = neighborhood_min(gf, entry.witness[0].point, entry.witness[1].point,
                                           entry.alpha_num, entry.alpha_den, best_point);
        if (!best) return false;
        const double lhs = static_cast<double>(entry.alpha_num) * value(0) +
                           static_cast<double>(entry.alpha_den - entry.alpha_num) * value(1);
        return lhs < static_cast<double>(entry.alpha_den) * (*best - tol);
    }
    if (entry.property == "local_submodularity")
        return value(1) + value(0) < value(2) + value(3) - tol;
    if (entry.property == "aggregate_monotonicity") {
        const auto& x = entry.witness[0].point;
        const int i = entry.coordinate;
        std::vector<int> xi = x;
        ++xi[static_cast<std::size_t>(i)];
        if (!gf.contains(xi)) return false;
        double sum = 0.0;
        for (int j = 0; j < gf.dims(); ++j) {
            std::vector<int> xj = x;
            ++xj[static_cast<std::size_t>(j)];
            std::vector<int> xij = xi;
            ++xij[static_cast<std::size_t>(j)];
            const auto fxj = gf.value(xj);
            const auto fxij = gf.value(xij);
            if (!fxj || !fxij) return false;
            sum += *fxij - gf.at(xi) - *fxj + gf.at(x);
        }
        return sum < -tol;
    }
    return false;
}

std::vector<double> fixture_sqrt_vee(int n) {
    if (n < 1) throw std::invalid_argument("fixture needs n >= 1");
    const int lstar = (n + 1) / 2;
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int l = 1; l <= n; ++l)
        values.push_back(2.0 * n * std::sqrt(std::abs(lstar - l)));
    return values;
}

std::vector<double> fixture_alternating(int n) {
    if (n < 1) throw std::invalid_argument("fixture needs n >= 1");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int l = 1; l <= n; ++l)
        values.push_back(static_cast<double>(n) * (l % 2 == 0 ? 3.0 : 1.0));
    return values;
}

}  // namespace depdist
