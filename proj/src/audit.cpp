#include "depdist/audit.hpp"

#include "depdist/landscape.hpp"

namespace depdist {
namespace {

void annotate(ReportEntry& entry, const std::string& domain) {
    entry.note = entry.note.empty() ? domain : entry.note + "; " + domain;
}

}  // namespace

ConvexityReport audit_star(int n, const CostFunction& g) {
    const StarLandscape ls = star_landscape(n, g);
    return audit(ls.grid(), all_properties(), ls.tolerance);
}

ConvexityReport audit_quasistar(int n, const CostFunction& g) {
    const QuasistarGrid grid = quasistar_grid(n, g);
    const GridFunction box = quasistar_rewiring_box(n, g);
    ConvexityReport report;
    report.entries.push_back(check_discrete_convexity(grid.values, grid.tolerance));
    annotate(report.entries.back(), "domain: pairwise-distinct cells");
    report.entries.push_back(check_local_submodularity(box, g.tolerance()));
    annotate(report.entries.back(),
             "domain: full rewiring box (collision cells: zero-length edges cost 0)");
    report.entries.push_back(check_aggregate_monotonicity(grid.values, grid.tolerance));
    annotate(report.entries.back(), "domain: pairwise-distinct cells");
    return report;
}

ConvexityReport audit_planar_quasistar(int n, const CostFunction& g) {
    const StarLandscape ls = planar_effective_star(n, g);
    return audit(ls.grid(), all_properties(), ls.tolerance);
}

ConvexityReport audit_sequence(const std::vector<double>& values, double tolerance) {
    return audit(sequence_grid(values), all_properties(), tolerance);
}

}  // namespace depdist
