#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "depdist/arrangement.hpp"
#include "depdist/audit.hpp"
#include "depdist/bounds.hpp"
#include "depdist/convexity.hpp"
#include "depdist/cost_function.hpp"
#include "depdist/errors.hpp"
#include "depdist/free_tree.hpp"
#include "depdist/landscape.hpp"
#include "depdist/rational.hpp"

namespace py = pybind11;
using namespace depdist;

namespace {

FamilyTag tag_from_name_or_throw(const std::string& name) {
    const auto tag = family_tag_from_name(name);
    if (!tag) throw std::invalid_argument("unknown family \"" + name + "\"");
    return *tag;
}

}  // namespace

PYBIND11_MODULE(depdist, m) {
    m.doc() = "dependency-distance landscapes, convexity audits and arrangement bounds";

    py::register_exception<hole_error>(m, "HoleError", PyExc_ValueError);
    py::register_exception<unsupported_family_error>(m, "UnsupportedFamilyError",
                                                     PyExc_ValueError);
    py::register_exception<oracle_cap_error>(m, "OracleCapError", PyExc_RuntimeError);

    py::class_<Rational>(m, "Rational")
        .def(py::init<long long>())
        .def(py::init<long long, long long>())
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("is_integer", &Rational::is_integer)
        .def("__float__", &Rational::to_double)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; });

    py::class_<FreeTree>(m, "FreeTree")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &FreeTree::n)
        .def_property_readonly("edges", &FreeTree::edges)
        .def_property_readonly("degrees", &FreeTree::degrees)
        .def("max_degree", &FreeTree::max_degree)
        .def("__repr__", [](const FreeTree& t) {
            return "FreeTree(n=" + std::to_string(t.n()) + ")";
        });

    m.def("make_star", &make_star, py::arg("n"));
    m.def("make_quasistar", &make_quasistar, py::arg("n"));
    m.def("make_path", &make_path, py::arg("n"));
    m.def("make_balanced_bistar", &make_balanced_bistar, py::arg("n"));
    m.def("make_caterpillar", &make_caterpillar, py::arg("spine_degrees"));
    m.def(
        "make_family",
        [](const std::string& family, int n) { return make_family(tag_from_name_or_throw(family), n); },
        py::arg("family"), py::arg("n"));
    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("to_edge_list", &to_edge_list, py::arg("tree"));
    m.def("tree_json", &to_json_string, py::arg("tree"));
    m.def("hubiness", &hubiness, py::arg("tree"));
    m.def(
        "classify",
        [](const FreeTree& t) {
            const TreeFamily family = classify(t);
            std::vector<std::string> tags;
            for (FamilyTag tag : family.tags) tags.emplace_back(family_tag_name(tag));
            return py::make_tuple(tags, family.hub ? py::cast(*family.hub) : py::none());
        },
        py::arg("tree"), "returns (tags, hub)");

    py::class_<CostFunction>(m, "CostFunction")
        .def_static("identity", &CostFunction::identity, py::arg("max_distance"))
        .def_static("power", &CostFunction::power, py::arg("exponent"), py::arg("max_distance"))
        .def_static("exponential", &CostFunction::exponential, py::arg("base"),
                    py::arg("max_distance"))
        .def_static("table", &CostFunction::table, py::arg("values"))
        .def_static("from_spec", &CostFunction::from_spec, py::arg("spec"),
                    py::arg("max_distance"))
        .def("evaluate", &CostFunction::evaluate, py::arg("distance"))
        .def("prefix_sum", &CostFunction::prefix_sum, py::arg("m"))
        .def("exact", &CostFunction::exact)
        .def("tolerance", &CostFunction::tolerance)
        .def("spec", &CostFunction::spec)
        .def("__repr__", [](const CostFunction& g) { return "CostFunction(" + g.spec() + ")"; });

    py::class_<LinearArrangement>(m, "LinearArrangement")
        .def(py::init<std::vector<int>>(), py::arg("positions"))
        .def_static("trivial", &LinearArrangement::trivial, py::arg("n"))
        .def_property_readonly("n", &LinearArrangement::n)
        .def_property_readonly("positions", &LinearArrangement::positions)
        .def("position", &LinearArrangement::position, py::arg("vertex"))
        .def("vertex_order", &LinearArrangement::vertex_order);

    m.def("total_cost",
          py::overload_cast<const FreeTree&, const LinearArrangement&, const CostFunction&>(
              &total_cost),
          py::arg("tree"), py::arg("arrangement"), py::arg("cost"));
    m.def("total_length", &total_length, py::arg("tree"), py::arg("positions"));
    m.def("is_planar",
          py::overload_cast<const FreeTree&, const LinearArrangement&>(&is_planar),
          py::arg("tree"), py::arg("arrangement"));

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("min", &OracleResult::min)
        .def_readonly("max", &OracleResult::max)
        .def_readonly("argmin_count", &OracleResult::argmin_count)
        .def_readonly("argmax_count", &OracleResult::argmax_count)
        .def_readonly("sample_argmin", &OracleResult::sample_argmin)
        .def_readonly("sample_argmax", &OracleResult::sample_argmax)
        .def_readonly("arrangements", &OracleResult::arrangements)
        .def("to_json", &OracleResult::to_json_string);

    m.def("default_oracle_cap", &default_oracle_cap);
    m.def("brute_force", &brute_force, py::arg("tree"), py::arg("cost"), py::arg("cap"),
          py::arg("planar_only") = false);
    m.def("average_length", &average_length, py::arg("tree"), py::arg("cap"));
    m.def("sampled_average_length", &sampled_average_length, py::arg("tree"),
          py::arg("samples"), py::arg("seed"));

    py::class_<StarLandscape>(m, "StarLandscape")
        .def_readonly("n", &StarLandscape::n)
        .def_readonly("cost_spec", &StarLandscape::cost_spec)
        .def_readonly("tolerance", &StarLandscape::tolerance)
        .def_readonly("values", &StarLandscape::values)
        .def_readonly("min_value", &StarLandscape::min_value)
        .def_readonly("optimal_positions", &StarLandscape::optimal_positions)
        .def("value", &StarLandscape::value, py::arg("l"));

    py::class_<QuasistarGrid>(m, "QuasistarGrid")
        .def_readonly("n", &QuasistarGrid::n)
        .def_readonly("cost_spec", &QuasistarGrid::cost_spec)
        .def_readonly("planar_only", &QuasistarGrid::planar_only)
        .def_readonly("tolerance", &QuasistarGrid::tolerance)
        .def_readonly("min_value", &QuasistarGrid::min_value)
        .def_readonly("max_value", &QuasistarGrid::max_value)
        .def_readonly("argmin", &QuasistarGrid::argmin)
        .def_readonly("argmax", &QuasistarGrid::argmax)
        .def("filled", &QuasistarGrid::filled)
        .def("value", [](const QuasistarGrid& grid, int l, int p, int q) {
            return grid.values.value({l, p, q});
        });

    m.def("star_cost", &star_cost, py::arg("n"), py::arg("l"), py::arg("cost"));
    m.def("star_landscape", &star_landscape, py::arg("n"), py::arg("cost"));
    m.def("quasistar_cost", &quasistar_cost, py::arg("n"), py::arg("l"), py::arg("p"),
          py::arg("q"), py::arg("cost"));
    m.def("quasistar_grid", &quasistar_grid, py::arg("n"), py::arg("cost"),
          py::arg("planar_only") = false);
    m.def("planar_effective_star", &planar_effective_star, py::arg("n"), py::arg("cost"));
    m.def("quasistar_arrangement", &quasistar_arrangement, py::arg("n"), py::arg("l"),
          py::arg("p"), py::arg("q"));

    py::class_<WitnessPoint>(m, "WitnessPoint")
        .def_readonly("point", &WitnessPoint::point)
        .def_readonly("value", &WitnessPoint::value);

    py::class_<ReportEntry>(m, "ReportEntry")
        .def_readonly("property", &ReportEntry::property)
        .def_readonly("verdict", &ReportEntry::verdict)
        .def_readonly("witness", &ReportEntry::witness)
        .def_readonly("note", &ReportEntry::note)
        .def_readonly("checked", &ReportEntry::checked)
        .def_readonly("skipped", &ReportEntry::skipped)
        .def_readonly("tolerance", &ReportEntry::tolerance)
        .def("holds", &ReportEntry::holds)
        .def("fails", &ReportEntry::fails);

    py::class_<ConvexityReport>(m, "ConvexityReport")
        .def_readonly("entries", &ConvexityReport::entries)
        .def("all_hold", &ConvexityReport::all_hold)
        .def(
            "verdict",
            [](const ConvexityReport& report, const std::string& property) {
                const ReportEntry* entry = report.find(property);
                if (!entry) throw std::invalid_argument("no property named " + property);
                return entry->verdict;
            },
            py::arg("property"))
        .def("to_json", &ConvexityReport::to_json_string);

    m.def("audit_star", &audit_star, py::arg("n"), py::arg("cost"));
    m.def("audit_quasistar", &audit_quasistar, py::arg("n"), py::arg("cost"));
    m.def("audit_planar_quasistar", &audit_planar_quasistar, py::arg("n"), py::arg("cost"));
    m.def("audit_sequence", &audit_sequence, py::arg("values"), py::arg("tolerance"));

    m.def("d_random", &d_random, py::arg("n"));
    m.def(
        "d_min_formula",
        [](const std::string& family, int n) { return d_min_formula(tag_from_name_or_throw(family), n); },
        py::arg("family"), py::arg("n"));
    m.def(
        "d_max_formula",
        [](const std::string& family, int n) { return d_max_formula(tag_from_name_or_throw(family), n); },
        py::arg("family"), py::arg("n"));
    m.def("caterpillar_d_min", &caterpillar_d_min, py::arg("tree"));
    m.def("iordanskii_curve", &iordanskii_curve, py::arg("n"), py::arg("k_max"),
          py::arg("c") = 1.0);

    py::class_<BoundsRow>(m, "BoundsRow")
        .def_readonly("n", &BoundsRow::n)
        .def_property_readonly(
            "family", [](const BoundsRow& row) { return std::string(family_tag_name(row.family)); })
        .def_readonly("d_min", &BoundsRow::d_min)
        .def_readonly("d_max", &BoundsRow::d_max)
        .def_readonly("d_random", &BoundsRow::random_baseline)
        .def_readonly("source", &BoundsRow::source);

    m.def(
        "bounds_table",
        [](int n_min, int n_max, const std::vector<std::string>& families, int oracle_cap) {
            std::vector<FamilyTag> tags;
            tags.reserve(families.size());
            for (const std::string& name : families) tags.push_back(tag_from_name_or_throw(name));
            return bounds_table(n_min, n_max, tags,
                                oracle_cap > 0 ? oracle_cap : default_oracle_cap());
        },
        py::arg("n_min"), py::arg("n_max"),
        py::arg("families") =
            std::vector<std::string>{"star", "quasistar", "path", "balanced_bistar"},
        py::arg("oracle_cap") = 0);
}
