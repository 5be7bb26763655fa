#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "depdist/arrangement.hpp"
#include "depdist/audit.hpp"
#include "depdist/bounds.hpp"
#include "depdist/convexity.hpp"
#include "depdist/cost_function.hpp"
#include "depdist/errors.hpp"
#include "depdist/export.hpp"
#include "depdist/format.hpp"
#include "depdist/free_tree.hpp"
#include "depdist/grid_function.hpp"
#include "depdist/landscape.hpp"
#include "depdist/rational.hpp"

using namespace depdist;

namespace {

CostFunction identity_for(int n) { return CostFunction::identity(std::max(1, n - 1)); }

std::vector<std::string> tags_of(const FreeTree& t) {
    std::vector<std::string> out;
    for (FamilyTag tag : classify(t).tags) out.emplace_back(family_tag_name(tag));
    return out;
}

bool has_tag(const FreeTree& t, FamilyTag tag) { return classify(t).has(tag); }

}  // namespace

// ---------------------------------------------------------------- rational

TEST_CASE("rational normalizes and formats") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(143, 3).str() == "143/3");
    CHECK(Rational(10, 2).str() == "5");
    CHECK(Rational(10, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and order") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(5, 2) - Rational(1, 2) == Rational(2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(-Rational(3, 2) == Rational(-3, 2));
}

// ---------------------------------------------------------------- format

TEST_CASE("number formatting is shortest round trip") {
    CHECK(format_number(1) == "1");
    CHECK(format_number(47.0) == "47");
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(-2.25) == "-2.25");
    CHECK(format_number(9007199254740992.0) == "9007199254740992");
    const double third = 143.0 / 3.0;
    CHECK(parse_number(format_number(third)) == third);
    CHECK(parse_number("12") == 12.0);
    CHECK_THROWS_AS(parse_number("12abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_number(""), std::invalid_argument);
}

// ---------------------------------------------------------------- cost functions

TEST_CASE("identity cost evaluates distances and prefix sums") {
    const CostFunction g = CostFunction::identity(6);
    CHECK(g.evaluate(1) == 1.0);
    CHECK(g.evaluate(6) == 6.0);
    CHECK(g.prefix_sum(0) == 0.0);
    CHECK(g.prefix_sum(4) == 10.0);
    CHECK(g.exact());
    CHECK(g.tolerance() == 0.0);
    CHECK(g.spec() == "identity");
    CHECK_THROWS_AS(g.evaluate(0), std::domain_error);
    CHECK_THROWS_AS(g.evaluate(7), std::domain_error);
    CHECK_THROWS_AS(g.prefix_sum(-1), std::domain_error);
    CHECK_THROWS_AS(g.prefix_sum(7), std::domain_error);
}

TEST_CASE("power, exponential and table kinds") {
    const CostFunction square = CostFunction::power(2, 5);
    CHECK(square.evaluate(3) == 9.0);
    CHECK(square.prefix_sum(3) == 14.0);
    CHECK(square.exact());

    const CostFunction base2 = CostFunction::exponential(2, 5);
    CHECK(base2.evaluate(4) == 16.0);
    CHECK(base2.exact());

    const CostFunction frac = CostFunction::power(1.5, 5);
    CHECK(!frac.exact());
    CHECK(frac.tolerance() == 1e-9);

    const CostFunction tab = CostFunction::table({1, 4, 9, 16});
    CHECK(tab.max_distance() == 4);
    CHECK(tab.evaluate(2) == 4.0);
    CHECK(tab.exact());
}

TEST_CASE("cost specs parse and reject non-increasing tables") {
    CHECK(CostFunction::from_spec("identity", 4).evaluate(3) == 3.0);
    CHECK(CostFunction::from_spec("power:2", 4).evaluate(3) == 9.0);
    CHECK(CostFunction::from_spec("exp:2", 4).evaluate(3) == 8.0);
    CHECK(CostFunction::from_spec("table:1,3,7,20", 4).evaluate(4) == 20.0);
    CHECK_THROWS_AS(CostFunction::from_spec("table:1,2", 4), std::invalid_argument);
    CHECK_THROWS_AS(CostFunction::from_spec("mystery", 4), std::invalid_argument);
    CHECK_THROWS_AS(CostFunction::from_spec("power:0", 4), std::invalid_argument);
    CHECK_THROWS_AS(CostFunction::from_spec("exp:1", 4), std::invalid_argument);
    CHECK_THROWS_AS(CostFunction::table({1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(CostFunction::table({3, 2, 1}), std::invalid_argument);
}

// ---------------------------------------------------------------- trees

TEST_CASE("tree construction validates the full invariant set") {
    CHECK_NOTHROW(FreeTree(2, {{0, 1}}));
    CHECK_THROWS_AS(FreeTree(3, {{0, 1}}), std::invalid_argument);               // too few edges
    CHECK_THROWS_AS(FreeTree(3, {{0, 1}, {1, 2}, {0, 2}}), std::invalid_argument);  // cycle
    CHECK_THROWS_AS(FreeTree(4, {{0, 1}, {1, 0}, {2, 3}}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(FreeTree(3, {{0, 0}, {1, 2}}), std::invalid_argument);       // self loop
    CHECK_THROWS_AS(FreeTree(3, {{0, 1}, {1, 3}}), std::invalid_argument);       // label range
    CHECK_THROWS_AS(FreeTree(4, {{0, 1}, {0, 2}, {1, 2}}), std::invalid_argument);  // disconnected
}

TEST_CASE("generators produce the advertised degree sequences") {
    const FreeTree star = make_star(6);
    CHECK(star.degree(0) == 5);
    CHECK(star.max_degree() == 5);

    const FreeTree quasi = make_quasistar(6);
    CHECK(quasi.degree(0) == 4);
    CHECK(quasi.degree(1) == 2);
    CHECK(quasi.degree(5) == 1);

    const FreeTree path = make_path(5);
    CHECK(path.max_degree() == 2);

    const FreeTree bistar = make_balanced_bistar(7);
    const int a = bistar.degree(0), b = bistar.degree(1);
    CHECK(a + b == 7);  // 5 leaves + the joining edge counted twice
    CHECK(std::abs(a - b) <= 1);

    const FreeTree cat = make_caterpillar({2, 3, 2});
    CHECK(cat.n() == 6);
    CHECK(cat.degrees() == std::vector<int>{2, 3, 2, 1, 1, 1});
    CHECK_THROWS_AS(make_caterpillar({1, 1, 2}), std::domain_error);
    CHECK_THROWS_AS(make_star(2), std::domain_error);
    CHECK_THROWS_AS(make_quasistar(3), std::domain_error);
}

TEST_CASE("make_family covers the four generator-backed tags") {
    CHECK(make_family(FamilyTag::star, 5).max_degree() == 4);
    CHECK(make_family(FamilyTag::path, 5).max_degree() == 2);
    CHECK(make_family(FamilyTag::quasistar, 5).n() == 5);
    CHECK(make_family(FamilyTag::balanced_bistar, 6).n() == 6);
    CHECK_THROWS_AS(make_family(FamilyTag::caterpillar, 6), unsupported_family_error);
    CHECK_THROWS_AS(make_family(FamilyTag::other, 6), unsupported_family_error);
}

TEST_CASE("classification returns every applicable tag") {
    CHECK(has_tag(make_star(5), FamilyTag::star));
    CHECK(has_tag(make_star(5), FamilyTag::caterpillar));
    CHECK(has_tag(make_quasistar(5), FamilyTag::quasistar));
    CHECK(has_tag(make_quasistar(5), FamilyTag::caterpillar));
    CHECK(has_tag(make_path(5), FamilyTag::path));
    CHECK(has_tag(make_path(5), FamilyTag::caterpillar));
    CHECK(has_tag(make_balanced_bistar(6), FamilyTag::bistar));
    CHECK(has_tag(make_balanced_bistar(6), FamilyTag::balanced_bistar));

    // The four-vertex path coincides with several families at once.
    const FreeTree p4 = make_path(4);
    for (FamilyTag tag : {FamilyTag::path, FamilyTag::quasistar, FamilyTag::bistar,
                          FamilyTag::balanced_bistar, FamilyTag::caterpillar})
        CHECK(has_tag(p4, tag));

    // A three-legged spider is none of the named families.
    const FreeTree spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(tags_of(spider) == std::vector<std::string>{"other"});
    CHECK(!has_tag(spider, FamilyTag::caterpillar));

    CHECK(*classify(make_star(6)).hub == 0);
    CHECK(*classify(make_quasistar(6)).hub == 0);
}

TEST_CASE("hubiness is exact and ordered star > quasistar > path") {
    CHECK(hubiness(make_path(4)) == Rational(5, 2));
    CHECK(hubiness(make_star(4)) == Rational(3));
    CHECK(hubiness(make_quasistar(4)) == hubiness(make_path(4)));  // same shape at n=4
    for (int n = 5; n <= 20; ++n) {
        CHECK(hubiness(make_star(n)) > hubiness(make_quasistar(n)));
        CHECK(hubiness(make_quasistar(n)) > hubiness(make_path(n)));
    }
}

TEST_CASE("edge lists round trip and JSON carries n, edges and tags") {
    const FreeTree cat = make_caterpillar({2, 3, 2});
    const FreeTree back = parse_edge_list(to_edge_list(cat));
    CHECK(back.n() == cat.n());
    CHECK(back.edges() == cat.edges());
    CHECK_THROWS_AS(parse_edge_list("0 1\n1"), std::invalid_argument);

    const auto j = nlohmann::json::parse(to_json_string(make_star(4)));
    CHECK(j["n"] == 4);
    CHECK(j["edges"].size() == 3);
    const auto& tags = j["tags"];
    CHECK(std::find(tags.begin(), tags.end(), "star") != tags.end());
}

// ---------------------------------------------------------------- arrangements

TEST_CASE("arrangements validate bijections onto 1..n") {
    CHECK(LinearArrangement::trivial(4).positions() == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(LinearArrangement({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(LinearArrangement({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(LinearArrangement({1, 2, 4}), std::invalid_argument);
    const LinearArrangement arr({3, 1, 2});
    CHECK(arr.position(0) == 3);
    CHECK(arr.vertex_order() == std::vector<int>{1, 2, 0});
}

TEST_CASE("total cost sums g over edge gaps and matches total length") {
    const FreeTree path = make_path(4);
    const CostFunction g = identity_for(4);
    CHECK(total_cost(path, LinearArrangement::trivial(4), g) == 3.0);
    const std::vector<int> positions{1, 3, 2, 4};
    CHECK(total_cost(path, positions, g) == 2 + 1 + 2);
    CHECK(total_length(path, positions) == 5);
    const CostFunction square = CostFunction::power(2, 3);
    CHECK(total_cost(path, positions, square) == 4 + 1 + 4);
}

TEST_CASE("cost is invariant under reversing the line") {
    const FreeTree cat = make_caterpillar({2, 3, 2});
    const CostFunction square = CostFunction::power(2, 5);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const LinearArrangement arr = random_arrangement(6, rng);
        std::vector<int> mirrored;
        for (int p : arr.positions()) mirrored.push_back(7 - p);
        CHECK(total_cost(cat, arr, square) ==
              total_cost(cat, LinearArrangement(mirrored), square));
    }
}

TEST_CASE("planarity detects exactly the strictly interleaved spans") {
    const FreeTree path = make_path(4);
    CHECK(is_planar(path, LinearArrangement::trivial(4)));
    // vertex order 0,2,1,3 makes edges (0,1) and (2,3) interleave.
    CHECK(!is_planar(path, std::vector<int>{1, 3, 2, 4}));
    // Star edges all share the hub, so every arrangement is planar.
    const FreeTree star = make_star(6);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(is_planar(star, random_arrangement(6, rng)));
}

TEST_CASE("random arrangements are seed deterministic") {
    std::mt19937_64 a(42), b(42), c(43);
    const auto first = random_arrangement(8, a).positions();
    CHECK(first == random_arrangement(8, b).positions());
    CHECK(first != random_arrangement(8, c).positions());
}

TEST_CASE("arrangement enumeration is lexicographic and complete") {
    int count = 0;
    std::vector<int> first, last;
    for_each_arrangement(4, [&](const std::vector<int>& positions) {
        if (count == 0) first = positions;
        last = positions;
        ++count;
    });
    CHECK(count == 24);
    CHECK(first == std::vector<int>{1, 2, 3, 4});
    CHECK(last == std::vector<int>{4, 3, 2, 1});
}

// ---------------------------------------------------------------- oracle

TEST_CASE("brute force pins the star and path extrema") {
    const OracleResult star4 = brute_force(make_star(4), identity_for(4), 9);
    CHECK(star4.min == 4.0);
    CHECK(star4.max == 6.0);
    CHECK(star4.argmin_count == 12);  // hub at position 2 or 3, leaves free
    CHECK(star4.argmax_count == 12);
    CHECK(star4.arrangements == 24);
    CHECK(star4.sample_argmin == std::vector<int>{2, 1, 3, 4});

    const OracleResult path4 = brute_force(make_path(4), identity_for(4), 9);
    CHECK(path4.min == 3.0);
    CHECK(path4.max == 7.0);
    CHECK(path4.argmin_count == 2);  // the two monotone orders
}

TEST_CASE("oracle JSON carries exactly the documented keys") {
    const OracleResult r = brute_force(make_path(4), identity_for(4), 9);
    const auto j = nlohmann::json::parse(r.to_json_string());
    std::set<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
    CHECK(keys == std::set<std::string>{"min", "max", "argmin_count", "argmax_count",
                                        "sample_argmin"});
    CHECK(j["min"].is_number_integer());
    CHECK(j["sample_argmin"].size() == 4);
}

TEST_CASE("oracle refuses beyond the cap, naming it") {
    CHECK_THROWS_AS(brute_force(make_path(10), identity_for(10), 9), oracle_cap_error);
    try {
        brute_force(make_path(10), identity_for(10), 9);
    } catch (const oracle_cap_error& e) {
        CHECK(e.n() == 10);
        CHECK(e.cap() == 9);
        CHECK(std::string(e.what()).find("oracle cap 9") != std::string::npos);
    }
}

TEST_CASE("planar-only search is a restriction of the full search") {
    const FreeTree quasi = make_quasistar(5);
    const CostFunction g = identity_for(5);
    const OracleResult full = brute_force(quasi, g, 9);
    const OracleResult planar = brute_force(quasi, g, 9, true);
    CHECK(planar.arrangements < full.arrangements);
    CHECK(planar.min >= full.min);
    CHECK(planar.max <= full.max);
    CHECK(planar.min == 5.0);
}

TEST_CASE("exact and sampled average lengths") {
    CHECK(average_length(make_path(3), 9) == Rational(8, 3));
    CHECK(average_length(make_star(4), 9) == Rational(5));
    CHECK(average_length(make_caterpillar({2, 3, 2}), 9) == d_random(6));
    const double a = sampled_average_length(make_quasistar(8), 2000, 5);
    CHECK(a == sampled_average_length(make_quasistar(8), 2000, 5));
    CHECK(a != sampled_average_length(make_quasistar(8), 2000, 6));
}

// ---------------------------------------------------------------- grid function

TEST_CASE("grid functions hold values, holes and lexicographic order") {
    GridFunction gf({1, 1}, {2, 3});
    CHECK(gf.dims() == 2);
    CHECK(gf.filled() == 0);
    gf.set({1, 1}, 10);
    gf.set({2, 3}, 20);
    gf.set({1, 3}, 30);
    CHECK(gf.filled() == 3);
    CHECK(gf.contains({1, 1}));
    CHECK(!gf.contains({1, 2}));
    CHECK(!gf.in_box({0, 1}));
    CHECK(gf.value({9, 9}) == std::nullopt);
    CHECK(gf.at({2, 3}) == 20.0);
    CHECK_THROWS_AS(gf.at({1, 2}), std::domain_error);
    CHECK(gf.domain_points() ==
          std::vector<std::vector<int>>{{1, 1}, {1, 3}, {2, 3}});
    std::vector<double> seen;
    gf.for_each([&](const std::vector<int>&, double v) { seen.push_back(v); });
    CHECK(seen == std::vector<double>{10, 30, 20});
    CHECK_THROWS_AS(GridFunction({1, 1, 1, 1}, {2, 2, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction({2}, {1}), std::invalid_argument);
}

// ---------------------------------------------------------------- landscapes

TEST_CASE("star landscape matches hand values and the closed form") {
    const StarLandscape ls5 = star_landscape(5, identity_for(5));
    CHECK(ls5.values == std::vector<double>{10, 7, 6, 7, 10});
    CHECK(ls5.min_value == 6.0);
    CHECK(ls5.optimal_positions == std::vector<int>{3});

    const StarLandscape ls4 = star_landscape(4, identity_for(4));
    CHECK(ls4.values == std::vector<double>{6, 4, 4, 6});
    CHECK(ls4.optimal_positions == std::vector<int>{2, 3});

    for (int n = 3; n <= 30; ++n)
        for (int l = 1; l <= n; ++l) {
            const long long expected =
                static_cast<long long>(l) * l - static_cast<long long>(n + 1) * l +
                static_cast<long long>(n) * (n + 1) / 2;
            CHECK(star_cost(n, l, identity_for(n)) == static_cast<double>(expected));
        }
    CHECK_THROWS_AS(star_cost(2, 1, identity_for(3)), std::invalid_argument);
    CHECK_THROWS_AS(star_cost(5, 0, identity_for(5)), std::domain_error);
    CHECK_THROWS_AS(star_cost(5, 6, identity_for(5)), std::domain_error);
}

TEST_CASE("quasistar rewiring cost and holes") {
    const CostFunction g = identity_for(5);
    CHECK(quasistar_cost(5, 3, 2, 1, g) == 5.0);
    CHECK(quasistar_cost(5, 3, 4, 5, g) == 5.0);  // mirror cell
    CHECK_THROWS_AS(quasistar_cost(5, 3, 3, 1, g), hole_error);
    CHECK_THROWS_AS(quasistar_cost(5, 3, 1, 3, g), hole_error);
    CHECK_THROWS_AS(quasistar_cost(5, 3, 1, 1, g), hole_error);
    CHECK_THROWS_AS(quasistar_cost(5, 0, 1, 2, g), std::domain_error);
    CHECK_THROWS_AS(quasistar_cost(3, 1, 2, 3, g), std::invalid_argument);
}

TEST_CASE("quasistar grid fills all pairwise-distinct cells") {
    const QuasistarGrid grid = quasistar_grid(6, identity_for(6));
    CHECK(grid.filled() == 6LL * 5 * 4);
    CHECK(grid.values.value({2, 2, 5}) == std::nullopt);
    CHECK(grid.values.at({3, 2, 1}) == quasistar_cost(6, 3, 2, 1, identity_for(6)));
    CHECK(grid.tolerance == 0.0);
}

TEST_CASE("quasistar grid is symmetric under mirroring the line") {
    const QuasistarGrid grid = quasistar_grid(7, identity_for(7));
    grid.values.for_each([&](const std::vector<int>& cell, double v) {
        CHECK(grid.values.at({8 - cell[0], 8 - cell[1], 8 - cell[2]}) == v);
    });
}

TEST_CASE("grid slices partition the filled cells") {
    const QuasistarGrid grid = quasistar_grid(12, identity_for(12));
    const GridSlice q1 = slice(grid, 'q', 1);
    CHECK(q1.row_axis == 'l');
    CHECK(q1.col_axis == 'p');
    CHECK(q1.filled == 110);
    CHECK(*q1.cells[2][1] == grid.values.at({3, 2, 1}));
    CHECK(!q1.cells[0][0].has_value());  // l = p collision

    long long total = 0;
    for (int q = 1; q <= 12; ++q) total += slice(grid, 'q', q).filled;
    CHECK(total == grid.filled());

    const GridSlice l3 = slice(grid, 'l', 3);
    CHECK(l3.row_axis == 'p');
    CHECK(l3.col_axis == 'q');
    CHECK(*l3.cells[1][0] == grid.values.at({3, 2, 1}));
    const GridSlice p2 = slice(grid, 'p', 2);
    CHECK(p2.row_axis == 'l');
    CHECK(p2.col_axis == 'q');
    CHECK(*p2.cells[2][0] == grid.values.at({3, 2, 1}));
    CHECK_THROWS_AS(slice(grid, 'z', 1), std::invalid_argument);
    CHECK_THROWS_AS(slice(grid, 'q', 0), std::domain_error);
}

TEST_CASE("published n=12 grid range") {
    const QuasistarGrid grid = quasistar_grid(12, identity_for(12));
    CHECK(grid.filled() == 1320);
    CHECK(grid.min_value == 31.0);
    CHECK(grid.max_value == 75.0);
}

TEST_CASE("rewiring box extends the landscape over collision cells") {
    const CostFunction g = identity_for(5);
    const GridFunction box = quasistar_rewiring_box(5, g);
    CHECK(box.filled() == 125);  // no holes
    CHECK(box.at({3, 2, 1}) == quasistar_cost(5, 3, 2, 1, g));
    // l = q: the hub-to-q edge has zero length and costs 0, not g(0).
    CHECK(box.at({3, 2, 3}) == star_cost(5, 3, g) + g.evaluate(1));
    // p = q: the rewired edge has zero length.
    CHECK(box.at({3, 1, 1}) == star_cost(5, 3, g) - g.evaluate(2));
}

TEST_CASE("planar grid keeps only adjacent p,q cells and they are crossing free") {
    const int n = 5;
    const QuasistarGrid planar = quasistar_grid(n, identity_for(n), true);
    CHECK(planar.filled() == 2LL * (n - 1) * (n - 2));
    const FreeTree tree = make_quasistar(n);
    planar.values.for_each([&](const std::vector<int>& cell, double) {
        CHECK(std::abs(cell[1] - cell[2]) == 1);
        CHECK(is_planar(tree, quasistar_arrangement(n, cell[0], cell[1], cell[2])));
    });
    CHECK(planar.min_value == 5.0);
}

TEST_CASE("effective star predicts the planar minima") {
    for (int n = 4; n <= 7; ++n) {
        const CostFunction g = identity_for(n);
        const StarLandscape eff = planar_effective_star(n, g);
        CHECK(eff.n == n - 1);
        for (int l = 1; l <= n - 1; ++l)
            CHECK(eff.value(l) == star_cost(n - 1, l, g) + g.evaluate(1));
        CHECK(eff.min_value == quasistar_grid(n, g, true).min_value);
    }
}

TEST_CASE("canonical arrangements realize grid cells") {
    const LinearArrangement arr = quasistar_arrangement(5, 3, 2, 1);
    CHECK(arr.positions() == std::vector<int>{3, 2, 4, 5, 1});
    CHECK(total_cost(make_quasistar(5), arr, identity_for(5)) == 5.0);
    CHECK_THROWS_AS(quasistar_arrangement(5, 3, 3, 1), hole_error);
    for (int n = 4; n <= 6; ++n) {
        const CostFunction g = CostFunction::power(2, n - 1);
        const QuasistarGrid grid = quasistar_grid(n, g);
        const FreeTree tree = make_quasistar(n);
        grid.values.for_each([&](const std::vector<int>& cell, double v) {
            CHECK(total_cost(tree, quasistar_arrangement(n, cell[0], cell[1], cell[2]), g) == v);
        });
    }
}

// ---------------------------------------------------------------- convexity checkers

TEST_CASE("sequence checkers agree with hand-verified examples") {
    const std::vector<double> convex{6, 4, 4, 6};
    CHECK(check_quasiconvex(convex, 0.0).holds());
    CHECK(check_convex_sequence(convex, 0.0).holds());
    CHECK(check_forward_differences(convex, 0.0).holds());
    CHECK(check_secant_line(convex, 0.0).holds());

    const std::vector<double> bump{0, 5, 0};
    CHECK(check_quasiconvex(bump, 0.0).fails());
    CHECK(check_convex_sequence(bump, 0.0).fails());

    const std::vector<double> vee = fixture_sqrt_vee(8);
    CHECK(check_quasiconvex(vee, 1e-9).holds());
    const ReportEntry convexity = check_convex_sequence(vee, 1e-9);
    CHECK(convexity.fails());
    CHECK(witness_violates(sequence_grid(vee), convexity));

    const std::vector<double> alternating = fixture_alternating(8);
    const ReportEntry quasi = check_quasiconvex(alternating, 1e-9);
    CHECK(quasi.fails());
    CHECK(witness_violates(sequence_grid(alternating), quasi));
}

TEST_CASE("midpoint checks share one predicate so the equivalences are structural") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 300; ++trial) {
        const int len = 3 + static_cast<int>(rng() % 8);
        std::vector<double> seq;
        for (int i = 0; i < len; ++i) seq.push_back(static_cast<double>(rng() % 21));
        const ReportEntry convex = check_convex_sequence(seq, 0.0);
        const ReportEntry forward = check_forward_differences(seq, 0.0);
        const ReportEntry secant = check_secant_line(seq, 0.0);
        const ReportEntry quasi = check_quasiconvex(seq, 0.0);
        CHECK(convex.verdict == forward.verdict);
        CHECK(convex.verdict == secant.verdict);
        if (convex.holds()) CHECK(quasi.holds());
        for (const ReportEntry* entry : {&convex, &forward, &secant, &quasi})
            if (entry->fails()) CHECK(witness_violates(sequence_grid(seq), *entry));
    }
}

TEST_CASE("discrete convexity accepts separable squares and rejects a bump") {
    GridFunction squares({1, 1}, {4, 4});
    for (int x = 1; x <= 4; ++x)
        for (int y = 1; y <= 4; ++y) squares.set({x, y}, x * x + y * y);
    CHECK(check_discrete_convexity(squares, 0.0).holds());

    GridFunction bump({1, 1}, {3, 3});
    for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y) bump.set({x, y}, 0.0);
    bump.set({2, 2}, 5.0);
    const ReportEntry entry = check_discrete_convexity(bump, 0.0);
    CHECK(entry.fails());
    // First failing axis pair in scan order: x=(1,2), y=(3,2), midpoint
    // z=(2,2) carrying the bump.
    CHECK(entry.witness.front().point == std::vector<int>{1, 2});
    CHECK(entry.witness[1].point == std::vector<int>{3, 2});
    CHECK(entry.witness[2].point == std::vector<int>{2, 2});
    CHECK(entry.alpha_num == 1);
    CHECK(entry.alpha_den == 2);
    CHECK(witness_violates(bump, entry));
}

TEST_CASE("local submodularity flags the product surface") {
    GridFunction product({1, 1}, {3, 3});
    for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y) product.set({x, y}, x * y);
    const ReportEntry entry = check_local_submodularity(product, 0.0);
    CHECK(entry.fails());
    CHECK(entry.witness.size() == 4);
    CHECK(entry.witness[0].point == std::vector<int>{1, 2});
    CHECK(witness_violates(product, entry));

    GridFunction negated({1, 1}, {3, 3});
    for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y) negated.set({x, y}, -(x * y));
    CHECK(check_local_submodularity(negated, 0.0).holds());
}

TEST_CASE("aggregate monotonicity reads the sign of the mixed differences") {
    GridFunction product({1, 1}, {3, 3});
    GridFunction negated({1, 1}, {3, 3});
    for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y) {
            product.set({x, y}, x * y);
            negated.set({x, y}, -(x * y));
        }
    CHECK(check_aggregate_monotonicity(product, 0.0).holds());
    const ReportEntry entry = check_aggregate_monotonicity(negated, 0.0);
    CHECK(entry.fails());
    CHECK(entry.coordinate >= 0);
    CHECK(witness_violates(negated, entry));
}

TEST_CASE("hole instances are skipped and counted, never failed") {
    GridFunction holed({1, 1}, {3, 3});
    for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y)
            if (x != 2 || y != 2) holed.set({x, y}, x * x + y * y);
    const ReportEntry dc = check_discrete_convexity(holed, 0.0);
    CHECK(dc.holds());
    CHECK(dc.skipped > 0);
    const ReportEntry sub = check_local_submodularity(holed, 0.0);
    CHECK(sub.holds());
    CHECK(sub.skipped > 0);
}

TEST_CASE("audits bundle the ladder and sequence properties need 1-D input") {
    const ConvexityReport star = audit_star(7, identity_for(7));
    CHECK(star.entries.size() == all_properties().size());
    CHECK(star.all_hold());
    CHECK(star.find("secant_line") != nullptr);
    CHECK(star.find("made_up_property") == nullptr);

    const ConvexityReport grid_report =
        audit(quasistar_grid(5, identity_for(5)).values, all_properties(), 0.0);
    CHECK(grid_report.find("quasiconvex")->verdict == "not-applicable");
    CHECK(grid_report.find("discrete_convexity")->verdict != "not-applicable");

    CHECK_THROWS_AS(audit(sequence_grid({1, 2, 3}), {"bogus"}, 0.0), std::invalid_argument);
}

TEST_CASE("quasistar audit applies the documented domain split") {
    const ConvexityReport report = audit_quasistar(6, identity_for(6));
    REQUIRE(report.entries.size() == 3);
    CHECK(report.entries[0].property == "discrete_convexity");
    CHECK(report.entries[0].holds());
    CHECK(report.entries[0].note.find("pairwise-distinct") != std::string::npos);
    CHECK(report.entries[1].property == "local_submodularity");
    CHECK(report.entries[1].fails());
    CHECK(report.entries[1].note.find("full rewiring box") != std::string::npos);
    CHECK(report.entries[2].property == "aggregate_monotonicity");
    CHECK(report.entries[2].holds());
    CHECK(witness_violates(quasistar_rewiring_box(6, identity_for(6)), report.entries[1]));
}

TEST_CASE("identity submodularity holds on the 3-D planar grid") {
    // On the |p-q| = 1 cells the identity landscape is submodular; the
    // planar ladder itself runs on the 1-D effective star.
    const QuasistarGrid planar = quasistar_grid(6, identity_for(6), true);
    CHECK(check_local_submodularity(planar.values, 0.0).holds());
}

TEST_CASE("planar quasistar audit passes the full ladder") {
    for (const char* spec : {"identity", "power:2", "power:3", "exp:2"}) {
        const ConvexityReport report =
            audit_planar_quasistar(7, CostFunction::from_spec(spec, 6));
        CHECK(report.all_hold());
    }
}

TEST_CASE("report JSON carries the documented schema") {
    const ConvexityReport report = audit_quasistar(5, identity_for(5));
    const auto j = nlohmann::json::parse(report.to_json_string());
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    for (const auto& entry : j) {
        for (const char* key : {"property", "verdict", "witness", "skipped", "tolerance",
                                "checked"})
            CHECK(entry.contains(key));
    }
    const auto& submod = j[1];
    CHECK(submod["verdict"] == "fails");
    REQUIRE(submod["witness"].is_object());
    CHECK(submod["witness"]["points"].size() == 4);
    CHECK(j[0]["witness"].is_null());
}

// ---------------------------------------------------------------- bounds

TEST_CASE("random baseline is the exact rational (n-1)(n+1)/3") {
    CHECK(d_random(2) == Rational(1));
    CHECK(d_random(4) == Rational(5));
    CHECK(d_random(7) == Rational(16));
    CHECK(d_random(12) == Rational(143, 3));
    CHECK_THROWS_AS(d_random(1), std::domain_error);
}

TEST_CASE("closed-form bounds match their published spot values") {
    CHECK(d_min_formula(FamilyTag::star, 4) == 4);
    CHECK(d_min_formula(FamilyTag::star, 12) == 36);
    CHECK(d_min_formula(FamilyTag::path, 12) == 11);
    CHECK(d_min_formula(FamilyTag::quasistar, 4) == 3);
    CHECK(d_min_formula(FamilyTag::quasistar, 12) == 31);
    CHECK(d_max_formula(FamilyTag::star, 4) == 6);
    CHECK(d_max_formula(FamilyTag::star, 12) == 66);
    CHECK(d_max_formula(FamilyTag::quasistar, 12) == 75);
    CHECK(d_max_formula(FamilyTag::balanced_bistar, 4) == 7);
    CHECK(d_max_formula(FamilyTag::balanced_bistar, 6) == 19);
    CHECK_THROWS_AS(d_min_formula(FamilyTag::balanced_bistar, 6), unsupported_family_error);
    CHECK_THROWS_AS(d_max_formula(FamilyTag::path, 6), unsupported_family_error);
    CHECK_THROWS_AS(d_min_formula(FamilyTag::star, 2), std::domain_error);
}

TEST_CASE("caterpillar minimum formula covers the named families") {
    CHECK(caterpillar_d_min(make_caterpillar({3, 3})) == 7);
    CHECK(caterpillar_d_min(make_caterpillar({2, 3, 2})) == 6);
    for (int n = 4; n <= 12; ++n) {
        CHECK(caterpillar_d_min(make_star(n)) == d_min_formula(FamilyTag::star, n));
        CHECK(caterpillar_d_min(make_path(n)) == d_min_formula(FamilyTag::path, n));
        CHECK(caterpillar_d_min(make_quasistar(n)) == d_min_formula(FamilyTag::quasistar, n));
    }
    const FreeTree spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK_THROWS_AS(caterpillar_d_min(spider), unsupported_family_error);
}

TEST_CASE("iordanskii reference curve checks its domain") {
    const double v = iordanskii_curve(10, 9, 1.0);
    CHECK(v == doctest::Approx(9.0 / std::log(9.0) * 10.0 * std::log(10.0)));
    CHECK(iordanskii_curve(11, 9) > v);
    CHECK(iordanskii_curve(10, 9, 2.0) == doctest::Approx(2.0 * v));
    CHECK_THROWS_AS(iordanskii_curve(2, 9), std::domain_error);
    CHECK_THROWS_AS(iordanskii_curve(10, 1), std::domain_error);
    CHECK_THROWS_AS(iordanskii_curve(10, 9, 0.0), std::domain_error);
}

TEST_CASE("bounds table mixes formulas with capped oracle fallback") {
    const std::vector<FamilyTag> families{FamilyTag::star, FamilyTag::quasistar,
                                          FamilyTag::path, FamilyTag::balanced_bistar};
    const std::vector<BoundsRow> rows = bounds_table(2, 12, families, 7);

    const auto find_row = [&](FamilyTag family, int n) -> const BoundsRow& {
        for (const auto& row : rows)
            if (row.family == family && row.n == n) return row;
        REQUIRE(false);
        return rows.front();
    };

    // Families appear only from their validity range onward.
    for (const auto& row : rows) {
        if (row.family == FamilyTag::quasistar || row.family == FamilyTag::balanced_bistar)
            CHECK(row.n >= 4);
        if (row.family == FamilyTag::star) CHECK(row.n >= 3);
    }

    const BoundsRow& star12 = find_row(FamilyTag::star, 12);
    CHECK(star12.d_min == 36);
    CHECK(star12.d_max == 66);
    CHECK(star12.source == "formula/formula");

    const BoundsRow& path6 = find_row(FamilyTag::path, 6);
    CHECK(path6.source == "formula/oracle");
    CHECK(*path6.d_max ==
          static_cast<long long>(brute_force(make_path(6), identity_for(6), 7).max));

    const BoundsRow& path12 = find_row(FamilyTag::path, 12);
    CHECK(path12.d_min == 11);
    CHECK(!path12.d_max.has_value());  // beyond the cap, never extrapolated
    CHECK(path12.source == "formula/none");

    const BoundsRow& bistar6 = find_row(FamilyTag::balanced_bistar, 6);
    CHECK(bistar6.d_min == caterpillar_d_min(make_balanced_bistar(6)));
    CHECK(bistar6.source == "formula/formula");

    for (const auto& row : rows) {
        if (row.d_min) CHECK(Rational(*row.d_min) <= row.random_baseline);
        if (row.d_max) CHECK(row.random_baseline <= Rational(*row.d_max));
    }

    // d_min ordering across families: path <= quasistar <= star from n = 5 on.
    for (int n = 5; n <= 12; ++n) {
        CHECK(*find_row(FamilyTag::path, n).d_min <= *find_row(FamilyTag::quasistar, n).d_min);
        CHECK(*find_row(FamilyTag::quasistar, n).d_min <= *find_row(FamilyTag::star, n).d_min);
    }

    CHECK_THROWS_AS(bounds_table(5, 4, families, 7), std::invalid_argument);
}

// ---------------------------------------------------------------- exports

TEST_CASE("csv fields quote exactly when needed") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("landscape exports carry the documented shapes") {
    const StarLandscape ls = star_landscape(4, identity_for(4));
    CHECK(star_landscape_csv(ls) == "l,value\n1,6\n2,4\n3,4\n4,6\n");
    const auto lj = nlohmann::json::parse(star_landscape_json(ls));
    CHECK(lj["values"] == nlohmann::json({6, 4, 4, 6}));
    CHECK(lj["argmin"] == nlohmann::json({2, 3}));
    CHECK(lj["min"].is_number_integer());

    const QuasistarGrid grid = quasistar_grid(5, identity_for(5));
    const std::string csv = grid_csv(grid);
    CHECK(static_cast<long long>(std::count(csv.begin(), csv.end(), '\n')) ==
          grid.filled() + 1);
    CHECK(csv.rfind("l,p,q,value\n", 0) == 0);
    CHECK(csv.find("3,2,1,5\n") != std::string::npos);

    const auto gj = nlohmann::json::parse(grid_json(grid));
    CHECK(gj["cells"].size() == static_cast<std::size_t>(grid.filled()));
    CHECK(gj["min"] == 5);
    CHECK(gj["max"] == 12);  // (n+3)(n-2)/2 at n = 5
    CHECK(gj["filled"] == grid.filled());

    const std::string matrix = slice_csv(slice(grid, 'q', 1));
    CHECK(matrix.rfind("l\\p,1,2,3,4,5\n", 0) == 0);
    CHECK(matrix.find("\n1,,", 0) != std::string::npos);  // hole at l = p = 1
}

TEST_CASE("svg exports are well formed and blank out holes") {
    const QuasistarGrid grid = quasistar_grid(5, identity_for(5));
    const std::string heat = grid_heatmap_svg(grid);
    CHECK(heat.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"", 0) == 0);
    CHECK(heat.find("q = 5") != std::string::npos);
    CHECK(heat.find("</svg>") != std::string::npos);
    // One colored rect per filled cell plus backgrounds, legend and frames.
    const std::string needle = "<rect";
    long long rects = 0;
    for (std::size_t at = heat.find(needle); at != std::string::npos;
         at = heat.find(needle, at + 1))
        ++rects;
    CHECK(rects == grid.filled() + 1 + 32 + 5);  // cells + page + legend + panel frames

    const std::string chart = star_landscape_svg(star_landscape(6, identity_for(6)));
    CHECK(chart.find("polyline") != std::string::npos);
    CHECK(chart.find("D(l)") != std::string::npos);
}

TEST_CASE("bounds exports match the documented columns and panels") {
    const std::vector<FamilyTag> families{FamilyTag::star, FamilyTag::quasistar,
                                          FamilyTag::path, FamilyTag::balanced_bistar};
    const std::vector<BoundsRow> rows = bounds_table(3, 9, families, 7);
    const std::string csv = bounds_csv(rows);
    CHECK(csv.rfind("n,family,d_min,d_max,d_random,source\n", 0) == 0);
    CHECK(csv.find("4,star,4,6,5,formula/formula\n") != std::string::npos);
    CHECK(csv.find(",143/3,") == std::string::npos);  // no n=12 row requested

    const auto bj = nlohmann::json::parse(bounds_json(rows));
    CHECK(bj.is_array());
    CHECK(bj.size() == rows.size());

    const auto figure = bounds_figure_data(rows);
    std::set<std::string> panels;
    for (const auto& s : figure) panels.insert(s.panel);
    CHECK(panels == std::set<std::string>{"d_min", "d_max", "star_band", "path_band"});
    bool random_dashed = false;
    for (const auto& s : figure)
        if (s.series == "random" && s.dashed) random_dashed = true;
    CHECK(random_dashed);

    const std::string data_csv = plot_data_csv(figure);
    CHECK(data_csv.rfind("panel,series,n,value\n", 0) == 0);
    CHECK(data_csv.find("d_min,star,4,4\n") != std::string::npos);

    const std::string svg = line_chart_svg(figure);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(svg.find("path_band") != std::string::npos);
    CHECK(svg.find("nan") == std::string::npos);
}
