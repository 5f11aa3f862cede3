#include <doctest.h>

#include <set>

#include "ecg/gen.hpp"
#include "ecg/graph.hpp"
#include "ecg/rational.hpp"
#include "ecg/rng.hpp"
#include "helpers.hpp"

using namespace ecg;
using namespace ecg::testing;

TEST_CASE("colour_degree basics") {
    auto tri = rainbow_triangle();
    for (int v = 0; v < 3; ++v) CHECK(tri.colour_degree(v) == 2);

    auto star = mono_star(3);
    CHECK(star.colour_degree(0) == 1);
    CHECK(star.colour_degree(1) == 1);

    auto iso = EdgeColouredGraph::from_edges(2, {});
    CHECK(iso.colour_degree(0) == 0);
    CHECK_THROWS_AS(iso.colour_degree(5), Error);

    auto sharp = gen_sharpness(2, 5);
    for (int v = 0; v < sharp.n(); ++v) CHECK(sharp.colour_degree(v) >= 2);
    CHECK(sharp.min_colour_degree() == 2);
}

TEST_CASE("colour_degree_within") {
    auto tri = rainbow_triangle();
    CHECK(tri.colour_degree_within(0, {1}) == 1);
    CHECK(tri.colour_degree_within(0, {}) == 0);
    CHECK(tri.colour_degree_within(0, {0, 1, 2}) == tri.colour_degree(0));

    // G_sharp(3,6): x_1 into Y sees only colour c_1
    auto sharp = gen_sharpness(3, 6);
    std::vector<int> Y{3, 4, 5};
    CHECK(sharp.colour_degree_within(0, Y) == 1);

    // identity against colour_degree over the full vertex set
    for (int v = 0; v < sharp.n(); ++v) {
        std::vector<int> all;
        for (int u = 0; u < sharp.n(); ++u) all.push_back(u);
        CHECK(sharp.colour_degree_within(v, all) == sharp.colour_degree(v));
    }
}

TEST_CASE("anchored_neighbourhood") {
    auto star = mono_star(3);
    ColourId c = star.colour_of(0, 1).value();
    CHECK(star.anchored_neighbourhood({0, c}).empty());

    auto tri = rainbow_triangle();
    ColourId cab = tri.colour_of(0, 1).value();
    auto nb = tri.anchored_neighbourhood({0, cab});
    CHECK(nb == std::vector<int>{2});

    // G_sharp(2,5): all of x_1's Y-edges are colour c_1, x_1x_2 is fresh
    auto sharp = gen_sharpness(2, 5);
    ColourId c1 = sharp.colour_of(0, 2).value();
    auto anb = sharp.anchored_neighbourhood({0, c1});
    CHECK(anb == std::vector<int>{1});
}

TEST_CASE("critical_reduction") {
    // properly coloured graph unchanged
    auto k4 = proper_k4();
    CHECK(critical_reduction(k4) == k4);

    // monochromatic triangle -> two-edge path, lexicographic removal first
    auto mt = mono_complete(3);
    auto red = critical_reduction(mt);
    CHECK(red.edge_count() == 2);
    CHECK(is_critical(red));
    for (int v = 0; v < 3; ++v) CHECK(red.colour_degree(v) == mt.colour_degree(v));

    // monochromatic K_4: colour degrees preserved, output critical
    auto k4m = mono_complete(4);
    auto r4 = critical_reduction(k4m);
    CHECK(is_critical(r4));
    for (int v = 0; v < 4; ++v) CHECK(r4.colour_degree(v) == 1);

    // colour degrees preserved on random instances
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = gen_random_mcd(9, Rational(1, 2), 6, seed);
        auto r = critical_reduction(g);
        CHECK(is_critical(r));
        for (int v = 0; v < g.n(); ++v) CHECK(r.colour_degree(v) == g.colour_degree(v));
    }
}

namespace {

// independent component scan: every colour class must be one star
bool colour_classes_are_stars(const EdgeColouredGraph& g) {
    for (int c = 0; c < g.colour_count(); ++c) {
        std::vector<std::pair<int, int>> es;
        for (const Edge& e : g.edges())
            if (e.colour == c) es.push_back({e.u, e.v});
        if (es.empty()) continue;
        std::set<int> verts;
        for (auto [u, v] : es) {
            verts.insert(u);
            verts.insert(v);
        }
        bool star = false;
        for (int centre : verts) {
            bool all = true;
            for (auto [u, v] : es)
                if (u != centre && v != centre) all = false;
            if (all) star = true;
        }
        if (!star) return false;
    }
    return true;
}

} // namespace

TEST_CASE("star_normalize") {
    // two disjoint monochromatic stars of colour 7
    auto g = EdgeColouredGraph::from_edges(6, {{0, 1, 7}, {0, 2, 7}, {3, 4, 7}, {3, 5, 7}});
    REQUIRE(is_critical(g));
    auto s = star_normalize(g);
    CHECK(colour_classes_are_stars(s));
    CHECK(s.colour_count() == 2);
    for (int v = 0; v < 6; ++v) CHECK(s.colour_degree(v) == g.colour_degree(v));

    auto tri = rainbow_triangle();
    CHECK(star_normalize(tri) == tri);

    auto r4 = critical_reduction(mono_complete(4));
    auto s4 = star_normalize(r4);
    CHECK(colour_classes_are_stars(s4));
    for (int v = 0; v < 4; ++v) CHECK(s4.colour_degree(v) == r4.colour_degree(v));

    CHECK_THROWS_AS(star_normalize(mono_complete(3)), Error); // not critical
}

TEST_CASE("ecg format round trip") {
    auto g = gen_sharpness(3, 7);
    auto text = serialize_ecg(g);
    auto back = parse_ecg(text);
    CHECK(back == g);
    CHECK(serialize_ecg(back) == text);

    CHECK_THROWS_AS(parse_ecg("p ecg 3 1\ne 1 1 0\n"), Error);          // self loop
    CHECK_THROWS_AS(parse_ecg("p ecg 3 2\ne 1 2 0\ne 1 2 1\n"), Error); // duplicate
    CHECK_THROWS_AS(parse_ecg("p ecg 3 2\ne 1 2 0\n"), Error);          // count mismatch
    CHECK_THROWS_AS(parse_ecg("e 1 2 0\n"), Error);                     // missing header

    auto commented = parse_ecg("# generated\np ecg 2 1\n# edge list\ne 1 2 4\n");
    CHECK(commented.edge_count() == 1);
    CHECK(commented.label(commented.colour_of(0, 1).value()) == 4);
}

TEST_CASE("rational helpers") {
    CHECK(parse_rational("3/7") == Rational(3, 7));
    CHECK(parse_rational("0.55") == Rational(11, 20));
    CHECK(parse_rational("12") == Rational(12));
    CHECK(rational_floor(Rational(7, 2)) == 3);
    CHECK(rational_floor(Rational(-7, 2)) == -4);
    CHECK(rational_ceil(Rational(7, 2)) == 4);
    CHECK(sqrt_upper(Rational(1, 4)) == Rational(1, 2));
    CHECK(sqrt_upper(Rational(2)) >= Rational(14142, 10000));
    Rational r = root_upper(Rational(1, 16), 4);
    CHECK(r >= Rational(1, 2));
    CHECK(r <= Rational(3, 4));
}
