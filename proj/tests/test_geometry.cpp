#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "symmetria/geometry.hpp"

using namespace symmetria;

namespace {

ConvexPolygon unit_square() {
    return normalize_polygon(std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ConvexPolygon right_triangle() {
    return normalize_polygon(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}});
}

bool same_cycle(const ConvexPolygon& a, const ConvexPolygon& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (distance(a[i], b[i]) > tol) return false;
    return true;
}

}  // namespace

TEST_CASE("normalize_polygon keeps an already normal square") {
    const auto sq = unit_square();
    REQUIRE(sq.size() == 4);
    CHECK(polygon_area(sq) == doctest::Approx(1.0));
    CHECK(sq[0].x == 0.0);
    CHECK(sq[0].y == 0.0);
}

TEST_CASE("normalize_polygon reorders a scrambled square counterclockwise") {
    const auto sq = normalize_polygon(std::vector<Point>{{0, 0}, {1, 1}, {1, 0}, {0, 1}});
    CHECK(sq.size() == 4);
    CHECK(polygon_area(sq) == doctest::Approx(1.0));
    CHECK(detail::shoelace2(sq.vertices) > 0.0);
}

TEST_CASE("normalize_polygon drops a collinear midpoint") {
    const auto tri = normalize_polygon(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}, {1, 1}});
    REQUIRE(tri.size() == 3);
    CHECK(polygon_area(tri) == doctest::Approx(1.0));
}

TEST_CASE("normalize_polygon rejects degenerate input") {
    CHECK_THROWS_AS(normalize_polygon(std::vector<Point>{{0, 0}, {1, 0}}), Error);
    CHECK_THROWS_AS(normalize_polygon(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}), Error);
    CHECK_THROWS_AS(normalize_polygon(std::vector<Point>{{0, 0}, {0, 0}, {0, 0}, {0, 0}}), Error);
    const double bad = std::nan("");
    CHECK_THROWS_WITH_AS(normalize_polygon(std::vector<Point>{{0, 0}, {1, 0}, {bad, 1}}),
                         "non-finite coordinate in polygon input", Error);
}

TEST_CASE("polygon area: square, triangle, flat quadrilateral") {
    CHECK(polygon_area(unit_square()) == doctest::Approx(1.0));
    CHECK(polygon_area(right_triangle()) == doctest::Approx(0.5));

    // Area of the flat quadrilateral family member at eps = 0.1: shoelace in
    // closed form gives eps*(2 - sqrt2).
    const double eps = 0.1;
    const double h = eps * std::numbers::sqrt2 / (1.0 + std::numbers::sqrt2);
    const auto q = normalize_polygon(
        std::vector<Point>{{0, 0}, {1, 0}, {1, h}, {1.0 / std::numbers::sqrt2, eps}});
    CHECK(polygon_area(q) == doctest::Approx(eps * (2.0 - std::numbers::sqrt2)).epsilon(1e-12));
}

TEST_CASE("reflection across a symmetry axis fixes the square setwise") {
    const auto sq = unit_square();
    const auto r = reflect_polygon(sq, LineSpec(0.0, 0.5));
    CHECK(same_cycle(sq, r, 1e-12));
}

TEST_CASE("reflection across y = 0 flips the triangle") {
    const auto t = right_triangle();
    const auto r = reflect_polygon(t, LineSpec(std::numbers::pi / 2, 0.0));
    const auto expect = normalize_polygon(std::vector<Point>{{0, 0}, {1, 0}, {0, -1}});
    CHECK(same_cycle(r, expect, 1e-12));
}

TEST_CASE("reflection is an involution and preserves area") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (std::uint64_t seed : testsupport::suite_seeds(50)) {
        const auto p = testsupport::random_polygon(seed);
        const LineSpec line(uni(rng) * 2 * std::numbers::pi, uni(rng) * 2 - 1);
        const auto r = reflect_polygon(p, line);
        CHECK(std::abs(polygon_area(r) - polygon_area(p)) <= 1e-9 * polygon_area(p));
        const auto rr = reflect_polygon(r, line);
        REQUIRE(rr.size() == p.size());
        CHECK(same_cycle(rr, p, 1e-9));
    }
}

TEST_CASE("clip examples") {
    const auto sq = unit_square();
    SUBCASE("keep x <= 0.75") {
        const auto c = clip(sq, HalfPlane{LineSpec(0.0, 0.75), -1});
        REQUIRE(c.has_value());
        CHECK(polygon_area(*c) == doctest::Approx(0.75));
    }
    SUBCASE("keep x <= -1 is empty") {
        CHECK(!clip(sq, HalfPlane{LineSpec(0.0, -1.0), -1}).has_value());
    }
    SUBCASE("boundary-touching halfplane keeps everything") {
        const auto c = clip(sq, HalfPlane{LineSpec(0.0, 1.0), -1});
        REQUIRE(c.has_value());
        CHECK(polygon_area(*c) == doctest::Approx(1.0));
    }
}

TEST_CASE("clipping is monotone and idempotent") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (std::uint64_t seed : testsupport::suite_seeds(50)) {
        const auto p = testsupport::random_polygon(seed);
        const HalfPlane h{LineSpec(uni(rng) * 2 * std::numbers::pi, uni(rng)), uni(rng) < 0.5 ? 1 : -1};
        const auto c = clip(p, h);
        if (!c) continue;
        CHECK(polygon_area(*c) <= polygon_area(p) + 1e-12);
        const auto cc = clip(*c, h);
        REQUIRE(cc.has_value());
        CHECK(polygon_area(*cc) == doctest::Approx(polygon_area(*c)).epsilon(1e-9));
    }
}

TEST_CASE("intersection examples") {
    const auto sq = unit_square();
    SUBCASE("self intersection") {
        const auto i = intersect(sq, sq);
        REQUIRE(i.has_value());
        CHECK(polygon_area(*i) == doctest::Approx(1.0));
    }
    SUBCASE("half-shifted square") {
        const auto i = intersect(sq, translate(sq, {0.5, 0.0}));
        REQUIRE(i.has_value());
        CHECK(polygon_area(*i) == doctest::Approx(0.5));
    }
    SUBCASE("disjoint squares") { CHECK(!intersect(sq, translate(sq, {2.0, 0.0})).has_value()); }
}

TEST_CASE("intersection is bounded and symmetric in area") {
    for (std::uint64_t seed : testsupport::suite_seeds(50)) {
        const auto p = testsupport::random_polygon(seed);
        const auto q = testsupport::random_polygon(seed + 7777);
        const auto pq = intersect(p, q);
        const auto qp = intersect(q, p);
        REQUIRE(pq.has_value() == qp.has_value());
        if (!pq) continue;
        const double a = polygon_area(*pq);
        CHECK(a <= std::min(polygon_area(p), polygon_area(q)) + 1e-12);
        CHECK(std::abs(a - polygon_area(*qp)) <= 1e-9 * std::max(a, 1e-30));
    }
}

TEST_CASE("containment with tolerance band") {
    const auto sq = unit_square();
    CHECK(contains(sq, {0.5, 0.5}, 0.0));
    CHECK(contains(sq, {1.0 + 1e-12, 0.5}, 1e-9));
    CHECK(!contains(sq, {2.0, 0.5}, 1e-9));
    CHECK_THROWS_AS(contains(sq, {0.5, 0.5}, -1.0), Error);
}

TEST_CASE("support intervals") {
    const auto sq = unit_square();
    auto [lo0, hi0] = support_interval(sq, 0.0);
    CHECK(lo0 == doctest::Approx(0.0));
    CHECK(hi0 == doctest::Approx(1.0));
    auto [lo45, hi45] = support_interval(sq, std::numbers::pi / 4);
    CHECK(lo45 == doctest::Approx(0.0));
    CHECK(hi45 == doctest::Approx(std::numbers::sqrt2));
    auto [lot, hit] = support_interval(right_triangle(), std::numbers::pi / 2);
    CHECK(lot == doctest::Approx(0.0));
    CHECK(hit == doctest::Approx(1.0));
}

TEST_CASE("centroid examples and translation equivariance") {
    const Point c1 = centroid(unit_square());
    CHECK(c1.x == doctest::Approx(0.5));
    CHECK(c1.y == doctest::Approx(0.5));
    const Point c2 = centroid(right_triangle());
    CHECK(c2.x == doctest::Approx(1.0 / 3));
    CHECK(c2.y == doctest::Approx(1.0 / 3));
    for (std::uint64_t seed : testsupport::suite_seeds(20)) {
        const auto p = testsupport::random_polygon(seed);
        const Point c = centroid(p);
        const Point ct = centroid(translate(p, {1.25, -0.5}));
        CHECK(ct.x == doctest::Approx(c.x + 1.25).epsilon(1e-12));
        CHECK(ct.y == doctest::Approx(c.y - 0.5).epsilon(1e-12));
    }
}

TEST_CASE("shoelace area agrees with a Monte Carlo hit ratio") {
    const auto p = testsupport::random_polygon(424242);
    double lox = p[0].x, hix = p[0].x, loy = p[0].y, hiy = p[0].y;
    for (const Point& v : p.vertices) {
        lox = std::min(lox, v.x);
        hix = std::max(hix, v.x);
        loy = std::min(loy, v.y);
        hiy = std::max(hiy, v.y);
    }
    const double box = (hix - lox) * (hiy - loy);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ux(lox, hix), uy(loy, hiy);
    const int n = 1'000'000;
    int hits = 0;
    for (int i = 0; i < n; ++i)
        if (contains(p, {ux(rng), uy(rng)}, 0.0)) ++hits;
    const double ratio = static_cast<double>(hits) / n;
    const double estimate = box * ratio;
    const double sigma = box * std::sqrt(ratio * (1.0 - ratio) / n);
    CHECK(std::abs(estimate - polygon_area(p)) <= 3.0 * sigma);
}

TEST_CASE("min_width and diameter bound each other") {
    for (std::uint64_t seed : testsupport::suite_seeds(20)) {
        const auto p = testsupport::random_polygon(seed);
        CHECK(min_width(p) <= diameter(p) + 1e-12);
        CHECK(min_width(p) > 0.0);
    }
}
