#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "symmetria/certificates.hpp"
#include "symmetria/error.hpp"

using namespace symmetria;

namespace {

QSqrt2 rat(long n, long d = 1) { return QSqrt2(Rational(n, d)); }

double find_residual(const std::vector<std::pair<std::string, double>>& rs,
                     const std::string& name) {
    for (const auto& [n, v] : rs)
        if (n == name) return v;
    REQUIRE(false);
    return -1.0;
}

// Feasible primal points for the full program, generated by rejection.
AxialProgramPoint random_feasible_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (;;) {
        const long denom = 120;
        AxialProgramPoint x;
        auto draw = [&] { return rat(static_cast<long>(uni(rng) * 20), denom); };
        x.a = draw();
        x.b = draw();
        x.c = draw();
        x.d = draw();
        x.e = draw();
        x.f = draw();
        x.t = x.a + x.b + x.c + x.d + x.e + x.f;
        // lambda = 1 always satisfies the三 overlap rows: (1+t) >= 1 + min sums.
        x.lambda = rat(1);
        AxialProgramPoint probe = x;
        if (!axial_primal_feasible(probe).empty()) continue;
        return x;
    }
}

}  // namespace

TEST_CASE("exact scalar arithmetic in Q[sqrt2]") {
    const QSqrt2 s2 = QSqrt2::sqrt2();
    CHECK(s2 * s2 == rat(2));
    CHECK((rat(-4) + rat(3) * s2).sign() == 1);  // 3 sqrt2 - 4 > 0 since 18 > 16
    CHECK((rat(10) - rat(3) * s2) * (rat(10) + rat(3) * s2) == rat(82));
    CHECK(QSqrt2(Rational(1, 3), Rational(-1, 4)).sign() == -1);  // 1/3 < sqrt2/4
    CHECK(rat(0).sign() == 0);
    CHECK_THROWS_AS(rat(0).inverse(), Error);

    SUBCASE("field axioms on random operands") {
        std::mt19937_64 rng(31337);
        std::uniform_int_distribution<long> num(-20, 20);
        std::uniform_int_distribution<long> den(1, 12);
        for (int i = 0; i < 200; ++i) {
            const QSqrt2 x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
            const QSqrt2 y(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
            const QSqrt2 z(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * x.inverse() == rat(1));
        }
    }
    SUBCASE("printing") {
        CHECK(QSqrt2(Rational(20, 41), Rational(6, 41)).to_string() ==
              "20/41 + 6/41*sqrt(2)");
        CHECK(rat(3, 4).to_string() == "3/4");
        CHECK(QSqrt2(Rational(0), Rational(-1)).to_string() == "-sqrt(2)");
    }
}

TEST_CASE("axial program feasibility") {
    SUBCASE("all-zero areas with lambda 1 are feasible") {
        AxialProgramPoint x;
        x.lambda = rat(1);
        x.a = x.b = x.c = x.d = x.e = x.f = x.t = rat(0);
        CHECK(axial_primal_feasible(x).empty());
    }
    SUBCASE("uniform sixth areas overflow the caps") {
        AxialProgramPoint x;
        x.lambda = rat(0);
        x.a = x.b = x.c = x.d = x.e = x.f = rat(1, 6);
        x.t = rat(1);
        const auto bad = axial_primal_feasible(x);
        CHECK(std::find(bad.begin(), bad.end(), "abd_sum") != bad.end());
        CHECK(std::find(bad.begin(), bad.end(), "isosceles_cover") != bad.end());
        CHECK(std::find(bad.begin(), bad.end(), "star_triangle_ace") != bad.end());
        CHECK(std::find(bad.begin(), bad.end(), "star_triangle_bdf") != bad.end());
    }
    SUBCASE("the tight point at the dual crossing is feasible") {
        // Solving the active constraints exactly: b = c = f = 0,
        // a = (16 - 9 sqrt2)/12, d = (9 sqrt2 - 12)/12, e = (14 - 9 sqrt2)/12,
        // t = (6 - 3 sqrt2)/4, lambda = 4/(10 - 3 sqrt2) = (20 + 6 sqrt2)/41.
        AxialProgramPoint x;
        x.a = QSqrt2(Rational(16, 12), Rational(-9, 12));
        x.b = rat(0);
        x.c = rat(0);
        x.d = QSqrt2(Rational(-12, 12), Rational(9, 12));
        x.e = QSqrt2(Rational(14, 12), Rational(-9, 12));
        x.f = rat(0);
        x.t = QSqrt2(Rational(6, 4), Rational(-3, 4));
        x.lambda = QSqrt2(Rational(20, 41), Rational(6, 41));
        CHECK(axial_primal_feasible(x).empty());
        // The cover and first star row are active at this point.
        const QSqrt2 lhs = (rat(1) + x.t) * x.lambda;
        CHECK(lhs == rat(1));
        CHECK(lhs == rat(-4) + rat(3) * QSqrt2::sqrt2() + rat(2) * (x.a + x.c + x.e));
    }
}

TEST_CASE("dual certificates") {
    const QSqrt2 t_star = QSqrt2(Rational(6, 4), Rational(-3, 4));
    SUBCASE("both certificate points are feasible for any t >= 0") {
        for (const QSqrt2& t : {rat(0), rat(1, 2), rat(1), t_star, rat(5)}) {
            CHECK(dual_feasible_case3(t, dual_certificate_plain(t)));
            CHECK(dual_feasible_case3(t, dual_certificate_weighted(t)));
        }
    }
    SUBCASE("an infeasible point is rejected") {
        DualPoint y{rat(1), rat(0), rat(0), rat(0), rat(0)};
        const auto bad = dual_violations_case3(rat(1), y);
        CHECK(!bad.empty());
        CHECK(std::find(bad.begin(), bad.end(), "f_row") != bad.end());
    }
    SUBCASE("objective closed forms") {
        CHECK(dual_objective_case3(rat(1, 2), dual_certificate_plain(rat(1, 2))) == rat(2, 3));
        CHECK(dual_objective_case3(rat(0), dual_certificate_weighted(rat(0))) ==
              QSqrt2(Rational(-1, 5), Rational(3, 5)));
        CHECK(dual_objective_case3(t_star, dual_certificate_weighted(t_star)) ==
              QSqrt2(Rational(20, 41), Rational(6, 41)));
    }
    SUBCASE("weak duality against random primal-feasible points") {
        std::mt19937_64 rng(4242);
        std::uniform_int_distribution<long> pick(0, 4);
        for (int i = 0; i < 60; ++i) {
            AxialProgramPoint x = random_feasible_point(rng);
            // Restrict to the ordering of the binding case so the point is
            // feasible for its sub-program: a >= f, b <= e, c <= d.
            if (x.a < x.f || x.b > x.e || x.c > x.d) {
                std::swap(x.a, x.f);
                if (x.a < x.f) continue;
                if (x.b > x.e) std::swap(x.b, x.e);
                if (x.c > x.d) std::swap(x.c, x.d);
                AxialProgramPoint probe = x;
                if (!axial_primal_feasible(probe).empty()) continue;
            }
            const DualPoint y = pick(rng) % 2 == 0 ? dual_certificate_plain(x.t)
                                                   : dual_certificate_weighted(x.t);
            REQUIRE(dual_feasible_case3(x.t, y));
            CHECK(dual_objective_case3(x.t, y) <= x.lambda);
        }
    }
}

TEST_CASE("exact lower-bound certificate") {
    const auto cert = certified_axiality_lower_bound();
    CHECK(cert.value == QSqrt2(Rational(20, 41), Rational(6, 41)));
    CHECK(cert.crossing_t == QSqrt2(Rational(3, 2), Rational(-3, 4)));
    CHECK(cert.case1_value == QSqrt2(Rational(-2, 15), Rational(3, 5)));
    CHECK(cert.case1_value > rat(143, 200));  // above 0.715
    CHECK(cert.case2_value == rat(3, 4));
    CHECK(cert.value < cert.case1_value);
    CHECK(cert.value < cert.case2_value);
    for (const auto& c : cert.checks) CHECK(c.ok);
    CHECK(cert.value.to_double() == doctest::Approx(0.69476296).epsilon(1e-8));
}

TEST_CASE("folding program residuals") {
    FoldingProgramPoint x;
    x.lambda = 0.5;
    x.u = 0.0;
    x.alpha = 1.0;
    x.beta = -1.0;
    x.m1 = x.m2 = 0.0;
    x.v1 = 0.25;
    x.v2 = -0.25;
    x.y1 = x.y2 = 0.5;
    x.t = 0.0;
    SUBCASE("corner point is feasible at lambda = 1/2") {
        for (auto variant : {FoldingVariant::standard, FoldingVariant::obtuse})
            CHECK(max_residual(folding_program_residuals(x, variant)) == 0.0);
    }
    SUBCASE("lambda = 0.1 breaks the side folds by exactly 7/30") {
        x.lambda = 0.1;
        const auto rs = folding_program_residuals(x, FoldingVariant::standard);
        CHECK(find_residual(rs, "right_fold") == doctest::Approx(7.0 / 30.0).epsilon(1e-12));
        CHECK(find_residual(rs, "left_fold") == doctest::Approx(7.0 / 30.0).epsilon(1e-12));
        CHECK(find_residual(rs, "top_fold") == doctest::Approx(13.0 / 120.0).epsilon(1e-12));
        CHECK(find_residual(rs, "bottom_fold") ==
              doctest::Approx(13.0 / 120.0).epsilon(1e-12));
    }
    SUBCASE("mass above the cap breaks the t box") {
        x.t = 0.5;
        const auto rs = folding_program_residuals(x, FoldingVariant::standard);
        const double expect = 0.5 - (6.0 - 3.0 * 1.4142135623730951) / 4.0;
        CHECK(find_residual(rs, "t_upper") == doctest::Approx(expect).epsilon(1e-12));
    }
    SUBCASE("obtuse variant swaps the wedge row and pins y2") {
        x.k2 = 0.9;
        x.y1 = 0.9;
        const auto std_rs = folding_program_residuals(x, FoldingVariant::standard);
        // standard: y1 = max(k1, 1/2) = 1/2, so y1 = 0.9 violates the def
        CHECK(find_residual(std_rs, "y1_def") == doctest::Approx(0.4));
        const auto obt = folding_program_residuals(x, FoldingVariant::obtuse);
        // obtuse: y1 = max(k1, k2, 1/2) = 0.9 is consistent
        CHECK(find_residual(obt, "y1_def") == doctest::Approx(0.0));
        CHECK(find_residual(obt, "left_wedge_lower") > 0.0);  // c = 0 < k2/12
    }
}

TEST_CASE("folding program search") {
    CHECK_THROWS_AS(folding_program_search(0, 1), Error);
    const auto a = folding_program_search(20000, 99);
    const auto b = folding_program_search(20000, 99);
    CHECK(a.min_lambda == b.min_lambda);  // deterministic for a fixed seed
    CHECK(a.min_lambda >= 0.18803 - 1e-6);
    CHECK(max_residual(folding_program_residuals(a.witness, a.variant)) <= 1e-9);
}

TEST_CASE("closed-form bounds") {
    CHECK(lower_bound_general(2, 1) == Rational(1, 4));
    CHECK(lower_bound_general(2, 0) == Rational(1, 4));
    CHECK(lower_bound_general(3, 2) == Rational(1, 6));
    CHECK_THROWS_AS(lower_bound_general(2, 2), Error);

    CHECK(simplex_central_symmetry(2) == Rational(2, 3));
    CHECK(simplex_central_symmetry(3) == Rational(1, 2));
    CHECK(simplex_central_symmetry(11) < Rational(1, 22));

    CHECK(lower_bound_hyperplane(2) == Rational(1, 4));
    CHECK(lower_bound_hyperplane(3) == Rational(1, 6));
    CHECK(lower_bound_hyperplane(11) == Rational(1, 22));

    // Exact value of the pyramid bound at n = 2 is (18 + 8 sqrt2)/49.
    const double exact2 = QSqrt2(Rational(18, 49), Rational(8, 49)).to_double();
    CHECK(pyramid_step_bound(2) == doctest::Approx(exact2).epsilon(1e-12));

    SUBCASE("pyramid bound decreases in the dimension") {
        for (int n = 2; n < 64; ++n)
            CHECK(pyramid_step_bound(n + 1) < pyramid_step_bound(n));
    }
    SUBCASE("pyramid bound stays below the planar reflection ceiling") {
        CHECK(pyramid_step_bound(2) < (1.0 + 1.4142135623730951) / 3.0);
    }
    SUBCASE("separation of the two measures by dimension") {
        for (int n = 2; n <= 10; ++n) CHECK(!separation_check(n));
        for (int n = 11; n <= 32; ++n) CHECK(separation_check(n));
    }
    SUBCASE("simplex central symmetry strictly decreases") {
        for (int n = 2; n < 32; ++n)
            CHECK(simplex_central_symmetry(n + 1) < simplex_central_symmetry(n));
    }
}
