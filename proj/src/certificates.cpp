#include "symmetria/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "symmetria/error.hpp"

namespace symmetria {

namespace {

QSqrt2 rat(long num, long den = 1) { return QSqrt2(Rational(num, den)); }

// 3*sqrt(2) - 4, the triangle-overlap constant of the two star constraints.
QSqrt2 triangle_constant() { return QSqrt2(Rational(-4), Rational(3)); }

QSqrt2 qmin(const QSqrt2& a, const QSqrt2& b) { return a <= b ? a : b; }

}  // namespace

std::vector<std::string> axial_primal_feasible(const AxialProgramPoint& x) {
    std::vector<std::string> bad;
    auto require = [&](bool ok, const char* name) {
        if (!ok) bad.emplace_back(name);
    };
    require(x.a.sign() >= 0, "a_nonneg");
    require(x.b.sign() >= 0, "b_nonneg");
    require(x.c.sign() >= 0, "c_nonneg");
    require(x.d.sign() >= 0, "d_nonneg");
    require(x.e.sign() >= 0, "e_nonneg");
    require(x.f.sign() >= 0, "f_nonneg");
    require(x.t == x.a + x.b + x.c + x.d + x.e + x.f, "t_sum");
    require(x.b + x.c <= rat(1, 6), "bc_sum");
    require(x.d + x.e <= rat(1, 6), "de_sum");
    require(x.a + x.b + x.d <= rat(1, 3), "abd_sum");
    require(x.c + x.e + x.f <= rat(1, 3), "cef_sum");
    const QSqrt2 lhs = (rat(1) + x.t) * x.lambda;
    require(lhs >= rat(1) + qmin(x.a, x.f) + qmin(x.b, x.e) + qmin(x.c, x.d), "isosceles_cover");
    require(lhs >= triangle_constant() + rat(2) * (x.a + x.c + x.e), "star_triangle_ace");
    require(lhs >= triangle_constant() + rat(2) * (x.b + x.d + x.f), "star_triangle_bdf");
    return bad;
}

std::vector<std::string> dual_violations_case3(const QSqrt2& t, const DualPoint& y) {
    std::vector<std::string> bad;
    auto require = [&](bool ok, const char* name) {
        if (!ok) bad.emplace_back(name);
    };
    require(t.sign() >= 0, "t_nonneg");
    require(y.y1.sign() >= 0 && y.y2.sign() >= 0 && y.y3.sign() >= 0 && y.y4.sign() >= 0 &&
                y.y5.sign() >= 0,
            "y_nonneg");
    const QSqrt2 zero = rat(0);
    require((rat(1) + t) * (y.y4 + y.y5) <= rat(1), "lambda_row");
    require(y.y1 - y.y3 - rat(2) * y.y5 <= zero, "a_row");
    // Row for the area b: it enters the mass balance, the a+b+d cap, and the
    // first overlap constraint.
    require(y.y1 - y.y3 - y.y4 <= zero, "b_row");
    require(y.y1 - y.y4 - rat(2) * y.y5 <= zero, "c_row");
    require(y.y1 - y.y2 - y.y3 <= zero, "d_row");
    require(y.y1 - y.y2 - rat(2) * y.y5 <= zero, "e_row");
    require(y.y1 - y.y4 <= zero, "f_row");
    return bad;
}

bool dual_feasible_case3(const QSqrt2& t, const DualPoint& y) {
    return dual_violations_case3(t, y).empty();
}

QSqrt2 dual_objective_case3(const QSqrt2& t, const DualPoint& y) {
    return t * y.y1 - rat(1, 6) * y.y2 - rat(1, 3) * y.y3 + y.y4 + triangle_constant() * y.y5;
}

DualPoint dual_certificate_plain(const QSqrt2& t) {
    const QSqrt2 s = (rat(1) + t).inverse();
    return DualPoint{rat(0), rat(0), rat(0), s, rat(0)};
}

DualPoint dual_certificate_weighted(const QSqrt2& t) {
    const QSqrt2 s = (rat(1) + t).inverse();
    return DualPoint{rat(4, 5) * s, rat(2, 5) * s, rat(2, 5) * s, rat(4, 5) * s, rat(1, 5) * s};
}

AxialityBoundCertificate certified_axiality_lower_bound() {
    AxialityBoundCertificate cert;
    auto check = [&](bool ok, const std::string& name, const std::string& detail) {
        cert.checks.push_back({name, ok, detail});
        if (!ok) throw Error("InternalInconsistency", "certificate check failed: " + name);
    };

    // Binding case: two dual certificates, crossing at t*.
    const QSqrt2 t_star = QSqrt2(Rational(6, 4), Rational(-3, 4));  // (6 - 3 sqrt2)/4
    cert.crossing_t = t_star;
    check(t_star.sign() > 0, "crossing_t_positive", "t* = " + t_star.to_string());

    const DualPoint y_plain = dual_certificate_plain(t_star);
    const DualPoint y_weighted = dual_certificate_weighted(t_star);
    check(dual_feasible_case3(t_star, y_plain), "plain_certificate_feasible_at_t_star",
          "all seven dual rows hold");
    check(dual_feasible_case3(t_star, y_weighted), "weighted_certificate_feasible_at_t_star",
          "all seven dual rows hold");

    // Closed forms of the two objectives: 1/(1+t) and (4t + 3 sqrt2 - 1)/(5(1+t)).
    const QSqrt2 one_plus = rat(1) + t_star;
    const QSqrt2 obj_plain = dual_objective_case3(t_star, y_plain);
    const QSqrt2 obj_weighted = dual_objective_case3(t_star, y_weighted);
    check(obj_plain == one_plus.inverse(), "plain_objective_closed_form",
          "1/(1+t*) = " + obj_plain.to_string());
    const QSqrt2 weighted_closed =
        (rat(4) * t_star + QSqrt2(Rational(-1), Rational(3))) * (rat(5) * one_plus).inverse();
    check(obj_weighted == weighted_closed, "weighted_objective_closed_form",
          "(4t* + 3 sqrt2 - 1)/(5(1+t*)) = " + obj_weighted.to_string());

    // The plain objective decreases in t, the weighted one increases
    // (its numerator derivative is 5 - 3 sqrt2 > 0), so the pointwise max of
    // the two is minimized exactly where they cross.
    check(QSqrt2(Rational(5), Rational(-3)).sign() > 0, "weighted_objective_increasing",
          "5 - 3 sqrt2 > 0");
    check(obj_plain == obj_weighted, "objectives_cross_at_t_star",
          "both equal " + obj_plain.to_string());

    const QSqrt2 target = QSqrt2(Rational(20, 41), Rational(6, 41));  // (2/41)(10 + 3 sqrt2)
    check(obj_plain == target, "crossing_value_exact", "value = " + target.to_string());
    cert.value = target;

    // First ordering case: combine the isosceles cover with one star
    // constraint; the bound weakens as t grows and t <= 2/3, so evaluate at
    // t = 2/3: lambda >= (3 + (3/2)(3 sqrt2 - 4) + 3t) / ((9/2)(1+t)).
    const QSqrt2 n0 = rat(3) + rat(3, 2) * triangle_constant();
    check((n0 - rat(3)).sign() > 0, "case1_monotone", "numerator constant exceeds 3");
    const QSqrt2 t23 = rat(2, 3);
    const QSqrt2 case1 = (n0 + rat(3) * t23) * (rat(9, 2) * (rat(1) + t23)).inverse();
    const QSqrt2 case1_closed = QSqrt2(Rational(-2, 15), Rational(9, 15));
    check(case1 == case1_closed, "case1_value_exact", "(9 sqrt2 - 2)/15 = " + case1.to_string());
    check(case1 > rat(143, 200), "case1_above_0_715", "exceeds 143/200");
    cert.case1_value = case1;

    // Second ordering case reduces to lambda >= 1/(1 + 1/3) = 3/4.
    cert.case2_value = rat(3, 4);

    // The remaining ordering case maps onto the binding case by swapping
    // a<->f, b<->c, d<->e, so the overall bound is the minimum of the three.
    check(target < case1 && target < cert.case2_value, "binding_case_is_minimum",
          "crossing value below both other cases");
    return cert;
}

// ---------------------------------------------------------------------------
// Folding symmetry program
// ---------------------------------------------------------------------------

namespace {

const double kTUpper = (6.0 - 3.0 * 1.4142135623730951) / 4.0;

void box(std::vector<std::pair<std::string, double>>& out, const char* name, double v, double lo,
         double hi) {
    out.emplace_back(name, std::max({0.0, lo - v, v - hi}));
}

void ge(std::vector<std::pair<std::string, double>>& out, const char* name, double lhs,
        double rhs) {
    out.emplace_back(name, std::max(0.0, rhs - lhs));
}

void eq(std::vector<std::pair<std::string, double>>& out, const char* name, double lhs,
        double rhs) {
    out.emplace_back(name, std::abs(lhs - rhs));
}

}  // namespace

std::vector<std::pair<std::string, double>> folding_program_residuals(
    const FoldingProgramPoint& x, FoldingVariant variant) {
    std::vector<std::pair<std::string, double>> r;
    r.reserve(40);

    box(r, "box_a", x.a, 0.0, 0.5);
    box(r, "box_b", x.b, 0.0, 0.5);
    box(r, "box_c", x.c, 0.0, 0.5);
    box(r, "box_d", x.d, 0.0, 0.5);
    box(r, "box_e", x.e, 0.0, 0.5);
    box(r, "box_f", x.f, 0.0, 0.5);
    box(r, "box_u", x.u, 0.0, 0.5);
    box(r, "box_alpha", x.alpha, x.u + 1.0, 2.0 * x.u + 1.5);
    box(r, "box_beta", x.beta, 2.0 * x.u - 1.5, x.u - 1.0);
    box(r, "box_v1", x.v1, -0.5, 0.5);
    box(r, "box_v2", x.v2, -0.5, 0.5);
    box(r, "box_m1", x.m1, -0.5, 0.5);
    box(r, "box_m2", x.m2, -0.5, 0.5);
    box(r, "box_phiB", x.phi_b, 0.0, 1.0);
    box(r, "box_phiE", x.phi_e, 0.0, 1.0);
    box(r, "box_k1", x.k1, 0.0, 1.0);
    box(r, "box_k2", x.k2, 0.0, 1.0);
    box(r, "box_y1", x.y1, 0.5, 1.0);
    box(r, "box_y2", x.y2, 0.5, 1.0);

    eq(r, "t_sum", x.t, x.a + x.b + x.c + x.d + x.e + x.f);
    ge(r, "t_upper", kTUpper, x.t);

    ge(r, "side_area_right", x.a + x.f, (x.alpha - x.u - 1.0) / 3.0);
    ge(r, "side_area_left", x.c + x.d, (-x.beta + x.u - 1.0) / 3.0);

    ge(r, "top_trapezoid_upper", (1.0 - (1.0 - x.phi_b) * (1.0 - x.phi_b)) / 6.0, x.b);
    ge(r, "bottom_trapezoid_upper", (1.0 - (1.0 - x.phi_e) * (1.0 - x.phi_e)) / 6.0, x.e);
    ge(r, "top_triangle_lower", x.b, x.phi_b / 6.0);
    ge(r, "bottom_triangle_lower", x.e, x.phi_e / 6.0);

    if (variant == FoldingVariant::standard) {
        ge(r, "right_wedge_lower", x.a, x.k1 / 12.0 * (2.0 * x.u + 1.0));
        ge(r, "left_wedge_lower", x.d, x.k2 / 12.0 * (1.0 - 2.0 * x.u));
    } else {
        ge(r, "right_wedge_lower", x.a, x.k1 / 12.0 * (2.0 * x.u + 1.0));
        ge(r, "left_wedge_lower", x.c, x.k2 / 12.0 * (1.0 - 2.0 * x.u));
    }

    ge(r, "apex_slope_top_1", 1.0 - 2.0 * x.m1, x.phi_b * (1.0 + 2.0 * x.u));
    ge(r, "apex_slope_top_2", 2.0 * x.m1 + 1.0, x.phi_b * (1.0 - 2.0 * x.u));
    ge(r, "apex_slope_bottom_1", 1.0 - 2.0 * x.m2, x.phi_e * (1.0 + 2.0 * x.u));
    ge(r, "apex_slope_bottom_2", 2.0 * x.m2 + 1.0, x.phi_e * (1.0 - 2.0 * x.u));

    ge(r, "steepness_top", (1.0 - 2.0 * x.m1) * (1.0 - x.k1), x.phi_b * (2.0 * x.u + 1.0));
    if (variant == FoldingVariant::standard) {
        ge(r, "steepness_bottom", (1.0 + 2.0 * x.m2) * (1.0 - x.k2),
           x.phi_e * (1.0 - 2.0 * x.u));
    } else {
        ge(r, "steepness_bottom", (1.0 + 2.0 * x.m1) * (1.0 - x.k2),
           x.phi_b * (1.0 - 2.0 * x.u));
    }

    eq(r, "v1_def", x.v1,
       std::max({(2.0 * x.m1 + 1.0) / 4.0, (2.0 * x.m2 + 1.0) / 4.0,
                 (2.0 * x.alpha - 1.0) / 4.0}));
    eq(r, "v2_def", x.v2,
       std::min({(2.0 * x.m1 - 1.0) / 4.0, (2.0 * x.m2 - 1.0) / 4.0,
                 (2.0 * x.beta + 1.0) / 4.0}));

    if (variant == FoldingVariant::standard) {
        eq(r, "y1_def", x.y1, std::max(x.k1, 0.5));
        eq(r, "y2_def", x.y2, std::max(x.k2, 0.5));
    } else {
        eq(r, "y1_def", x.y1, std::max({x.k1, x.k2, 0.5}));
        eq(r, "y2_def", x.y2, 0.5);
    }

    const double lam = (1.0 + x.t) * x.lambda;
    ge(r, "right_fold", lam, 0.5 - 2.0 / 3.0 * x.v1 + x.u / 3.0 + x.a + x.f);
    ge(r, "left_fold", lam, 0.5 + 2.0 / 3.0 * x.v2 - x.u / 3.0 + x.c + x.d);
    ge(r, "top_fold", lam, x.b + (1.0 - x.y1) * (3.0 - x.y1) / 6.0);
    ge(r, "bottom_fold", lam, x.e + (1.0 - x.y2) * (3.0 - x.y2) / 6.0);
    return r;
}

double max_residual(const std::vector<std::pair<std::string, double>>& residuals) {
    double worst = 0.0;
    for (const auto& [name, v] : residuals) worst = std::max(worst, v);
    return worst;
}

namespace {

struct SampleVars {
    double u, alpha, beta, m1, m2, k1, k2, phi_b, phi_e, a, b, c, d, e, f;
};

// Clamp the free variables to the coupled feasible region (in a fixed order)
// and complete the point: dependent v/y/t/lambda from their definitions.
bool complete_point(SampleVars& s, FoldingVariant variant, FoldingProgramPoint& out) {
    s.u = std::clamp(s.u, 0.0, 0.5);
    // alpha beyond 3/2 would push v1 out of its box.
    s.alpha = std::clamp(s.alpha, s.u + 1.0, std::min(2.0 * s.u + 1.5, 1.5));
    s.beta = std::clamp(s.beta, 2.0 * s.u - 1.5, s.u - 1.0);
    s.m1 = std::clamp(s.m1, -0.5, 0.5);
    s.m2 = std::clamp(s.m2, -0.5, 0.5);
    s.k1 = std::clamp(s.k1, 0.0, 1.0);
    s.k2 = std::clamp(s.k2, 0.0, 1.0);

    auto cap_div = [](double num, double den) {
        if (den <= 0.0) return num > 0.0 ? 1.0 : 0.0;
        return num / den;
    };
    double phi_b_max = std::min(
        {1.0, cap_div(1.0 - 2.0 * s.m1, 1.0 + 2.0 * s.u), cap_div(2.0 * s.m1 + 1.0, 1.0 - 2.0 * s.u),
         cap_div((1.0 - 2.0 * s.m1) * (1.0 - s.k1), 2.0 * s.u + 1.0)});
    double phi_e_max;
    if (variant == FoldingVariant::standard) {
        phi_e_max = std::min({1.0, cap_div(1.0 - 2.0 * s.m2, 1.0 + 2.0 * s.u),
                              cap_div(2.0 * s.m2 + 1.0, 1.0 - 2.0 * s.u),
                              cap_div((1.0 + 2.0 * s.m2) * (1.0 - s.k2), 1.0 - 2.0 * s.u)});
    } else {
        // The obtuse steepness row couples phi_b to k2 and m1 instead.
        phi_b_max = std::min(phi_b_max, cap_div((1.0 + 2.0 * s.m1) * (1.0 - s.k2), 1.0 - 2.0 * s.u));
        phi_e_max = std::min({1.0, cap_div(1.0 - 2.0 * s.m2, 1.0 + 2.0 * s.u),
                              cap_div(2.0 * s.m2 + 1.0, 1.0 - 2.0 * s.u)});
    }
    if (phi_b_max < 0.0 || phi_e_max < 0.0) return false;
    s.phi_b = std::clamp(s.phi_b, 0.0, phi_b_max);
    s.phi_e = std::clamp(s.phi_e, 0.0, phi_e_max);

    const double b_lo = s.phi_b / 6.0, b_hi = (1.0 - (1.0 - s.phi_b) * (1.0 - s.phi_b)) / 6.0;
    const double e_lo = s.phi_e / 6.0, e_hi = (1.0 - (1.0 - s.phi_e) * (1.0 - s.phi_e)) / 6.0;
    s.b = std::clamp(s.b, b_lo, b_hi);
    s.e = std::clamp(s.e, e_lo, e_hi);

    const double a_lo = s.k1 / 12.0 * (2.0 * s.u + 1.0);
    const double wedge_lo = s.k2 / 12.0 * (1.0 - 2.0 * s.u);
    const double saf = std::max(0.0, (s.alpha - s.u - 1.0) / 3.0);
    const double scd = std::max(0.0, (-s.beta + s.u - 1.0) / 3.0);
    s.a = std::clamp(s.a, a_lo, 0.5);
    s.f = std::clamp(s.f, std::max(0.0, saf - s.a), 0.5);
    if (variant == FoldingVariant::standard) {
        s.d = std::clamp(s.d, wedge_lo, 0.5);
        s.c = std::clamp(s.c, std::max(0.0, scd - s.d), 0.5);
    } else {
        s.c = std::clamp(s.c, wedge_lo, 0.5);
        s.d = std::clamp(s.d, std::max(0.0, scd - s.c), 0.5);
    }

    const double t = s.a + s.b + s.c + s.d + s.e + s.f;
    if (t > kTUpper) return false;

    out.u = s.u;
    out.alpha = s.alpha;
    out.beta = s.beta;
    out.m1 = s.m1;
    out.m2 = s.m2;
    out.k1 = s.k1;
    out.k2 = s.k2;
    out.phi_b = s.phi_b;
    out.phi_e = s.phi_e;
    out.a = s.a;
    out.b = s.b;
    out.c = s.c;
    out.d = s.d;
    out.e = s.e;
    out.f = s.f;
    out.t = t;
    out.v1 = std::max({(2.0 * s.m1 + 1.0) / 4.0, (2.0 * s.m2 + 1.0) / 4.0,
                       (2.0 * s.alpha - 1.0) / 4.0});
    out.v2 = std::min({(2.0 * s.m1 - 1.0) / 4.0, (2.0 * s.m2 - 1.0) / 4.0,
                       (2.0 * s.beta + 1.0) / 4.0});
    if (variant == FoldingVariant::standard) {
        out.y1 = std::max(out.k1, 0.5);
        out.y2 = std::max(out.k2, 0.5);
    } else {
        out.y1 = std::max({out.k1, out.k2, 0.5});
        out.y2 = 0.5;
    }
    const double rhs = std::max({0.5 - 2.0 / 3.0 * out.v1 + out.u / 3.0 + out.a + out.f,
                                 0.5 + 2.0 / 3.0 * out.v2 - out.u / 3.0 + out.c + out.d,
                                 out.b + (1.0 - out.y1) * (3.0 - out.y1) / 6.0,
                                 out.e + (1.0 - out.y2) * (3.0 - out.y2) / 6.0});
    out.lambda = rhs / (1.0 + out.t);
    return true;
}

}  // namespace

FoldingSearchResult folding_program_search(long long budget, std::uint64_t seed) {
    if (budget < 1) throw Error("BadParam", "search budget must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    FoldingSearchResult best;
    best.min_lambda = 1.0;
    bool have = false;

    const long long random_budget = std::max<long long>(1, budget * 7 / 10);
    long long used = 0;

    auto consider = [&](const SampleVars& sv, FoldingVariant variant) {
        SampleVars s = sv;
        FoldingProgramPoint pt;
        if (!complete_point(s, variant, pt)) return false;
        if (!have || pt.lambda < best.min_lambda) {
            best.min_lambda = pt.lambda;
            best.witness = pt;
            best.variant = variant;
            have = true;
        }
        return true;
    };

    auto random_vars = [&]() {
        SampleVars s;
        s.u = 0.5 * uni(rng);
        s.alpha = s.u + 1.0 + 0.5 * uni(rng);
        s.beta = s.u - 1.0 - 0.5 * uni(rng);
        s.m1 = uni(rng) - 0.5;
        s.m2 = uni(rng) - 0.5;
        s.k1 = uni(rng);
        s.k2 = uni(rng);
        s.phi_b = uni(rng);
        s.phi_e = uni(rng);
        // Bias the free areas toward their lower bounds; large areas only
        // increase the fold requirements.
        s.a = 0.25 * uni(rng) * uni(rng);
        s.b = 0.25 * uni(rng) * uni(rng);
        s.c = 0.25 * uni(rng) * uni(rng);
        s.d = 0.25 * uni(rng) * uni(rng);
        s.e = 0.25 * uni(rng) * uni(rng);
        s.f = 0.25 * uni(rng) * uni(rng);
        return s;
    };

    SampleVars best_vars{};
    FoldingVariant best_variant = FoldingVariant::standard;
    for (; used < random_budget; ++used) {
        SampleVars s = random_vars();
        const FoldingVariant variant =
            (used % 2 == 0) ? FoldingVariant::standard : FoldingVariant::obtuse;
        const double before = have ? best.min_lambda : 2.0;
        if (consider(s, variant) && best.min_lambda < before) {
            best_vars = s;
            best_variant = variant;
        }
    }

    std::normal_distribution<double> gauss(0.0, 1.0);
    double scale = 0.1;
    for (; used < budget; ++used) {
        SampleVars s = best_vars;
        double* fields[] = {&s.u,  &s.alpha, &s.beta,  &s.m1, &s.m2, &s.k1, &s.k2, &s.phi_b,
                            &s.phi_e, &s.a,     &s.b,     &s.c,  &s.d,  &s.e,  &s.f};
        for (double* fp : fields)
            if (uni(rng) < 0.35) *fp += scale * gauss(rng);
        const double before = best.min_lambda;
        if (consider(s, best_variant) && best.min_lambda < before) best_vars = s;
        scale = std::max(1e-4, scale * 0.99995);
    }
    best.samples = used;
    if (!have) throw Error("InternalInconsistency", "no feasible folding-program point sampled");
    return best;
}

// ---------------------------------------------------------------------------
// Closed-form bounds
// ---------------------------------------------------------------------------

namespace {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

BigInt ipow(BigInt base, int exp) {
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

}  // namespace

Rational lower_bound_general(int n, int k) {
    if (n < 1 || k < 0 || k >= n) throw Error("BadParam", "need n >= 1 and 0 <= k < n");
    const BigInt num = std::max(factorial(k), factorial(n - k));
    const BigInt den = ipow(2, n - k) * factorial(n);
    return Rational(num, den);
}

Rational simplex_central_symmetry(int n) {
    if (n < 1) throw Error("BadParam", "need n >= 1");
    BigInt num = 0;
    for (int i = 0; i <= n / 2; ++i) {
        const BigInt term = binomial(n + 1, i) * ipow(n + 1 - 2 * i, n);
        num += (i % 2 == 0) ? term : -term;
    }
    return Rational(num, ipow(n + 1, n));
}

Rational lower_bound_hyperplane(int n) {
    if (n < 2) throw Error("BadParam", "need n >= 2");
    return Rational(1, 2 * n);
}

double pyramid_step_bound(int n) {
    if (n < 2) throw Error("BadParam", "need n >= 2");
    return std::pow(2.0 - std::pow(2.0, -1.0 / n), -n);
}

bool separation_check(int n) {
    if (n < 2) throw Error("BadParam", "need n >= 2");
    return lower_bound_hyperplane(n) > simplex_central_symmetry(n);
}

}  // namespace symmetria
