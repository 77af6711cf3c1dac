#include "symmetria/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "symmetria/optim.hpp"

namespace symmetria {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

}  // namespace

// ---------------------------------------------------------------------------
// Quadrilateral family and its analytic overlap ratios
// ---------------------------------------------------------------------------

ConvexPolygon quad_family(double eps) {
    if (!(eps > 0.0) || eps > 0.5) throw Error("BadParam", "eps must lie in (0, 0.5]");
    const double h = eps * kSqrt2 / (1.0 + kSqrt2);  // = (2 - sqrt2) * eps
    const Point pts[4] = {{0.0, 0.0}, {1.0, 0.0}, {1.0, h}, {1.0 / kSqrt2, eps}};
    return normalize_polygon(std::span<const Point>(pts, 4));
}

double small_angle_overlap_ratio(double eps, double alpha) {
    if (!(eps > 0.0) || eps > 0.5) throw Error("BadParam", "eps must lie in (0, 0.5]");
    const double bound = 0.5 * std::atan(kSqrt2 * eps / (1.0 + kSqrt2));
    if (alpha < -1e-15 || alpha > bound * (1.0 + 1e-9) + 1e-15)
        throw Error("BadParam", "alpha outside the small-angle range");
    return (1.0 + kSqrt2) / (kSqrt2 * eps * std::sin(alpha) + 2.0 * std::cos(alpha) + 1.0);
}

TranslateOptimum small_angle_best_translate(double eps, double alpha) {
    if (!(eps > 0.0) || eps > 0.5) throw Error("BadParam", "eps must lie in (0, 0.5]");
    const double area = (2.0 - kSqrt2) * eps;
    if (alpha < 1e-12) return {(1.0 + kSqrt2) / 3.0, 2.0 / 3.0};
    const double k = kSqrt2 * eps;
    const double cot_a = 1.0 / std::tan(alpha);
    const double cot_2a = 1.0 / std::tan(2.0 * alpha);
    const double sec_2a = 1.0 / std::cos(2.0 * alpha);
    // overlap(t) = k [ t^2 C1 - (t C2 - C3)^2 C4 ], a concave quadratic.
    const double c1 = cot_a / (k + cot_a);
    const double c2 = 1.0 + sec_2a;
    const double c3 = sec_2a;
    const double c4 = cot_2a / (k + cot_2a);
    const double qa = k * (c1 - c2 * c2 * c4);
    const double qb = k * 2.0 * c2 * c3 * c4;
    const double qc = -k * c3 * c3 * c4;
    const double t_star = -qb / (2.0 * qa);
    const double overlap = (qa * t_star + qb) * t_star + qc;
    return {overlap / area, t_star};
}

double mid_angle_overlap_ratio(double eps, double beta) {
    if (!(eps > 0.0) || eps > 0.5) throw Error("BadParam", "eps must lie in (0, 0.5]");
    const double k = kSqrt2 * eps;
    const double bound = 0.5 * std::atan(k);
    if (beta < -1e-15 || beta > bound * (1.0 + 1e-9) + 1e-15)
        throw Error("BadParam", "beta outside the mid-angle range");
    const double num = (k + 2.0) * std::cos(beta) + (k - 2.0) * std::cos(3.0 * beta) -
                       2.0 * std::sin(beta);
    const double den = -(14.0 * k * k + 4.0 * k) * std::cos(beta) -
                       8.0 * k * k * std::cos(3.0 * beta) +
                       (4.0 * k - 2.0 * k * k) * std::cos(5.0 * beta) +
                       (2.0 * k - 4.0) * std::sin(beta) +
                       (k * k * k - 2.0 * k * k + 9.0 * k - 2.0) * std::sin(3.0 * beta) +
                       (k * k * k - 2.0 * k * k - k + 2.0) * std::sin(5.0 * beta);
    if (std::abs(den) < 1e-12) throw Error("Singularity", "mid-angle closed form denominator ~ 0");
    return -4.0 * (1.0 + kSqrt2) * k * num / den;
}

TranslateOptimum mid_angle_best_translate(double eps, double beta) {
    if (!(eps > 0.0) || eps > 0.5) throw Error("BadParam", "eps must lie in (0, 0.5]");
    const double k = kSqrt2 * eps;
    const double area = (2.0 - kSqrt2) * eps;
    const double tan_b = std::tan(beta);
    const double tan_2b = std::tan(2.0 * beta);
    const double sec_2b = 1.0 / std::cos(2.0 * beta);

    // Corner coordinates of the overlap region as functions of the mirror
    // line's y-intercept t; the overlap area is assembled from them.
    auto overlap = [&](double t) {
        const double px = t / (k - tan_b);
        const double qx = px * ((2.0 * eps * eps - 1.0) * tan_2b + 2.0 * k) / (k - tan_2b);
        const double rx =
            ((2.0 * eps - t) * sec_2b + k * t * tan_2b - t) / (k + tan_2b);
        const double sx = (2.0 * eps - t) / (tan_b + k);
        return k * (kSqrt2 * px * (kSqrt2 * sx - 1.0) + rx * (kSqrt2 - sx) - px * qx);
    };
    auto [t_star, best] = golden_max(overlap, 0.0, 2.0 * eps, 1e-14 * eps, 400);
    return {best / area, t_star};
}

// ---------------------------------------------------------------------------
// Parallelograms
// ---------------------------------------------------------------------------

ConvexPolygon parallelogram(double d1, double h) {
    if (!(d1 >= 0.0) || d1 >= 1.0 || !(h > 0.0) || h > 1.0 || d1 * d1 + h * h > 1.0 + 1e-12)
        throw Error("BadParam", "need d1 in [0,1), h in (0,1], d1^2 + h^2 <= 1");
    const Point pts[4] = {{0.0, 0.0}, {1.0, 0.0}, {1.0 + d1, h}, {d1, h}};
    return normalize_polygon(std::span<const Point>(pts, 4));
}

double parallelogram_folding_value(double d1, double h) {
    if (!(d1 >= 0.0) || d1 >= 1.0 || !(h >= 0.0) || h > 1.0 || d1 * d1 + h * h > 1.0 + 1e-12)
        throw Error("BadParam", "need d1 in [0,1), h in [0,1], d1^2 + h^2 <= 1");
    const double cut_corner = 1.0 / (1.0 - d1 + std::sqrt(std::max(0.0, 1.0 - h * h)));
    const double short_diagonal = std::sqrt(d1 * d1 + h * h);
    const double across = 1.0 - d1;
    return std::max({cut_corner, short_diagonal, across});
}

// ---------------------------------------------------------------------------
// Inscribed rectangles in centrally symmetric bodies
// ---------------------------------------------------------------------------

namespace {

struct Boundary {
    std::vector<Point> v;      // centered: centroid at origin
    std::vector<double> cum;   // cumulative arc length, cum[n] = perimeter
    int n = 0;
    double scale = 1.0;

    Point at(double s, int& edge, double& frac) const {
        double x = std::fmod(s, cum[static_cast<std::size_t>(n)]);
        if (x < 0.0) x += cum[static_cast<std::size_t>(n)];
        edge = static_cast<int>(std::upper_bound(cum.begin(), cum.end(), x) - cum.begin()) - 1;
        edge = std::clamp(edge, 0, n - 1);
        const double len = cum[static_cast<std::size_t>(edge) + 1] - cum[static_cast<std::size_t>(edge)];
        frac = len > 0.0 ? (x - cum[static_cast<std::size_t>(edge)]) / len : 0.0;
        const Point a = v[static_cast<std::size_t>(edge)];
        const Point b = v[static_cast<std::size_t>((edge + 1) % n)];
        return a + frac * (b - a);
    }
};

// First point q on the open boundary arc from p (on `edge`) counterclockwise
// to -p with parallelogram area 2*cross(p, q) equal to r. The functional
// q -> 2*cross(p, q) is linear, hence unimodal along the arc, so the first
// level crossing sits on its rising side.
std::optional<Point> matching_corner(const Boundary& b, Point p, int edge, double r) {
    const double flat_tol = 1e-12 * b.scale * b.scale;
    Point prev = p;
    double g_prev = 0.0;
    const int half = b.n / 2;
    for (int step = 1; step <= half + 1; ++step) {
        Point node;
        if (step <= half)
            node = b.v[static_cast<std::size_t>((edge + step) % b.n)];
        else
            node = Point{-p.x, -p.y};
        const double g = 2.0 * cross(p, node);
        if (g >= r && g_prev <= r) {
            if (std::abs(g - g_prev) <= flat_tol) {
                // Plateau at the target level: free to choose the corner that
                // matches the diagonal lengths.
                const Point d = node - prev;
                const double a2 = dot(d, d);
                if (a2 <= 0.0) return prev;
                const double bb = dot(prev, d);
                const double cc = dot(prev, prev) - dot(p, p);
                const double disc = bb * bb - a2 * cc;
                double mu;
                if (disc >= 0.0) {
                    const double root = std::sqrt(disc);
                    const double m1 = (-bb + root) / a2;
                    const double m2 = (-bb - root) / a2;
                    mu = (m1 >= 0.0 && m1 <= 1.0) ? m1 : m2;
                    if (mu < 0.0 || mu > 1.0) mu = std::clamp(m1, 0.0, 1.0);
                } else {
                    mu = -bb / a2 < 0.5 ? 0.0 : 1.0;
                }
                mu = std::clamp(mu, 0.0, 1.0);
                return prev + mu * d;
            }
            const double mu = (r - g_prev) / (g - g_prev);
            return prev + mu * (node - prev);
        }
        prev = node;
        g_prev = g;
    }
    return std::nullopt;
}

double boundary_distance(const ConvexPolygon& p, Point q) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0, n = p.size(); i < n; ++i) {
        const Point a = p[i];
        const Point b = p[(i + 1) % n];
        const Point d = b - a;
        const double len2 = dot(d, d);
        double t = len2 > 0.0 ? dot(q - a, d) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, distance(q, a + t * d));
    }
    return best;
}

}  // namespace

RectangleInBody inscribed_rectangle(const ConvexPolygon& p, double r) {
    const double area = polygon_area(p);
    const double diam = diameter(p);
    if (!(r > 0.0)) throw Error("BadParam", "rectangle area must be positive");
    if (r > 0.5 * area * (1.0 + 1e-9))
        throw Error("AreaTooLarge", "no inscribed rectangle sweep above half the area");

    const Point c = centroid(p);
    const int n = static_cast<int>(p.size());
    const double sym_tol = 1e-8 * std::max(1.0, diam);
    if (n % 2 != 0) throw Error("NotCentrallySymmetric", "odd vertex count");
    for (int i = 0; i < n / 2; ++i) {
        const Point mirror{2.0 * c.x - p[static_cast<std::size_t>(i)].x,
                           2.0 * c.y - p[static_cast<std::size_t>(i)].y};
        if (distance(mirror, p[static_cast<std::size_t>(i + n / 2)]) > sym_tol)
            throw Error("NotCentrallySymmetric", "vertex set not symmetric about the centroid");
    }

    Boundary b;
    b.n = n;
    b.scale = diam;
    b.v.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b.v[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] - c;
    b.cum.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 0; i < n; ++i)
        b.cum[static_cast<std::size_t>(i) + 1] =
            b.cum[static_cast<std::size_t>(i)] +
            distance(b.v[static_cast<std::size_t>(i)], b.v[static_cast<std::size_t>((i + 1) % n)]);
    const double perimeter = b.cum[static_cast<std::size_t>(n)];

    auto kappa = [&](double s) -> std::optional<std::pair<double, std::array<Point, 2>>> {
        int edge;
        double frac;
        const Point pp = b.at(s, edge, frac);
        const auto q = matching_corner(b, pp, edge, r);
        if (!q) return std::nullopt;
        return std::make_pair(norm(*q) - norm(pp), std::array<Point, 2>{pp, *q});
    };

    auto build = [&](const std::array<Point, 2>& pq) {
        RectangleInBody rect;
        rect.corners = {pq[0] + c, pq[1] + c, Point{-pq[0].x, -pq[0].y} + c,
                        Point{-pq[1].x, -pq[1].y} + c};
        rect.area = 2.0 * cross(pq[0], pq[1]);
        return rect;
    };

    auto acceptable = [&](const RectangleInBody& rect) {
        if (std::abs(rect.area - r) > 1e-6 * r) return false;
        for (const Point& corner : rect.corners)
            if (boundary_distance(p, corner) > 1e-7 * diam) return false;
        const double diag1 = distance(rect.corners[0], rect.corners[2]);
        const double diag2 = distance(rect.corners[1], rect.corners[3]);
        return std::abs(diag1 - diag2) <= 1e-8 * std::max(1.0, diam);
    };

    // Half a period suffices: the configuration at s + perimeter/2 is the
    // point reflection of the one at s.
    const int samples = 4096;
    std::vector<std::optional<std::pair<double, std::array<Point, 2>>>> sweep(
        static_cast<std::size_t>(samples) + 1);
    for (int i = 0; i <= samples; ++i)
        sweep[static_cast<std::size_t>(i)] = kappa(0.5 * perimeter * i / samples);

    const double direct_tol = 1e-9 * diam;
    for (int i = 0; i <= samples; ++i) {
        const auto& k = sweep[static_cast<std::size_t>(i)];
        if (k && std::abs(k->first) <= direct_tol) {
            RectangleInBody rect = build(k->second);
            if (acceptable(rect)) return rect;
        }
    }

    for (int i = 0; i < samples; ++i) {
        const auto& ka = sweep[static_cast<std::size_t>(i)];
        const auto& kb = sweep[static_cast<std::size_t>(i) + 1];
        if (!ka || !kb) continue;
        if ((ka->first > 0.0) == (kb->first > 0.0)) continue;
        double lo = 0.5 * perimeter * i / samples;
        double hi = 0.5 * perimeter * (i + 1) / samples;
        auto klo = *ka;
        auto khi = *kb;
        while (hi - lo > 1e-10 * perimeter) {
            const double mid = 0.5 * (lo + hi);
            const auto km = kappa(mid);
            if (!km) break;
            if ((km->first > 0.0) == (klo.first > 0.0)) {
                lo = mid;
                klo = *km;
            } else {
                hi = mid;
                khi = *km;
            }
        }
        const auto& pick = std::abs(klo.first) <= std::abs(khi.first) ? klo : khi;
        RectangleInBody rect = build(pick.second);
        if (acceptable(rect)) return rect;
    }
    throw Error("NoSignChange", "boundary sweep found no diagonal-skew sign change");
}

double largest_cap_lower_bound(double r) {
    if (!(r > 0.0) || r > 0.5 + 1e-12) throw Error("BadParam", "need 0 < r <= 1/2");
    return (std::sqrt(std::max(0.0, 1.0 - 2.0 * r)) + 1.0 - r) / 4.0;
}

std::array<std::optional<ConvexPolygon>, 4> rectangle_caps(const ConvexPolygon& p,
                                                           const RectangleInBody& rect) {
    std::array<std::optional<ConvexPolygon>, 4> caps;
    for (int i = 0; i < 4; ++i) {
        const Point a = rect.corners[static_cast<std::size_t>(i)];
        const Point b = rect.corners[static_cast<std::size_t>((i + 1) % 4)];
        const Point e = b - a;
        const double len = norm(e);
        const Point out{e.y / len, -e.x / len};  // outward for a CCW rectangle
        const double off = dot(out, a);
        const double theta = std::atan2(out.y, out.x);
        caps[static_cast<std::size_t>(i)] = clip(p, HalfPlane{LineSpec(theta, off), +1});
    }
    return caps;
}

SymmetryReport centrally_symmetric_fold(const ConvexPolygon& p) {
    const double area = polygon_area(p);
    const Point c = centroid(p);
    const double s = std::sqrt(area);

    // Normalize to unit area about the centroid; all lengths below are in
    // normalized units and the fold line is mapped back at the end.
    ConvexPolygon q = scale(translate(p, Point{-c.x, -c.y}), 1.0 / s);
    const RectangleInBody rect = inscribed_rectangle(q, 4.0 / 9.0);
    const auto caps = rectangle_caps(q, rect);

    int best = -1;
    double best_area = -1.0;
    for (int i = 0; i < 4; ++i) {
        const double a = caps[static_cast<std::size_t>(i)] ? polygon_area(*caps[static_cast<std::size_t>(i)]) : 0.0;
        if (a > best_area) {
            best_area = a;
            best = i;
        }
    }

    const Point a_corner = rect.corners[static_cast<std::size_t>(best)];
    const Point b_corner = rect.corners[static_cast<std::size_t>((best + 1) % 4)];
    const Point e = b_corner - a_corner;
    const double base_len = norm(e);
    const Point out{e.y / base_len, -e.x / base_len};
    const double d_base = dot(out, a_corner);
    const double depth = rect.area / base_len;  // the adjacent side length

    double peak = 0.0;
    if (caps[static_cast<std::size_t>(best)])
        for (const Point& v : caps[static_cast<std::size_t>(best)]->vertices)
            peak = std::max(peak, dot(out, v) - d_base);

    double fold_offset = d_base;
    double fold_area = best_area;
    if (peak > depth) {
        const double alpha = 0.5 * (peak / depth - 1.0);
        fold_offset = d_base + alpha * depth;
        const auto small_cap =
            clip(q, HalfPlane{LineSpec(std::atan2(out.y, out.x), fold_offset), +1});
        fold_area = small_cap ? polygon_area(*small_cap) : 0.0;
    }

    SymmetryReport rep;
    rep.measure = MeasureKind::folding;
    rep.value = 2.0 * fold_area;  // unit-area normalization
    rep.fold_side = +1;
    const double theta = std::atan2(out.y, out.x);
    rep.line = LineSpec(theta, s * fold_offset + dot(out, c));
    rep.overlap_area = fold_area * area;
    rep.body_area = area;
    rep.evaluations = 0;
    rep.achieved_tolerance = 0.0;
    rep.grid_limited = false;
    return rep;
}

}  // namespace symmetria
