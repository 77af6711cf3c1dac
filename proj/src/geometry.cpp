#include "symmetria/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace symmetria {

namespace {

constexpr double kDedupTol = 1e-12;      // relative to scale
constexpr double kCollinearTol = 1e-12;  // of scale^2, triangle-area threshold

double bbox_diag(std::span<const Point> pts) {
    double lox = pts[0].x, hix = pts[0].x, loy = pts[0].y, hiy = pts[0].y;
    for (const Point& p : pts) {
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, p.y);
        hiy = std::max(hiy, p.y);
    }
    return std::hypot(hix - lox, hiy - loy);
}

void rotate_to_lex_min(std::vector<Point>& v) {
    auto lex_less = [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    };
    auto it = std::min_element(v.begin(), v.end(), lex_less);
    std::rotate(v.begin(), it, v.end());
}

// Drop near-duplicate and near-collinear vertices from a convex CCW cycle.
// Returns false when fewer than 3 vertices survive.
bool clean_cycle(std::vector<Point>& v, double scale) {
    const double dtol = kDedupTol * std::max(scale, 1.0);
    const double atol = kCollinearTol * scale * scale;
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        std::vector<Point> out;
        out.reserve(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& prev = out.empty() ? v[(i + v.size() - 1) % v.size()] : out.back();
            if (distance(v[i], prev) <= dtol && !out.empty()) {
                changed = true;
                continue;
            }
            out.push_back(v[i]);
        }
        if (out.size() >= 2 && distance(out.front(), out.back()) <= dtol) {
            out.pop_back();
            changed = true;
        }
        v = std::move(out);
        if (v.size() < 3) return false;
        std::vector<Point> out2;
        out2.reserve(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& a = v[(i + v.size() - 1) % v.size()];
            const Point& b = v[i];
            const Point& c = v[(i + 1) % v.size()];
            if (std::abs(cross(b - a, c - b)) * 0.5 <= atol) {
                changed = true;
                continue;
            }
            out2.push_back(b);
        }
        v = std::move(out2);
    }
    return v.size() >= 3;
}

}  // namespace

LineSpec::LineSpec(double theta_, double offset_) : theta(theta_), offset(offset_) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
}

ConvexPolygon normalize_polygon(std::span<const Point> points) {
    if (points.size() < 3) throw Error("DegenerateInput", "need at least 3 points");
    for (const Point& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw Error("NonFinite", "non-finite coordinate in polygon input");
    }
    const double scale = std::max(bbox_diag(points), 0.0);
    if (scale == 0.0) throw Error("DegenerateInput", "all points coincide");

    // Andrew monotone chain, strict turns only.
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [&](const Point& a, const Point& b) {
                              return distance(a, b) <= kDedupTol * std::max(scale, 1.0);
                          }),
              pts.end());
    if (pts.size() < 3) throw Error("DegenerateInput", "fewer than 3 distinct points");

    auto build = [&](auto begin, auto end) {
        std::vector<Point> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   cross(chain[chain.size() - 1] - chain[chain.size() - 2],
                         *it - chain[chain.size() - 1]) <= 0.0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Point> lower = build(pts.begin(), pts.end());
    std::vector<Point> upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());

    if (!clean_cycle(lower, scale))
        throw Error("DegenerateInput", "convex hull has fewer than 3 extreme points");
    rotate_to_lex_min(lower);
    ConvexPolygon out{std::move(lower)};
    if (detail::shoelace2(out.vertices) <= 0.0)
        throw Error("DegenerateInput", "degenerate hull (zero area)");
    return out;
}

ConvexPolygon normalize_polygon(const std::vector<Point>& points) {
    return normalize_polygon(std::span<const Point>(points.data(), points.size()));
}

double detail::shoelace2(std::span<const Point> pts) {
    double s = 0.0;
    for (std::size_t i = 0, n = pts.size(); i < n; ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

double polygon_area(const ConvexPolygon& p) { return 0.5 * detail::shoelace2(p.vertices); }

Point centroid(const ConvexPolygon& p) {
    double a2 = 0.0, cx = 0.0, cy = 0.0;
    const auto& v = p.vertices;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        const double w = a.x * b.y - b.x * a.y;
        a2 += w;
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    return {cx / (3.0 * a2), cy / (3.0 * a2)};
}

double diameter(const ConvexPolygon& p) {
    double best = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            best = std::max(best, distance(p[i], p[j]));
    return best;
}

double min_width(const ConvexPolygon& p) {
    double best = std::numeric_limits<double>::infinity();
    const auto& v = p.vertices;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        Point e = v[(i + 1) % n] - v[i];
        const double len = norm(e);
        if (len == 0.0) continue;
        Point nrm{-e.y / len, e.x / len};
        double lo = dot(v[0], nrm), hi = lo;
        for (const Point& q : v) {
            const double d = dot(q, nrm);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        best = std::min(best, hi - lo);
    }
    return best;
}

Point reflect_point(Point p, const LineSpec& line) {
    const Point n = line.normal();
    const double d = line.offset - dot(p, n);
    return p + (2.0 * d) * n;
}

ConvexPolygon reflect_polygon(const ConvexPolygon& p, const LineSpec& line) {
    std::vector<Point> v(p.vertices.size());
    // Reflection flips orientation; reversing restores CCW.
    for (std::size_t i = 0; i < p.size(); ++i) v[p.size() - 1 - i] = reflect_point(p[i], line);
    rotate_to_lex_min(v);
    return ConvexPolygon{std::move(v)};
}

ConvexPolygon reflect_polygon(const ConvexPolygon& p, Point c) {
    // A point reflection is a half-turn: orientation is preserved.
    std::vector<Point> v(p.vertices.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        v[i] = Point{2.0 * c.x - p[i].x, 2.0 * c.y - p[i].y};
    rotate_to_lex_min(v);
    return ConvexPolygon{std::move(v)};
}

namespace detail {

void EdgeList::build(const ConvexPolygon& p) {
    edges.clear();
    edges.reserve(p.size());
    const auto& v = p.vertices;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % n];
        const Point e = b - a;
        const double len = norm(e);
        // Inward normal of a CCW edge.
        Edge ed{-e.y / len, e.x / len, 0.0};
        ed.off = ed.nx * a.x + ed.ny * a.y;
        edges.push_back(ed);
    }
    scale = diameter(p);
}

namespace {

// Sutherland-Hodgman against a single halfplane nx*x + ny*y >= off.
void clip_halfplane(const std::vector<Point>& in, double nx, double ny, double off, double eps,
                    std::vector<Point>& out) {
    out.clear();
    const std::size_t n = in.size();
    if (n == 0) return;
    double dprev = nx * in[n - 1].x + ny * in[n - 1].y - off;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& cur = in[i];
        const Point& prev = in[(i + n - 1) % n];
        const double dcur = nx * cur.x + ny * cur.y - off;
        const bool cin = dcur >= -eps;
        const bool pin = dprev >= -eps;
        if (cin) {
            if (!pin) {
                const double t = dprev / (dprev - dcur);
                out.push_back(prev + t * (cur - prev));
            }
            out.push_back(cur);
        } else if (pin) {
            const double t = dprev / (dprev - dcur);
            out.push_back(prev + t * (cur - prev));
        }
        dprev = dcur;
    }
}

}  // namespace

double clip_area(std::vector<Point>& poly, const EdgeList& clipper, std::vector<Point>& tmp) {
    const double eps = 1e-12 * std::max(clipper.scale, 1.0);
    for (const auto& e : clipper.edges) {
        clip_halfplane(poly, e.nx, e.ny, e.off, eps, tmp);
        poly.swap(tmp);
        if (poly.size() < 3) return 0.0;
    }
    const double a2 = shoelace2(poly);
    return a2 > 0.0 ? 0.5 * a2 : 0.0;
}

double overlap_area_line(const ConvexPolygon& p, const EdgeList& edges, Point n, double offset,
                         Workspace& ws) {
    ws.a.clear();
    const std::size_t m = p.size();
    ws.a.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Point& v = p[i];
        const double d = offset - (v.x * n.x + v.y * n.y);
        ws.a[m - 1 - i] = Point{v.x + 2.0 * d * n.x, v.y + 2.0 * d * n.y};
    }
    return clip_area(ws.a, edges, ws.b);
}

double overlap_area_line(const ConvexPolygon& p, const EdgeList& edges, double theta,
                         double offset, Workspace& ws) {
    return overlap_area_line(p, edges, Point{std::cos(theta), std::sin(theta)}, offset, ws);
}

double overlap_area_center(const ConvexPolygon& p, const EdgeList& edges, Point c, Workspace& ws) {
    ws.a.clear();
    const std::size_t m = p.size();
    ws.a.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        ws.a[i] = Point{2.0 * c.x - p[i].x, 2.0 * c.y - p[i].y};
    return clip_area(ws.a, edges, ws.b);
}

}  // namespace detail

std::optional<ConvexPolygon> clip(const ConvexPolygon& p, const HalfPlane& h) {
    const Point n = h.line.normal();
    const double side = h.keep_side >= 0 ? 1.0 : -1.0;
    const double scale = diameter(p);
    std::vector<Point> out;
    std::vector<Point> in = p.vertices;
    detail::clip_halfplane(in, side * n.x, side * n.y, side * h.line.offset,
                           1e-12 * std::max(scale, 1.0), out);
    if (out.size() < 3) return std::nullopt;
    if (!clean_cycle(out, scale)) return std::nullopt;
    rotate_to_lex_min(out);
    ConvexPolygon res{std::move(out)};
    if (polygon_area(res) <= 0.0) return std::nullopt;
    return res;
}

std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
    detail::EdgeList edges;
    edges.build(q);
    const double scale = std::max(diameter(p), edges.scale);
    const double eps = 1e-12 * std::max(scale, 1.0);
    std::vector<Point> cur = p.vertices, tmp;
    for (const auto& e : edges.edges) {
        detail::clip_halfplane(cur, e.nx, e.ny, e.off, eps, tmp);
        cur.swap(tmp);
        if (cur.size() < 3) return std::nullopt;
    }
    if (!clean_cycle(cur, scale)) return std::nullopt;
    rotate_to_lex_min(cur);
    ConvexPolygon res{std::move(cur)};
    if (polygon_area(res) <= 0.0) return std::nullopt;
    return res;
}

bool contains(const ConvexPolygon& p, Point pt, double tol) {
    if (tol < 0.0) throw Error("BadParam", "containment tolerance must be nonnegative");
    const auto& v = p.vertices;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % n];
        const Point e = b - a;
        const double len = norm(e);
        if (cross(e, pt - a) / len < -tol) return false;
    }
    return true;
}

std::pair<double, double> support_interval(const ConvexPolygon& p, double theta) {
    const Point n{std::cos(theta), std::sin(theta)};
    double lo = dot(p[0], n), hi = lo;
    for (const Point& v : p.vertices) {
        const double d = dot(v, n);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

ConvexPolygon translate(const ConvexPolygon& p, Point by) {
    std::vector<Point> v = p.vertices;
    for (Point& q : v) q = q + by;
    rotate_to_lex_min(v);
    return ConvexPolygon{std::move(v)};
}

ConvexPolygon rotate(const ConvexPolygon& p, double angle, Point about) {
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<Point> v = p.vertices;
    for (Point& q : v) {
        const Point d = q - about;
        q = Point{about.x + c * d.x - s * d.y, about.y + s * d.x + c * d.y};
    }
    rotate_to_lex_min(v);
    return ConvexPolygon{std::move(v)};
}

ConvexPolygon scale(const ConvexPolygon& p, double factor, Point about) {
    if (factor <= 0.0) throw Error("BadParam", "scale factor must be positive");
    std::vector<Point> v = p.vertices;
    for (Point& q : v) q = about + factor * (q - about);
    rotate_to_lex_min(v);
    return ConvexPolygon{std::move(v)};
}

ConvexPolygon regular_polygon(int n, double circumradius, Point center) {
    if (n < 3) throw Error("BadParam", "regular polygon needs n >= 3");
    std::vector<Point> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * std::numbers::pi * i / n;
        v.push_back({center.x + circumradius * std::cos(a), center.y + circumradius * std::sin(a)});
    }
    rotate_to_lex_min(v);
    return ConvexPolygon{std::move(v)};
}

}  // namespace symmetria
