#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symmetria/error.hpp"

namespace symmetria {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::sqrt(p.x * p.x + p.y * p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

// The line {x : x . n(theta) = offset} with n(theta) = (cos theta, sin theta).
struct LineSpec {
    double theta = 0.0;
    double offset = 0.0;

    LineSpec() = default;
    LineSpec(double theta_, double offset_);

    Point normal() const { return {std::cos(theta), std::sin(theta)}; }
    Point direction() const { return {-std::sin(theta), std::cos(theta)}; }
};

// keep_side selects {x : keep_side * (x . n(theta) - offset) >= 0}.
struct HalfPlane {
    LineSpec line;
    int keep_side = +1;
};

// Counterclockwise, strictly convex, vertices start at the lexicographically
// smallest point. Build through normalize_polygon.
struct ConvexPolygon {
    std::vector<Point> vertices;

    std::size_t size() const { return vertices.size(); }
    const Point& operator[](std::size_t i) const { return vertices[i]; }
};

ConvexPolygon normalize_polygon(std::span<const Point> points);
ConvexPolygon normalize_polygon(const std::vector<Point>& points);

double polygon_area(const ConvexPolygon& p);
Point centroid(const ConvexPolygon& p);
double diameter(const ConvexPolygon& p);
// Smallest support width over all directions (attained at an edge normal).
double min_width(const ConvexPolygon& p);

Point reflect_point(Point p, const LineSpec& line);
ConvexPolygon reflect_polygon(const ConvexPolygon& p, const LineSpec& line);
// Point reflection through c.
ConvexPolygon reflect_polygon(const ConvexPolygon& p, Point c);

std::optional<ConvexPolygon> clip(const ConvexPolygon& p, const HalfPlane& h);
std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q);

bool contains(const ConvexPolygon& p, Point pt, double tol);

// (min, max) of v . n(theta) over the vertices.
std::pair<double, double> support_interval(const ConvexPolygon& p, double theta);

ConvexPolygon translate(const ConvexPolygon& p, Point by);
ConvexPolygon rotate(const ConvexPolygon& p, double angle, Point about = {0.0, 0.0});
ConvexPolygon scale(const ConvexPolygon& p, double factor, Point about = {0.0, 0.0});

ConvexPolygon regular_polygon(int n, double circumradius = 1.0, Point center = {0.0, 0.0});

namespace detail {

// Precomputed edge data for repeated clipping against a fixed polygon.
struct EdgeList {
    struct Edge {
        double nx, ny, off;  // inward halfplane: nx*x + ny*y >= off
    };
    std::vector<Edge> edges;
    double scale = 1.0;  // geometric scale used for epsilons

    void build(const ConvexPolygon& p);
};

// Scratch buffers so the overlap kernels do not allocate per call.
struct Workspace {
    std::vector<Point> a, b;
};

// Area of polygon (as raw CCW vertex list) clipped against all edges; the
// input buffer is destroyed. Returns 0 for empty intersections.
double clip_area(std::vector<Point>& poly, const EdgeList& clipper, std::vector<Point>& tmp);

// area(P intersect reflection of P across the line), allocation-free after warmup.
double overlap_area_line(const ConvexPolygon& p, const EdgeList& edges, double theta,
                         double offset, Workspace& ws);
double overlap_area_line(const ConvexPolygon& p, const EdgeList& edges, Point n, double offset,
                         Workspace& ws);

// area(P intersect point-reflection of P about c).
double overlap_area_center(const ConvexPolygon& p, const EdgeList& edges, Point c, Workspace& ws);

double shoelace2(std::span<const Point> pts);  // twice the signed area

}  // namespace detail

}  // namespace symmetria
