#pragma once

#include <array>

#include "symmetria/geometry.hpp"
#include "symmetria/measures.hpp"

namespace symmetria {

// Quadrilateral family (0,0), (1,0), (1, eps*sqrt2/(1+sqrt2)), (1/sqrt2, eps)
// whose axiality descends to (1+sqrt2)/3 as eps -> 0.
ConvexPolygon quad_family(double eps);

// Analytic best overlap ratio for a reflection of the family quadrilateral
// when the normal of the mirror line makes a small angle alpha with the base:
// (1+sqrt2) / (sqrt2*eps*sin a + 2 cos a + 1). Valid for
// 0 <= alpha <= atan(sqrt2 eps/(1+sqrt2))/2.
double small_angle_overlap_ratio(double eps, double alpha);

// Same quantity for near-vertical normals, beta = angle above pi/2, evaluated
// through the simplified trigonometric closed form with k = sqrt2*eps.
// Valid for 0 <= beta <= atan(sqrt2 eps)/2.
double mid_angle_overlap_ratio(double eps, double beta);

struct TranslateOptimum {
    double ratio = 0.0;
    double t = 0.0;  // translate parameter of the mirror line
};

// Overlap maximized over the mirror-line translate at a fixed angle, computed
// from the coordinate formulas of the overlap region (independent of the
// clipping engine). For the small-angle case t is the x-intercept; for the
// mid-angle case t is the y-intercept.
TranslateOptimum small_angle_best_translate(double eps, double alpha);
TranslateOptimum mid_angle_best_translate(double eps, double beta);

// Parallelogram (0,0), (1,0), (1+d1, h), (d1, h) with unit base; the slanted
// side must not exceed the base: d1^2 + h^2 <= 1.
ConvexPolygon parallelogram(double d1, double h);

// Exact folding symmetry of the parallelogram:
// max{ 1/(1 - d1 + sqrt(1-h^2)), sqrt(d1^2 + h^2), 1 - d1 }.
double parallelogram_folding_value(double d1, double h);

struct RectangleInBody {
    std::array<Point, 4> corners;  // counterclockwise
    double area = 0.0;
};

// Inscribed rectangle of prescribed absolute area r in a centrally symmetric
// convex polygon (r <= area/2). Sweeps a boundary point p; the matching
// chord through the opposite boundary pins a concentric parallelogram of
// area r, and a sign change of the diagonal skew yields a rectangle.
RectangleInBody inscribed_rectangle(const ConvexPolygon& p, double r);

// Lower bound on the largest cap area outside an inscribed rectangle of area
// ratio r in a unit-area convex body: (sqrt(1-2r) + 1 - r)/4.
double largest_cap_lower_bound(double r);

// Fold construction for centrally symmetric bodies: inscribe a rectangle of
// 4/9 of the area, take the largest cap and fold it over its base side (or
// over a parallel line at the feasibility depth). Guarantees value >= 4/9.
SymmetryReport centrally_symmetric_fold(const ConvexPolygon& p);

// The four caps cut off by the sides of an inscribed rectangle.
std::array<std::optional<ConvexPolygon>, 4> rectangle_caps(const ConvexPolygon& p,
                                                           const RectangleInBody& rect);

}  // namespace symmetria
