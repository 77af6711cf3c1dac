#pragma once

#include <optional>
#include <string>

#include "symmetria/geometry.hpp"

namespace symmetria {

struct MeasureOptions {
    int angle_samples = 720;
    double offset_tolerance = 1e-10;  // relative to the diameter
    int refine_brackets = 5;
    int refine_rounds = 60;
    int fold_offset_samples = 512;

    void validate() const;
};

enum class MeasureKind { axiality, central, folding };

std::string to_string(MeasureKind kind);

struct SymmetryReport {
    MeasureKind measure = MeasureKind::axiality;
    double value = 0.0;
    std::optional<LineSpec> line;  // axiality and folding
    std::optional<Point> center;   // central only
    int fold_side = +1;            // folding: cap lies on the side normal(theta) points to
    double overlap_area = 0.0;
    double body_area = 0.0;
    long long evaluations = 0;
    double achieved_tolerance = 0.0;
    bool grid_limited = false;
};

// area(P ∩ refl_L(P)) / area(P)
double overlap_ratio_axial(const ConvexPolygon& p, const LineSpec& line);

// Best reflection overlap ratio at a fixed angle, maximized over the offset
// by golden section (the offset slice of the overlap is unimodal).
struct AngleOverlap {
    double ratio = 0.0;
    double offset = 0.0;
};
AngleOverlap max_overlap_at_angle(const ConvexPolygon& p, double theta,
                                  const MeasureOptions& opts = {});

SymmetryReport axiality(const ConvexPolygon& p, const MeasureOptions& opts = {});
SymmetryReport central_symmetry(const ConvexPolygon& p, const MeasureOptions& opts = {});

// True iff the cap P ∩ H reflected across the boundary of H stays inside P
// within tol. Vertex containment is exact for convex polygons.
bool folding_feasible(const ConvexPolygon& p, const HalfPlane& h, double tol);

SymmetryReport folding(const ConvexPolygon& p, const MeasureOptions& opts = {});

// Rejects polygons too thin to measure reliably.
void require_measurable(const ConvexPolygon& p);

namespace detail {

// Forces single-threaded measure evaluation on this thread while alive; used
// by callers that already parallelize at a coarser level.
class ScopedSerialMeasures {
public:
    ScopedSerialMeasures();
    ~ScopedSerialMeasures();
    ScopedSerialMeasures(const ScopedSerialMeasures&) = delete;
    ScopedSerialMeasures& operator=(const ScopedSerialMeasures&) = delete;

private:
    bool previous_;
};

}  // namespace detail

}  // namespace symmetria
