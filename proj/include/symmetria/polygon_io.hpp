#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "symmetria/geometry.hpp"
#include "symmetria/measures.hpp"

namespace symmetria {

// What normalize_polygon changed about the raw file contents.
struct NormalizationReport {
    int input_count = 0;
    int kept = 0;
    bool changed = false;
    std::string note;
};

struct LoadedPolygon {
    ConvexPolygon polygon;
    NormalizationReport report;
};

// Polygon file format: JSON object {"vertices": [[x, y], ...]}.
LoadedPolygon read_polygon_text(const std::string& text);
LoadedPolygon read_polygon_file(const std::string& path);
std::string polygon_to_json(const ConvexPolygon& p);
void write_polygon_file(const std::string& path, const ConvexPolygon& p);

// SVG 1.1 snapshot: the body (id "body"), the overlap region (id "overlap"),
// and either the mirror line (id "mirror-line") or the centre marker
// (id "center"), depending on the measure.
struct SvgOverlay {
    std::optional<LineSpec> line;
    std::optional<Point> center;
    std::optional<ConvexPolygon> overlap;
};

std::string render_svg(const ConvexPolygon& p, const SvgOverlay& overlay);
void write_svg_file(const std::string& path, const ConvexPolygon& p, const SvgOverlay& overlay);

// Overlay for a finished measurement (reconstructs the overlap region).
SvgOverlay overlay_for_report(const ConvexPolygon& p, const SymmetryReport& rep);

}  // namespace symmetria
