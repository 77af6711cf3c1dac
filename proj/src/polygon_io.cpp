#include "symmetria/polygon_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace symmetria {

namespace {

bool same_vertex_list(const std::vector<Point>& a, const std::vector<Point>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (distance(a[i], b[i]) > tol) return false;
    return true;
}

}  // namespace

LoadedPolygon read_polygon_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("BadFile", std::string("polygon JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw Error("BadFile", "expected an object with a \"vertices\" array");
    std::vector<Point> pts;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number())
            throw Error("BadFile", "each vertex must be a [x, y] number pair");
        pts.push_back({row[0].get<double>(), row[1].get<double>()});
    }

    LoadedPolygon out{normalize_polygon(pts), {}};
    out.report.input_count = static_cast<int>(pts.size());
    out.report.kept = static_cast<int>(out.polygon.size());
    const double tol = 1e-12 * std::max(1.0, diameter(out.polygon));
    out.report.changed = !same_vertex_list(pts, out.polygon.vertices, tol);
    if (out.report.kept < out.report.input_count)
        out.report.note = "dropped duplicate or collinear vertices";
    else if (out.report.changed)
        out.report.note = "reordered counterclockwise from the lexicographic minimum";
    return out;
}

LoadedPolygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("BadFile", "cannot open polygon file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_polygon_text(ss.str());
}

std::string polygon_to_json(const ConvexPolygon& p) {
    nlohmann::json verts = nlohmann::json::array();
    for (const Point& v : p.vertices) verts.push_back({v.x, v.y});
    nlohmann::json j;
    j["vertices"] = verts;
    return j.dump(2);
}

void write_polygon_file(const std::string& path, const ConvexPolygon& p) {
    std::ofstream out(path);
    if (!out) throw Error("BadFile", "cannot write polygon file: " + path);
    out << polygon_to_json(p) << "\n";
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

namespace {

constexpr const char* kBodyStroke = "#1f2937";
constexpr const char* kOverlapFill = "#60a5fa";
constexpr const char* kAccentStroke = "#dc2626";

struct Frame {
    double min_x, min_y, max_x, max_y, margin;

    double width() const { return max_x - min_x + 2 * margin; }
    double height() const { return max_y - min_y + 2 * margin; }
    // SVG y-axis points down; flip to keep the drawing in math orientation.
    double sx(double x) const { return x - min_x + margin; }
    double sy(double y) const { return max_y - y + margin; }
};

std::string points_attr(const ConvexPolygon& p, const Frame& f) {
    std::ostringstream os;
    os.precision(10);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << " ";
        os << f.sx(p[i].x) << "," << f.sy(p[i].y);
    }
    return os.str();
}

}  // namespace

std::string render_svg(const ConvexPolygon& p, const SvgOverlay& overlay) {
    Frame f{p[0].x, p[0].y, p[0].x, p[0].y, 0.0};
    for (const Point& v : p.vertices) {
        f.min_x = std::min(f.min_x, v.x);
        f.max_x = std::max(f.max_x, v.x);
        f.min_y = std::min(f.min_y, v.y);
        f.max_y = std::max(f.max_y, v.y);
    }
    f.margin = 0.08 * std::max(f.max_x - f.min_x, f.max_y - f.min_y);
    if (f.margin <= 0.0) f.margin = 1.0;

    std::ostringstream os;
    os.precision(10);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << f.width()
       << " " << f.height() << "\">\n";
    os << "  <polygon id=\"body\" points=\"" << points_attr(p, f) << "\" fill=\"none\" stroke=\""
       << kBodyStroke << "\" stroke-width=\"" << 0.004 * f.width() << "\"/>\n";
    if (overlay.overlap) {
        os << "  <polygon id=\"overlap\" points=\"" << points_attr(*overlay.overlap, f)
           << "\" fill=\"" << kOverlapFill << "\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
    }
    if (overlay.line) {
        // Clip the infinite line to the frame through its direction vector.
        const Point n = overlay.line->normal();
        const Point dir = overlay.line->direction();
        const Point base = overlay.line->offset * n;
        const double reach = 2.0 * std::hypot(f.width(), f.height());
        const Point a = base - reach * dir;
        const Point b = base + reach * dir;
        os << "  <line id=\"mirror-line\" x1=\"" << f.sx(a.x) << "\" y1=\"" << f.sy(a.y)
           << "\" x2=\"" << f.sx(b.x) << "\" y2=\"" << f.sy(b.y) << "\" stroke=\"" << kAccentStroke
           << "\" stroke-width=\"" << 0.003 * f.width() << "\" stroke-dasharray=\""
           << 0.02 * f.width() << "\"/>\n";
    }
    if (overlay.center) {
        os << "  <circle id=\"center\" cx=\"" << f.sx(overlay.center->x) << "\" cy=\""
           << f.sy(overlay.center->y) << "\" r=\"" << 0.01 * f.width() << "\" fill=\""
           << kAccentStroke << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_svg_file(const std::string& path, const ConvexPolygon& p, const SvgOverlay& overlay) {
    std::ofstream out(path);
    if (!out) throw Error("BadFile", "cannot write SVG file: " + path);
    out << render_svg(p, overlay);
}

SvgOverlay overlay_for_report(const ConvexPolygon& p, const SymmetryReport& rep) {
    SvgOverlay ov;
    switch (rep.measure) {
        case MeasureKind::axiality: {
            ov.line = rep.line;
            if (rep.line) ov.overlap = intersect(p, reflect_polygon(p, *rep.line)).value_or(p);
            break;
        }
        case MeasureKind::central: {
            ov.center = rep.center;
            if (rep.center)
                ov.overlap = intersect(p, reflect_polygon(p, *rep.center)).value_or(p);
            break;
        }
        case MeasureKind::folding: {
            ov.line = rep.line;
            if (rep.line)
                ov.overlap = clip(p, HalfPlane{*rep.line, rep.fold_side});
            break;
        }
    }
    return ov;
}

}  // namespace symmetria
