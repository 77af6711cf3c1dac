#include "symmetria/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symmetria/certificates.hpp"
#include "symmetria/constructions.hpp"
#include "symmetria/measures.hpp"
#include "symmetria/polygon_io.hpp"
#include "symmetria/search.hpp"

namespace symmetria {

namespace {

using nlohmann::json;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json qsqrt2_json(const QSqrt2& v) {
    return json{{"rational", rational_to_string(v.rational_part())},
                {"sqrt2_coeff", rational_to_string(v.sqrt2_part())},
                {"text", v.to_string()},
                {"decimal", v.to_double()}};
}

json rational_json(const Rational& r) {
    return json{{"fraction", rational_to_string(r)}, {"decimal", r.convert_to<double>()}};
}

json point_json(Point p) { return json::array({p.x, p.y}); }

json polygon_json(const ConvexPolygon& p) {
    json verts = json::array();
    for (const Point& v : p.vertices) verts.push_back(point_json(v));
    return json{{"vertices", verts}};
}

json report_json(const SymmetryReport& rep) {
    json j{{"measure", to_string(rep.measure)},
           {"value", rep.value},
           {"overlap_area", rep.overlap_area},
           {"body_area", rep.body_area},
           {"evaluations", rep.evaluations},
           {"achieved_tolerance", rep.achieved_tolerance},
           {"grid_limited", rep.grid_limited}};
    if (rep.line) j["line"] = json{{"theta", rep.line->theta}, {"offset", rep.line->offset}};
    if (rep.center) j["center"] = point_json(*rep.center);
    if (rep.measure == MeasureKind::folding) j["fold_side"] = rep.fold_side;
    return j;
}

struct Emitter {
    bool as_json = false;
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::ostringstream human;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    void flush(std::ostream& out) {
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (as_json) {
            json rep{{"command", command},
                     {"inputs_echo", inputs},
                     {"result", result},
                     {"version", kVersion},
                     {"wall_time", wall}};
            out << rep.dump(2) << "\n";
        } else {
            out << human.str();
        }
    }
};

FoldingProgramPoint point_from_json(const json& j) {
    FoldingProgramPoint x;
    auto get = [&](const char* key, double& slot) {
        if (j.contains(key)) slot = j.at(key).get<double>();
    };
    get("lambda", x.lambda);
    get("a", x.a);
    get("b", x.b);
    get("c", x.c);
    get("d", x.d);
    get("e", x.e);
    get("f", x.f);
    get("t", x.t);
    get("u", x.u);
    get("m1", x.m1);
    get("m2", x.m2);
    get("v1", x.v1);
    get("v2", x.v2);
    get("alpha", x.alpha);
    get("beta", x.beta);
    get("phiB", x.phi_b);
    get("phiE", x.phi_e);
    get("k1", x.k1);
    get("k2", x.k2);
    get("y1", x.y1);
    get("y2", x.y2);
    return x;
}

json folding_point_json(const FoldingProgramPoint& x) {
    return json{{"lambda", x.lambda}, {"a", x.a},     {"b", x.b},         {"c", x.c},
                {"d", x.d},           {"e", x.e},     {"f", x.f},         {"t", x.t},
                {"u", x.u},           {"m1", x.m1},   {"m2", x.m2},       {"v1", x.v1},
                {"v2", x.v2},         {"alpha", x.alpha}, {"beta", x.beta},
                {"phiB", x.phi_b},    {"phiE", x.phi_e},  {"k1", x.k1},   {"k2", x.k2},
                {"y1", x.y1},         {"y2", x.y2}};
}

MeasureOptions options_from_flags(int angles, double tol) {
    MeasureOptions opts;
    if (angles > 0) opts.angle_samples = angles;
    if (tol > 0.0) opts.offset_tolerance = tol;
    return opts;
}

SymmetryReport run_measure(const std::string& kind, const ConvexPolygon& poly,
                           const MeasureOptions& opts) {
    if (kind == "axiality") return axiality(poly, opts);
    if (kind == "central") return central_symmetry(poly, opts);
    if (kind == "folding") return folding(poly, opts);
    throw Error("BadParam", "unknown measure: " + kind);
}

void human_report(Emitter& em, const SymmetryReport& rep) {
    em.human << "value: " << fmt12(rep.value) << "\n";
    if (rep.line)
        em.human << "line: theta " << fmt12(rep.line->theta) << ", offset "
                 << fmt12(rep.line->offset) << "\n";
    if (rep.center)
        em.human << "center: (" << fmt12(rep.center->x) << ", " << fmt12(rep.center->y) << ")\n";
    if (rep.measure == MeasureKind::folding)
        em.human << "fold side: " << (rep.fold_side >= 0 ? "+1" : "-1") << "\n";
    em.human << "overlap area: " << fmt12(rep.overlap_area) << "\n"
             << "body area: " << fmt12(rep.body_area) << "\n"
             << "evaluations: " << rep.evaluations << "\n"
             << "achieved tolerance: " << fmt12(rep.achieved_tolerance) << "\n"
             << "grid limited: " << (rep.grid_limited ? "yes" : "no") << "\n";
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"symmetria: reflection-symmetry measures of plane convex bodies"};
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a JSON command report on stdout");

    // measure
    auto* measure = app.add_subcommand("measure", "compute a symmetry measure of a polygon");
    std::string measure_kind, measure_polygon, measure_svg;
    int measure_angles = 0;
    double measure_tol = 0.0;
    measure->add_option("kind", measure_kind, "axiality | central | folding")
        ->required()
        ->check(CLI::IsMember({"axiality", "central", "folding"}));
    measure->add_option("--polygon", measure_polygon, "polygon JSON file")->required();
    measure->add_option("--angles", measure_angles, "angle grid samples");
    measure->add_option("--tol", measure_tol, "offset tolerance relative to the diameter");
    measure->add_option("--svg", measure_svg, "write an SVG snapshot to this file");

    // family
    auto* family = app.add_subcommand("family", "generate a named polygon family member");
    auto* family_quad = family->add_subcommand("quad", "low-axiality quadrilateral");
    double quad_eps = 0.0;
    std::string family_out;
    family_quad->add_option("--eps", quad_eps, "height parameter in (0, 0.5]")->required();
    family_quad->add_option("--out", family_out, "write polygon JSON here");
    auto* family_par = family->add_subcommand("parallelogram", "unit-base parallelogram");
    family_par->set_help_flag("--help", "print help");  // frees -h for the height option
    double par_d1 = 0.0, par_h = 0.0;
    family_par->add_option("--d1", par_d1, "horizontal shear in [0,1)")->required();
    family_par->add_option("--h", par_h, "height in (0,1]")->required();
    family_par->add_option("--out", family_out, "write polygon JSON here");

    // inscribe-rect
    auto* inscribe = app.add_subcommand("inscribe-rect",
                                        "inscribed rectangle of prescribed area in a "
                                        "centrally symmetric polygon");
    std::string inscribe_polygon;
    double inscribe_area = 0.0;
    inscribe->add_option("--polygon", inscribe_polygon, "polygon JSON file")->required();
    inscribe->add_option("--area", inscribe_area, "absolute rectangle area")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "cross-validation utilities");
    auto* verify_b = verify->add_subcommand(
        "appendix-b", "analytic vs numeric overlap for the quadrilateral family");
    double vb_eps = 0.05;
    int vb_samples = 20;
    verify_b->add_option("--eps", vb_eps, "family parameter")->required();
    verify_b->add_option("--samples", vb_samples, "angles per case");
    auto* verify_cs = verify->add_subcommand("cs-fold", "centrally symmetric fold construction");
    std::string vcs_polygon;
    verify_cs->add_option("--polygon", vcs_polygon, "polygon JSON file")->required();
    auto* verify_pc =
        verify->add_subcommand("program-constraints", "folding-program residuals at a point");
    std::string vpc_point, vpc_variant = "standard";
    verify_pc->add_option("--point", vpc_point, "JSON file with variable values")->required();
    verify_pc->add_option("--variant", vpc_variant, "standard | obtuse")
        ->check(CLI::IsMember({"standard", "obtuse"}));

    // certify
    auto* certify = app.add_subcommand("certify", "exact certificates");
    auto* certify_thm = certify->add_subcommand(
        "theorem-1-1", "exact lower-bound certificate for axiality");
    auto* certify_fold = certify->add_subcommand(
        "folding-search", "feasible-point search over the folding program");
    long long cf_budget = 100000;
    std::uint64_t cf_seed = 0;
    certify_fold->add_option("--budget", cf_budget, "sample budget")->required();
    certify_fold->add_option("--seed", cf_seed, "RNG seed")->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "closed-form bound tables");
    auto* bounds_table = bounds->add_subcommand("table", "per-dimension bound table");
    int bounds_n_max = 12;
    bounds_table->add_option("--n-max", bounds_n_max, "largest dimension")->required();

    // search
    auto* search_cmd = app.add_subcommand("search", "simulated annealing for low axiality");
    int sc_vertices = 4;
    long long sc_iters = 20000;
    std::vector<std::uint64_t> sc_seeds;
    std::string sc_start, sc_out, sc_svg;
    double sc_temp = 0.01, sc_cooling = 0.9995, sc_step = 0.05;
    search_cmd->add_option("--vertices", sc_vertices, "vertex count")->required();
    search_cmd->add_option("--iters", sc_iters, "iterations per chain")->required();
    search_cmd->add_option("--seeds", sc_seeds, "one chain per seed")->required()->delimiter(',');
    search_cmd->add_option("--start", sc_start, "start polygon JSON file");
    search_cmd->add_option("--out", sc_out, "write the merged result JSON here");
    search_cmd->add_option("--svg", sc_svg, "render the best polygon");
    search_cmd->add_option("--temp", sc_temp, "initial temperature");
    search_cmd->add_option("--cooling", sc_cooling, "geometric cooling rate");
    search_cmd->add_option("--step", sc_step, "step scale (fraction of diameter)");

    // render
    auto* render = app.add_subcommand("render", "render a polygon to SVG");
    std::string render_polygon, render_svg_path;
    render->add_option("--polygon", render_polygon, "polygon JSON file")->required();
    render->add_option("--svg", render_svg_path, "output SVG file")->required();

    app.require_subcommand(1);

    std::vector<std::string> argv(args);
    try {
        // CLI11 parses argv back-to-front.
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    Emitter em;
    em.as_json = as_json;

    try {
        if (*measure) {
            em.command = "measure " + measure_kind;
            em.inputs = json{{"polygon", measure_polygon},
                             {"angles", measure_angles},
                             {"tol", measure_tol}};
            LoadedPolygon loaded = read_polygon_file(measure_polygon);
            const MeasureOptions opts = options_from_flags(measure_angles, measure_tol);
            const SymmetryReport rep = run_measure(measure_kind, loaded.polygon, opts);
            em.result = json{{"report", report_json(rep)},
                             {"normalization",
                              json{{"input_count", loaded.report.input_count},
                                   {"kept", loaded.report.kept},
                                   {"changed", loaded.report.changed},
                                   {"note", loaded.report.note}}}};
            em.human << em.command << "\n";
            if (loaded.report.changed)
                em.human << "normalization: " << loaded.report.note << " (" << loaded.report.kept
                         << "/" << loaded.report.input_count << " vertices kept)\n";
            human_report(em, rep);
            if (!measure_svg.empty()) {
                write_svg_file(measure_svg, loaded.polygon,
                               overlay_for_report(loaded.polygon, rep));
                em.human << "svg: " << measure_svg << "\n";
                em.result["svg"] = measure_svg;
            }
        } else if (*family_quad || *family_par) {
            const ConvexPolygon poly =
                *family_quad ? quad_family(quad_eps) : parallelogram(par_d1, par_h);
            em.command = *family_quad ? "family quad" : "family parallelogram";
            em.inputs = *family_quad ? json{{"eps", quad_eps}}
                                     : json{{"d1", par_d1}, {"h", par_h}};
            em.result = json{{"polygon", polygon_json(poly)},
                             {"area", polygon_area(poly)}};
            if (!family_out.empty()) {
                write_polygon_file(family_out, poly);
                em.result["out"] = family_out;
                em.human << "wrote " << family_out << "\n";
            } else {
                em.human << polygon_to_json(poly) << "\n";
            }
        } else if (*inscribe) {
            em.command = "inscribe-rect";
            em.inputs = json{{"polygon", inscribe_polygon}, {"area", inscribe_area}};
            LoadedPolygon loaded = read_polygon_file(inscribe_polygon);
            const RectangleInBody rect = inscribed_rectangle(loaded.polygon, inscribe_area);
            json corners = json::array();
            for (const Point& p : rect.corners) corners.push_back(point_json(p));
            em.result = json{{"corners", corners}, {"area", rect.area}};
            em.human << "inscribed rectangle area " << fmt12(rect.area) << "\n";
            for (const Point& p : rect.corners)
                em.human << "  (" << fmt12(p.x) << ", " << fmt12(p.y) << ")\n";
        } else if (*verify_b) {
            em.command = "verify appendix-b";
            em.inputs = json{{"eps", vb_eps}, {"samples", vb_samples}};
            const ConvexPolygon poly = quad_family(vb_eps);
            json rows = json::array();
            em.human << "case        angle        analytic      numeric       |diff|\n";
            const double a_max = 0.5 * std::atan(std::numbers::sqrt2 * vb_eps /
                                                 (1.0 + std::numbers::sqrt2));
            for (int i = 0; i < vb_samples; ++i) {
                const double alpha = a_max * (i + 0.5) / vb_samples;
                const double analytic = small_angle_overlap_ratio(vb_eps, alpha);
                const double numeric = max_overlap_at_angle(poly, alpha).ratio;
                rows.push_back(json{{"case", "small-angle"},
                                    {"angle", alpha},
                                    {"analytic", analytic},
                                    {"numeric", numeric}});
                em.human << "small-angle " << fmt12(alpha) << "  " << fmt12(analytic) << "  "
                         << fmt12(numeric) << "  " << fmt12(std::abs(analytic - numeric)) << "\n";
            }
            const double b_max = 0.5 * std::atan(std::numbers::sqrt2 * vb_eps);
            for (int i = 0; i < vb_samples; ++i) {
                const double beta = b_max * (i + 0.5) / vb_samples;
                const double analytic = mid_angle_overlap_ratio(vb_eps, beta);
                const double numeric = mid_angle_best_translate(vb_eps, beta).ratio;
                rows.push_back(json{{"case", "mid-angle"},
                                    {"angle", beta},
                                    {"analytic", analytic},
                                    {"numeric", numeric}});
                em.human << "mid-angle   " << fmt12(beta) << "  " << fmt12(analytic) << "  "
                         << fmt12(numeric) << "  " << fmt12(std::abs(analytic - numeric)) << "\n";
            }
            em.result = json{{"rows", rows}};
        } else if (*verify_cs) {
            em.command = "verify cs-fold";
            em.inputs = json{{"polygon", vcs_polygon}};
            LoadedPolygon loaded = read_polygon_file(vcs_polygon);
            const SymmetryReport rep = centrally_symmetric_fold(loaded.polygon);
            const bool feasible =
                rep.line && folding_feasible(loaded.polygon,
                                             HalfPlane{*rep.line, rep.fold_side},
                                             1e-7 * diameter(loaded.polygon));
            em.result = json{{"report", report_json(rep)},
                             {"fold_feasible", feasible},
                             {"meets_4_9", rep.value >= 4.0 / 9.0 - 1e-6}};
            em.human << "construction fold value: " << fmt12(rep.value) << "\n"
                     << "fold feasible: " << (feasible ? "yes" : "no") << "\n"
                     << "meets 4/9 bound: "
                     << (rep.value >= 4.0 / 9.0 - 1e-6 ? "yes" : "no") << "\n";
        } else if (*verify_pc) {
            em.command = "verify program-constraints";
            em.inputs = json{{"point", vpc_point}, {"variant", vpc_variant}};
            std::ifstream in(vpc_point);
            if (!in) throw Error("BadFile", "cannot open point file: " + vpc_point);
            json j = json::parse(in, nullptr, true);
            const FoldingProgramPoint x = point_from_json(j);
            const FoldingVariant variant =
                vpc_variant == "obtuse" ? FoldingVariant::obtuse : FoldingVariant::standard;
            const auto residuals = folding_program_residuals(x, variant);
            json rows = json::array();
            for (const auto& [name, value] : residuals) {
                rows.push_back(json{{"constraint", name}, {"residual", value}});
                if (value > 0.0)
                    em.human << "violated  " << name << "  residual " << fmt12(value) << "\n";
            }
            const double worst = max_residual(residuals);
            em.result = json{{"residuals", rows}, {"max_residual", worst},
                             {"feasible", worst <= 1e-9}};
            em.human << "max residual: " << fmt12(worst) << "\n"
                     << "feasible: " << (worst <= 1e-9 ? "yes" : "no") << "\n";
        } else if (*certify_thm) {
            em.command = "certify theorem-1-1";
            const AxialityBoundCertificate cert = certified_axiality_lower_bound();
            json checks = json::array();
            for (const auto& c : cert.checks) {
                checks.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
                em.human << (c.ok ? "ok  " : "FAIL ") << c.name << ": " << c.detail << "\n";
            }
            em.result = json{{"value", qsqrt2_json(cert.value)},
                             {"crossing_t", qsqrt2_json(cert.crossing_t)},
                             {"case1_value", qsqrt2_json(cert.case1_value)},
                             {"case2_value", qsqrt2_json(cert.case2_value)},
                             {"checks", checks},
                             {"status", "exact"}};
            em.human << "lower bound (exact): " << cert.value.to_string() << " = "
                     << fmt12(cert.value.to_double()) << "\n"
                     << "status: exact\n";
        } else if (*certify_fold) {
            em.command = "certify folding-search";
            em.inputs = json{{"budget", cf_budget}, {"seed", cf_seed}};
            const FoldingSearchResult res = folding_program_search(cf_budget, cf_seed);
            const auto residuals = folding_program_residuals(res.witness, res.variant);
            em.result = json{{"min_lambda", res.min_lambda},
                             {"witness", folding_point_json(res.witness)},
                             {"variant",
                              res.variant == FoldingVariant::standard ? "standard" : "obtuse"},
                             {"samples", res.samples},
                             {"witness_max_residual", max_residual(residuals)}};
            em.human << "min lambda found: " << fmt12(res.min_lambda) << " (fold value "
                     << fmt12(2.0 * res.min_lambda) << ")\n"
                     << "variant: "
                     << (res.variant == FoldingVariant::standard ? "standard" : "obtuse") << "\n"
                     << "witness max residual: " << fmt12(max_residual(residuals)) << "\n";
        } else if (*bounds_table) {
            em.command = "bounds table";
            em.inputs = json{{"n_max", bounds_n_max}};
            if (bounds_n_max < 2) throw Error("BadParam", "need --n-max >= 2");
            json rows = json::array();
            em.human << "n   reflect(n,n-1)        simplex central        1/(2n)             "
                        "pyramid        separated\n";
            for (int n = 2; n <= bounds_n_max; ++n) {
                const Rational glb = lower_bound_general(n, n - 1);
                const Rational fr = simplex_central_symmetry(n);
                const Rational ax = lower_bound_hyperplane(n);
                const double pyr = pyramid_step_bound(n);
                const bool sep = separation_check(n);
                rows.push_back(json{{"n", n},
                                    {"reflection_lower", rational_json(glb)},
                                    {"simplex_central", rational_json(fr)},
                                    {"hyperplane_lower", rational_json(ax)},
                                    {"pyramid", pyr},
                                    {"separated", sep}});
                em.human << n << "   " << rational_to_string(glb) << " = "
                         << fmt12(glb.convert_to<double>()) << "   " << rational_to_string(fr)
                         << " = " << fmt12(fr.convert_to<double>()) << "   "
                         << rational_to_string(ax) << " = " << fmt12(ax.convert_to<double>())
                         << "   " << fmt12(pyr) << "   " << (sep ? "true" : "false") << "\n";
            }
            em.result = json{{"rows", rows}};
        } else if (*search_cmd) {
            em.command = "search";
            em.inputs = json{{"vertices", sc_vertices},
                             {"iters", sc_iters},
                             {"seeds", sc_seeds},
                             {"temp", sc_temp},
                             {"cooling", sc_cooling},
                             {"step", sc_step}};
            AnnealConfig cfg;
            cfg.n_vertices = sc_vertices;
            cfg.iterations = sc_iters;
            cfg.initial_temperature = sc_temp;
            cfg.cooling_rate = sc_cooling;
            cfg.step_scale = sc_step;
            if (!sc_start.empty()) {
                cfg.start = read_polygon_file(sc_start).polygon;
                em.inputs["start"] = sc_start;
            }
            const std::vector<SearchResult> all = anneal_all(cfg, sc_seeds);
            const SearchResult* best = &all.front();
            for (const auto& r : all)
                if (r.best_value < best->best_value ||
                    (r.best_value == best->best_value && r.config.seed < best->config.seed))
                    best = &r;
            json chains = json::array();
            for (const auto& r : all) {
                json trace = json::array();
                for (const auto& [it, v] : r.trace) trace.push_back(json::array({it, v}));
                chains.push_back(json{{"seed", r.config.seed},
                                      {"best_value", r.best_value},
                                      {"trace", trace}});
                em.human << "seed " << r.config.seed << ": best " << fmt12(r.best_value) << "\n";
            }
            em.result = json{{"best_value", best->best_value},
                             {"best_seed", best->config.seed},
                             {"best_polygon", polygon_json(best->best_polygon)},
                             {"chains", chains}};
            em.human << "overall best: " << fmt12(best->best_value) << " (seed "
                     << best->config.seed << ")\n";
            if (!sc_out.empty()) {
                std::ofstream f(sc_out);
                if (!f) throw Error("BadFile", "cannot write " + sc_out);
                f << em.result.dump(2) << "\n";
                em.human << "wrote " << sc_out << "\n";
            }
            if (!sc_svg.empty()) {
                const SymmetryReport rep = axiality(best->best_polygon, cfg.measure_opts);
                write_svg_file(sc_svg, best->best_polygon,
                               overlay_for_report(best->best_polygon, rep));
                em.human << "svg: " << sc_svg << "\n";
            }
        } else if (*render) {
            em.command = "render";
            em.inputs = json{{"polygon", render_polygon}};
            LoadedPolygon loaded = read_polygon_file(render_polygon);
            write_svg_file(render_svg_path, loaded.polygon, SvgOverlay{});
            em.result = json{{"svg", render_svg_path}};
            em.human << "svg: " << render_svg_path << "\n";
        }
    } catch (const Error& e) {
        err << "error [" << e.name() << "]: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error [Internal]: " << e.what() << "\n";
        return 3;
    }

    em.flush(out);
    return 0;
}

}  // namespace symmetria
