#include "symmetria/search.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace symmetria {

namespace {

constexpr double kMaxAspect = 1e6;

MeasureOptions search_resolution(const MeasureOptions& full) {
    MeasureOptions opts = full;
    opts.angle_samples = 180;
    opts.refine_brackets = std::min(full.refine_brackets, 2);
    opts.refine_rounds = std::min(full.refine_rounds, 20);
    opts.offset_tolerance = std::max(full.offset_tolerance, 1e-8);
    return opts;
}

}  // namespace

void AnnealConfig::validate() const {
    if (n_vertices < 3) throw Error("BadParam", "need at least 3 vertices");
    if (iterations < 0) throw Error("BadParam", "iterations must be nonnegative");
    if (!(initial_temperature > 0.0)) throw Error("BadParam", "temperature must be positive");
    if (!(cooling_rate > 0.0) || cooling_rate >= 1.0)
        throw Error("BadParam", "cooling rate must lie in (0,1)");
    if (!(step_scale > 0.0)) throw Error("BadParam", "step scale must be positive");
    measure_opts.validate();
}

ConvexPolygon perturb(const ConvexPolygon& p, double step, std::mt19937_64& rng) {
    const double diam = diameter(p);
    std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Point> pts = p.vertices;
        const std::size_t idx = pick(rng);
        pts[idx].x += step * diam * gauss(rng);
        pts[idx].y += step * diam * gauss(rng);
        try {
            ConvexPolygon cand = normalize_polygon(pts);
            if (cand.size() != p.size()) continue;
            if (diameter(cand) / min_width(cand) > kMaxAspect) continue;
            return cand;
        } catch (const Error&) {
            continue;
        }
    }
    throw Error("PerturbFailed", "no acceptable perturbation after 32 attempts");
}

SearchResult anneal(const AnnealConfig& cfg) {
    cfg.validate();
    detail::ScopedSerialMeasures serial;  // chains parallelize at a coarser level
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    const ConvexPolygon start = cfg.start ? *cfg.start : regular_polygon(cfg.n_vertices);
    if (cfg.start && static_cast<int>(cfg.start->size()) != cfg.n_vertices)
        throw Error("BadParam", "start polygon vertex count does not match n_vertices");

    const MeasureOptions cheap = search_resolution(cfg.measure_opts);

    SearchResult res;
    res.config = cfg;

    ConvexPolygon cur = start;
    double cur_val = axiality(cur, cheap).value;
    ConvexPolygon best = cur;
    double best_val = cur_val;
    res.trace.emplace_back(0, best_val);

    double temperature = cfg.initial_temperature;
    for (long long it = 1; it <= cfg.iterations; ++it) {
        ConvexPolygon cand = perturb(cur, cfg.step_scale, rng);
        const double val = axiality(cand, cheap).value;
        const double delta = val - cur_val;
        if (delta <= 0.0 || uni(rng) < std::exp(-delta / temperature)) {
            cur = std::move(cand);
            cur_val = val;
        }
        if (cur_val < best_val) {
            best = cur;
            best_val = cur_val;
            res.trace.emplace_back(it, best_val);
        }
        temperature *= cfg.cooling_rate;
    }

    // Certify at full resolution; never report worse than the start polygon.
    const double best_full = axiality(best, cfg.measure_opts).value;
    const double start_full = axiality(start, cfg.measure_opts).value;
    if (start_full <= best_full) {
        res.best_polygon = start;
        res.best_value = start_full;
    } else {
        res.best_polygon = best;
        res.best_value = best_full;
    }
    return res;
}

std::vector<SearchResult> anneal_all(const AnnealConfig& base,
                                     const std::vector<std::uint64_t>& seeds) {
    if (seeds.empty()) throw Error("BadParam", "need at least one seed");
    std::vector<std::future<SearchResult>> jobs;
    jobs.reserve(seeds.size());
    for (std::uint64_t s : seeds) {
        AnnealConfig cfg = base;
        cfg.seed = s;
        jobs.push_back(std::async(std::launch::async, [cfg] { return anneal(cfg); }));
    }
    std::vector<SearchResult> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

SearchResult anneal_chains(const AnnealConfig& base, const std::vector<std::uint64_t>& seeds) {
    std::vector<SearchResult> all = anneal_all(base, seeds);
    SearchResult best = std::move(all.front());
    for (std::size_t i = 1; i < all.size(); ++i) {
        SearchResult& r = all[i];
        if (r.best_value < best.best_value ||
            (r.best_value == best.best_value && r.config.seed < best.config.seed))
            best = std::move(r);
    }
    return best;
}

}  // namespace symmetria
