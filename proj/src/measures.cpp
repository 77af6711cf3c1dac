#include "symmetria/measures.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>
#include <vector>

#include "symmetria/optim.hpp"

namespace symmetria {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxAspect = 1e6;

thread_local bool g_serial_measures = false;

int thread_cap() {
    if (g_serial_measures) return 1;
    if (const char* s = std::getenv("SYMMETRIA_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Runs fn(begin, end) over [0, n) split into contiguous chunks. Results must
// be written to disjoint slots so the schedule cannot change the outcome.
template <typename Fn>
void parallel_chunks(int n, Fn&& fn) {
    const int threads = std::min(thread_cap(), n);
    if (threads <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads) - 1);
    const int chunk = (n + threads - 1) / threads;
    for (int t = 1; t < threads; ++t) {
        const int b = t * chunk;
        const int e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    fn(0, std::min(chunk, n));
    for (auto& th : pool) th.join();
}

struct Cand {
    double value = -1.0;
    double theta = 0.0;
    double offset = 0.0;
};

bool cand_less(const Cand& a, const Cand& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.theta != b.theta) return a.theta < b.theta;
    return a.offset < b.offset;
}

// Indices of the k best grid cells, skipping immediate neighbours of already
// selected cells so the refinement brackets do not overlap.
std::vector<int> top_brackets(const std::vector<Cand>& grid, int k) {
    std::vector<int> order(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return cand_less(grid[static_cast<std::size_t>(b)], grid[static_cast<std::size_t>(a)]);
    });
    std::vector<int> picked;
    const int n = static_cast<int>(grid.size());
    for (int idx : order) {
        bool close = false;
        for (int p : picked) {
            int d = std::abs(idx - p);
            d = std::min(d, n - d);
            if (d <= 1) {
                close = true;
                break;
            }
        }
        if (!close) picked.push_back(idx);
        if (static_cast<int>(picked.size()) >= k) break;
    }
    return picked;
}

}  // namespace

detail::ScopedSerialMeasures::ScopedSerialMeasures() : previous_(g_serial_measures) {
    g_serial_measures = true;
}

detail::ScopedSerialMeasures::~ScopedSerialMeasures() { g_serial_measures = previous_; }

void MeasureOptions::validate() const {
    if (angle_samples < 1 || refine_brackets < 1 || refine_rounds < 1 || fold_offset_samples < 1)
        throw Error("BadParam", "measure options must be positive");
    if (!(offset_tolerance > 0.0) || offset_tolerance >= 1.0)
        throw Error("BadParam", "offset tolerance must be in (0, 1) relative to the diameter");
}

std::string to_string(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::axiality: return "axiality";
        case MeasureKind::central: return "central";
        case MeasureKind::folding: return "folding";
    }
    return "?";
}

void require_measurable(const ConvexPolygon& p) {
    const double w = min_width(p);
    if (w <= 0.0 || diameter(p) / w > kMaxAspect)
        throw Error("ThinPolygon", "aspect ratio exceeds 1e6; overlap areas are unreliable");
}

double overlap_ratio_axial(const ConvexPolygon& p, const LineSpec& line) {
    detail::EdgeList edges;
    edges.build(p);
    detail::Workspace ws;
    return detail::overlap_area_line(p, edges, line.theta, line.offset, ws) / polygon_area(p);
}

AngleOverlap max_overlap_at_angle(const ConvexPolygon& p, double theta,
                                  const MeasureOptions& opts) {
    opts.validate();
    detail::EdgeList edges;
    edges.build(p);
    detail::Workspace ws;
    const double area = polygon_area(p);
    const auto [lo, hi] = support_interval(p, theta);
    const double tol = opts.offset_tolerance * diameter(p);
    auto [d, val] = golden_max(
        [&](double off) { return detail::overlap_area_line(p, edges, theta, off, ws); }, lo, hi,
        tol);
    return {val / area, d};
}

// ---------------------------------------------------------------------------
// axiality
// ---------------------------------------------------------------------------

SymmetryReport axiality(const ConvexPolygon& p, const MeasureOptions& opts) {
    opts.validate();
    require_measurable(p);

    detail::EdgeList edges;
    edges.build(p);
    const double area = polygon_area(p);
    const double diam = diameter(p);
    const double tol_d = opts.offset_tolerance * diam;
    const int n = opts.angle_samples;

    std::vector<Cand> grid(static_cast<std::size_t>(n));
    std::atomic<long long> evals{0};

    parallel_chunks(n, [&](int begin, int end) {
        detail::Workspace ws;
        long long local = 0;
        for (int i = begin; i < end; ++i) {
            const double theta = kPi * i / n;
            const auto [lo, hi] = support_interval(p, theta);
            auto [d, val] = golden_max(
                [&](double off) {
                    ++local;
                    return detail::overlap_area_line(p, edges, theta, off, ws);
                },
                lo, hi, tol_d);
            grid[static_cast<std::size_t>(i)] = {val, theta, d};
        }
        evals.fetch_add(local, std::memory_order_relaxed);
    });

    Cand best_grid{-1.0, 0.0, 0.0};
    for (const Cand& c : grid)
        if (cand_less(best_grid, c)) best_grid = c;

    detail::Workspace ws;
    long long local = 0;
    auto solve_angle = [&](double theta) -> Cand {
        const auto [lo, hi] = support_interval(p, theta);
        auto [d, val] = golden_max(
            [&](double off) {
                ++local;
                return detail::overlap_area_line(p, edges, theta, off, ws);
            },
            lo, hi, tol_d);
        return {val, theta, d};
    };

    const double step = kPi / n;
    Cand best = best_grid;
    for (int idx : top_brackets(grid, opts.refine_brackets)) {
        const double center = grid[static_cast<std::size_t>(idx)].theta;
        double a = center - step, b = center + step;
        for (int it = 0; it < opts.refine_rounds && (b - a) > 1e-15; ++it) {
            const double m1 = b - 0.6180339887498949 * (b - a);
            const double m2 = a + 0.6180339887498949 * (b - a);
            const Cand c1 = solve_angle(m1);
            const Cand c2 = solve_angle(m2);
            if (cand_less(best, c1)) best = c1;
            if (cand_less(best, c2)) best = c2;
            if (c1.value >= c2.value)
                b = m2;
            else
                a = m1;
        }
    }

    // Local sensitivity probe at the final angular resolution.
    const double probe = step * std::pow(0.6180339887498949, opts.refine_rounds);
    const Cand left = solve_angle(best.theta - probe);
    const Cand right = solve_angle(best.theta + probe);
    const double achieved =
        std::max({0.0, (best.value - left.value) / area, (best.value - right.value) / area});

    SymmetryReport rep;
    rep.measure = MeasureKind::axiality;
    rep.value = best.value / area;
    rep.line = LineSpec(best.theta, best.offset);
    rep.overlap_area = best.value;
    rep.body_area = area;
    rep.evaluations = evals.load() + local;
    rep.achieved_tolerance = std::max(achieved, opts.offset_tolerance);
    rep.grid_limited = achieved > 1e-9;
    return rep;
}

// ---------------------------------------------------------------------------
// central symmetry
// ---------------------------------------------------------------------------

SymmetryReport central_symmetry(const ConvexPolygon& p, const MeasureOptions& opts) {
    opts.validate();
    require_measurable(p);

    detail::EdgeList edges;
    edges.build(p);
    detail::Workspace ws;
    const double area = polygon_area(p);
    const double diam = diameter(p);
    const double tol = opts.offset_tolerance * diam;
    long long evals = 0;

    auto f = [&](Point c) {
        ++evals;
        return detail::overlap_area_center(p, edges, c, ws);
    };

    // Golden-section line searches along a fixed direction cycle with a
    // shrinking trust radius. The overlap is unimodal along every line, but
    // kinked; the diagonal sweeps avoid stalling on axis-aligned ridges.
    static const Point dirs[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2},
        {std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2}};
    Point c = centroid(p);
    double fc = f(c);
    for (double radius = diam; radius > tol * 0.5; radius *= 0.5) {
        for (const Point& u : dirs) {
            auto [s, val] =
                golden_max([&](double t) { return f(c + t * u); }, -radius, radius, tol);
            if (val > fc) {
                fc = val;
                c = c + s * u;
            }
        }
    }

    SymmetryReport rep;
    rep.measure = MeasureKind::central;
    rep.value = fc / area;
    rep.center = c;
    rep.overlap_area = fc;
    rep.body_area = area;
    rep.evaluations = evals;
    rep.achieved_tolerance = opts.offset_tolerance;
    rep.grid_limited = false;
    return rep;
}

// ---------------------------------------------------------------------------
// folding
// ---------------------------------------------------------------------------

namespace {

struct FoldKernel {
    const ConvexPolygon& p;
    const detail::EdgeList& edges;
    double area;
    double tol_feas;
    std::vector<Point> cap, tmp;

    // Cap area for the halfplane {x . n >= d}; fills `cap`.
    double cap_area(Point n, double d) {
        tmp = p.vertices;
        cap.clear();
        double dprev = dot(tmp.back(), n) - d;
        const std::size_t m = tmp.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point& cur = tmp[i];
            const Point& prev = tmp[(i + m - 1) % m];
            const double dcur = dot(cur, n) - d;
            const bool cin = dcur >= 0.0;
            const bool pin = dprev >= 0.0;
            if (cin) {
                if (!pin) cap.push_back(prev + (dprev / (dprev - dcur)) * (cur - prev));
                cap.push_back(cur);
            } else if (pin) {
                cap.push_back(prev + (dprev / (dprev - dcur)) * (cur - prev));
            }
            dprev = dcur;
        }
        if (cap.size() < 3) return 0.0;
        const double a2 = detail::shoelace2(cap);
        return a2 > 0.0 ? 0.5 * a2 : 0.0;
    }

    bool cap_folds(Point n, double d) {
        for (const Point& v : cap) {
            const double h = d - dot(v, n);
            const Point r{v.x + 2.0 * h * n.x, v.y + 2.0 * h * n.y};
            for (const auto& e : edges.edges)
                if (e.nx * r.x + e.ny * r.y - e.off < -tol_feas) return false;
        }
        return true;
    }
};

}  // namespace

bool folding_feasible(const ConvexPolygon& p, const HalfPlane& h, double tol) {
    if (tol < 0.0) throw Error("BadParam", "tolerance must be nonnegative");
    auto cap = clip(p, h);
    if (!cap) return true;  // nothing to fold
    const ConvexPolygon folded = reflect_polygon(*cap, h.line);
    for (const Point& v : folded.vertices)
        if (!contains(p, v, tol)) return false;
    return true;
}

SymmetryReport folding(const ConvexPolygon& p, const MeasureOptions& opts) {
    opts.validate();
    require_measurable(p);

    detail::EdgeList edges;
    edges.build(p);
    const double area = polygon_area(p);
    const double diam = diameter(p);
    const double tol_d = opts.offset_tolerance * diam;
    const double tol_feas = 1e-9 * diam;
    const int n = opts.angle_samples;
    const int samples = opts.fold_offset_samples;

    std::vector<Cand> grid(static_cast<std::size_t>(n));
    std::atomic<long long> evals{0};

    // Best feasible fold at a fixed angle: scan offsets from the half-area
    // point outward (feasible caps never exceed half the body), take the
    // largest feasible cap, then bisect against its infeasible neighbour.
    auto solve_angle = [&](double theta, FoldKernel& k, long long& local) -> Cand {
        const Point nrm{std::cos(theta), std::sin(theta)};
        const auto [lo, hi] = support_interval(p, theta);

        double d_half = lo;
        {
            double a = lo, b = hi;
            for (int it = 0; it < 60 && (b - a) > tol_d; ++it) {
                const double mid = 0.5 * (a + b);
                ++local;
                if (k.cap_area(nrm, mid) > 0.5 * area)
                    a = mid;
                else
                    b = mid;
            }
            d_half = a;
        }

        bool found = false;
        double good = hi, bad = d_half;
        double good_area = 0.0;
        double prev = d_half;
        for (int m = 0; m < samples; ++m) {
            const double d = d_half + (hi - d_half) * m / samples;
            ++local;
            const double ca = k.cap_area(nrm, d);
            if (ca <= 0.0) break;
            if (k.cap_folds(nrm, d)) {
                found = true;
                good = d;
                good_area = ca;
                bad = prev;
                break;
            }
            prev = d;
        }
        if (!found) return {0.0, theta, hi};
        while (good - bad > tol_d) {
            const double mid = 0.5 * (good + bad);
            ++local;
            const double ca = k.cap_area(nrm, mid);
            if (ca <= 0.5 * area + tol_feas && k.cap_folds(nrm, mid)) {
                good = mid;
                good_area = ca;
            } else {
                bad = mid;
            }
        }
        return {2.0 * good_area, theta, good};
    };

    // Large folds concentrate in narrow angular windows around near-symmetry
    // directions, where the fold feasibility gate makes the angle landscape
    // discontinuous. The reflective overlap bounds the fold from above and
    // varies smoothly, so its maxima steer the refinement into those windows.
    std::vector<Cand> axial(static_cast<std::size_t>(n));

    parallel_chunks(n, [&](int begin, int end) {
        FoldKernel kern{p, edges, area, tol_feas, {}, {}};
        detail::Workspace ws;
        long long local = 0;
        for (int i = begin; i < end; ++i) {
            const double theta = 2.0 * kPi * i / n;
            grid[static_cast<std::size_t>(i)] = solve_angle(theta, kern, local);
            const auto [lo, hi] = support_interval(p, theta);
            auto [d, val] = golden_max(
                [&](double off) {
                    ++local;
                    return detail::overlap_area_line(p, edges, theta, off, ws);
                },
                lo, hi, tol_d);
            axial[static_cast<std::size_t>(i)] = {val, theta, d};
        }
        evals.fetch_add(local, std::memory_order_relaxed);
    });

    FoldKernel kern{p, edges, area, tol_feas, {}, {}};
    long long local = 0;
    Cand best{-1.0, 0.0, 0.0};
    for (const Cand& c : grid)
        if (cand_less(best, c)) best = c;

    std::vector<int> brackets = top_brackets(grid, opts.refine_brackets);
    for (int idx : top_brackets(axial, opts.refine_brackets)) {
        bool seen = false;
        for (int b : brackets) {
            int d = std::abs(idx - b);
            d = std::min(d, n - d);
            if (d <= 1) seen = true;
        }
        if (!seen) brackets.push_back(idx);
    }

    const double step = 2.0 * kPi / n;
    for (int idx : brackets) {
        // Two levels of dense sub-scanning catch feasibility spikes narrower
        // than the grid step; golden section then polishes the winner.
        double center = grid[static_cast<std::size_t>(idx)].theta;
        double width = step;
        for (int level = 0; level < 2; ++level) {
            const int sub = 64;
            Cand local_best{-1.0, center, 0.0};
            for (int s = -sub; s <= sub; ++s) {
                const Cand c = solve_angle(center + width * s / sub, kern, local);
                if (cand_less(local_best, c)) local_best = c;
            }
            if (cand_less(best, local_best)) best = local_best;
            center = local_best.theta;
            width /= sub;
        }
        double a = center - width, b = center + width;
        for (int it = 0; it < opts.refine_rounds && (b - a) > 1e-15; ++it) {
            const double m1 = b - 0.6180339887498949 * (b - a);
            const double m2 = a + 0.6180339887498949 * (b - a);
            const Cand c1 = solve_angle(m1, kern, local);
            const Cand c2 = solve_angle(m2, kern, local);
            if (cand_less(best, c1)) best = c1;
            if (cand_less(best, c2)) best = c2;
            if (c1.value >= c2.value)
                b = m2;
            else
                a = m1;
        }
    }

    const double probe = step * std::pow(0.6180339887498949, opts.refine_rounds);
    const Cand left = solve_angle(best.theta - probe, kern, local);
    const Cand right = solve_angle(best.theta + probe, kern, local);
    const double achieved =
        std::max({0.0, (best.value - left.value) / area, (best.value - right.value) / area});

    SymmetryReport rep;
    rep.measure = MeasureKind::folding;
    rep.value = best.value / area;
    rep.line = LineSpec(best.theta, best.offset);
    rep.fold_side = +1;
    rep.overlap_area = 0.5 * best.value;  // cap area
    rep.body_area = area;
    rep.evaluations = evals.load() + local;
    rep.achieved_tolerance = std::max(achieved, opts.offset_tolerance);
    rep.grid_limited = achieved > 1e-9;
    return rep;
}

}  // namespace symmetria
