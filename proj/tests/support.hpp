#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symmetria/geometry.hpp"

// Shared deterministic generators for the randomized suites. The seed lists
// below are the test manifest: every randomized assertion in the test and
// acceptance suites draws from these.
namespace testsupport {

inline constexpr std::uint64_t kSuiteBase = 74250001;

inline std::vector<std::uint64_t> suite_seeds(int count, std::uint64_t base = kSuiteBase) {
    std::vector<std::uint64_t> seeds;
    seeds.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) seeds.push_back(base + static_cast<std::uint64_t>(i));
    return seeds;
}

// Convex hull of k uniform points in the unit square, k in {3..12} driven by
// the seed; retries until the hull is non-degenerate.
inline symmetria::ConvexPolygon random_polygon(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const int k = 3 + static_cast<int>(rng() % 10);
    for (;;) {
        std::vector<symmetria::Point> pts;
        pts.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) pts.push_back({uni(rng), uni(rng)});
        try {
            return symmetria::normalize_polygon(pts);
        } catch (const symmetria::Error&) {
            continue;
        }
    }
}

inline symmetria::ConvexPolygon random_triangle(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (;;) {
        std::vector<symmetria::Point> pts;
        for (int i = 0; i < 3; ++i) pts.push_back({uni(rng), uni(rng)});
        try {
            symmetria::ConvexPolygon t = symmetria::normalize_polygon(pts);
            if (t.size() == 3 && symmetria::polygon_area(t) > 1e-3) return t;
        } catch (const symmetria::Error&) {
        }
    }
}

// Hull of +-k/2 random points: centrally symmetric about the origin.
inline symmetria::ConvexPolygon random_centrally_symmetric(std::uint64_t seed,
                                                           int half_points = 6,
                                                           int exact_vertices = 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (;;) {
        std::vector<symmetria::Point> pts;
        pts.reserve(static_cast<std::size_t>(2 * half_points));
        for (int i = 0; i < half_points; ++i) {
            const symmetria::Point p{uni(rng), uni(rng)};
            pts.push_back(p);
            pts.push_back({-p.x, -p.y});
        }
        try {
            symmetria::ConvexPolygon hull = symmetria::normalize_polygon(pts);
            if (exact_vertices > 0 && static_cast<int>(hull.size()) != exact_vertices) continue;
            if (symmetria::polygon_area(hull) > 1e-3) return hull;
        } catch (const symmetria::Error&) {
        }
    }
}

}  // namespace testsupport
