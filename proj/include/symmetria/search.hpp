#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "symmetria/geometry.hpp"
#include "symmetria/measures.hpp"

namespace symmetria {

struct AnnealConfig {
    int n_vertices = 4;
    long long iterations = 20000;
    double initial_temperature = 0.01;
    double cooling_rate = 0.9995;
    double step_scale = 0.05;  // fraction of the diameter
    std::uint64_t seed = 0;
    MeasureOptions measure_opts;
    std::optional<ConvexPolygon> start;

    void validate() const;
};

struct SearchResult {
    ConvexPolygon best_polygon;
    double best_value = 1.0;
    std::vector<std::pair<long long, double>> trace;  // (iteration, search objective)
    AnnealConfig config;
};

// One uniformly chosen vertex displaced by a Gaussian step of scale
// step * diameter; re-normalized, retried (up to 32 times) when the hull
// loses a vertex or becomes too thin.
ConvexPolygon perturb(const ConvexPolygon& p, double step, std::mt19937_64& rng);

// Metropolis annealing on the axiality value (minimizing) with geometric
// cooling. Deterministic for a fixed config. The search objective runs at
// reduced resolution; the returned best_value is re-measured in full.
SearchResult anneal(const AnnealConfig& cfg);

// Independent chains, one per seed, run in parallel.
std::vector<SearchResult> anneal_all(const AnnealConfig& base,
                                     const std::vector<std::uint64_t>& seeds);

// Merged result: minimal best_value, seed as tiebreak.
SearchResult anneal_chains(const AnnealConfig& base, const std::vector<std::uint64_t>& seeds);

}  // namespace symmetria
