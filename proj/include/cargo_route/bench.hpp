#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cargo_route/instances.hpp"

namespace cargo_route {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares of y on x. Throws std::invalid_argument on fewer
/// than two points or a constant x.
[[nodiscard]] LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct ScalingRow {
    int n = 0;
    int repetitions = 0;
    double mean_seconds = 0.0;
    double min_seconds = 0.0;
    double max_seconds = 0.0;
    double mean_cost = 0.0;
    int missed = 0;
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    LinearFit fit;
};

/// Greedy rollouts on generated instances (base params with n replaced),
/// seeded by seed + 1000 * n + rep. Instances are built up front; each
/// rollout is timed on its own worker.
[[nodiscard]] ScalingReport bench_scaling(const std::vector<int>& ns, int repetitions,
                                          std::uint64_t seed, const GenParams& base = {});

[[nodiscard]] std::string scaling_csv(const ScalingReport& report);

}  // namespace cargo_route
