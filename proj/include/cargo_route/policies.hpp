#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cargo_route/core.hpp"
#include "cargo_route/env.hpp"

namespace cargo_route {

using Ranking = std::vector<PackageId>;

/// Maps an observation to a strict order over its selectable packages, most
/// preferred first. Every selectable package must appear exactly once.
class Policy {
public:
    virtual ~Policy() = default;
    [[nodiscard]] virtual Ranking rank(const Observation& observation) const = 0;
    [[nodiscard]] virtual std::string name() const = 0;
};

/// Open client first (largest package first); otherwise nearest client to the
/// last loading location, then client id, then package index.
[[nodiscard]] Ranking greedy_nearest(const Observation& observation);

/// Uniform permutation of the selectable packages, seeded by (seed, step).
[[nodiscard]] Ranking random_policy(const Observation& observation, std::uint64_t seed);

class GreedyNearestPolicy final : public Policy {
public:
    [[nodiscard]] Ranking rank(const Observation& observation) const override {
        return greedy_nearest(observation);
    }
    [[nodiscard]] std::string name() const override { return "greedy"; }
};

class RandomPolicy final : public Policy {
public:
    explicit RandomPolicy(std::uint64_t seed) : seed_(seed) {}
    [[nodiscard]] Ranking rank(const Observation& observation) const override {
        return random_policy(observation, seed_);
    }
    [[nodiscard]] std::string name() const override { return "random"; }

private:
    std::uint64_t seed_;
};

struct RolloutResult {
    Solution solution;
    CostBreakdown cost;
    double seconds = 0.0;
    int steps = 0;
    int checks = 0;
    int caller_errors = 0;
    std::vector<Ranking> rankings;  // one per step, replayable
};

[[nodiscard]] RolloutResult rollout(const Policy& policy, std::shared_ptr<const Instance> instance,
                                    double penalty = kDefaultPenalty, const EnvConfig& config = {});

/// Reloads a route from scratch: clients in reverse visit order, each
/// client's packages by descending volume, placed with find_placement.
/// Empty when something does not fit or the weight capacity is exceeded.
[[nodiscard]] std::optional<VehicleRoute> repack_route(std::span<const ClientId> visit_order,
                                                       const Instance& instance,
                                                       const LoadingRules& rules = {});

/// Reinserts clients whose packages were all missed, each at the cheapest
/// (vehicle, position) whose repack succeeds, when that lowers the total cost.
/// Throws std::invalid_argument if the input does not validate.
[[nodiscard]] Solution insert_missed(const Solution& solution, const Instance& instance,
                                     double penalty = kDefaultPenalty,
                                     const LoadingRules& rules = {});

/// First-improvement 2-opt and client relocation. A move is kept only if the
/// affected vehicles repack and the total distance strictly drops. `budget`
/// caps the number of accepted moves. Throws std::invalid_argument if the
/// input does not validate.
[[nodiscard]] Solution local_search(const Solution& solution, const Instance& instance, int budget,
                                    const LoadingRules& rules = {});

}  // namespace cargo_route
