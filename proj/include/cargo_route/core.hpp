#pragma once

#include <array>
#include <span>

#include "cargo_route/model.hpp"

namespace cargo_route {

inline constexpr double kDefaultPenalty = 2.0;

/// Episode cost. `total == vrp + packing` holds exactly.
struct CostBreakdown {
    double total = 0.0;
    double vrp = 0.0;
    double packing = 0.0;
    double penalty = kDefaultPenalty;
    double star_distance = 0.0;  // sum of one-way depot -> client distances

    friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

[[nodiscard]] double euclidean_distance(const Point& a, const Point& b);

/// Length of depot -> clients (in order) -> depot. Throws std::invalid_argument
/// on a repeated client and std::out_of_range on an unknown one.
[[nodiscard]] double route_distance(std::span<const ClientId> clients, const Instance& instance);

/// Sum over every vehicle of the edge lengths along its node sequence.
[[nodiscard]] double total_distance(const Solution& solution, const Instance& instance);

[[nodiscard]] double star_distance(const Instance& instance);

/// vrp = distance / (penalty * star), packing = missed / n.
[[nodiscard]] CostBreakdown cost(double total_distance, int missed_packages,
                                 const Instance& instance, double penalty = kDefaultPenalty);

[[nodiscard]] CostBreakdown cost(const Solution& solution, const Instance& instance,
                                 double penalty = kDefaultPenalty);

/// (h, w, l) of the package relative to the vehicle.
[[nodiscard]] std::array<double, 3> scale_dims(const Package& package, const VehicleSpec& vehicle);

}  // namespace cargo_route
