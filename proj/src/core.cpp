#include "cargo_route/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace cargo_route {

double euclidean_distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double route_distance(std::span<const ClientId> clients, const Instance& instance) {
    if (clients.empty()) {
        return 0.0;
    }
    std::unordered_set<ClientId> seen;
    double sum = 0.0;
    const Point* prev = &instance.depot;
    for (ClientId c : clients) {
        if (!seen.insert(c).second) {
            throw std::invalid_argument("client " + std::to_string(c) + " visited twice");
        }
        const Point& here = instance.location(c);
        sum += euclidean_distance(*prev, here);
        prev = &here;
    }
    return sum + euclidean_distance(*prev, instance.depot);
}

double total_distance(const Solution& solution, const Instance& instance) {
    double sum = 0.0;
    for (const auto& vehicle : solution.vehicles) {
        for (std::size_t j = 1; j < vehicle.nodes.size(); ++j) {
            sum += euclidean_distance(instance.location(vehicle.nodes[j - 1]),
                                      instance.location(vehicle.nodes[j]));
        }
    }
    return sum;
}

double star_distance(const Instance& instance) {
    double sum = 0.0;
    for (const auto& c : instance.clients) {
        sum += euclidean_distance(instance.depot, c.location);
    }
    return sum;
}

CostBreakdown cost(double distance, int missed_packages, const Instance& instance,
                   double penalty) {
    if (instance.clients.empty()) {
        throw std::invalid_argument("cost is undefined for an instance without clients");
    }
    if (!(penalty > 0.0)) {
        throw std::invalid_argument("penalty must be positive");
    }
    CostBreakdown out;
    out.penalty = penalty;
    out.star_distance = star_distance(instance);
    out.vrp = out.star_distance > 0.0 ? distance / (penalty * out.star_distance) : 0.0;
    out.packing = static_cast<double>(missed_packages) / instance.num_clients();
    out.total = out.vrp + out.packing;
    return out;
}

CostBreakdown cost(const Solution& solution, const Instance& instance, double penalty) {
    return cost(total_distance(solution, instance), static_cast<int>(solution.missed.size()),
                instance, penalty);
}

std::array<double, 3> scale_dims(const Package& package, const VehicleSpec& vehicle) {
    if (vehicle.height <= 0 || vehicle.width <= 0 || vehicle.length <= 0) {
        throw std::invalid_argument("vehicle dimensions must be positive");
    }
    return {static_cast<double>(package.height) / vehicle.height,
            static_cast<double>(package.width) / vehicle.width,
            static_cast<double>(package.length) / vehicle.length};
}

}  // namespace cargo_route
