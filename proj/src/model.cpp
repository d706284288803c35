#include "cargo_route/model.hpp"

#include <stdexcept>
#include <string>

namespace cargo_route {

const Point& Instance::location(ClientId id) const {
    if (id == kDepot) {
        return depot;
    }
    if (id < 1 || id > num_clients()) {
        throw std::out_of_range("unknown client id " + std::to_string(id));
    }
    return clients[static_cast<std::size_t>(id - 1)].location;
}

std::vector<PackageId> Instance::packages_of(ClientId client) const {
    std::vector<PackageId> ids;
    for (PackageId p = 0; p < num_packages(); ++p) {
        if (packages[static_cast<std::size_t>(p)].client == client) {
            ids.push_back(p);
        }
    }
    return ids;
}

void check_instance(const Instance& instance) {
    if (instance.clients.empty()) {
        throw std::invalid_argument("instance has no clients");
    }
    if (instance.fleet_size < 1) {
        throw std::invalid_argument("fleet size must be at least 1");
    }
    const auto& v = instance.vehicle;
    if (v.height <= 0 || v.width <= 0 || v.length <= 0 || !(v.weight_capacity > 0.0)) {
        throw std::invalid_argument("vehicle dimensions and capacity must be positive");
    }
    std::vector<int> count(instance.clients.size() + 1, 0);
    for (std::size_t i = 0; i < instance.clients.size(); ++i) {
        if (instance.clients[i].id != static_cast<ClientId>(i + 1)) {
            throw std::invalid_argument("client ids must be 1..n in order");
        }
    }
    for (const auto& p : instance.packages) {
        if (p.client < 1 || p.client > instance.num_clients()) {
            throw std::invalid_argument("package references unknown client " +
                                        std::to_string(p.client));
        }
        if (p.height <= 0 || p.width <= 0 || p.length <= 0) {
            throw std::invalid_argument("package dimensions must be positive");
        }
        if (p.weight < 0.0) {
            throw std::invalid_argument("package weight must be non-negative");
        }
        ++count[static_cast<std::size_t>(p.client)];
    }
    for (std::size_t c = 1; c < count.size(); ++c) {
        if (count[c] == 0) {
            throw std::invalid_argument("client " + std::to_string(c) + " has no packages");
        }
    }
}

Extents placed_extents(const Package& package, bool rotated) {
    return rotated ? Extents{package.height, package.length, package.width}
                   : Extents{package.height, package.width, package.length};
}

std::vector<ClientId> VehicleRoute::clients() const {
    std::vector<ClientId> out;
    for (ClientId c : nodes) {
        if (c != kDepot) {
            out.push_back(c);
        }
    }
    return out;
}

int Solution::loaded_count() const {
    int n = 0;
    for (const auto& v : vehicles) {
        n += static_cast<int>(v.items.size());
    }
    return n;
}

std::vector<ClientId> with_depot(std::span<const ClientId> clients) {
    if (clients.empty()) {
        return {};
    }
    std::vector<ClientId> nodes;
    nodes.reserve(clients.size() + 2);
    nodes.push_back(kDepot);
    nodes.insert(nodes.end(), clients.begin(), clients.end());
    nodes.push_back(kDepot);
    return nodes;
}

}  // namespace cargo_route
