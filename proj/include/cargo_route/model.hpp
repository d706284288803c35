#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cargo_route {

// Ids: clients are numbered 1..n (0 is the depot); packages are indexed by
// their position in Instance::packages.
using ClientId = int;
using PackageId = int;

inline constexpr ClientId kDepot = 0;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct VehicleSpec {
    int height = 0;
    int width = 0;
    int length = 0;
    double weight_capacity = 0.0;

    [[nodiscard]] std::int64_t volume() const {
        return std::int64_t{height} * width * length;
    }

    friend bool operator==(const VehicleSpec&, const VehicleSpec&) = default;
};

struct Package {
    ClientId client = 0;
    int index = 0;  // 1-based position within the client's list
    int height = 0;
    int width = 0;
    int length = 0;
    double weight = 0.0;
    bool fragile = false;

    [[nodiscard]] std::int64_t volume() const {
        return std::int64_t{height} * width * length;
    }

    friend bool operator==(const Package&, const Package&) = default;
};

struct Client {
    ClientId id = 0;
    Point location;

    friend bool operator==(const Client&, const Client&) = default;
};

struct Instance {
    std::string name;
    Point depot;
    std::vector<Client> clients;    // clients[i - 1].id == i
    std::vector<Package> packages;  // grouped by client, ascending index
    VehicleSpec vehicle;
    int fleet_size = 0;

    [[nodiscard]] int num_clients() const { return static_cast<int>(clients.size()); }
    [[nodiscard]] int num_packages() const { return static_cast<int>(packages.size()); }

    /// Depot for id 0, client location otherwise. Throws std::out_of_range.
    [[nodiscard]] const Point& location(ClientId id) const;

    [[nodiscard]] std::vector<PackageId> packages_of(ClientId client) const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws std::invalid_argument if the instance breaks a structural invariant
/// (n >= 1, contiguous client ids, m_i >= 1, positive dims, fleet >= 1).
void check_instance(const Instance& instance);

/// Box extents along (h, w, l).
struct Extents {
    int height = 0;
    int width = 0;
    int length = 0;

    friend bool operator==(const Extents&, const Extents&) = default;
};

/// Origin corner of a placed box. `rotated` swaps width and length.
struct Placement {
    int h = 0;
    int w = 0;
    int l = 0;
    bool rotated = false;

    friend bool operator==(const Placement&, const Placement&) = default;
};

[[nodiscard]] Extents placed_extents(const Package& package, bool rotated);

struct PlacedItem {
    PackageId package = 0;
    Placement placement;
    Extents extents;  // actual occupied box; audited independently of `rotated`

    friend bool operator==(const PlacedItem&, const PlacedItem&) = default;
};

struct VehicleRoute {
    // Full node sequence including depot endpoints, e.g. {0, 5, 1, 3, 0}.
    // An unused vehicle has an empty sequence.
    std::vector<ClientId> nodes;
    // Load order.
    std::vector<PlacedItem> items;

    [[nodiscard]] std::vector<ClientId> clients() const;

    friend bool operator==(const VehicleRoute&, const VehicleRoute&) = default;
};

struct Solution {
    std::vector<VehicleRoute> vehicles;
    std::vector<PackageId> missed;

    [[nodiscard]] int loaded_count() const;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Wraps a client sequence with depot endpoints; empty stays empty.
[[nodiscard]] std::vector<ClientId> with_depot(std::span<const ClientId> clients);

}  // namespace cargo_route
