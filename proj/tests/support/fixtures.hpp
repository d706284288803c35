#pragma once

#include <string>
#include <vector>

#include "cargo_route/model.hpp"

namespace support {

using namespace cargo_route;

inline Package make_package(ClientId client, int index, int h, int w, int l, double weight,
                            bool fragile = false) {
    return Package{client, index, h, w, l, weight, fragile};
}

/// Three clients, a 4x4x8 vehicle with capacity 10 and two vehicles.
///   client 1 at (10,0): p2 2x2x2 (w 3), p3 1x2x3 (w 1)
///   client 2 at (20,0): p0 2x2x2 (w 3), p1 2x2x2 fragile (w 1)
///   client 3 at (0,10): p4 2x2x2 (w 6)
inline Instance audit_instance() {
    Instance inst;
    inst.name = "audit";
    inst.depot = {0, 0};
    inst.clients = {{1, {10, 0}}, {2, {20, 0}}, {3, {0, 10}}};
    inst.packages = {make_package(2, 1, 2, 2, 2, 3.0), make_package(2, 2, 2, 2, 2, 1.0, true),
                     make_package(1, 1, 2, 2, 2, 3.0), make_package(1, 2, 1, 2, 3, 1.0),
                     make_package(3, 1, 2, 2, 2, 6.0)};
    // Instance::packages is grouped by ascending client.
    inst.packages = {inst.packages[2], inst.packages[3], inst.packages[0], inst.packages[1],
                     inst.packages[4]};
    inst.vehicle = {4, 4, 8, 10.0};
    inst.fleet_size = 2;
    return inst;
}

// Package ids in audit_instance() after grouping.
inline constexpr PackageId kC1Big = 0;    // client 1, 2x2x2
inline constexpr PackageId kC1Flat = 1;   // client 1, 1x2x3
inline constexpr PackageId kC2Base = 2;   // client 2, 2x2x2
inline constexpr PackageId kC2Frag = 3;   // client 2, 2x2x2 fragile
inline constexpr PackageId kC3 = 4;       // client 3

inline PlacedItem item(const Instance& inst, PackageId p, int h, int w, int l) {
    const auto& pkg = inst.packages[static_cast<std::size_t>(p)];
    return {p, {h, w, l, false}, {pkg.height, pkg.width, pkg.length}};
}

/// Valid reference solution. Vehicle 0 visits 1 then 2: client 2 sits at the
/// front wall, client 1 nearer the door.
inline Solution audit_solution(const Instance& inst) {
    Solution s;
    VehicleRoute v0;
    v0.nodes = {0, 1, 2, 0};
    v0.items = {item(inst, kC2Base, 0, 0, 0), item(inst, kC2Frag, 2, 0, 0),
                item(inst, kC1Big, 0, 0, 2), item(inst, kC1Flat, 0, 2, 0)};
    VehicleRoute v1;
    v1.nodes = {0, 3, 0};
    v1.items = {item(inst, kC3, 0, 0, 0)};
    s.vehicles = {v0, v1};
    return s;
}

struct Mutation {
    int constraint;
    std::string label;
    Solution solution;
};

inline std::vector<Mutation> audit_mutations(const Instance& inst) {
    const Solution base = audit_solution(inst);
    std::vector<Mutation> out;
    auto add = [&](int id, std::string label, auto edit) {
        Solution s = base;
        edit(s);
        out.push_back({id, std::move(label), std::move(s)});
    };
    add(1, "route does not return to the depot", [](Solution& s) { s.vehicles[1].nodes = {0, 3}; });
    add(2, "client visited twice", [](Solution& s) { s.vehicles[0].nodes = {0, 1, 2, 1, 0}; });
    add(3, "client 3 moved into vehicle 0 overloads it", [&](Solution& s) {
        s.vehicles[0].nodes = {0, 3, 1, 2, 0};
        s.vehicles[0].items.push_back(item(inst, kC3, 0, 0, 4));
        s.vehicles[1] = VehicleRoute{};
    });
    add(4, "package overlaps a neighbour", [](Solution& s) { s.vehicles[0].items[2].placement.l = 1; });
    add(5, "package tipped on its side", [](Solution& s) { s.vehicles[0].items[3].extents = {2, 1, 3}; });
    add(6, "non-fragile stacked on fragile", [](Solution& s) {
        s.vehicles[0].items[0].placement.h = 2;
        s.vehicles[0].items[1].placement.h = 0;
    });
    add(7, "package half over the edge of its support", [](Solution& s) {
        s.vehicles[0].items[1].placement.w = 1;
    });
    add(8, "visit order reversed against the load", [](Solution& s) {
        s.vehicles[0].nodes = {0, 2, 1, 0};
    });
    return out;
}

/// Tiny instance text in the native layout.
inline const char* kNativeText = R"(# two clients
name tiny
n 2
fleet 2
capacity 20
vehicle 4 4 6
0 50 50 0
1 60 50 2
2 50 70 1
1 2 2 2 0 3.5
1 1 2 2 1 1.5
2 2 2 3 0 4
)";

}  // namespace support
