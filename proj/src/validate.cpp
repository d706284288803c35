#include "cargo_route/validate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "cargo_route/core.hpp"

namespace cargo_route {

const char* constraint_name(int id) {
    switch (id) {
        case 1: return "route_endpoints";
        case 2: return "single_visit";
        case 3: return "weight_capacity";
        case 4: return "layout";
        case 5: return "orientation";
        case 6: return "fragility";
        case 7: return "support";
        case 8: return "lifo";
        default: return "unknown";
    }
}

bool ValidationReport::passed() const {
    return std::all_of(constraints.begin(), constraints.end(),
                       [](const ConstraintVerdict& v) { return v.passed; });
}

std::vector<int> ValidationReport::failed() const {
    std::vector<int> ids;
    for (const auto& v : constraints) {
        if (!v.passed) {
            ids.push_back(v.id);
        }
    }
    return ids;
}

namespace {

struct Box {
    PackageId package = 0;
    ClientId client = 0;
    bool fragile = false;
    int h0 = 0, w0 = 0, l0 = 0;
    int h1 = 0, w1 = 0, l1 = 0;  // exclusive

    [[nodiscard]] std::int64_t base_area() const {
        return std::int64_t{w1 - w0} * (l1 - l0);
    }
};

std::int64_t overlap(int a0, int a1, int b0, int b1) {
    return std::max(0, std::min(a1, b1) - std::max(a0, b0));
}

std::int64_t footprint_overlap(const Box& a, const Box& b) {
    return overlap(a.w0, a.w1, b.w0, b.w1) * overlap(a.l0, a.l1, b.l0, b.l1);
}

bool intersects(const Box& a, const Box& b) {
    return overlap(a.h0, a.h1, b.h0, b.h1) > 0 && footprint_overlap(a, b) > 0;
}

// Base area of `box` resting on the tops of `others`.
std::int64_t support_area(const Box& box, const std::vector<const Box*>& others) {
    std::int64_t area = 0;
    for (const Box* o : others) {
        if (o != &box && o->h1 == box.h0) {
            area += footprint_overlap(box, *o);
        }
    }
    return area;
}

bool supported(const Box& box, const std::vector<const Box*>& others, double min_support) {
    if (box.h0 == 0) {
        return true;
    }
    return static_cast<double>(support_area(box, others)) + 1e-9 >=
           min_support * static_cast<double>(box.base_area());
}

class Auditor {
public:
    Auditor(const Instance& inst, const Solution& sol, double min_support)
        : inst_(inst), sol_(sol), min_support_(min_support) {
        for (int id = 1; id <= kConstraintCount; ++id) {
            report_.constraints[static_cast<std::size_t>(id - 1)].id = id;
        }
    }

    ValidationReport run() {
        check_structure();
        boxes_.resize(sol_.vehicles.size());
        for (std::size_t v = 0; v < sol_.vehicles.size(); ++v) {
            for (const auto& item : sol_.vehicles[v].items) {
                const Package& p = inst_.packages[static_cast<std::size_t>(item.package)];
                const auto& o = item.placement;
                const auto& e = item.extents;
                boxes_[v].push_back({item.package, p.client, p.fragile, o.h, o.w, o.l,
                                     o.h + e.height, o.w + e.width, o.l + e.length});
            }
        }
        check_routes();
        check_visits();
        for (std::size_t v = 0; v < sol_.vehicles.size(); ++v) {
            check_weight(v);
            check_layout(v);
            check_orientation(v);
            check_fragility(v);
            check_support(v);
            check_unloading(v);
        }
        report_.total_distance = total_distance(sol_, inst_);
        report_.loaded = sol_.loaded_count();
        report_.missed = static_cast<int>(sol_.missed.size());
        return report_;
    }

private:
    void fail(int id, const std::string& message) {
        auto& verdict = report_.constraints[static_cast<std::size_t>(id - 1)];
        verdict.passed = false;
        verdict.violations.push_back(message);
    }

    static std::string at(std::size_t vehicle, PackageId package) {
        return "vehicle " + std::to_string(vehicle) + " package " + std::to_string(package);
    }

    void check_structure() const {
        std::vector<int> seen(inst_.packages.size(), 0);
        auto mark = [&](PackageId p) {
            if (p < 0 || p >= inst_.num_packages()) {
                throw StructuralError("unknown package id " + std::to_string(p));
            }
            if (++seen[static_cast<std::size_t>(p)] > 1) {
                throw StructuralError("package " + std::to_string(p) + " listed twice");
            }
        };
        for (const auto& v : sol_.vehicles) {
            for (ClientId c : v.nodes) {
                if (c < 0 || c > inst_.num_clients()) {
                    throw StructuralError("unknown client id " + std::to_string(c));
                }
            }
            for (const auto& item : v.items) {
                mark(item.package);
            }
        }
        for (PackageId p : sol_.missed) {
            mark(p);
        }
        for (std::size_t p = 0; p < seen.size(); ++p) {
            if (seen[p] == 0) {
                throw StructuralError("package " + std::to_string(p) + " is neither placed nor missed");
            }
        }
    }

    // 1: every used route is depot -> clients -> depot.
    void check_routes() {
        for (std::size_t v = 0; v < sol_.vehicles.size(); ++v) {
            const auto& nodes = sol_.vehicles[v].nodes;
            if (nodes.empty()) {
                continue;
            }
            const bool ends = nodes.size() >= 2 && nodes.front() == kDepot && nodes.back() == kDepot;
            const bool single_trip =
                std::count(nodes.begin(), nodes.end(), kDepot) == (nodes.size() >= 2 ? 2 : 1);
            if (!ends || !single_trip) {
                fail(1, "vehicle " + std::to_string(v) + " route does not start and end at the depot");
            }
        }
    }

    // 2: each client visited at most once, by the one vehicle carrying all of
    // its loaded packages.
    void check_visits() {
        std::map<ClientId, int> visits;
        std::map<ClientId, std::set<std::size_t>> visited_by;
        for (std::size_t v = 0; v < sol_.vehicles.size(); ++v) {
            for (ClientId c : sol_.vehicles[v].nodes) {
                if (c != kDepot) {
                    ++visits[c];
                    visited_by[c].insert(v);
                }
            }
        }
        for (const auto& [c, count] : visits) {
            if (count > 1) {
                fail(2, "client " + std::to_string(c) + " visited " + std::to_string(count) + " times");
            }
        }
        std::map<ClientId, std::set<std::size_t>> carried_by;
        for (std::size_t v = 0; v < sol_.vehicles.size(); ++v) {
            for (const Box& b : boxes_[v]) {
                carried_by[b.client].insert(v);
                if (!visited_by[b.client].contains(v)) {
                    fail(2, at(v, b.package) + " is never delivered: client " +
                                std::to_string(b.client) + " not on the route");
                }
            }
        }
        for (const auto& [c, vehicles] : carried_by) {
            if (vehicles.size() > 1) {
                fail(2, "client " + std::to_string(c) + " split across " +
                            std::to_string(vehicles.size()) + " vehicles");
            }
        }
        for (const auto& [c, vehicles] : visited_by) {
            for (std::size_t v : vehicles) {
                if (!carried_by[c].contains(v)) {
                    fail(2, "vehicle " + std::to_string(v) + " visits client " + std::to_string(c) +
                                " without carrying its packages");
                }
            }
        }
    }

    // 3
    void check_weight(std::size_t v) {
        double sum = 0.0;
        for (const Box& b : boxes_[v]) {
            sum += inst_.packages[static_cast<std::size_t>(b.package)].weight;
        }
        if (sum > inst_.vehicle.weight_capacity + kWeightTolerance) {
            std::ostringstream msg;
            msg << "vehicle " << v << " carries " << sum << " > " << inst_.vehicle.weight_capacity;
            fail(3, msg.str());
        }
    }

    // 4: bounds and voxel painting.
    void check_layout(std::size_t v) {
        const auto& veh = inst_.vehicle;
        std::vector<int> paint(static_cast<std::size_t>(veh.volume()), -1);
        for (const Box& b : boxes_[v]) {
            if (b.h0 < 0 || b.w0 < 0 || b.l0 < 0 || b.h1 > veh.height || b.w1 > veh.width ||
                b.l1 > veh.length || b.h1 <= b.h0 || b.w1 <= b.w0 || b.l1 <= b.l0) {
                fail(4, at(v, b.package) + " lies outside the loading space");
                continue;
            }
            bool clash = false;
            for (int h = b.h0; h < b.h1; ++h) {
                for (int w = b.w0; w < b.w1; ++w) {
                    for (int l = b.l0; l < b.l1; ++l) {
                        auto& cell = paint[(static_cast<std::size_t>(h) * veh.width + w) * veh.length + l];
                        if (cell != -1 && !clash) {
                            fail(4, at(v, b.package) + " overlaps package " + std::to_string(cell));
                            clash = true;
                        }
                        cell = b.package;
                    }
                }
            }
        }
    }

    // 5: only yaw rotations.
    void check_orientation(std::size_t v) {
        for (const auto& item : sol_.vehicles[v].items) {
            const Package& p = inst_.packages[static_cast<std::size_t>(item.package)];
            const auto& e = item.extents;
            const bool upright = e.height == p.height;
            const bool yaw = (e.width == p.width && e.length == p.length) ||
                             (e.width == p.length && e.length == p.width);
            if (!upright || !yaw) {
                fail(5, at(v, item.package) + " is not upright");
            }
        }
    }

    [[nodiscard]] std::vector<const Box*> all(std::size_t v) const {
        std::vector<const Box*> out;
        for (const Box& b : boxes_[v]) {
            out.push_back(&b);
        }
        return out;
    }

    // 6: nothing non-fragile rests on a fragile top.
    void check_fragility(std::size_t v) {
        for (const Box& upper : boxes_[v]) {
            if (upper.fragile || upper.h0 == 0) {
                continue;
            }
            for (const Box& lower : boxes_[v]) {
                if (&lower != &upper && lower.fragile && lower.h1 == upper.h0 &&
                    footprint_overlap(upper, lower) > 0) {
                    fail(6, at(v, upper.package) + " rests on fragile package " +
                                std::to_string(lower.package));
                }
            }
        }
    }

    // 7
    void check_support(std::size_t v) {
        const auto others = all(v);
        for (const Box& b : boxes_[v]) {
            if (!supported(b, others, min_support_)) {
                fail(7, at(v, b.package) + " is insufficiently supported");
            }
        }
    }

    // 8: unload in visit order; each package slides out along +l without
    // hitting anything still loaded, and no remaining package loses the
    // support it had.
    void check_unloading(std::size_t v) {
        const int door = inst_.vehicle.length;
        std::vector<const Box*> remaining = all(v);
        std::set<ClientId> unloaded;
        for (ClientId c : sol_.vehicles[v].clients()) {
            if (!unloaded.insert(c).second) {
                continue;
            }
            std::vector<const Box*> stop;
            for (const Box* b : remaining) {
                if (b->client == c) {
                    stop.push_back(b);
                }
            }
            std::stable_sort(stop.begin(), stop.end(),
                             [](const Box* a, const Box* b) { return a->l0 > b->l0; });
            std::vector<const Box*> before = remaining;
            for (const Box* b : stop) {
                const Box corridor{b->package, b->client, b->fragile, b->h0, b->w0, b->l1,
                                   b->h1, b->w1, door};
                for (const Box* r : remaining) {
                    if (r != b && corridor.l0 < corridor.l1 && intersects(corridor, *r)) {
                        fail(8, at(v, b->package) + " is blocked by package " +
                                    std::to_string(r->package) + " when unloading client " +
                                    std::to_string(c));
                    }
                }
                std::erase(remaining, b);
            }
            for (const Box* r : remaining) {
                if (supported(*r, before, min_support_) && !supported(*r, remaining, min_support_)) {
                    fail(8, at(v, r->package) + " loses support when client " + std::to_string(c) +
                                " is unloaded");
                }
            }
        }
    }

    const Instance& inst_;
    const Solution& sol_;
    double min_support_;
    std::vector<std::vector<Box>> boxes_;
    ValidationReport report_;
};

}  // namespace

ValidationReport validate(const Instance& instance, const Solution& solution, double min_support) {
    return Auditor(instance, solution, min_support).run();
}

}  // namespace cargo_route
