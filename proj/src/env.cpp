#include "cargo_route/env.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cargo_route {

std::vector<PackageId> by_descending_volume(const Instance& instance, std::vector<PackageId> ids) {
    std::stable_sort(ids.begin(), ids.end(), [&](PackageId a, PackageId b) {
        const auto va = instance.packages[static_cast<std::size_t>(a)].volume();
        const auto vb = instance.packages[static_cast<std::size_t>(b)].volume();
        return va != vb ? va > vb : a < b;
    });
    return ids;
}

Episode::Episode(std::shared_ptr<const Instance> instance, EnvConfig config)
    : instance_(std::move(instance)), config_(config) {
    if (!instance_) {
        throw std::invalid_argument("episode needs an instance");
    }
    check_instance(*instance_);
    reset();
}

Observation Episode::reset() {
    const auto& inst = *instance_;
    containers_.assign(static_cast<std::size_t>(inst.fleet_size), Container(inst.vehicle));
    sequences_.assign(static_cast<std::size_t>(inst.fleet_size), {});
    load_orders_.assign(static_cast<std::size_t>(inst.fleet_size), {});
    packages_.assign(inst.packages.size(), PackageState{});
    client_vehicle_.assign(static_cast<std::size_t>(inst.num_clients() + 1), -1);
    open_client_.reset();
    active_ = 0;
    step_ = 0;
    done_ = inst.packages.empty();
    return observe();
}

int Episode::pending_count() const {
    return static_cast<int>(std::count_if(packages_.begin(), packages_.end(), [](const auto& s) {
        return s.status == PackageStatus::pending;
    }));
}

const Container& Episode::container(int vehicle) const {
    return containers_.at(static_cast<std::size_t>(vehicle));
}

const PackageState& Episode::package_state(PackageId id) const {
    return packages_.at(static_cast<std::size_t>(id));
}

const std::vector<ClientId>& Episode::loading_sequence(int vehicle) const {
    return sequences_.at(static_cast<std::size_t>(vehicle));
}

std::vector<std::uint8_t> Episode::stage1_mask() const {
    const auto& inst = *instance_;
    std::vector<std::uint8_t> mask(inst.packages.size(), 0);
    if (done_) {
        return mask;
    }
    const double remaining = containers_[static_cast<std::size_t>(active_)].remaining_weight();
    for (std::size_t p = 0; p < inst.packages.size(); ++p) {
        const Package& pkg = inst.packages[p];
        if (packages_[p].status != PackageStatus::pending) {
            continue;
        }
        if (pkg.weight > remaining + kWeightTolerance) {
            continue;
        }
        const int owner = client_vehicle_[static_cast<std::size_t>(pkg.client)];
        if (owner != -1 && owner != active_) {
            continue;
        }
        if (open_client_ && *open_client_ != pkg.client) {
            continue;
        }
        mask[p] = 1;
    }
    return mask;
}

Observation Episode::observe() const {
    const auto& inst = *instance_;
    Observation obs;
    obs.depot = inst.depot;
    obs.clients.reserve(inst.clients.size());
    for (const auto& c : inst.clients) {
        obs.clients.push_back(c.location);
    }
    obs.packages.reserve(inst.packages.size());
    for (const auto& p : inst.packages) {
        const auto s = scale_dims(p, inst.vehicle);
        obs.packages.push_back({s[0], s[1], s[2], p.fragile ? 1.0 : 0.0,
                                p.weight / inst.vehicle.weight_capacity});
        obs.package_client.push_back(p.client);
        obs.package_volume.push_back(p.volume());
    }
    const auto& active = containers_[static_cast<std::size_t>(std::min(active_, inst.fleet_size - 1))];
    obs.remaining_capacity = done_ ? 0.0 : active.remaining_weight() / inst.vehicle.weight_capacity;
    obs.grid_shape = config_.grid_target;
    obs.grid = observation_grid(signed_heightmap(active), inst.vehicle, config_.grid_target);
    obs.mask = stage1_mask();
    obs.active_vehicle = active_;
    const auto& seq = sequences_[static_cast<std::size_t>(std::min(active_, inst.fleet_size - 1))];
    obs.last_client = (done_ || seq.empty()) ? kDepot : seq.back();
    obs.open_client = open_client_;
    obs.step = step_;
    obs.done = done_;
    return obs;
}

std::vector<PackageId> Episode::pending_of(ClientId client) const {
    std::vector<PackageId> ids;
    for (PackageId p : instance_->packages_of(client)) {
        if (packages_[static_cast<std::size_t>(p)].status == PackageStatus::pending) {
            ids.push_back(p);
        }
    }
    return ids;
}

bool Episode::fits_in_order(Container scratch, std::span<const PackageId> order) const {
    for (PackageId p : order) {
        const Package& pkg = instance_->packages[static_cast<std::size_t>(p)];
        if (pkg.weight > scratch.remaining_weight() + kWeightTolerance) {
            return false;
        }
        const auto choice = find_placement(scratch, pkg, config_.rules);
        if (!choice) {
            return false;
        }
        scratch.place(p, pkg, choice->placement);
    }
    return true;
}

bool Episode::lookahead_client_fit(ClientId client) const {
    if (done_) {
        return false;
    }
    const auto order = by_descending_volume(*instance_, pending_of(client));
    return fits_in_order(containers_[static_cast<std::size_t>(active_)], order);
}

std::optional<Placement> Episode::plan_load(PackageId candidate) const {
    const auto& inst = *instance_;
    const Package& pkg = inst.packages[static_cast<std::size_t>(candidate)];
    const Container& active = containers_[static_cast<std::size_t>(active_)];

    auto rest = pending_of(pkg.client);
    std::erase(rest, candidate);
    double needed = pkg.weight;
    for (PackageId p : rest) {
        needed += inst.packages[static_cast<std::size_t>(p)].weight;
    }
    if (needed > active.remaining_weight() + kWeightTolerance) {
        return std::nullopt;
    }
    const auto choice = find_placement(active, pkg, config_.rules);
    if (!choice) {
        return std::nullopt;
    }
    if (rest.empty()) {
        return choice->placement;
    }
    // The rest of the client must still fit behind this choice; the previous
    // step's plan guarantees at least one candidate of an open client passes.
    Container scratch = active;
    scratch.place(candidate, pkg, choice->placement);
    const auto order = by_descending_volume(inst, std::move(rest));
    if (!fits_in_order(std::move(scratch), order)) {
        return std::nullopt;
    }
    return choice->placement;
}

void Episode::load(PackageId id, const Placement& at) {
    const Package& pkg = instance_->packages[static_cast<std::size_t>(id)];
    auto& vehicle = containers_[static_cast<std::size_t>(active_)];
    vehicle.place(id, pkg, at);
    auto& order = load_orders_[static_cast<std::size_t>(active_)];
    packages_[static_cast<std::size_t>(id)] =
        PackageState{PackageStatus::loaded, active_, at, static_cast<int>(order.size())};
    order.push_back(id);

    auto& owner = client_vehicle_[static_cast<std::size_t>(pkg.client)];
    if (owner == -1) {
        owner = active_;
        sequences_[static_cast<std::size_t>(active_)].push_back(pkg.client);
    }
    open_client_ = pending_of(pkg.client).empty() ? std::nullopt : std::optional{pkg.client};
    if (pending_count() == 0) {
        done_ = true;
    }
}

void Episode::advance_vehicle() {
    if (open_client_) {
        throw std::logic_error("vehicle closed while client " + std::to_string(*open_client_) +
                               " is only partly loaded");
    }
    ++active_;
    if (active_ >= instance_->fleet_size) {
        active_ = instance_->fleet_size;
        for (auto& s : packages_) {
            if (s.status == PackageStatus::pending) {
                s.status = PackageStatus::missed;
            }
        }
        done_ = true;
    }
}

StepOutcome Episode::step(std::span<const PackageId> ranked) {
    if (done_) {
        throw std::logic_error("step called on a finished episode");
    }
    const auto mask = stage1_mask();
    std::vector<std::uint8_t> listed(mask.size(), 0);
    for (PackageId p : ranked) {
        if (p >= 0 && static_cast<std::size_t>(p) < listed.size()) {
            listed[static_cast<std::size_t>(p)] = 1;
        }
    }
    for (std::size_t p = 0; p < mask.size(); ++p) {
        if (mask[p] != 0 && listed[p] == 0) {
            throw std::invalid_argument("ranked actions omit selectable package " +
                                        std::to_string(p));
        }
    }

    StepOutcome outcome;
    std::vector<std::uint8_t> tried(mask.size(), 0);
    ++step_;
    for (PackageId p : ranked) {
        const auto idx = static_cast<std::size_t>(p);
        if (p < 0 || idx >= mask.size() || mask[idx] == 0 || tried[idx] != 0) {
            ++outcome.caller_errors;
            continue;
        }
        tried[idx] = 1;
        ++outcome.checks;
        if (const auto at = plan_load(p)) {
            load(p, *at);
            outcome.kind = done_ ? StepKind::episode_done : StepKind::loaded;
            outcome.package = p;
            outcome.observation = observe();
            return outcome;
        }
    }
    advance_vehicle();
    outcome.kind = done_ ? StepKind::episode_done : StepKind::vehicle_advanced;
    outcome.observation = observe();
    return outcome;
}

CostBreakdown Episode::cost_so_far(double penalty) const {
    double distance = 0.0;
    for (const auto& seq : sequences_) {
        const std::vector<ClientId> visit(seq.rbegin(), seq.rend());
        distance += route_distance(visit, *instance_);
    }
    const auto missed = std::count_if(packages_.begin(), packages_.end(), [](const auto& s) {
        return s.status == PackageStatus::missed;
    });
    return cost(distance, static_cast<int>(missed), *instance_, penalty);
}

std::pair<Solution, CostBreakdown> Episode::finalize(double penalty) const {
    if (!done_) {
        throw std::logic_error("finalize called before the episode is done");
    }
    const auto& inst = *instance_;
    Solution solution;
    solution.vehicles.resize(static_cast<std::size_t>(inst.fleet_size));
    for (std::size_t v = 0; v < solution.vehicles.size(); ++v) {
        // The deepest-loaded client is served last.
        std::vector<ClientId> visit(sequences_[v].rbegin(), sequences_[v].rend());
        solution.vehicles[v].nodes = with_depot(visit);
        for (PackageId p : load_orders_[v]) {
            const auto& s = packages_[static_cast<std::size_t>(p)];
            solution.vehicles[v].items.push_back(
                {p, s.placement,
                 placed_extents(inst.packages[static_cast<std::size_t>(p)], s.placement.rotated)});
        }
    }
    for (std::size_t p = 0; p < packages_.size(); ++p) {
        if (packages_[p].status == PackageStatus::missed) {
            solution.missed.push_back(static_cast<PackageId>(p));
        }
    }
    const auto breakdown = cost(solution, inst, penalty);
    return {std::move(solution), breakdown};
}

}  // namespace cargo_route
