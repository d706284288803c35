#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cargo_route/container.hpp"
#include "cargo_route/core.hpp"
#include "cargo_route/model.hpp"

namespace cargo_route {

struct EnvConfig {
    LoadingRules rules;
    std::pair<int, int> grid_target = kDefaultGridTarget;
};

enum class PackageStatus { pending, loaded, missed };

struct PackageState {
    PackageStatus status = PackageStatus::pending;
    int vehicle = -1;
    Placement placement;
    int load_order = -1;  // position in the vehicle's load sequence
};

inline constexpr std::size_t kPackageFeatures = 5;

/// What a policy sees before choosing its ranking.
struct Observation {
    Point depot;
    std::vector<Point> clients;  // index i holds client i + 1
    // (h/h_veh, w/w_veh, l/l_veh, fragile, weight/d_veh) per package
    std::vector<std::array<double, kPackageFeatures>> packages;
    std::vector<ClientId> package_client;
    std::vector<std::int64_t> package_volume;
    double remaining_capacity = 0.0;  // fraction of d_veh
    std::pair<int, int> grid_shape;
    std::vector<double> grid;         // observation_grid of the active container
    std::vector<std::uint8_t> mask;   // stage-1 mask, 1 = selectable
    int active_vehicle = 0;
    ClientId last_client = kDepot;    // last client loaded into the active vehicle
    std::optional<ClientId> open_client;
    int step = 0;
    bool done = false;
};

enum class StepKind { loaded, vehicle_advanced, episode_done };

struct StepOutcome {
    StepKind kind = StepKind::loaded;
    std::optional<PackageId> package;
    int checks = 0;         // candidates sent through look-ahead / placement
    int caller_errors = 0;  // masked, unknown or repeated entries skipped
    Observation observation;
};

/// One 3L-CVRP episode.
///
/// Packages are loaded one at a time from a ranked list. Once a client's first
/// package is in, only that client's packages are selectable until it is
/// complete, and every candidate of a multi-package client must come with a
/// placement plan for the rest of the client's pending packages. Together this
/// keeps each client in exactly one vehicle. When nothing in the list fits the
/// active vehicle is closed; past the last vehicle all pending packages are
/// missed.
class Episode {
public:
    explicit Episode(std::shared_ptr<const Instance> instance, EnvConfig config = {});

    Observation reset();

    [[nodiscard]] Observation observe() const;
    [[nodiscard]] std::vector<std::uint8_t> stage1_mask() const;

    /// Throws std::logic_error once done, std::invalid_argument if the list
    /// omits a selectable package.
    StepOutcome step(std::span<const PackageId> ranked);

    /// Greedy trial of all the client's pending packages (descending volume) in
    /// a scratch copy of the active container, with weight accounting.
    [[nodiscard]] bool lookahead_client_fit(ClientId client) const;

    /// Throws std::logic_error before the episode is done.
    [[nodiscard]] std::pair<Solution, CostBreakdown> finalize(double penalty = kDefaultPenalty) const;

    /// Cost of the routes built so far; missed packages count only once declared.
    [[nodiscard]] CostBreakdown cost_so_far(double penalty = kDefaultPenalty) const;

    [[nodiscard]] bool done() const { return done_; }
    [[nodiscard]] int active_vehicle() const { return active_; }
    [[nodiscard]] int steps() const { return step_; }
    [[nodiscard]] int pending_count() const;
    [[nodiscard]] std::optional<ClientId> open_client() const { return open_client_; }
    [[nodiscard]] const Container& container(int vehicle) const;
    [[nodiscard]] const PackageState& package_state(PackageId id) const;
    [[nodiscard]] const std::vector<ClientId>& loading_sequence(int vehicle) const;
    [[nodiscard]] const Instance& instance() const { return *instance_; }
    [[nodiscard]] const EnvConfig& config() const { return config_; }

private:
    [[nodiscard]] std::optional<Placement> plan_load(PackageId candidate) const;
    [[nodiscard]] bool fits_in_order(Container scratch, std::span<const PackageId> order) const;
    [[nodiscard]] std::vector<PackageId> pending_of(ClientId client) const;
    void load(PackageId id, const Placement& at);
    void advance_vehicle();

    std::shared_ptr<const Instance> instance_;
    EnvConfig config_;
    std::vector<Container> containers_;
    std::vector<std::vector<ClientId>> sequences_;
    std::vector<std::vector<PackageId>> load_orders_;
    std::vector<PackageState> packages_;
    std::vector<int> client_vehicle_;  // indexed by client id, -1 if unassigned
    std::optional<ClientId> open_client_;
    int active_ = 0;
    int step_ = 0;
    bool done_ = false;
};

/// Sorts package ids by descending volume, ties by id.
[[nodiscard]] std::vector<PackageId> by_descending_volume(const Instance& instance,
                                                          std::vector<PackageId> ids);

}  // namespace cargo_route
