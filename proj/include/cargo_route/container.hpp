#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cargo_route/model.hpp"

namespace cargo_route {

inline constexpr double kDefaultMinSupport = 0.75;
inline constexpr double kWeightTolerance = 1e-9;

struct LoadingRules {
    double min_support = kDefaultMinSupport;  // a_min
    // Same-client packages block each other's unloading corridor as well.
    bool strict_lifo = false;
};

/// Footprint rectangle on the (w, l) floor plane.
struct Rect {
    int w = 0;
    int l = 0;
    int width = 0;
    int length = 0;
};

/// Voxel loading space of one vehicle.
///
/// Axes: h is up from the floor, w runs across the vehicle, l runs from the
/// front wall (l = 0) towards the door at l = spec.length. Cells store the slot
/// of the occupying package in placed(), or kEmpty.
class Container {
public:
    static constexpr int kEmpty = -1;

    struct Loaded {
        PackageId package = 0;
        ClientId client = 0;
        bool fragile = false;
        double weight = 0.0;
        Placement placement;
        Extents extents;
    };

    explicit Container(const VehicleSpec& spec);

    [[nodiscard]] const VehicleSpec& spec() const { return spec_; }
    [[nodiscard]] int height() const { return spec_.height; }
    [[nodiscard]] int width() const { return spec_.width; }
    [[nodiscard]] int length() const { return spec_.length; }

    [[nodiscard]] int slot_at(int h, int w, int l) const { return cells_[index(h, w, l)]; }
    [[nodiscard]] bool empty_at(int h, int w, int l) const { return slot_at(h, w, l) == kEmpty; }
    /// Occupant of a cell, nullptr when empty.
    [[nodiscard]] const Loaded* occupant(int h, int w, int l) const;

    [[nodiscard]] std::span<const Loaded> placed() const { return placed_; }
    [[nodiscard]] double weight() const { return weight_; }
    [[nodiscard]] std::int64_t occupied_volume() const { return occupied_; }
    [[nodiscard]] double remaining_weight() const { return spec_.weight_capacity - weight_; }

    [[nodiscard]] bool contains(int h, int w, int l, const Extents& e) const;

    /// Paints the package. Throws std::logic_error on out-of-bounds, overlap or
    /// weight overflow: all of those mean the caller skipped find_placement.
    void place(PackageId id, const Package& package, const Placement& at);

private:
    [[nodiscard]] std::size_t index(int h, int w, int l) const {
        return (static_cast<std::size_t>(h) * static_cast<std::size_t>(spec_.width) +
                static_cast<std::size_t>(w)) *
                   static_cast<std::size_t>(spec_.length) +
               static_cast<std::size_t>(l);
    }

    VehicleSpec spec_;
    std::vector<std::int32_t> cells_;
    std::vector<Loaded> placed_;
    double weight_ = 0.0;
    std::int64_t occupied_ = 0;
};

struct PlacementChoice {
    Placement placement;
    std::int64_t waste = 0;

    friend bool operator==(const PlacementChoice&, const PlacementChoice&) = default;
};

/// True iff h == 0 or at least `min_support` of the footprint rests on
/// occupied cells at level h - 1.
[[nodiscard]] bool check_support(const Container& container, const Rect& footprint, int h,
                                 double min_support);

/// Non-fragile packages may not rest on fragile ones. Checked on both faces:
/// the cells under the base, and the cells directly above the top when the
/// incoming package is fragile (it may slide under an overhang).
[[nodiscard]] bool check_fragility(const Container& container, const Package& package,
                                   const Placement& at);

/// The corridor from the box's door-side face to the door, over its (h, w)
/// cross-section, holds no package of another client (any package in strict mode).
[[nodiscard]] bool check_lifo(const Container& container, const Package& package,
                              const Placement& at, const LoadingRules& rules = {});

/// Empty cells trapped behind the box: for each (h, w) of its cross-section,
/// the run of empty cells from l - 1 towards the front wall.
[[nodiscard]] std::int64_t compute_waste(const Container& container, const Package& package,
                                         const Placement& at);

/// Least-space-wasted, furthest-back, rightmost, lowest placement.
///
/// For each yaw rotation the first position in (l, w, h) ascending order that
/// is empty and passes support, fragility and LIFO is that rotation's
/// candidate. The scan skips l values below the deepest LIFO blocker of every
/// cross-section and starts each h scan at the lowest level the footprint
/// columns leave free; both prunings are exact. Among the candidates the one
/// with less waste wins, then the smaller h + w + l, then the unrotated one.
[[nodiscard]] std::optional<PlacementChoice> find_placement(const Container& container,
                                                            const Package& package,
                                                            const LoadingRules& rules = {});

/// Per-column top height; negative when the exposed package is fragile.
struct SignedHeightMap {
    int width = 0;
    int length = 0;
    std::vector<int> values;  // row-major (w, l)

    [[nodiscard]] int at(int w, int l) const {
        return values[static_cast<std::size_t>(w) * static_cast<std::size_t>(length) +
                      static_cast<std::size_t>(l)];
    }
};

[[nodiscard]] SignedHeightMap signed_heightmap(const Container& container);

inline constexpr std::pair<int, int> kDefaultGridTarget{30, 60};

/// Heightmap scaled to [-1, 1] by h_veh and resampled (nearest neighbour) to
/// target.first x target.second, row-major.
[[nodiscard]] std::vector<double> observation_grid(const SignedHeightMap& map,
                                                   const VehicleSpec& spec,
                                                   std::pair<int, int> target = kDefaultGridTarget);

}  // namespace cargo_route
