#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cargo_route/model.hpp"

namespace cargo_route {

/// Sampling ranges for random instances. Defaults reproduce the small training
/// setting: 15 clients on [0,100]^2, a 6x5x12 vehicle, package sides between
/// 0.2 and 0.6 of the vehicle's, 1-3 packages per client, 25% fragile and a
/// client demand of 1-30 weight units.
struct GenParams {
    int n = 15;
    double fragile_probability = 0.25;
    double x_min = 0.0;
    double x_max = 100.0;
    double y_min = 0.0;
    double y_max = 100.0;
    VehicleSpec vehicle{6, 5, 12, 90.0};
    double dim_min_fraction = 0.2;
    double dim_max_fraction = 0.6;
    std::vector<int> package_counts{1, 2, 3};
    int demand_min = 1;
    int demand_max = 30;
    std::uint64_t seed = 0;

    friend bool operator==(const GenParams&, const GenParams&) = default;
};

void check_params(const GenParams& params);

/// Integer side range [lo, hi] for a vehicle side: the smallest and largest
/// integers inside [min_fraction * side, max_fraction * side], at least 1.
[[nodiscard]] std::pair<int, int> side_range(int side, double min_fraction, double max_fraction);

/// Deterministic per seed. The client demand is split over its packages in
/// proportion to their volume.
[[nodiscard]] Instance generate(const GenParams& params);

/// Twice the larger of the volume- and weight-implied vehicle counts, at least 2.
[[nodiscard]] int fleet_size(std::int64_t total_volume, double total_weight,
                             const VehicleSpec& vehicle);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

/// Parses the native text layout or the classical benchmark layout (detected
/// from the first line). Throws ParseError.
[[nodiscard]] Instance parse_instance_text(std::string_view text);

/// Native text layout; parse_instance_text(to_native_text(x)) == x.
[[nodiscard]] std::string to_native_text(const Instance& instance);

struct Translate {
    double dx = 0.0;
    double dy = 0.0;
};

enum class Flip { x, y, xy };

using Transform = std::variant<Translate, Flip>;

/// Moves depot and clients; flips mirror the [0,100] plane (x -> 100 - x).
[[nodiscard]] Instance augment(const Instance& instance, const Transform& transform);

}  // namespace cargo_route
