#pragma once

#include <string>

#include "cargo_route/model.hpp"

namespace cargo_route {

/// Routes on the [0,100] plane, one colour per vehicle.
[[nodiscard]] std::string render_routes_svg(const Instance& instance, const Solution& solution);

/// One row per used vehicle, one top-view panel per height layer. Cells are
/// coloured by client; fragile packages are hatched.
[[nodiscard]] std::string render_packing_svg(const Instance& instance, const Solution& solution);

}  // namespace cargo_route
