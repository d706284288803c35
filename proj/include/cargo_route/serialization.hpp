#pragma once

#include <string>

#include "json.hpp"

#include "cargo_route/core.hpp"
#include "cargo_route/instances.hpp"
#include "cargo_route/model.hpp"
#include "cargo_route/validate.hpp"

namespace cargo_route {

// Insertion-ordered so that dumps are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

[[nodiscard]] Json to_json(const Instance& instance);
[[nodiscard]] Json to_json(const GenParams& params);
[[nodiscard]] Json to_json(const Solution& solution);
[[nodiscard]] Json to_json(const CostBreakdown& cost);
[[nodiscard]] Json to_json(const ValidationReport& report);

/// Throw std::invalid_argument on a missing field or wrong format_version.
[[nodiscard]] Instance instance_from_json(const Json& json);
[[nodiscard]] GenParams params_from_json(const Json& json);
[[nodiscard]] Solution solution_from_json(const Json& json);

[[nodiscard]] std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// JSON when the file starts with '{', text layouts otherwise.
[[nodiscard]] Instance load_instance(const std::string& path);

/// Two-space indented dump with a trailing newline.
[[nodiscard]] std::string dump(const Json& json);

}  // namespace cargo_route
