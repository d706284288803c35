#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cargo_route/container.hpp"
#include "cargo_route/model.hpp"

namespace cargo_route {

inline constexpr int kConstraintCount = 8;

/// Constraint ids 1..8: route endpoints, single visit, weight, layout,
/// orientation, fragility, support, LIFO unloading.
[[nodiscard]] const char* constraint_name(int id);

struct ConstraintVerdict {
    int id = 0;
    bool passed = true;
    std::vector<std::string> violations;
};

struct ValidationReport {
    std::array<ConstraintVerdict, kConstraintCount> constraints;
    double total_distance = 0.0;
    int loaded = 0;
    int missed = 0;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::vector<int> failed() const;
    [[nodiscard]] const ConstraintVerdict& constraint(int id) const {
        return constraints.at(static_cast<std::size_t>(id - 1));
    }
};

/// The solution cannot be audited: unknown ids, a package placed twice or a
/// package neither placed nor missed.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Audits a solution against all eight loading/routing constraints. Containers
/// are rebuilt from the listed extents; nothing computed by the environment is
/// trusted. LIFO is checked by unloading the clients in visit order.
[[nodiscard]] ValidationReport validate(const Instance& instance, const Solution& solution,
                                        double min_support = kDefaultMinSupport);

}  // namespace cargo_route
