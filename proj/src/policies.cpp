#include "cargo_route/policies.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <tuple>

#include "cargo_route/validate.hpp"

namespace cargo_route {

namespace {

std::vector<PackageId> selectable(const Observation& obs) {
    std::vector<PackageId> ids;
    for (std::size_t p = 0; p < obs.mask.size(); ++p) {
        if (obs.mask[p] != 0) {
            ids.push_back(static_cast<PackageId>(p));
        }
    }
    return ids;
}

}  // namespace

Ranking greedy_nearest(const Observation& obs) {
    auto ids = selectable(obs);
    const auto location = [&](ClientId c) -> const Point& {
        return c == kDepot ? obs.depot : obs.clients[static_cast<std::size_t>(c - 1)];
    };
    const Point& from = location(obs.last_client);
    const auto client_of = [&](PackageId p) { return obs.package_client[static_cast<std::size_t>(p)]; };
    const auto volume_of = [&](PackageId p) { return obs.package_volume[static_cast<std::size_t>(p)]; };

    std::vector<double> dist(obs.clients.size() + 1, 0.0);
    for (std::size_t c = 1; c <= obs.clients.size(); ++c) {
        dist[c] = euclidean_distance(from, obs.clients[c - 1]);
    }
    const auto key = [&](PackageId p) {
        const ClientId c = client_of(p);
        const bool open = obs.open_client && *obs.open_client == c;
        // Package ids ascend with the package index inside a client.
        return std::tuple{open ? 0 : 1, open ? -volume_of(p) : std::int64_t{0},
                          open ? 0.0 : dist[static_cast<std::size_t>(c)], c, p};
    };
    std::sort(ids.begin(), ids.end(), [&](PackageId a, PackageId b) { return key(a) < key(b); });
    return ids;
}

Ranking random_policy(const Observation& obs, std::uint64_t seed) {
    auto ids = selectable(obs);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(obs.step)};
    std::mt19937_64 rng(seq);
    std::shuffle(ids.begin(), ids.end(), rng);
    return ids;
}

RolloutResult rollout(const Policy& policy, std::shared_ptr<const Instance> instance,
                      double penalty, const EnvConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    Episode episode(std::move(instance), config);
    RolloutResult result;
    Observation obs = episode.observe();
    while (!episode.done()) {
        Ranking ranking = policy.rank(obs);
        auto outcome = episode.step(ranking);
        result.checks += outcome.checks;
        result.caller_errors += outcome.caller_errors;
        result.rankings.push_back(std::move(ranking));
        obs = std::move(outcome.observation);
    }
    auto [solution, breakdown] = episode.finalize(penalty);
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.solution = std::move(solution);
    result.cost = breakdown;
    result.steps = episode.steps();
    return result;
}

std::optional<VehicleRoute> repack_route(std::span<const ClientId> visit_order,
                                         const Instance& instance, const LoadingRules& rules) {
    Container container(instance.vehicle);
    VehicleRoute route;
    route.nodes = with_depot(visit_order);
    for (auto it = visit_order.rbegin(); it != visit_order.rend(); ++it) {
        for (PackageId p : by_descending_volume(instance, instance.packages_of(*it))) {
            const Package& pkg = instance.packages[static_cast<std::size_t>(p)];
            if (pkg.weight > container.remaining_weight() + kWeightTolerance) {
                return std::nullopt;
            }
            const auto choice = find_placement(container, pkg, rules);
            if (!choice) {
                return std::nullopt;
            }
            container.place(p, pkg, choice->placement);
            route.items.push_back(
                {p, choice->placement, placed_extents(pkg, choice->placement.rotated)});
        }
    }
    return route;
}

namespace {

class Improver {
public:
    Improver(Solution solution, const Instance& instance, const LoadingRules& rules)
        : sol_(std::move(solution)), inst_(instance), rules_(rules) {
        for (const auto& v : sol_.vehicles) {
            routes_.push_back(v.clients());
        }
    }

    Solution run(int budget) {
        for (int accepted = 0; accepted < budget; ++accepted) {
            if (!two_opt() && !relocate()) {
                break;
            }
        }
        return std::move(sol_);
    }

private:
    [[nodiscard]] double length(const std::vector<ClientId>& clients) const {
        return route_distance(clients, inst_);
    }

    bool two_opt() {
        for (std::size_t v = 0; v < routes_.size(); ++v) {
            const auto& route = routes_[v];
            const double before = length(route);
            for (std::size_t i = 0; i + 1 < route.size(); ++i) {
                for (std::size_t j = i + 1; j < route.size(); ++j) {
                    auto candidate = route;
                    std::reverse(candidate.begin() + static_cast<std::ptrdiff_t>(i),
                                 candidate.begin() + static_cast<std::ptrdiff_t>(j + 1));
                    if (!(length(candidate) < before - 1e-9)) {
                        continue;
                    }
                    auto packed = repack_route(candidate, inst_, rules_);
                    if (!packed) {
                        continue;
                    }
                    routes_[v] = std::move(candidate);
                    sol_.vehicles[v] = std::move(*packed);
                    return true;
                }
            }
        }
        return false;
    }

    bool relocate() {
        for (std::size_t from = 0; from < routes_.size(); ++from) {
            for (std::size_t k = 0; k < routes_[from].size(); ++k) {
                const ClientId client = routes_[from][k];
                auto shrunk = routes_[from];
                shrunk.erase(shrunk.begin() + static_cast<std::ptrdiff_t>(k));
                for (std::size_t to = 0; to < routes_.size(); ++to) {
                    if (to == from) {
                        continue;
                    }
                    const double before = length(routes_[from]) + length(routes_[to]);
                    for (std::size_t pos = 0; pos <= routes_[to].size(); ++pos) {
                        auto grown = routes_[to];
                        grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(pos), client);
                        if (!(length(shrunk) + length(grown) < before - 1e-9)) {
                            continue;
                        }
                        auto packed_to = repack_route(grown, inst_, rules_);
                        if (!packed_to) {
                            continue;
                        }
                        auto packed_from = repack_route(shrunk, inst_, rules_);
                        if (!packed_from) {
                            continue;
                        }
                        routes_[from] = std::move(shrunk);
                        routes_[to] = std::move(grown);
                        sol_.vehicles[from] = std::move(*packed_from);
                        sol_.vehicles[to] = std::move(*packed_to);
                        return true;
                    }
                }
            }
        }
        return false;
    }

    Solution sol_;
    const Instance& inst_;
    LoadingRules rules_;
    std::vector<std::vector<ClientId>> routes_;
};

}  // namespace

Solution insert_missed(const Solution& solution, const Instance& instance, double penalty,
                       const LoadingRules& rules) {
    const auto report = validate(instance, solution, rules.min_support);
    if (!report.passed()) {
        throw std::invalid_argument("repair needs a valid solution");
    }
    Solution sol = solution;
    std::vector<ClientId> missed_clients;
    for (PackageId p : sol.missed) {
        missed_clients.push_back(instance.packages[static_cast<std::size_t>(p)].client);
    }
    std::sort(missed_clients.begin(), missed_clients.end());
    missed_clients.erase(std::unique(missed_clients.begin(), missed_clients.end()),
                         missed_clients.end());

    for (ClientId client : missed_clients) {
        const auto base = cost(sol, instance, penalty);
        const auto ids = instance.packages_of(client);
        const int freed = static_cast<int>(ids.size());
        std::optional<std::pair<std::size_t, VehicleRoute>> best;
        double best_distance = 0.0;
        const double distance = total_distance(sol, instance);
        for (std::size_t v = 0; v < sol.vehicles.size(); ++v) {
            const auto visit = sol.vehicles[v].clients();
            const double before = route_distance(visit, instance);
            for (std::size_t pos = 0; pos <= visit.size(); ++pos) {
                auto grown = visit;
                grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(pos), client);
                const double after = distance - before + route_distance(grown, instance);
                if (best && !(after < best_distance)) {
                    continue;
                }
                auto packed = repack_route(grown, instance, rules);
                if (!packed) {
                    continue;
                }
                best_distance = after;
                best.emplace(v, std::move(*packed));
            }
        }
        if (!best) {
            continue;
        }
        const int missed_after = static_cast<int>(sol.missed.size()) - freed;
        if (!(cost(best_distance, missed_after, instance, penalty).total < base.total)) {
            continue;
        }
        sol.vehicles[best->first] = std::move(best->second);
        std::erase_if(sol.missed, [&](PackageId p) {
            return instance.packages[static_cast<std::size_t>(p)].client == client;
        });
    }
    return sol;
}

Solution local_search(const Solution& solution, const Instance& instance, int budget,
                      const LoadingRules& rules) {
    const auto report = validate(instance, solution, rules.min_support);
    if (!report.passed()) {
        throw std::invalid_argument("local search needs a valid solution");
    }
    if (budget <= 0) {
        return solution;
    }
    return Improver(solution, instance, rules).run(budget);
}

}  // namespace cargo_route
