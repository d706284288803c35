#include "cargo_route/c_api.h"

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "cargo_route/env.hpp"
#include "cargo_route/serialization.hpp"

namespace {

using cargo_route::Episode;

thread_local std::string last_error;

std::mutex registry_mutex;
std::map<int64_t, std::shared_ptr<Episode>> registry;
int64_t next_handle = 1;

int fail(int code, std::string message) {
    last_error = std::move(message);
    return code;
}

std::shared_ptr<Episode> lookup(int64_t session) {
    const std::lock_guard lock(registry_mutex);
    const auto it = registry.find(session);
    return it == registry.end() ? nullptr : it->second;
}

template <class Body>
int guarded(int64_t session, Body&& body) {
    const auto episode = lookup(session);
    if (!episode) {
        return fail(CR_ERROR_STALE_SESSION, "unknown or destroyed session " + std::to_string(session));
    }
    try {
        return body(*episode);
    } catch (const std::invalid_argument& e) {
        return fail(CR_ERROR_ARGUMENT, e.what());
    } catch (const std::logic_error& e) {
        return fail(CR_ERROR_STATE, e.what());
    } catch (const std::exception& e) {
        return fail(CR_ERROR_ARGUMENT, e.what());
    }
}

}  // namespace

extern "C" {

int64_t cr_env_create(const char* instance_json, double min_support, int grid_w, int grid_l) {
    if (instance_json == nullptr) {
        return fail(CR_ERROR_ARGUMENT, "instance json is null");
    }
    try {
        auto instance = std::make_shared<const cargo_route::Instance>(
            cargo_route::instance_from_json(cargo_route::Json::parse(instance_json)));
        cargo_route::EnvConfig config;
        config.rules.min_support = min_support;
        config.grid_target = {grid_w, grid_l};
        if (grid_w <= 0 || grid_l <= 0) {
            return fail(CR_ERROR_ARGUMENT, "grid dimensions must be positive");
        }
        auto episode = std::make_shared<Episode>(std::move(instance), config);
        const std::lock_guard lock(registry_mutex);
        const int64_t handle = next_handle++;
        registry.emplace(handle, std::move(episode));
        return handle;
    } catch (const std::exception& e) {
        return fail(CR_ERROR_ARGUMENT, e.what());
    }
}

int cr_env_destroy(int64_t session) {
    const std::lock_guard lock(registry_mutex);
    if (registry.erase(session) == 0) {
        return fail(CR_ERROR_STALE_SESSION, "unknown or destroyed session " + std::to_string(session));
    }
    return CR_OK;
}

int cr_env_reset(int64_t session) {
    return guarded(session, [](Episode& ep) -> int {
        ep.reset();
        return CR_OK;
    });
}

int cr_env_header(int64_t session, char* buffer, size_t capacity) {
    return guarded(session, [&](Episode& ep) -> int {
        const auto& inst = ep.instance();
        cargo_route::Json h;
        h["clients"] = inst.num_clients();
        h["packages"] = inst.num_packages();
        h["grid"] = {ep.config().grid_target.first, ep.config().grid_target.second};
        h["container"] = {inst.vehicle.width, inst.vehicle.length};
        h["active_vehicle"] = ep.active_vehicle();
        h["step"] = ep.steps();
        h["done"] = ep.done();
        const std::string text = h.dump();
        if (buffer == nullptr || capacity <= text.size()) {
            return fail(CR_ERROR_BUFFER, "header needs " + std::to_string(text.size() + 1) + " bytes");
        }
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        return CR_OK;
    });
}

int cr_env_observation(int64_t session, double* nodes, double* packages, double* grid,
                       uint8_t* mask, double* remaining_capacity) {
    return guarded(session, [&](Episode& ep) -> int {
        const auto obs = ep.observe();
        if (nodes != nullptr) {
            nodes[0] = obs.depot.x;
            nodes[1] = obs.depot.y;
            for (std::size_t i = 0; i < obs.clients.size(); ++i) {
                nodes[2 * (i + 1)] = obs.clients[i].x;
                nodes[2 * (i + 1) + 1] = obs.clients[i].y;
            }
        }
        if (packages != nullptr) {
            for (std::size_t p = 0; p < obs.packages.size(); ++p) {
                std::memcpy(packages + p * cargo_route::kPackageFeatures, obs.packages[p].data(),
                            sizeof(double) * cargo_route::kPackageFeatures);
            }
        }
        if (grid != nullptr) {
            std::memcpy(grid, obs.grid.data(), sizeof(double) * obs.grid.size());
        }
        if (mask != nullptr) {
            std::memcpy(mask, obs.mask.data(), obs.mask.size());
        }
        if (remaining_capacity != nullptr) {
            *remaining_capacity = obs.remaining_capacity;
        }
        return CR_OK;
    });
}

int cr_env_step(int64_t session, const int32_t* ranked, size_t count, double penalty,
                int32_t* outcome, int32_t* loaded, int32_t* done, double* cost_so_far) {
    return guarded(session, [&](Episode& ep) -> int {
        if (ranked == nullptr && count > 0) {
            return fail(CR_ERROR_ARGUMENT, "ranked actions are null");
        }
        std::vector<cargo_route::PackageId> ids(ranked, ranked + count);
        const auto out = ep.step(ids);
        if (outcome != nullptr) {
            *outcome = static_cast<int32_t>(out.kind);
        }
        if (loaded != nullptr) {
            *loaded = out.package ? *out.package : -1;
        }
        if (done != nullptr) {
            *done = ep.done() ? 1 : 0;
        }
        if (cost_so_far != nullptr) {
            *cost_so_far = ep.cost_so_far(penalty).total;
        }
        return CR_OK;
    });
}

int cr_env_render(int64_t session, int32_t* heightmap, uint8_t* mask) {
    return guarded(session, [&](Episode& ep) -> int {
        const int active = std::min(ep.active_vehicle(), ep.instance().fleet_size - 1);
        const auto map = cargo_route::signed_heightmap(ep.container(active));
        if (heightmap != nullptr) {
            for (std::size_t i = 0; i < map.values.size(); ++i) {
                heightmap[i] = map.values[i];
            }
        }
        if (mask != nullptr) {
            const auto m = ep.stage1_mask();
            std::memcpy(mask, m.data(), m.size());
        }
        return CR_OK;
    });
}

int cr_env_cost(int64_t session, double penalty, double* total, double* vrp, double* packing) {
    return guarded(session, [&](Episode& ep) -> int {
        const auto [solution, cost] = ep.finalize(penalty);
        if (total != nullptr) {
            *total = cost.total;
        }
        if (vrp != nullptr) {
            *vrp = cost.vrp;
        }
        if (packing != nullptr) {
            *packing = cost.packing;
        }
        return CR_OK;
    });
}

const char* cr_last_error(void) { return last_error.c_str(); }

}  // extern "C"
