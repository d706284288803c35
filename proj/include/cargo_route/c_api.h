/*
 * C-compatible environment boundary for foreign-function callers.
 *
 * Sessions are integer handles. Every call returns 0 on success and a
 * negative code on failure; cr_last_error() then describes the failure for
 * the calling thread. Arrays are caller-allocated, row-major, and sized from
 * the header returned by cr_env_header():
 *
 *   nodes     (n + 1) x 2      depot first, then clients 1..n, as (x, y)
 *   packages  P x 5            h/h_veh, w/w_veh, l/l_veh, fragile, weight/d_veh
 *   grid      grid_w x grid_l  signed heightmap of the active vehicle in [-1, 1]
 *   heightmap W x L            raw signed heights of the active vehicle
 *   mask      P                1 = selectable
 */
#ifndef CARGO_ROUTE_C_API_H
#define CARGO_ROUTE_C_API_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    CR_OK = 0,
    CR_ERROR_ARGUMENT = -1,
    CR_ERROR_STALE_SESSION = -2,
    CR_ERROR_STATE = -3,
    CR_ERROR_BUFFER = -4
};

/* Returns a session handle (> 0), or a negative error code. */
int64_t cr_env_create(const char* instance_json, double min_support, int grid_w, int grid_l);
int cr_env_destroy(int64_t session);
int cr_env_reset(int64_t session);

/* Writes a NUL-terminated JSON header: {"clients", "packages", "grid": [w, l],
 * "container": [w, l], "active_vehicle", "step", "done"}. */
int cr_env_header(int64_t session, char* buffer, size_t capacity);

int cr_env_observation(int64_t session, double* nodes, double* packages, double* grid,
                       uint8_t* mask, double* remaining_capacity);

/* outcome: 0 loaded, 1 vehicle advanced, 2 episode done. loaded is -1 when
 * nothing was loaded. cost_so_far uses the routes built so far. */
int cr_env_step(int64_t session, const int32_t* ranked, size_t count, double penalty,
                int32_t* outcome, int32_t* loaded, int32_t* done, double* cost_so_far);

int cr_env_render(int64_t session, int32_t* heightmap, uint8_t* mask);

/* Final cost breakdown; CR_ERROR_STATE before the episode is done. */
int cr_env_cost(int64_t session, double penalty, double* total, double* vrp, double* packing);

const char* cr_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
