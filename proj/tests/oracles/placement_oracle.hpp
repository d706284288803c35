#pragma once

// Exhaustive reference implementations. They read raw cell occupancy from a
// Container and re-derive every rule from scratch; nothing here calls the
// checks or the scan in container.cpp.

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "cargo_route/container.hpp"

namespace oracle {

using cargo_route::Container;
using cargo_route::LoadingRules;
using cargo_route::Package;
using cargo_route::Placement;
using cargo_route::PlacementChoice;

struct Box {
    int h, w, l, dh, dw, dl;
};

inline Box box_of(const Package& p, const Placement& at) {
    return at.rotated ? Box{at.h, at.w, at.l, p.height, p.length, p.width}
                      : Box{at.h, at.w, at.l, p.height, p.width, p.length};
}

inline bool in_bounds(const Container& c, const Box& b) {
    return b.h >= 0 && b.w >= 0 && b.l >= 0 && b.h + b.dh <= c.height() &&
           b.w + b.dw <= c.width() && b.l + b.dl <= c.length();
}

inline bool all_empty(const Container& c, const Box& b) {
    for (int h = b.h; h < b.h + b.dh; ++h)
        for (int w = b.w; w < b.w + b.dw; ++w)
            for (int l = b.l; l < b.l + b.dl; ++l)
                if (c.slot_at(h, w, l) != Container::kEmpty) return false;
    return true;
}

inline const Container::Loaded* at_cell(const Container& c, int h, int w, int l) {
    const int s = c.slot_at(h, w, l);
    return s == Container::kEmpty ? nullptr : &c.placed()[static_cast<std::size_t>(s)];
}

inline bool supported(const Container& c, const Box& b, double a_min) {
    if (b.h == 0) return true;
    std::int64_t n = 0;
    for (int w = b.w; w < b.w + b.dw; ++w)
        for (int l = b.l; l < b.l + b.dl; ++l)
            if (at_cell(c, b.h - 1, w, l)) ++n;
    // Compare as integers scaled by 1e6 to stay clear of rounding at the boundary.
    const auto area = static_cast<std::int64_t>(b.dw) * b.dl;
    return n * 1000000 >= static_cast<std::int64_t>(a_min * 1000000.0 + 0.5) * area;
}

inline bool fragility_ok(const Container& c, const Package& p, const Box& b) {
    for (int w = b.w; w < b.w + b.dw; ++w) {
        for (int l = b.l; l < b.l + b.dl; ++l) {
            if (b.h > 0) {
                const auto* below = at_cell(c, b.h - 1, w, l);
                if (below && below->fragile && !p.fragile) return false;
            }
            if (b.h + b.dh < c.height()) {
                const auto* above = at_cell(c, b.h + b.dh, w, l);
                if (above && !above->fragile && p.fragile) return false;
            }
        }
    }
    return true;
}

inline bool corridor_clear(const Container& c, const Package& p, const Box& b,
                           const LoadingRules& rules) {
    for (int h = b.h; h < b.h + b.dh; ++h)
        for (int w = b.w; w < b.w + b.dw; ++w)
            for (int l = b.l + b.dl; l < c.length(); ++l) {
                const auto* o = at_cell(c, h, w, l);
                if (o && (rules.strict_lifo || o->client != p.client)) return false;
            }
    return true;
}

/// Empty voxels between the box's deep face and the first obstacle behind it.
inline std::int64_t waste(const Container& c, const Box& b) {
    std::int64_t total = 0;
    for (int h = b.h; h < b.h + b.dh; ++h)
        for (int w = b.w; w < b.w + b.dw; ++w) {
            int l = b.l - 1;
            while (l >= 0 && !at_cell(c, h, w, l)) {
                ++total;
                --l;
            }
        }
    return total;
}

inline bool feasible(const Container& c, const Package& p, const Placement& at,
                     const LoadingRules& rules) {
    const Box b = box_of(p, at);
    return in_bounds(c, b) && all_empty(c, b) && supported(c, b, rules.min_support) &&
           fragility_ok(c, p, b) && corridor_clear(c, p, b, rules);
}

/// Every (rotation, h, w, l); per rotation the lexicographically smallest
/// (l, w, h) feasible origin, then least waste, smaller h+w+l, unrotated.
inline std::optional<PlacementChoice> best_placement(const Container& c, const Package& p,
                                                     const LoadingRules& rules) {
    std::optional<PlacementChoice> best;
    const int rotations = p.width == p.length ? 1 : 2;
    for (int r = 0; r < rotations; ++r) {
        std::optional<Placement> first;
        for (int l = 0; l < c.length() && !first; ++l)
            for (int w = 0; w < c.width() && !first; ++w)
                for (int h = 0; h < c.height() && !first; ++h) {
                    const Placement at{h, w, l, r == 1};
                    if (feasible(c, p, at, rules)) first = at;
                }
        if (!first) continue;
        const PlacementChoice cand{*first, waste(c, box_of(p, *first))};
        const auto key = [](const PlacementChoice& x) {
            return std::tuple{x.waste, x.placement.h + x.placement.w + x.placement.l,
                              x.placement.rotated ? 1 : 0};
        };
        if (!best || key(cand) < key(*best)) best = cand;
    }
    return best;
}

/// Column heights straight from the grid.
inline std::vector<int> column_tops(const Container& c) {
    std::vector<int> out(static_cast<std::size_t>(c.width()) * c.length(), 0);
    for (int w = 0; w < c.width(); ++w)
        for (int l = 0; l < c.length(); ++l)
            for (int h = 0; h < c.height(); ++h)
                if (at_cell(c, h, w, l)) {
                    const int sign = at_cell(c, h, w, l)->fragile ? -1 : 1;
                    out[static_cast<std::size_t>(w) * c.length() + l] = sign * (h + 1);
                }
    return out;
}

}  // namespace oracle
