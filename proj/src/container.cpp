#include "cargo_route/container.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace cargo_route {

Container::Container(const VehicleSpec& spec) : spec_(spec) {
    if (spec.height <= 0 || spec.width <= 0 || spec.length <= 0) {
        throw std::invalid_argument("vehicle dimensions must be positive");
    }
    cells_.assign(static_cast<std::size_t>(spec.volume()), kEmpty);
}

const Container::Loaded* Container::occupant(int h, int w, int l) const {
    const int slot = slot_at(h, w, l);
    return slot == kEmpty ? nullptr : &placed_[static_cast<std::size_t>(slot)];
}

bool Container::contains(int h, int w, int l, const Extents& e) const {
    return h >= 0 && w >= 0 && l >= 0 && e.height > 0 && e.width > 0 && e.length > 0 &&
           h + e.height <= spec_.height && w + e.width <= spec_.width &&
           l + e.length <= spec_.length;
}

void Container::place(PackageId id, const Package& package, const Placement& at) {
    const Extents e = placed_extents(package, at.rotated);
    if (!contains(at.h, at.w, at.l, e)) {
        throw std::logic_error("placement of package " + std::to_string(id) +
                               " leaves the loading space");
    }
    if (weight_ + package.weight > spec_.weight_capacity + kWeightTolerance) {
        throw std::logic_error("placing package " + std::to_string(id) +
                               " exceeds the weight capacity");
    }
    for (int h = at.h; h < at.h + e.height; ++h) {
        for (int w = at.w; w < at.w + e.width; ++w) {
            for (int l = at.l; l < at.l + e.length; ++l) {
                if (!empty_at(h, w, l)) {
                    throw std::logic_error("placement of package " + std::to_string(id) +
                                           " overlaps package " +
                                           std::to_string(occupant(h, w, l)->package));
                }
            }
        }
    }
    const auto slot = static_cast<std::int32_t>(placed_.size());
    for (int h = at.h; h < at.h + e.height; ++h) {
        for (int w = at.w; w < at.w + e.width; ++w) {
            const std::size_t row = index(h, w, at.l);
            std::fill_n(cells_.begin() + static_cast<std::ptrdiff_t>(row), e.length, slot);
        }
    }
    placed_.push_back({id, package.client, package.fragile, package.weight, at, e});
    weight_ += package.weight;
    occupied_ += std::int64_t{e.height} * e.width * e.length;
}

bool check_support(const Container& container, const Rect& footprint, int h,
                   double min_support) {
    if (h == 0) {
        return true;
    }
    int supported = 0;
    for (int w = footprint.w; w < footprint.w + footprint.width; ++w) {
        for (int l = footprint.l; l < footprint.l + footprint.length; ++l) {
            supported += container.empty_at(h - 1, w, l) ? 0 : 1;
        }
    }
    const double area = static_cast<double>(footprint.width) * footprint.length;
    return supported + 1e-9 >= min_support * area;
}

bool check_fragility(const Container& container, const Package& package, const Placement& at) {
    const Extents e = placed_extents(package, at.rotated);
    const int level = package.fragile ? at.h + e.height : at.h - 1;
    if (level < 0 || level >= container.height()) {
        return true;
    }
    for (int w = at.w; w < at.w + e.width; ++w) {
        for (int l = at.l; l < at.l + e.length; ++l) {
            const auto* other = container.occupant(level, w, l);
            if (other == nullptr) {
                continue;
            }
            // Below a non-fragile base: nothing fragile. Above a fragile top:
            // nothing non-fragile.
            if (package.fragile ? !other->fragile : other->fragile) {
                return false;
            }
        }
    }
    return true;
}

namespace {

bool blocks(const Container::Loaded& other, ClientId client, const LoadingRules& rules) {
    return rules.strict_lifo || other.client != client;
}

}  // namespace

bool check_lifo(const Container& container, const Package& package, const Placement& at,
                const LoadingRules& rules) {
    const Extents e = placed_extents(package, at.rotated);
    for (int h = at.h; h < at.h + e.height; ++h) {
        for (int w = at.w; w < at.w + e.width; ++w) {
            for (int l = at.l + e.length; l < container.length(); ++l) {
                const auto* other = container.occupant(h, w, l);
                if (other != nullptr && blocks(*other, package.client, rules)) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::int64_t compute_waste(const Container& container, const Package& package,
                           const Placement& at) {
    const Extents e = placed_extents(package, at.rotated);
    std::int64_t waste = 0;
    for (int h = at.h; h < at.h + e.height; ++h) {
        for (int w = at.w; w < at.w + e.width; ++w) {
            for (int l = at.l - 1; l >= 0 && container.empty_at(h, w, l); --l) {
                ++waste;
            }
        }
    }
    return waste;
}

namespace {

// Per-call precomputation shared by both rotations.
class ScanContext {
public:
    ScanContext(const Container& c, ClientId client, const LoadingRules& rules)
        : H_(c.height()), W_(c.width()), L_(c.length()) {
        // 3D prefix sums of occupancy for O(1) box emptiness.
        prefix_.assign(static_cast<std::size_t>(H_ + 1) * (W_ + 1) * (L_ + 1), 0);
        for (int h = 0; h < H_; ++h) {
            for (int w = 0; w < W_; ++w) {
                for (int l = 0; l < L_; ++l) {
                    const int occ = c.empty_at(h, w, l) ? 0 : 1;
                    prefix(h + 1, w + 1, l + 1) = occ + prefix(h, w + 1, l + 1) +
                                                  prefix(h + 1, w, l + 1) +
                                                  prefix(h + 1, w + 1, l) - prefix(h, w, l + 1) -
                                                  prefix(h, w + 1, l) - prefix(h + 1, w, l) +
                                                  prefix(h, w, l);
                }
            }
        }
        // Lowest free level of every floor column.
        lowest_free_.assign(static_cast<std::size_t>(W_) * L_, H_);
        for (int w = 0; w < W_; ++w) {
            for (int l = 0; l < L_; ++l) {
                for (int h = 0; h < H_; ++h) {
                    if (c.empty_at(h, w, l)) {
                        lowest_free_[static_cast<std::size_t>(w) * L_ + l] = h;
                        break;
                    }
                }
            }
        }
        // Deepest LIFO blocker of every (h, w) cross-section cell, -1 if none.
        last_block_.assign(static_cast<std::size_t>(H_) * W_, -1);
        for (int h = 0; h < H_; ++h) {
            for (int w = 0; w < W_; ++w) {
                for (int l = L_ - 1; l >= 0; --l) {
                    const auto* other = c.occupant(h, w, l);
                    if (other != nullptr && blocks(*other, client, rules)) {
                        last_block_[static_cast<std::size_t>(h) * W_ + w] = l;
                        break;
                    }
                }
            }
        }
    }

    [[nodiscard]] bool box_empty(int h, int w, int l, const Extents& e) const {
        const int h1 = h + e.height;
        const int w1 = w + e.width;
        const int l1 = l + e.length;
        const int sum = prefix(h1, w1, l1) - prefix(h, w1, l1) - prefix(h1, w, l1) -
                        prefix(h1, w1, l) + prefix(h, w, l1) + prefix(h, w1, l) +
                        prefix(h1, w, l) - prefix(h, w, l);
        return sum == 0;
    }

    [[nodiscard]] int lowest_free(int w, int l) const {
        return lowest_free_[static_cast<std::size_t>(w) * L_ + l];
    }

    [[nodiscard]] int last_block(int h, int w) const {
        return last_block_[static_cast<std::size_t>(h) * W_ + w];
    }

private:
    int& prefix(int h, int w, int l) {
        return prefix_[(static_cast<std::size_t>(h) * (W_ + 1) + w) * (L_ + 1) + l];
    }
    [[nodiscard]] int prefix(int h, int w, int l) const {
        return prefix_[(static_cast<std::size_t>(h) * (W_ + 1) + w) * (L_ + 1) + l];
    }

    int H_;
    int W_;
    int L_;
    std::vector<int> prefix_;
    std::vector<int> lowest_free_;
    std::vector<int> last_block_;
};

std::optional<Placement> scan_rotation(const Container& c, const ScanContext& ctx,
                                       const Package& package, bool rotated,
                                       const LoadingRules& rules) {
    const Extents e = placed_extents(package, rotated);
    const int H = c.height();
    const int W = c.width();
    const int L = c.length();
    if (e.height > H || e.width > W || e.length > L) {
        return std::nullopt;
    }
    const int hs = H - e.height + 1;
    const int ws = W - e.width + 1;

    // Minimum l at which each (h, w) cross-section clears every blocker.
    std::vector<int> min_l(static_cast<std::size_t>(hs) * ws, 0);
    int l_skip = std::numeric_limits<int>::max();
    for (int h = 0; h < hs; ++h) {
        for (int w = 0; w < ws; ++w) {
            int deepest = -1;
            for (int dh = 0; dh < e.height; ++dh) {
                for (int dw = 0; dw < e.width; ++dw) {
                    deepest = std::max(deepest, ctx.last_block(h + dh, w + dw));
                }
            }
            min_l[static_cast<std::size_t>(h) * ws + w] = deepest + 1;
            l_skip = std::min(l_skip, deepest + 1);
        }
    }

    std::vector<int> column_max(static_cast<std::size_t>(W));
    for (int l = l_skip; l + e.length <= L; ++l) {
        for (int w = 0; w < W; ++w) {
            int m = 0;
            for (int dl = 0; dl < e.length; ++dl) {
                m = std::max(m, ctx.lowest_free(w, l + dl));
            }
            column_max[static_cast<std::size_t>(w)] = m;
        }
        for (int w = 0; w < ws; ++w) {
            int contour = 0;
            for (int dw = 0; dw < e.width; ++dw) {
                contour = std::max(contour, column_max[static_cast<std::size_t>(w + dw)]);
            }
            for (int h = contour; h + e.height <= H; ++h) {
                if (l < min_l[static_cast<std::size_t>(h) * ws + w]) {
                    continue;
                }
                if (!ctx.box_empty(h, w, l, e)) {
                    continue;
                }
                const Placement at{h, w, l, rotated};
                if (!check_support(c, Rect{w, l, e.width, e.length}, h, rules.min_support)) {
                    continue;
                }
                if (!check_fragility(c, package, at)) {
                    continue;
                }
                return at;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PlacementChoice> find_placement(const Container& container, const Package& package,
                                              const LoadingRules& rules) {
    const ScanContext ctx(container, package.client, rules);
    std::optional<PlacementChoice> best;
    const bool square = package.width == package.length;
    for (bool rotated : {false, true}) {
        if (rotated && square) {
            break;
        }
        const auto at = scan_rotation(container, ctx, package, rotated, rules);
        if (!at) {
            continue;
        }
        const PlacementChoice choice{*at, compute_waste(container, package, *at)};
        if (!best) {
            best = choice;
            continue;
        }
        const auto reach = [](const Placement& p) { return p.h + p.w + p.l; };
        if (choice.waste < best->waste ||
            (choice.waste == best->waste && reach(choice.placement) < reach(best->placement))) {
            best = choice;
        }
    }
    return best;
}

SignedHeightMap signed_heightmap(const Container& container) {
    SignedHeightMap map;
    map.width = container.width();
    map.length = container.length();
    map.values.assign(static_cast<std::size_t>(map.width) * map.length, 0);
    for (int w = 0; w < map.width; ++w) {
        for (int l = 0; l < map.length; ++l) {
            for (int h = container.height() - 1; h >= 0; --h) {
                const auto* top = container.occupant(h, w, l);
                if (top != nullptr) {
                    map.values[static_cast<std::size_t>(w) * map.length + l] =
                        top->fragile ? -(h + 1) : h + 1;
                    break;
                }
            }
        }
    }
    return map;
}

std::vector<double> observation_grid(const SignedHeightMap& map, const VehicleSpec& spec,
                                     std::pair<int, int> target) {
    const auto [tw, tl] = target;
    if (tw <= 0 || tl <= 0) {
        throw std::invalid_argument("observation grid target must be positive");
    }
    if (spec.height <= 0) {
        throw std::invalid_argument("vehicle height must be positive");
    }
    std::vector<double> grid(static_cast<std::size_t>(tw) * tl);
    for (int i = 0; i < tw; ++i) {
        const int w = static_cast<int>(static_cast<std::int64_t>(i) * map.width / tw);
        for (int j = 0; j < tl; ++j) {
            const int l = static_cast<int>(static_cast<std::int64_t>(j) * map.length / tl);
            grid[static_cast<std::size_t>(i) * tl + j] =
                static_cast<double>(map.at(w, l)) / spec.height;
        }
    }
    return grid;
}

}  // namespace cargo_route
