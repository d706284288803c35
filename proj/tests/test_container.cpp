#include <stdexcept>
#include <random>

#include "doctest.h"

#include "cargo_route/container.hpp"
#include "oracles/placement_oracle.hpp"
#include "support/random_states.hpp"

using namespace cargo_route;

namespace {

Package box(ClientId client, int h, int w, int l, bool fragile = false, double weight = 1.0) {
    return Package{client, 1, h, w, l, weight, fragile};
}

const VehicleSpec kSmall{6, 5, 12, 90};

}  // namespace

TEST_CASE("find_placement on an empty container takes the origin") {
    const Container c(kSmall);
    const auto choice = find_placement(c, box(1, 2, 2, 3));
    REQUIRE(choice);
    CHECK(choice->placement == Placement{0, 0, 0, false});
    CHECK(choice->waste == 0);
}

TEST_CASE("find_placement rejects a package taller than the vehicle") {
    const Container c(kSmall);
    CHECK_FALSE(find_placement(c, box(1, 7, 1, 1)));
}

TEST_CASE("find_placement prefers the rotation with less waste") {
    // Unrotated the box first fits at l=2, trapping two cells behind it;
    // rotated it fits flush at l=0 beside the blocker.
    Container c({1, 2, 4, 90});
    c.place(0, box(2, 1, 1, 2), {0, 0, 0, false});
    const auto p = box(1, 1, 2, 1);
    CHECK(compute_waste(c, p, {0, 0, 2, false}) == 2);
    const auto choice = find_placement(c, p);
    REQUIRE(choice);
    CHECK(choice->placement == Placement{0, 1, 0, true});
    CHECK(choice->waste == 0);
}

TEST_CASE("find_placement breaks waste ties by h + w + l") {
    Container c({1, 5, 6, 90});
    c.place(0, box(2, 1, 4, 1), {0, 0, 0, false});
    const auto choice = find_placement(c, box(1, 1, 1, 2));
    REQUIRE(choice);
    CHECK(choice->placement == Placement{0, 0, 1, true});
}

TEST_CASE("check_support") {
    Container c(kSmall);
    CHECK(check_support(c, Rect{0, 0, 3, 3}, 0, 0.75));
    c.place(0, box(1, 1, 1, 1), {0, 0, 0, false});
    CHECK_FALSE(check_support(c, Rect{0, 0, 2, 2}, 1, 0.75));
    c.place(1, box(1, 1, 1, 1), {0, 1, 0, false});
    c.place(2, box(1, 1, 1, 1), {0, 0, 1, false});
    CHECK(check_support(c, Rect{0, 0, 2, 2}, 1, 0.75));
    CHECK_FALSE(check_support(c, Rect{0, 0, 2, 2}, 1, 0.76));
}

TEST_CASE("check_fragility") {
    Container c(kSmall);
    c.place(0, box(1, 2, 2, 2, false), {0, 0, 0, false});
    c.place(1, box(1, 2, 2, 2, true), {0, 0, 2, false});
    CHECK(check_fragility(c, box(1, 1, 2, 2, true), {2, 0, 0, false}));
    CHECK_FALSE(check_fragility(c, box(1, 1, 2, 2, false), {2, 0, 2, false}));
    CHECK(check_fragility(c, box(1, 1, 2, 2, true), {2, 0, 2, false}));
    CHECK(check_fragility(c, box(1, 1, 2, 2, false), {0, 2, 0, false}));
}

TEST_CASE("fragile package may not slide under a non-fragile overhang") {
    Container c({4, 2, 4, 90});
    c.place(0, box(1, 1, 2, 2), {0, 0, 0, false});
    c.place(1, box(1, 1, 2, 4), {1, 0, 0, false});  // overhangs l=2..3
    CHECK_FALSE(check_fragility(c, box(1, 1, 2, 2, true), {0, 0, 2, false}));
    CHECK(check_fragility(c, box(1, 1, 2, 2, false), {0, 0, 2, false}));
}

TEST_CASE("check_lifo") {
    Container c(kSmall);
    CHECK(check_lifo(c, box(1, 2, 2, 2), {0, 0, 0, false}));
    c.place(0, box(2, 2, 2, 2), {0, 0, 6, false});
    CHECK_FALSE(check_lifo(c, box(1, 2, 2, 2), {0, 0, 0, false}));
    CHECK_FALSE(check_lifo(c, box(1, 1, 1, 1), {1, 1, 3, false}));
    CHECK(check_lifo(c, box(1, 2, 2, 2), {0, 2, 0, false}));
    CHECK(check_lifo(c, box(2, 2, 2, 2), {0, 0, 0, false}));
    LoadingRules strict;
    strict.strict_lifo = true;
    CHECK_FALSE(check_lifo(c, box(2, 2, 2, 2), {0, 0, 0, false}, strict));
}

TEST_CASE("compute_waste") {
    Container c(kSmall);
    CHECK(compute_waste(c, box(1, 2, 2, 2), {0, 0, 0, false}) == 0);
    CHECK(compute_waste(c, box(1, 2, 2, 2), {0, 0, 2, false}) == 8);
    c.place(0, box(1, 1, 1, 1), {0, 0, 0, false});
    CHECK(compute_waste(c, box(1, 2, 2, 2), {0, 0, 2, false}) == 7);

    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto cs = support::random_case(seed);
        std::mt19937_64 rng(seed);
        const Extents e = placed_extents(cs.package, false);
        if (e.height > cs.container.height() || e.width > cs.container.width() ||
            e.length > cs.container.length()) {
            continue;
        }
        const Placement at{support::uniform(rng, 0, cs.container.height() - e.height),
                           support::uniform(rng, 0, cs.container.width() - e.width),
                           support::uniform(rng, 0, cs.container.length() - e.length), false};
        CHECK(compute_waste(cs.container, cs.package, at) ==
              oracle::waste(cs.container, oracle::box_of(cs.package, at)));
    }
}

TEST_CASE("place") {
    Container c(kSmall);
    const auto p = box(1, 2, 2, 3, false, 5.0);
    c.place(7, p, {0, 1, 2, false});
    for (int h = 0; h < 2; ++h)
        for (int w = 1; w < 3; ++w)
            for (int l = 2; l < 5; ++l) {
                REQUIRE(c.occupant(h, w, l) != nullptr);
                CHECK(c.occupant(h, w, l)->package == 7);
            }
    CHECK(c.weight() == 5.0);
    CHECK(c.occupied_volume() == 12);
    c.place(8, p, {0, 3, 0, false});
    CHECK(c.placed().size() == 2);
    CHECK(signed_heightmap(c).at(1, 2) == 2);
    c.place(9, box(1, 1, 2, 3), {2, 1, 2, false});
    CHECK(signed_heightmap(c).at(1, 2) == 3);

    CHECK_THROWS_AS(c.place(10, p, {0, 1, 2, false}), std::logic_error);
    CHECK_THROWS_AS(c.place(10, p, {5, 0, 0, false}), std::logic_error);
    CHECK_THROWS_AS(c.place(10, box(1, 1, 1, 1, false, 100.0), {0, 0, 11, false}), std::logic_error);
}

TEST_CASE("signed heightmap") {
    Container c(kSmall);
    for (int v : signed_heightmap(c).values) CHECK(v == 0);
    c.place(0, box(1, 3, 2, 2), {0, 0, 0, false});
    CHECK(signed_heightmap(c).at(0, 0) == 3);
    c.place(1, box(1, 2, 1, 1, true), {3, 1, 1, false});
    CHECK(signed_heightmap(c).at(1, 1) == -5);
    CHECK(signed_heightmap(c).at(0, 0) == 3);
}

TEST_CASE("observation grid") {
    Container c(kSmall);
    c.place(0, box(1, 6, 1, 1), {0, 0, 0, false});
    c.place(1, box(1, 6, 1, 1, true), {0, 4, 11, false});
    const auto map = signed_heightmap(c);
    const auto grid = observation_grid(map, kSmall, {30, 60});
    REQUIRE(grid.size() == 30 * 60);
    CHECK(grid[0] == 1.0);
    CHECK(grid[29 * 60 + 59] == -1.0);
    for (int i = 0; i < 30; ++i)
        for (int j = 0; j < 60; ++j)
            CHECK(grid[static_cast<std::size_t>(i) * 60 + j] ==
                  static_cast<double>(map.at(i / 6, j / 5)) / 6.0);
    CHECK_THROWS_AS((void)observation_grid(map, kSmall, {0, 5}), std::invalid_argument);
}

TEST_CASE("placement invariants after random fills") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto cs = support::random_case(seed);
        const auto& c = cs.container;
        std::int64_t volume = 0;
        for (const auto& p : c.placed()) volume += std::int64_t{p.extents.height} * p.extents.width * p.extents.length;
        std::int64_t cells = 0;
        for (int h = 0; h < c.height(); ++h)
            for (int w = 0; w < c.width(); ++w)
                for (int l = 0; l < c.length(); ++l) cells += c.empty_at(h, w, l) ? 0 : 1;
        CHECK(cells == volume);
        CHECK(c.occupied_volume() == volume);
        CHECK(signed_heightmap(c).values == oracle::column_tops(c));
    }
}

TEST_CASE("find_placement matches the exhaustive oracle") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto cs = support::random_case(seed);
        const auto got = find_placement(cs.container, cs.package, cs.rules);
        const auto want = oracle::best_placement(cs.container, cs.package, cs.rules);
        INFO("seed " << seed);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->placement == want->placement);
            CHECK(got->waste == want->waste);
            CHECK(oracle::feasible(cs.container, cs.package, got->placement, cs.rules));
        }
    }
}

TEST_CASE("corridor check agrees with a door-ward sliding simulation") {
    // A box can leave if sliding it one cell at a time towards the door never
    // meets a cell of a blocking package.
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto cs = support::random_case(seed + 7000);
        const auto& c = cs.container;
        for (const auto& item : c.placed()) {
            Placement at = item.placement;
            at.rotated = false;
            const Package as_placed{item.client, 1, item.extents.height, item.extents.width,
                                    item.extents.length, 0.0, item.fragile};
            bool free = true;
            for (int shift = 1; at.l + item.extents.length - 1 + shift < c.length() && free; ++shift) {
                const int l = at.l + item.extents.length - 1 + shift;
                for (int h = at.h; h < at.h + item.extents.height && free; ++h)
                    for (int w = at.w; w < at.w + item.extents.width && free; ++w) {
                        const auto* o = c.occupant(h, w, l);
                        if (o && (cs.rules.strict_lifo || o->client != item.client)) free = false;
                    }
            }
            CHECK(check_lifo(c, as_placed, at, cs.rules) == free);
        }
    }
}
