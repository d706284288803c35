// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cargo_route/bench.hpp"
#include "cargo_route/container.hpp"
#include "cargo_route/core.hpp"
#include "cargo_route/instances.hpp"
#include "cargo_route/policies.hpp"
#include "cargo_route/serialization.hpp"
#include "cargo_route/validate.hpp"
#include "oracles/placement_oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random_states.hpp"

using namespace cargo_route;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const char* name, bool ok, const std::string& detail) {
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::shared_ptr<const Instance> benchmark(const char* name) {
    return std::make_shared<const Instance>(load_instance(std::string(DATA_DIR) + "/" + name + ".txt"));
}

void placement_oracle() {
    constexpr int kCases = 1000;
    constexpr double kLimit = 60.0;
    const auto t0 = Clock::now();
    int agree = 0, feasible = 0;
    for (std::uint64_t seed = 0; seed < kCases; ++seed) {
        const auto cs = support::random_case(seed);
        const auto got = find_placement(cs.container, cs.package, cs.rules);
        const auto want = oracle::best_placement(cs.container, cs.package, cs.rules);
        bool same = got.has_value() == want.has_value();
        if (same && got) {
            same = got->placement == want->placement && got->waste == want->waste &&
                   oracle::feasible(cs.container, cs.package, got->placement, cs.rules);
            ++feasible;
        }
        agree += same ? 1 : 0;
    }
    const double secs = since(t0);
    report("placement-oracle", agree == kCases && secs < kLimit,
           fmt("%d/%d states agree (%d placeable), %.2fs (limit %.0fs)", agree, kCases, feasible, secs, kLimit));
}

void mutation_suite() {
    constexpr double kLimit = 10.0;
    const auto t0 = Clock::now();
    const auto inst = support::audit_instance();
    bool ok = validate(inst, support::audit_solution(inst)).passed();
    int exact = 0;
    const auto mutations = support::audit_mutations(inst);
    std::vector<bool> hit(kConstraintCount + 1, false);
    for (const auto& m : mutations) {
        if (validate(inst, m.solution).failed() == std::vector<int>{m.constraint}) {
            ++exact;
            hit[static_cast<std::size_t>(m.constraint)] = true;
        }
    }
    int covered = 0;
    for (int c = 1; c <= kConstraintCount; ++c) covered += hit[static_cast<std::size_t>(c)] ? 1 : 0;
    const double secs = since(t0);
    ok = ok && exact == static_cast<int>(mutations.size()) && covered == kConstraintCount && secs < kLimit;
    report("mutation-suite", ok,
           fmt("base passes=%s, %d/%zu mutations flag exactly their constraint, %d/%d constraints covered, %.3fs",
               validate(inst, support::audit_solution(inst)).passed() ? "yes" : "no", exact, mutations.size(),
               covered, kConstraintCount, secs));
}

void benchmarks() {
    struct Ref {
        const char* name;
        int packages;
        double best_known;
        double learned;
    };
    constexpr double kLimit = 10.0;
    constexpr double kMaxGap = 0.50;
    bool all = true;
    std::string detail;
    for (const Ref& r : {Ref{"E016-03m", 32, 302.02, 337.85}, Ref{"E016-05m", 26, 334.96, 347.86}}) {
        const auto t0 = Clock::now();
        const auto inst = benchmark(r.name);
        const auto res = rollout(GreedyNearestPolicy{}, inst);
        auto sol = insert_missed(res.solution, *inst);
        sol = local_search(sol, *inst, 1000);
        const double secs = since(t0);
        const auto v = validate(*inst, sol);
        const double dist = total_distance(sol, *inst);
        const double gap = (dist - r.best_known) / r.best_known;
        const bool shape = inst->num_clients() == 15 && inst->fleet_size == 5 && inst->num_packages() == r.packages;
        const bool ok = shape && v.passed() && sol.missed.empty() && gap <= kMaxGap && secs < kLimit;
        all = all && ok;
        detail += fmt("%s%s: n=%d v=%d P=%d valid=%s loaded=%d/%d distance=%.2f gap=%+.1f%% vs best-known %.2f, "
                   "%+.1f%% vs learned policy %.2f (greedy alone missed %zu), %.2fs",
                   detail.empty() ? "" : "; ", r.name, inst->num_clients(), inst->fleet_size, inst->num_packages(), v.passed() ? "yes" : "no",
                   v.loaded, inst->num_packages(), dist, 100 * gap, r.best_known,
                   100 * (dist - r.learned) / r.learned, r.learned, res.solution.missed.size(), secs);
    }
    report("benchmarks", all, detail);
}

void scaling() {
    constexpr double kLimit = 300.0;
    constexpr double kMinR2 = 0.9;
    std::vector<int> ns;
    for (int n = 10; n <= 100; n += 10) ns.push_back(n);
    const auto t0 = Clock::now();
    const auto rep = bench_scaling(ns, 5, 0);
    const double secs = since(t0);
    report("scaling", rep.fit.r_squared >= kMinR2 && secs < kLimit,
           fmt("R^2=%.4f (min %.2f), slope=%.3gs per client, mean %.4fs at n=10 and %.4fs at n=100, %.1fs total",
               rep.fit.r_squared, kMinR2, rep.fit.slope, rep.rows.front().mean_seconds,
               rep.rows.back().mean_seconds, secs));
}

void augmentation() {
    constexpr double kTol = 1e-9;
    bool all = true;
    std::string detail;
    const std::vector<std::pair<const char*, Transform>> transforms{
        {"translate(10,10)", Translate{10, 10}}, {"translate(20,20)", Translate{20, 20}},
        {"flip_x", Flip::x}, {"flip_y", Flip::y}, {"flip_xy", Flip::xy}};
    for (const char* name : {"E016-03m", "E016-05m"}) {
        const auto inst = benchmark(name);
        const auto base = rollout(GreedyNearestPolicy{}, inst);
        double worst = 0.0;
        bool same_missed = true;
        for (const auto& [label, t] : transforms) {
            const auto moved = rollout(GreedyNearestPolicy{}, std::make_shared<const Instance>(augment(*inst, t)));
            worst = std::max(worst, std::abs(moved.cost.total - base.cost.total));
            same_missed = same_missed && moved.solution.missed == base.solution.missed;
        }
        all = all && worst <= kTol && same_missed;
        detail += fmt("%s%s: cost %.9f, max deviation %.3g over %zu transforms (tol %.0e), missed %zu in every variant",
                   detail.empty() ? "" : "; ", name, base.cost.total, worst, transforms.size(), kTol, base.solution.missed.size());
    }
    report("augmentation", all, detail);
}

void cost_identities() {
    constexpr int kCases = 1000;
    constexpr double kRel = 1e-12;
    std::mt19937_64 rng(2024);
    int ok = 0;
    for (int i = 0; i < kCases; ++i) {
        GenParams p;
        p.seed = static_cast<std::uint64_t>(i);
        p.n = 2 + static_cast<int>(rng() % 30);
        const auto inst = generate(p);
        const double penalty = std::uniform_real_distribution<double>(0.5, 5.0)(rng);
        const int missed = static_cast<int>(rng() % static_cast<std::uint64_t>(inst.num_packages() + 1));
        const auto star = cost(star_distance(inst), missed, inst, penalty);
        bool good = std::abs(star.vrp - 1.0 / penalty) <= kRel / penalty &&
                    star.packing == static_cast<double>(missed) / inst.num_clients() &&
                    star.total == star.vrp + star.packing;
        // A constructed solution: one vehicle per client in a random subset, the rest missed.
        Solution sol;
        double expect_dist = 0.0;
        for (const auto& c : inst.clients) {
            if (rng() % 3 == 0) {
                for (PackageId id = 0; id < inst.num_packages(); ++id) {
                    if (inst.packages[static_cast<std::size_t>(id)].client == c.id) sol.missed.push_back(id);
                }
            } else {
                sol.vehicles.push_back(VehicleRoute{{kDepot, c.id, kDepot}, {}});
                expect_dist += 2 * euclidean_distance(inst.depot, c.location);
            }
        }
        const auto cb = cost(sol, inst, penalty);
        good = good && std::abs(cb.vrp * penalty * cb.star_distance - expect_dist) <= kRel * expect_dist + 1e-12 &&
               cb.packing == static_cast<double>(sol.missed.size()) / inst.num_clients() &&
               cb.total == cb.vrp + cb.packing;
        ok += good ? 1 : 0;
    }
    report("cost-identities", ok == kCases, fmt("%d/%d cases hold (rel tol %.0e on the ratio)", ok, kCases, kRel));
}

void lifo_audit() {
    constexpr int kRollouts = 200;
    int clean = 0, fully_valid = 0;
    std::size_t violations = 0;
    for (int s = 0; s < kRollouts; ++s) {
        GenParams p;
        p.seed = 50000 + static_cast<std::uint64_t>(s);
        p.n = 5 + s % 26;
        const auto inst = std::make_shared<const Instance>(generate(p));
        const auto res = rollout(GreedyNearestPolicy{}, inst);
        const auto v = validate(*inst, res.solution);
        violations += v.constraint(8).violations.size();
        clean += v.constraint(8).passed ? 1 : 0;
        fully_valid += v.passed() ? 1 : 0;
    }
    report("lifo-audit", clean == kRollouts,
           fmt("%d/%d rollouts unload cleanly (%zu violations), %d/%d pass all constraints", clean, kRollouts,
               violations, fully_valid, kRollouts));
}

}  // namespace

int main() {
    placement_oracle();
    mutation_suite();
    benchmarks();
    scaling();
    augmentation();
    cost_identities();
    lifo_audit();
    std::printf("%d failure(s)\n", failures);
    return failures;
}
