#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cargo_route/bench.hpp"
#include "cargo_route/instances.hpp"
#include "cargo_route/policies.hpp"
#include "cargo_route/render.hpp"
#include "cargo_route/serialization.hpp"
#include "cargo_route/validate.hpp"

namespace cr = cargo_route;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        cr::write_file(path, text);
    }
}

void print_failures(const cr::ValidationReport& report) {
    for (int id : report.failed()) {
        const auto& v = report.constraint(id);
        std::cerr << "constraint " << id << " (" << cr::constraint_name(id) << ") failed: "
                  << v.violations.size() << " violation(s)";
        if (!v.violations.empty()) {
            std::cerr << ", first: " << v.violations.front();
        }
        std::cerr << '\n';
    }
}

struct SolveArgs {
    std::string instance;
    std::string policy = "greedy";
    double penalty = cr::kDefaultPenalty;
    double amin = cr::kDefaultMinSupport;
    std::uint64_t seed = 0;
    int budget = 1000;
    std::string svg;
    std::string out;
};

int run_solve(const SolveArgs& a) {
    std::unique_ptr<cr::Policy> policy;
    bool improve = false;
    if (a.policy == "greedy") {
        policy = std::make_unique<cr::GreedyNearestPolicy>();
    } else if (a.policy == "greedy+ls") {
        policy = std::make_unique<cr::GreedyNearestPolicy>();
        improve = true;
    } else if (a.policy == "random") {
        policy = std::make_unique<cr::RandomPolicy>(a.seed);
    } else {
        std::cerr << "unknown policy '" << a.policy << "' (expected greedy, random or greedy+ls)\n";
        return kExitUsage;
    }
    auto instance = std::make_shared<const cr::Instance>(cr::load_instance(a.instance));
    cr::EnvConfig config;
    config.rules.min_support = a.amin;
    auto result = cr::rollout(*policy, instance, a.penalty, config);
    cr::Solution solution = std::move(result.solution);
    if (improve) {
        solution = cr::insert_missed(solution, *instance, a.penalty, config.rules);
        solution = cr::local_search(solution, *instance, a.budget, config.rules);
    }
    const auto cost = cr::cost(solution, *instance, a.penalty);
    const auto report = cr::validate(*instance, solution, a.amin);

    cr::Json j;
    j["format_version"] = cr::kFormatVersion;
    j["instance"] = instance->name;
    j["policy"] = a.policy;
    j["solution"] = cr::to_json(solution);
    j["cost"] = cr::to_json(cost);
    j["validation"] = cr::to_json(report);
    emit(a.out, cr::dump(j));

    if (!a.svg.empty()) {
        cr::write_file(a.svg + "_routes.svg", cr::render_routes_svg(*instance, solution));
        cr::write_file(a.svg + "_packing.svg", cr::render_packing_svg(*instance, solution));
    }
    if (!report.passed()) {
        print_failures(report);
        return kExitInvalid;
    }
    return 0;
}

int run_validate(const std::string& instance_path, const std::string& solution_path, double amin,
                 const std::string& out) {
    const auto instance = cr::load_instance(instance_path);
    auto j = cr::Json::parse(cr::read_file(solution_path));
    // Accept a bare solution or the document written by `solve`.
    if (j.contains("solution")) {
        j = j.at("solution");
    }
    const auto solution = cr::solution_from_json(j);
    cr::ValidationReport report;
    try {
        report = cr::validate(instance, solution, amin);
    } catch (const cr::StructuralError& e) {
        std::cerr << "structural error: " << e.what() << '\n';
        return kExitInvalid;
    }
    emit(out, cr::dump(cr::to_json(report)));
    if (!report.passed()) {
        print_failures(report);
        return kExitInvalid;
    }
    return 0;
}

std::vector<int> default_ns() {
    std::vector<int> ns;
    for (int n = 10; n <= 100; n += 10) {
        ns.push_back(n);
    }
    return ns;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3D-loading capacitated vehicle routing engine"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* cmd_solve = app.add_subcommand("solve", "Roll out a policy and validate the result");
    cmd_solve->add_option("--instance", solve.instance, "Instance file (JSON or text)")->required();
    cmd_solve->add_option("--policy", solve.policy, "greedy, random or greedy+ls");
    cmd_solve->add_option("--penalty", solve.penalty, "Distance penalty factor");
    cmd_solve->add_option("--amin", solve.amin, "Minimum supported base fraction");
    cmd_solve->add_option("--seed", solve.seed, "Seed for the random policy");
    cmd_solve->add_option("--budget", solve.budget, "Accepted local-search moves");
    cmd_solve->add_option("--svg", solve.svg, "Write <prefix>_routes.svg and <prefix>_packing.svg");
    cmd_solve->add_option("--out", solve.out, "Output JSON (stdout if omitted)");

    cr::GenParams gen;
    std::string gen_out;
    std::string gen_format = "json";
    auto* cmd_gen = app.add_subcommand("generate", "Generate a random instance");
    cmd_gen->add_option("--seed", gen.seed);
    cmd_gen->add_option("--n", gen.n, "Number of clients");
    cmd_gen->add_option("--fragile", gen.fragile_probability);
    cmd_gen->add_option("--capacity", gen.vehicle.weight_capacity, "Vehicle weight capacity");
    cmd_gen->add_option("--format", gen_format)->check(CLI::IsMember({"json", "text"}));
    cmd_gen->add_option("--out", gen_out);

    std::string val_instance, val_solution, val_out;
    double val_amin = cr::kDefaultMinSupport;
    auto* cmd_val = app.add_subcommand("validate", "Audit a solution against all constraints");
    cmd_val->add_option("--instance", val_instance)->required();
    cmd_val->add_option("--solution", val_solution)->required();
    cmd_val->add_option("--amin", val_amin);
    cmd_val->add_option("--out", val_out);

    std::string aug_instance, aug_out;
    std::vector<double> translate;
    bool flip_x = false, flip_y = false, flip_xy = false;
    auto* cmd_aug = app.add_subcommand("augment", "Translate or flip node coordinates");
    cmd_aug->add_option("--instance", aug_instance)->required();
    auto* opt_t = cmd_aug->add_option("--translate", translate, "dx dy")->expected(2);
    auto* opt_fx = cmd_aug->add_flag("--flip-x", flip_x);
    auto* opt_fy = cmd_aug->add_flag("--flip-y", flip_y);
    auto* opt_fxy = cmd_aug->add_flag("--flip-xy", flip_xy);
    opt_t->excludes(opt_fx)->excludes(opt_fy)->excludes(opt_fxy);
    opt_fx->excludes(opt_fy)->excludes(opt_fxy);
    opt_fy->excludes(opt_fxy);
    cmd_aug->add_option("--out", aug_out);

    std::string conv_instance, conv_out;
    auto* cmd_conv = app.add_subcommand("convert", "Normalise a text instance to JSON");
    cmd_conv->add_option("--instance", conv_instance)->required();
    cmd_conv->add_option("--out", conv_out);

    std::vector<int> bench_ns = default_ns();
    int bench_reps = 5;
    std::uint64_t bench_seed = 0;
    std::string bench_out;
    auto* cmd_bench = app.add_subcommand("bench-scaling", "Time greedy rollouts against n");
    cmd_bench->add_option("--n", bench_ns, "Client counts")->delimiter(',');
    cmd_bench->add_option("--reps", bench_reps);
    cmd_bench->add_option("--seed", bench_seed);
    cmd_bench->add_option("--out", bench_out, "CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_solve) {
            return run_solve(solve);
        }
        if (*cmd_gen) {
            const auto inst = cr::generate(gen);
            emit(gen_out, gen_format == "json" ? cr::dump(cr::to_json(inst)) : cr::to_native_text(inst));
            return 0;
        }
        if (*cmd_val) {
            return run_validate(val_instance, val_solution, val_amin, val_out);
        }
        if (*cmd_aug) {
            cr::Transform t;
            if (!translate.empty()) {
                t = cr::Translate{translate[0], translate[1]};
            } else if (flip_x) {
                t = cr::Flip::x;
            } else if (flip_y) {
                t = cr::Flip::y;
            } else if (flip_xy) {
                t = cr::Flip::xy;
            } else {
                std::cerr << "augment needs --translate, --flip-x, --flip-y or --flip-xy\n";
                return kExitUsage;
            }
            emit(aug_out, cr::dump(cr::to_json(cr::augment(cr::load_instance(aug_instance), t))));
            return 0;
        }
        if (*cmd_conv) {
            emit(conv_out, cr::dump(cr::to_json(cr::load_instance(conv_instance))));
            return 0;
        }
        if (*cmd_bench) {
            const auto report = cr::bench_scaling(bench_ns, bench_reps, bench_seed);
            emit(bench_out, cr::scaling_csv(report));
            std::fprintf(stderr, "linear fit: time = %.6g * n + %.6g, R^2 = %.4f\n",
                         report.fit.slope, report.fit.intercept, report.fit.r_squared);
            return 0;
        }
    } catch (const cr::ParseError& e) {
        std::cerr << "parse error at line " << e.line() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitUsage;
}
