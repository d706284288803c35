#include "cargo_route/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cargo_route/parallel.hpp"
#include "cargo_route/policies.hpp"

namespace cargo_route {

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_line needs two or more paired points");
    }
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("fit_line needs at least two distinct x values");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

ScalingReport bench_scaling(const std::vector<int>& ns, int repetitions, std::uint64_t seed,
                            const GenParams& base) {
    if (repetitions < 1) {
        throw std::invalid_argument("repetitions must be >= 1");
    }
    for (int n : ns) {
        if (n < 2) {
            throw std::invalid_argument("bench n values must be >= 2");
        }
    }
    struct Job {
        std::size_t row;
        std::shared_ptr<const Instance> instance;
    };
    std::vector<Job> jobs;
    for (std::size_t r = 0; r < ns.size(); ++r) {
        for (int rep = 0; rep < repetitions; ++rep) {
            GenParams p = base;
            p.n = ns[r];
            p.seed = seed + 1000 * static_cast<std::uint64_t>(ns[r]) + static_cast<std::uint64_t>(rep);
            jobs.push_back({r, std::make_shared<const Instance>(generate(p))});
        }
    }
    const GreedyNearestPolicy policy;
    if (!jobs.empty()) {
        (void)rollout(policy, jobs.front().instance);  // warm-up, untimed
    }
    const auto results = parallel_map(jobs.size(), [&](std::size_t i) {
        return rollout(policy, jobs[i].instance);
    });

    ScalingReport report;
    for (std::size_t r = 0; r < ns.size(); ++r) {
        ScalingRow row;
        row.n = ns[r];
        row.repetitions = repetitions;
        row.min_seconds = 1e300;
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            if (jobs[i].row != r) {
                continue;
            }
            const auto& res = results[i];
            row.mean_seconds += res.seconds;
            row.min_seconds = std::min(row.min_seconds, res.seconds);
            row.max_seconds = std::max(row.max_seconds, res.seconds);
            row.mean_cost += res.cost.total;
            row.missed += static_cast<int>(res.solution.missed.size());
        }
        row.mean_seconds /= repetitions;
        row.mean_cost /= repetitions;
        report.rows.push_back(row);
    }
    std::vector<double> x, y;
    for (const auto& row : report.rows) {
        x.push_back(row.n);
        y.push_back(row.mean_seconds);
    }
    report.fit = fit_line(x, y);
    return report;
}

std::string scaling_csv(const ScalingReport& report) {
    std::ostringstream out;
    out << "n,repetitions,mean_seconds,min_seconds,max_seconds,mean_cost,missed\n";
    char buf[256];
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.6f,%.6f,%.6f,%.6f,%d\n", r.n, r.repetitions,
                      r.mean_seconds, r.min_seconds, r.max_seconds, r.mean_cost, r.missed);
        out << buf;
    }
    return out.str();
}

}  // namespace cargo_route
