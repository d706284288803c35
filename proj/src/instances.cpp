#include "cargo_route/instances.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

namespace cargo_route {

void check_params(const GenParams& p) {
    if (p.n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    if (p.fragile_probability < 0.0 || p.fragile_probability > 1.0) {
        throw std::invalid_argument("fragile probability must lie in [0, 1]");
    }
    if (!(p.x_min <= p.x_max) || !(p.y_min <= p.y_max)) {
        throw std::invalid_argument("coordinate ranges must be non-empty");
    }
    if (p.vehicle.height <= 0 || p.vehicle.width <= 0 || p.vehicle.length <= 0 ||
        !(p.vehicle.weight_capacity > 0.0)) {
        throw std::invalid_argument("vehicle dimensions and capacity must be positive");
    }
    if (!(p.dim_min_fraction > 0.0) || p.dim_max_fraction > 1.0 ||
        p.dim_min_fraction > p.dim_max_fraction) {
        throw std::invalid_argument("package dimension fractions must satisfy 0 < min <= max <= 1");
    }
    if (p.package_counts.empty() ||
        std::any_of(p.package_counts.begin(), p.package_counts.end(), [](int m) { return m < 1; })) {
        throw std::invalid_argument("package counts must be non-empty and positive");
    }
    if (p.demand_min < 0 || p.demand_min > p.demand_max) {
        throw std::invalid_argument("demand range must be non-empty and non-negative");
    }
}

std::pair<int, int> side_range(int side, double min_fraction, double max_fraction) {
    // Small epsilon so that e.g. 0.2 * 5 stays exactly 1.
    const int lo = std::max(1, static_cast<int>(std::ceil(min_fraction * side - 1e-9)));
    const int hi = std::max(lo, static_cast<int>(std::floor(max_fraction * side + 1e-9)));
    return {lo, hi};
}

int fleet_size(std::int64_t total_volume, double total_weight, const VehicleSpec& vehicle) {
    const std::int64_t capacity_volume = vehicle.volume();
    if (capacity_volume <= 0 || !(vehicle.weight_capacity > 0.0)) {
        throw std::invalid_argument("vehicle volume and capacity must be positive");
    }
    const auto by_volume = (std::max<std::int64_t>(total_volume, 0) + capacity_volume - 1) /
                           capacity_volume;
    const auto by_weight =
        static_cast<std::int64_t>(std::ceil(std::max(total_weight, 0.0) / vehicle.weight_capacity));
    return static_cast<int>(std::max<std::int64_t>(2, 2 * std::max(by_volume, by_weight)));
}

namespace {

void split_demand(std::vector<Package>& packages, std::size_t first, double demand) {
    std::int64_t volume = 0;
    for (std::size_t i = first; i < packages.size(); ++i) {
        volume += packages[i].volume();
    }
    for (std::size_t i = first; i < packages.size(); ++i) {
        packages[i].weight = demand * static_cast<double>(packages[i].volume()) /
                             static_cast<double>(volume);
    }
}

}  // namespace

Instance generate(const GenParams& params) {
    check_params(params);
    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> xs(params.x_min, params.x_max);
    std::uniform_real_distribution<double> ys(params.y_min, params.y_max);
    const auto [h_lo, h_hi] =
        side_range(params.vehicle.height, params.dim_min_fraction, params.dim_max_fraction);
    const auto [w_lo, w_hi] =
        side_range(params.vehicle.width, params.dim_min_fraction, params.dim_max_fraction);
    const auto [l_lo, l_hi] =
        side_range(params.vehicle.length, params.dim_min_fraction, params.dim_max_fraction);
    std::uniform_int_distribution<int> hs(h_lo, h_hi);
    std::uniform_int_distribution<int> ws(w_lo, w_hi);
    std::uniform_int_distribution<int> ls(l_lo, l_hi);
    std::uniform_int_distribution<std::size_t> count_pick(0, params.package_counts.size() - 1);
    std::uniform_int_distribution<int> demands(params.demand_min, params.demand_max);
    std::bernoulli_distribution fragile(params.fragile_probability);

    Instance inst;
    inst.name = "gen-n" + std::to_string(params.n) + "-s" + std::to_string(params.seed);
    inst.vehicle = params.vehicle;
    inst.depot = {xs(rng), ys(rng)};
    for (int i = 1; i <= params.n; ++i) {
        inst.clients.push_back({i, {xs(rng), ys(rng)}});
    }
    for (int i = 1; i <= params.n; ++i) {
        const int m = params.package_counts[count_pick(rng)];
        const int demand = demands(rng);
        const std::size_t first = inst.packages.size();
        for (int k = 1; k <= m; ++k) {
            Package p;
            p.client = i;
            p.index = k;
            p.height = hs(rng);
            p.width = ws(rng);
            p.length = ls(rng);
            p.fragile = fragile(rng);
            inst.packages.push_back(p);
        }
        split_demand(inst.packages, first, demand);
    }
    std::int64_t volume = 0;
    double weight = 0.0;
    for (const auto& p : inst.packages) {
        volume += p.volume();
        weight += p.weight;
    }
    inst.fleet_size = fleet_size(volume, weight, inst.vehicle);
    return inst;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Line {
    int number = 0;
    std::string text;
};

class LineReader {
public:
    explicit LineReader(std::string_view text) {
        int number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto end = text.find('\n', pos);
            std::string line(text.substr(pos, end == std::string_view::npos ? text.npos : end - pos));
            ++number;
            if (const auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.find_first_not_of(" \t") != std::string::npos) {
                lines_.push_back({number, std::move(line)});
            }
            if (end == std::string_view::npos) {
                break;
            }
            pos = end + 1;
        }
        last_line_ = number;
    }

    [[nodiscard]] bool at_end() const { return next_ >= lines_.size(); }

    const Line& next(const std::string& section) {
        if (at_end()) {
            throw ParseError(last_line_, "unexpected end of file, missing section '" + section + "'");
        }
        return lines_[next_++];
    }

    const Line& peek() const { return lines_[next_]; }

private:
    std::vector<Line> lines_;
    std::size_t next_ = 0;
    int last_line_ = 0;
};

std::vector<double> numbers(const Line& line, std::size_t expected_min, const std::string& what) {
    std::istringstream in(line.text);
    std::vector<double> out;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(token, &used));
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
        } catch (const std::exception&) {
            throw ParseError(line.number, "malformed " + what + ": '" + token + "' is not a number");
        }
    }
    if (out.size() < expected_min) {
        throw ParseError(line.number, "malformed " + what + ": expected " +
                                          std::to_string(expected_min) + " values, got " +
                                          std::to_string(out.size()));
    }
    return out;
}

int as_int(double v, const Line& line, const std::string& what) {
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        throw ParseError(line.number, what + " must be an integer");
    }
    return static_cast<int>(v);
}

std::string keyword_value(const Line& line, const std::string& key) {
    std::istringstream in(line.text);
    std::string word;
    in >> word;
    if (word != key) {
        throw ParseError(line.number, "expected '" + key + "', found '" + word + "'");
    }
    std::string rest;
    std::getline(in, rest);
    const auto start = rest.find_first_not_of(" \t");
    return start == std::string::npos ? std::string{} : rest.substr(start);
}

std::vector<double> keyword_numbers(const Line& line, const std::string& key, std::size_t count) {
    return numbers(Line{line.number, keyword_value(line, key)}, count, key);
}

void finish(Instance& inst, int line) {
    try {
        check_instance(inst);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
}

Instance parse_native(LineReader& in) {
    Instance inst;
    inst.name = keyword_value(in.next("name"), "name");
    const Line& n_line = in.next("n");
    const int n = as_int(keyword_numbers(n_line, "n", 1)[0], n_line, "n");
    const Line& fleet_line = in.next("fleet");
    inst.fleet_size = as_int(keyword_numbers(fleet_line, "fleet", 1)[0], fleet_line, "fleet");
    inst.vehicle.weight_capacity = keyword_numbers(in.next("capacity"), "capacity", 1)[0];
    const Line& veh = in.next("vehicle");
    const auto dims = keyword_numbers(veh, "vehicle", 3);
    inst.vehicle.height = as_int(dims[0], veh, "vehicle height");
    inst.vehicle.width = as_int(dims[1], veh, "vehicle width");
    inst.vehicle.length = as_int(dims[2], veh, "vehicle length");
    if (n < 1) {
        throw ParseError(n_line.number, "n must be at least 1");
    }

    int expected_items = 0;
    std::vector<int> declared(static_cast<std::size_t>(n + 1), 0);
    for (int id = 0; id <= n; ++id) {
        const Line& line = in.next("nodes");
        const auto v = numbers(line, 4, "node line");
        if (as_int(v[0], line, "node id") != id) {
            throw ParseError(line.number, "node ids must run 0.." + std::to_string(n));
        }
        const Point at{v[1], v[2]};
        if (id == 0) {
            inst.depot = at;
        } else {
            inst.clients.push_back({id, at});
            declared[static_cast<std::size_t>(id)] = as_int(v[3], line, "item count");
            expected_items += declared[static_cast<std::size_t>(id)];
        }
    }
    std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
    int last_line = 0;
    for (int k = 0; k < expected_items; ++k) {
        const Line& line = in.next("items");
        last_line = line.number;
        const auto v = numbers(line, 6, "item line");
        Package p;
        p.client = as_int(v[0], line, "item client");
        if (p.client < 1 || p.client > n) {
            throw ParseError(line.number, "item references unknown client " + std::to_string(p.client));
        }
        if (!inst.packages.empty() && p.client < inst.packages.back().client) {
            throw ParseError(line.number, "items must be grouped by ascending client");
        }
        p.index = ++seen[static_cast<std::size_t>(p.client)];
        p.height = as_int(v[1], line, "item height");
        p.width = as_int(v[2], line, "item width");
        p.length = as_int(v[3], line, "item length");
        p.fragile = as_int(v[4], line, "fragile flag") != 0;
        p.weight = v[5];
        inst.packages.push_back(p);
    }
    if (!in.at_end()) {
        throw ParseError(in.peek().number, "more item lines than the node item counts declare");
    }
    if (seen != declared) {
        throw ParseError(last_line, "item lines do not match the per-node item counts");
    }
    finish(inst, last_line);
    return inst;
}

// Classical layout: header blocks introduced by descriptive text lines, nodes
// numbered from 1 (the depot), client demand on the node line and the items of
// each client listed on one line as (h w l fragility) groups.
Instance parse_classic(LineReader& in) {
    Instance inst;
    {
        const Line& title = in.next("name");
        const auto colon = title.text.find(':');
        std::string name = colon == std::string::npos ? title.text : title.text.substr(colon + 1);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        inst.name = name;
    }
    // Skip descriptive text until the customer/vehicle counts.
    auto next_numeric = [&](const std::string& section, std::size_t count) {
        while (true) {
            const Line& line = in.next(section);
            const auto first = line.text.find_first_not_of(" \t");
            const char c = line.text[first];
            if ((c >= '0' && c <= '9') || c == '-' || c == '.') {
                return std::pair{line, numbers(line, count, section)};
            }
        }
    };
    const auto [counts_line, counts] = next_numeric("customers/vehicles", 2);
    const int n = as_int(counts[0], counts_line, "number of customers");
    inst.fleet_size = as_int(counts[1], counts_line, "number of vehicles");
    const auto [items_line, items] = next_numeric("number of items", 1);
    const int total_items = as_int(items[0], items_line, "number of items");
    const auto [cap_line, cap] = next_numeric("capacity/dimensions", 4);
    inst.vehicle.weight_capacity = cap[0];
    inst.vehicle.height = as_int(cap[1], cap_line, "vehicle height");
    inst.vehicle.width = as_int(cap[2], cap_line, "vehicle width");
    inst.vehicle.length = as_int(cap[3], cap_line, "vehicle length");
    if (n < 1) {
        throw ParseError(counts_line.number, "number of customers must be at least 1");
    }

    std::vector<double> demand(static_cast<std::size_t>(n + 1), 0.0);
    for (int node = 1; node <= n + 1; ++node) {
        const auto [line, v] = next_numeric("nodes", 4);
        if (as_int(v[0], line, "node id") != node) {
            throw ParseError(line.number, "node ids must run 1.." + std::to_string(n + 1));
        }
        const Point at{v[1], v[2]};
        if (node == 1) {
            inst.depot = at;
        } else {
            inst.clients.push_back({node - 1, at});
            demand[static_cast<std::size_t>(node - 1)] = v[3];
        }
    }
    int last_line = 0;
    for (int node = 2; node <= n + 1; ++node) {
        const auto [line, v] = next_numeric("items", 2);
        last_line = line.number;
        if (as_int(v[0], line, "node id") != node) {
            throw ParseError(line.number, "item lines must list nodes 2.." + std::to_string(n + 1) +
                                              " in order");
        }
        const int m = as_int(v[1], line, "item count");
        if (v.size() != static_cast<std::size_t>(2 + 4 * m)) {
            throw ParseError(line.number, "expected " + std::to_string(m) +
                                              " items of (h w l fragility)");
        }
        const std::size_t first = inst.packages.size();
        for (int k = 0; k < m; ++k) {
            const auto base = static_cast<std::size_t>(2 + 4 * k);
            Package p;
            p.client = node - 1;
            p.index = k + 1;
            p.height = as_int(v[base], line, "item height");
            p.width = as_int(v[base + 1], line, "item width");
            p.length = as_int(v[base + 2], line, "item length");
            p.fragile = as_int(v[base + 3], line, "fragility flag") != 0;
            inst.packages.push_back(p);
        }
        if (m > 0) {
            split_demand(inst.packages, first, demand[static_cast<std::size_t>(node - 1)]);
        }
    }
    if (inst.num_packages() != total_items) {
        throw ParseError(last_line, "header declares " + std::to_string(total_items) +
                                        " items, found " + std::to_string(inst.num_packages()));
    }
    finish(inst, last_line);
    return inst;
}

}  // namespace

Instance parse_instance_text(std::string_view text) {
    LineReader in(text);
    if (in.at_end()) {
        throw ParseError(1, "empty instance file, missing section 'name'");
    }
    const std::string& first = in.peek().text;
    const auto start = first.find_first_not_of(" \t");
    if (first.compare(start, 4, "Name") == 0) {
        return parse_classic(in);
    }
    return parse_native(in);
}

std::string to_native_text(const Instance& inst) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "name " << inst.name << '\n';
    out << "n " << inst.num_clients() << '\n';
    out << "fleet " << inst.fleet_size << '\n';
    out << "capacity " << inst.vehicle.weight_capacity << '\n';
    out << "vehicle " << inst.vehicle.height << ' ' << inst.vehicle.width << ' '
        << inst.vehicle.length << '\n';
    out << "# id x y items\n";
    out << 0 << ' ' << inst.depot.x << ' ' << inst.depot.y << " 0\n";
    for (const auto& c : inst.clients) {
        const auto m = std::count_if(inst.packages.begin(), inst.packages.end(),
                                     [&](const Package& p) { return p.client == c.id; });
        out << c.id << ' ' << c.location.x << ' ' << c.location.y << ' ' << m << '\n';
    }
    out << "# client h w l fragile weight\n";
    for (const auto& p : inst.packages) {
        out << p.client << ' ' << p.height << ' ' << p.width << ' ' << p.length << ' '
            << (p.fragile ? 1 : 0) << ' ' << p.weight << '\n';
    }
    return out.str();
}

Instance augment(const Instance& instance, const Transform& transform) {
    Instance out = instance;
    auto apply = [&](Point& p) {
        if (const auto* t = std::get_if<Translate>(&transform)) {
            p.x += t->dx;
            p.y += t->dy;
            return;
        }
        const Flip f = std::get<Flip>(transform);
        if (f == Flip::x || f == Flip::xy) {
            p.x = 100.0 - p.x;
        }
        if (f == Flip::y || f == Flip::xy) {
            p.y = 100.0 - p.y;
        }
    };
    apply(out.depot);
    for (auto& c : out.clients) {
        apply(c.location);
    }
    return out;
}

}  // namespace cargo_route
