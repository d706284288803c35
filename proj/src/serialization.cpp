#include "cargo_route/serialization.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cargo_route {

namespace {

const Json& field(const Json& json, const char* key) {
    if (!json.is_object() || !json.contains(key)) {
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    }
    return json.at(key);
}

void check_version(const Json& json) {
    if (field(json, "format_version").get<int>() != kFormatVersion) {
        throw std::invalid_argument("unsupported format_version");
    }
}

Json point(const Point& p) { return Json{{"x", p.x}, {"y", p.y}}; }

Point point_from(const Json& j) { return {field(j, "x").get<double>(), field(j, "y").get<double>()}; }

Json vehicle(const VehicleSpec& v) {
    return Json{{"height", v.height},
                {"width", v.width},
                {"length", v.length},
                {"weight_capacity", v.weight_capacity}};
}

VehicleSpec vehicle_from(const Json& j) {
    return {field(j, "height").get<int>(), field(j, "width").get<int>(),
            field(j, "length").get<int>(), field(j, "weight_capacity").get<double>()};
}

}  // namespace

Json to_json(const Instance& inst) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["name"] = inst.name;
    j["depot"] = point(inst.depot);
    j["clients"] = Json::array();
    for (const auto& c : inst.clients) {
        j["clients"].push_back(Json{{"id", c.id}, {"x", c.location.x}, {"y", c.location.y}});
    }
    j["packages"] = Json::array();
    for (const auto& p : inst.packages) {
        j["packages"].push_back(Json{{"client", p.client},
                                     {"index", p.index},
                                     {"height", p.height},
                                     {"width", p.width},
                                     {"length", p.length},
                                     {"weight", p.weight},
                                     {"fragile", p.fragile}});
    }
    j["vehicle"] = vehicle(inst.vehicle);
    j["fleet_size"] = inst.fleet_size;
    return j;
}

Instance instance_from_json(const Json& j) {
    check_version(j);
    Instance inst;
    inst.name = field(j, "name").get<std::string>();
    inst.depot = point_from(field(j, "depot"));
    for (const auto& c : field(j, "clients")) {
        inst.clients.push_back({field(c, "id").get<int>(), point_from(c)});
    }
    for (const auto& p : field(j, "packages")) {
        Package pkg;
        pkg.client = field(p, "client").get<int>();
        pkg.index = field(p, "index").get<int>();
        pkg.height = field(p, "height").get<int>();
        pkg.width = field(p, "width").get<int>();
        pkg.length = field(p, "length").get<int>();
        pkg.weight = field(p, "weight").get<double>();
        pkg.fragile = field(p, "fragile").get<bool>();
        inst.packages.push_back(pkg);
    }
    inst.vehicle = vehicle_from(field(j, "vehicle"));
    inst.fleet_size = field(j, "fleet_size").get<int>();
    check_instance(inst);
    return inst;
}

Json to_json(const GenParams& p) {
    return Json{{"format_version", kFormatVersion},
                {"n", p.n},
                {"fragile_probability", p.fragile_probability},
                {"x_min", p.x_min},
                {"x_max", p.x_max},
                {"y_min", p.y_min},
                {"y_max", p.y_max},
                {"vehicle", vehicle(p.vehicle)},
                {"dim_min_fraction", p.dim_min_fraction},
                {"dim_max_fraction", p.dim_max_fraction},
                {"package_counts", p.package_counts},
                {"demand_min", p.demand_min},
                {"demand_max", p.demand_max},
                {"seed", p.seed}};
}

GenParams params_from_json(const Json& j) {
    check_version(j);
    GenParams p;
    p.n = field(j, "n").get<int>();
    p.fragile_probability = field(j, "fragile_probability").get<double>();
    p.x_min = field(j, "x_min").get<double>();
    p.x_max = field(j, "x_max").get<double>();
    p.y_min = field(j, "y_min").get<double>();
    p.y_max = field(j, "y_max").get<double>();
    p.vehicle = vehicle_from(field(j, "vehicle"));
    p.dim_min_fraction = field(j, "dim_min_fraction").get<double>();
    p.dim_max_fraction = field(j, "dim_max_fraction").get<double>();
    p.package_counts = field(j, "package_counts").get<std::vector<int>>();
    p.demand_min = field(j, "demand_min").get<int>();
    p.demand_max = field(j, "demand_max").get<int>();
    p.seed = field(j, "seed").get<std::uint64_t>();
    check_params(p);
    return p;
}

Json to_json(const Solution& sol) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["vehicles"] = Json::array();
    for (const auto& v : sol.vehicles) {
        Json items = Json::array();
        for (const auto& item : v.items) {
            items.push_back(Json{{"package", item.package},
                                 {"h", item.placement.h},
                                 {"w", item.placement.w},
                                 {"l", item.placement.l},
                                 {"rotated", item.placement.rotated},
                                 {"extents", {item.extents.height, item.extents.width,
                                              item.extents.length}}});
        }
        j["vehicles"].push_back(Json{{"route", v.nodes}, {"items", std::move(items)}});
    }
    j["missed"] = sol.missed;
    return j;
}

Solution solution_from_json(const Json& j) {
    check_version(j);
    Solution sol;
    for (const auto& v : field(j, "vehicles")) {
        VehicleRoute route;
        route.nodes = field(v, "route").get<std::vector<ClientId>>();
        for (const auto& item : field(v, "items")) {
            const auto ext = field(item, "extents").get<std::vector<int>>();
            if (ext.size() != 3) {
                throw std::invalid_argument("extents must hold three values");
            }
            route.items.push_back({field(item, "package").get<int>(),
                                   Placement{field(item, "h").get<int>(), field(item, "w").get<int>(),
                                             field(item, "l").get<int>(),
                                             field(item, "rotated").get<bool>()},
                                   Extents{ext[0], ext[1], ext[2]}});
        }
        sol.vehicles.push_back(std::move(route));
    }
    sol.missed = field(j, "missed").get<std::vector<PackageId>>();
    return sol;
}

Json to_json(const CostBreakdown& c) {
    return Json{{"total", c.total},
                {"vrp", c.vrp},
                {"packing", c.packing},
                {"penalty", c.penalty},
                {"star_distance", c.star_distance}};
}

Json to_json(const ValidationReport& r) {
    Json j;
    j["passed"] = r.passed();
    j["failed"] = r.failed();
    j["constraints"] = Json::array();
    for (const auto& v : r.constraints) {
        j["constraints"].push_back(Json{{"id", v.id},
                                        {"name", constraint_name(v.id)},
                                        {"passed", v.passed},
                                        {"violations", v.violations}});
    }
    j["total_distance"] = r.total_distance;
    j["loaded"] = r.loaded;
    j["missed"] = r.missed;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << contents;
}

Instance load_instance(const std::string& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return instance_from_json(Json::parse(text));
    }
    return parse_instance_text(text);
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace cargo_route
