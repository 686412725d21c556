#include "rdtsp/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rdtsp {

using nlohmann::json;

std::string write_instance_json(const MetricInstance& inst,
                                const std::optional<Provenance>& provenance) {
    json j;
    j["n"] = inst.n();
    j["gamma"] = inst.gamma();
    if (inst.has_coords()) {
        json pts = json::array();
        for (const Point& p : inst.coords()) pts.push_back({p.x, p.y});
        j["points"] = std::move(pts);
    } else {
        j["dist"] = inst.data().dist;
    }
    if (provenance) {
        json p;
        p["kind"] = provenance->kind;
        p["n"] = provenance->n;
        p["seed"] = provenance->seed;
        p["generator_version"] = provenance->generator_version;
        if (!provenance->clique.empty()) p["clique"] = provenance->clique;
        j["provenance"] = std::move(p);
    }
    return j.dump() + "\n";
}

InstanceFile read_instance_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    try {
        const auto n = j.at("n").get<std::size_t>();
        const auto gamma = j.at("gamma").get<double>();
        std::optional<Provenance> prov;
        if (j.contains("provenance")) {
            const json& p = j["provenance"];
            Provenance pv;
            pv.kind = p.at("kind").get<std::string>();
            pv.n = p.at("n").get<std::size_t>();
            pv.seed = p.at("seed").get<std::uint64_t>();
            pv.generator_version = p.value("generator_version", std::string{});
            if (p.contains("clique")) pv.clique = p["clique"].get<std::vector<Node>>();
            prov = std::move(pv);
        }
        if (j.contains("points")) {
            std::vector<Point> pts;
            for (const json& e : j["points"]) {
                if (!e.is_array() || e.size() != 2) {
                    throw Error(ErrorCode::ParseError, "points entries must be [x, y] pairs");
                }
                pts.push_back({e[0].get<double>(), e[1].get<double>()});
            }
            if (pts.size() != n + 1) {
                throw Error(ErrorCode::DimensionMismatch, "points must hold n+1 entries");
            }
            return {instance_from_points(std::move(pts), gamma), std::move(prov)};
        }
        if (j.contains("dist")) {
            InstanceData data;
            data.n = n;
            data.gamma = gamma;
            data.dist = j["dist"].get<std::vector<double>>();
            return {MetricInstance(std::move(data)), std::move(prov)};
        }
        throw Error(ErrorCode::ParseError, "instance needs either `points` or `dist`");
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << text;
}

void save_instance(const std::string& path, const MetricInstance& inst,
                   const std::optional<Provenance>& provenance) {
    write_text_file(path, write_instance_json(inst, provenance));
}

InstanceFile load_instance(const std::string& path) {
    return read_instance_json(read_text_file(path));
}

}  // namespace rdtsp
