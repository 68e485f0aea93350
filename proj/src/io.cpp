#include "coalmanip/io.hpp"

#include <fstream>

namespace coalmanip {

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

namespace {

template <typename T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

}  // namespace

std::vector<Edge> edges_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("edge list must be an array");
    std::vector<Edge> out;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw ParseError("edge must be a pair of integers, got " + e.dump());
        }
        out.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

json edges_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.from, e.to});
    return out;
}

SocialNetwork network_from_json(const json& j) {
    const int n = field<int>(j, "n");
    const bool directed = j.value("directed", false);
    const std::vector<Edge> edges = j.contains("edges") ? edges_from_json(j.at("edges")) : std::vector<Edge>{};
    return SocialNetwork(n, directed, edges);
}

json network_to_json(const SocialNetwork& net) {
    return json{{"n", net.size()}, {"directed", net.directed()}, {"edges", edges_to_json(net.edges())}};
}

PartialView view_from_json(const json& j) {
    const int n = field<int>(j, "n");
    const bool directed = j.value("directed", false);
    const int m = field<int>(j, "m");
    const int d = field<int>(j, "d");
    const std::vector<Edge> edges =
        j.contains("known_edges") ? edges_from_json(j.at("known_edges")) : std::vector<Edge>{};
    return PartialView(SocialNetwork(n, directed, edges), m, d);
}

json view_to_json(const PartialView& view) {
    return json{{"n", view.size()},
                {"directed", view.directed()},
                {"m", view.manipulator()},
                {"d", view.distance()},
                {"known_edges", edges_to_json(view.known().edges())}};
}

json structure_to_json(const CoalitionStructure& p) {
    json out = json::array();
    for (AgentMask b : p.blocks()) out.push_back(agents_of(b));
    return out;
}

json report_to_json(const ImprovementReport& r) {
    return json{{"u0", r.u0}, {"u1", r.u1}, {"v0", r.v0}, {"v1", r.v1},
                {"lb", r.lb}, {"ub", r.ub}, {"weak", r.weak}, {"strict", r.strict}};
}

json safe_report_to_json(const SafeReport& r) {
    json out{{"completions", r.completions}};
    for (ImprovementType t : kImprovementTypes) {
        const SafetyVerdict& v = r.verdict(t);
        json entry{{"safe", v.safe}};
        if (v.witness_completion) entry["witness_completion"] = network_to_json(*v.witness_completion);
        if (v.violating_completion) entry["violating_completion"] = network_to_json(*v.violating_completion);
        out[to_string(t)] = std::move(entry);
    }
    return out;
}

}  // namespace coalmanip
