#include "coalmanip/witness.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "coalmanip/canonical.hpp"
#include "coalmanip/parallel.hpp"

namespace coalmanip {

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

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

SizeConstraint parse_constraint(const std::string& text) {
    const std::string t = lower(text);
    if (t == "none" || t.empty()) return SizeConstraint::None;
    if (t == "equal-size" || t == "equal" || t == "es") return SizeConstraint::EqualSize;
    throw ParseError("unknown constraint '" + text + "'");
}

}  // namespace

// ---------------------------------------------------------------- expansion

AgentId ExpandedWitness::agent(const std::string& name) const {
    const auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw InvalidInput("unknown agent '" + name + "'");
    return static_cast<AgentId>(it - labels.begin());
}

ExpandedWitness expand_witness(const WitnessSpec& spec) {
    std::vector<std::string> labels;
    std::map<std::string, std::vector<AgentId>> groups;
    auto declare = [&](const std::string& name, std::vector<AgentId> members) {
        if (name.empty()) throw InvalidInput("empty witness name");
        if (!groups.emplace(name, std::move(members)).second) throw InvalidInput("duplicate witness name '" + name + "'");
    };
    for (const std::string& node : spec.nodes) {
        declare(node, {static_cast<AgentId>(labels.size())});
        labels.push_back(node);
    }
    for (const auto& clique : spec.cliques) {
        if (clique.size < 1) throw InvalidInput("clique '" + clique.name + "' must have at least one member");
        std::vector<AgentId> members;
        for (int i = 0; i < clique.size; ++i) {
            members.push_back(static_cast<AgentId>(labels.size()));
            labels.push_back(clique.name + "." + std::to_string(i));
        }
        declare(clique.name, std::move(members));
    }
    for (std::size_t a = 0; a < labels.size(); ++a) {
        const std::string& label = labels[a];
        if (groups.count(label) == 0) groups.emplace(label, std::vector<AgentId>{static_cast<AgentId>(a)});
    }
    if (labels.empty()) throw InvalidInput("witness has no agents");
    if (labels.size() > static_cast<std::size_t>(kMaxAgents)) throw InvalidInput("witness has too many agents");

    SocialNetwork net(static_cast<int>(labels.size()), spec.directed);
    auto connect = [&](AgentId u, AgentId v, bool one_way) {
        if (u == v) throw InvalidInput("witness link joins agent '" + labels[u] + "' to itself");
        net.add_edge(u, v);
        if (spec.directed && !one_way) net.add_edge(v, u);
    };
    for (const auto& clique : spec.cliques) {
        const auto& members = groups.at(clique.name);
        for (AgentId u : members) {
            for (AgentId v : members) {
                if (u != v) net.add_edge(u, v);
            }
        }
    }
    for (const auto& link : spec.links) {
        const auto from = groups.find(link.from);
        const auto to = groups.find(link.to);
        if (from == groups.end()) throw InvalidInput("link from unknown name '" + link.from + "'");
        if (to == groups.end()) throw InvalidInput("link to unknown name '" + link.to + "'");
        if (link.directed && !spec.directed) throw InvalidInput("directed link in an undirected witness");
        const auto& src = from->second;
        const auto& dst = to->second;
        if (!link.count) {
            for (AgentId u : src) {
                for (AgentId v : dst) connect(u, v, link.directed);
            }
            continue;
        }
        const int count = *link.count;
        if (count < 0) throw InvalidInput("negative link count");
        if (src.size() > 1 && dst.size() > 1) {
            // Clique to clique with a count: a matching on the lowest members.
            if (count > static_cast<int>(std::min(src.size(), dst.size()))) {
                throw InvalidInput("link count exceeds clique size between '" + link.from + "' and '" + link.to + "'");
            }
            for (int i = 0; i < count; ++i) connect(src[i], dst[i], link.directed);
        } else if (dst.size() > 1 || src.size() == 1) {
            if (count > static_cast<int>(dst.size())) throw InvalidInput("link count exceeds size of '" + link.to + "'");
            for (int i = 0; i < count; ++i) connect(src[0], dst[i], link.directed);
        } else {
            if (count > static_cast<int>(src.size())) throw InvalidInput("link count exceeds size of '" + link.from + "'");
            for (int i = 0; i < count; ++i) connect(src[i], dst[0], link.directed);
        }
    }
    return {std::move(net), std::move(labels)};
}

WitnessSpec witness_spec_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("witness spec must be an object");
    WitnessSpec spec;
    spec.directed = j.value("directed", false);
    try {
        if (j.contains("nodes")) spec.nodes = j.at("nodes").get<std::vector<std::string>>();
        if (j.contains("cliques")) {
            for (const json& c : j.at("cliques")) spec.cliques.push_back({field<std::string>(c, "name"), field<int>(c, "size")});
        }
        if (j.contains("links")) {
            for (const json& l : j.at("links")) {
                WitnessSpec::Link link{field<std::string>(l, "from"), field<std::string>(l, "to"), std::nullopt,
                                       l.value("directed", false)};
                if (l.contains("count")) link.count = field<int>(l, "count");
                spec.links.push_back(std::move(link));
            }
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("witness spec: ") + e.what());
    }
    return spec;
}

json witness_spec_to_json(const WitnessSpec& spec) {
    json cliques = json::array();
    for (const auto& c : spec.cliques) cliques.push_back({{"name", c.name}, {"size", c.size}});
    json links = json::array();
    for (const auto& l : spec.links) {
        json link{{"from", l.from}, {"to", l.to}};
        if (l.count) link["count"] = *l.count;
        if (l.directed) link["directed"] = true;
        links.push_back(std::move(link));
    }
    return json{{"directed", spec.directed}, {"nodes", spec.nodes}, {"cliques", cliques}, {"links", links}};
}

// ------------------------------------------------------------- enumerations

std::string to_string(Information info) {
    switch (info) {
        case Information::Full: return "full";
        case Information::Distance1: return "d1";
        case Information::Distance2: return "d2";
    }
    return "?";
}

Information parse_information(const std::string& text) {
    const std::string t = lower(text);
    if (t == "full") return Information::Full;
    if (t == "d1" || t == "1" || t == "distance-1") return Information::Distance1;
    if (t == "d2" || t == "2" || t == "distance-2") return Information::Distance2;
    throw ParseError("unknown information setting '" + text + "'");
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Strict: return "Strict";
        case Verdict::Weak: return "Weak";
        case Verdict::UB: return "UB";
        case Verdict::LB: return "LB";
        case Verdict::UBProof: return "UBproof";
        case Verdict::LBProof: return "LBproof";
        case Verdict::WeakProof: return "Weakproof";
        case Verdict::Strategyproof: return "Strategyproof";
    }
    return "?";
}

Verdict parse_verdict(const std::string& text) {
    const std::string t = lower(text);
    if (t == "strict") return Verdict::Strict;
    if (t == "weak") return Verdict::Weak;
    if (t == "ub") return Verdict::UB;
    if (t == "lb") return Verdict::LB;
    if (t == "ubproof" || t == "ub-proof") return Verdict::UBProof;
    if (t == "lbproof" || t == "lb-proof") return Verdict::LBProof;
    if (t == "weakproof" || t == "weak-proof" || t == "w-proof") return Verdict::WeakProof;
    if (t == "strategyproof") return Verdict::Strategyproof;
    throw ParseError("unknown verdict '" + text + "'");
}

bool is_resistance(Verdict verdict) {
    switch (verdict) {
        case Verdict::Strict:
        case Verdict::Weak:
        case Verdict::UB:
        case Verdict::LB: return false;
        default: return true;
    }
}

std::vector<ImprovementType> verdict_types(Verdict verdict) {
    switch (verdict) {
        case Verdict::Strict: return {ImprovementType::Strict};
        case Verdict::Weak:
        case Verdict::WeakProof: return {ImprovementType::Weak};
        case Verdict::UB:
        case Verdict::UBProof: return {ImprovementType::UB};
        case Verdict::LB:
        case Verdict::LBProof: return {ImprovementType::LB};
        case Verdict::Strategyproof: return {ImprovementType::LB, ImprovementType::UB};
    }
    return {};
}

std::string to_string(NetworkKind kind) {
    switch (kind) {
        case NetworkKind::Directed: return "directed";
        case NetworkKind::Undirected: return "undirected";
        case NetworkKind::Both: return "both";
    }
    return "?";
}

NetworkKind parse_network_kind(const std::string& text) {
    const std::string t = lower(text);
    if (t == "directed") return NetworkKind::Directed;
    if (t == "undirected") return NetworkKind::Undirected;
    if (t == "both") return NetworkKind::Both;
    throw ParseError("unknown network kind '" + text + "'");
}

// ---------------------------------------------------------------- witnesses

namespace {

AgentId agent_ref(const json& j, const std::vector<std::string>& labels) {
    if (j.is_number_integer()) return j.get<int>();
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        const auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) throw ParseError("unknown agent '" + name + "'");
        return static_cast<AgentId>(it - labels.begin());
    }
    throw ParseError("agent reference must be a name or an index, got " + j.dump());
}

}  // namespace

ManipulationWitness witness_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("witness must be an object");
    ManipulationWitness w{j.value("id", std::string{}), SocialNetwork(1, false), {}, {}};
    if (j.contains("network")) {
        w.network = network_from_json(j.at("network"));
    } else {
        const json& g = j.contains("graph") ? j.at("graph") : j;
        ExpandedWitness expanded = expand_witness(witness_spec_from_json(g));
        w.network = std::move(expanded.network);
        w.labels = std::move(expanded.labels);
    }
    w.spec.manipulator = j.contains("manipulator") ? agent_ref(j.at("manipulator"), w.labels) : 0;
    w.spec.mode = parse_mode(field<std::string>(j, "mode"));
    if (j.contains("delta")) {
        const json& delta = j.at("delta");
        if (!delta.is_array()) throw ParseError("delta must be an array");
        for (const json& e : delta) {
            if (!e.is_array() || e.size() != 2) throw ParseError("delta edge must be a pair, got " + e.dump());
            w.spec.delta.push_back({agent_ref(e[0], w.labels), agent_ref(e[1], w.labels)});
        }
    }
    validate_manipulation(w.network, w.spec);
    return w;
}

ManipulationWitness load_witness(const std::filesystem::path& path) {
    try {
        ManipulationWitness w = witness_from_json(read_json_file(path));
        if (w.id.empty()) w.id = path.stem().string();
        return w;
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const InvalidInput& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

json witness_to_json(const ManipulationWitness& w) {
    json out{{"network", network_to_json(w.network)},
             {"manipulator", w.spec.manipulator},
             {"mode", to_string(w.spec.mode)},
             {"delta", edges_to_json(w.spec.delta)}};
    if (!w.id.empty()) out["id"] = w.id;
    return out;
}

namespace {

std::optional<ImprovementType> stronger(ImprovementType t) {
    switch (t) {
        case ImprovementType::LB:
        case ImprovementType::UB: return ImprovementType::Weak;
        case ImprovementType::Weak: return ImprovementType::Strict;
        case ImprovementType::Strict: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

WitnessCheck check_witness(const ManipulationWitness& w, Information info, ImprovementType target,
                           const GameSettings& game, std::size_t slot_cap) {
    WitnessCheck out;
    const auto above = stronger(target);
    out.evidence["witness"] = witness_to_json(w);
    if (info == Information::Full) {
        const ImprovementReport r = classify(w.network, w.spec, game);
        out.holds = improved(target, r);
        out.exact = out.holds && !(above && improved(*above, r));
        out.evidence["report"] = report_to_json(r);
    } else {
        const PartialView view = extract_view(w.network, w.spec.manipulator, distance_of(info));
        const SafeReport r = classify_d_safe(view, w.spec, game, slot_cap);
        out.holds = r.safe(target);
        out.exact = out.holds && !(above && r.safe(*above));
        out.evidence["view"] = view_to_json(view);
        out.evidence["report"] = safe_report_to_json(r);
    }
    return out;
}

// --------------------------------------------------------------- claim files

std::vector<Claim> claims_from_json(const json& j, const std::filesystem::path& base_dir) {
    const json& list = j.is_array() ? j : (j.contains("claims") ? j.at("claims") : json::array());
    if (!list.is_array()) throw ParseError("claims must be an array");
    std::vector<Claim> out;
    for (const json& c : list) {
        Claim claim;
        claim.id = field<std::string>(c, "id");
        claim.source = c.value("source", std::string{});
        claim.objective = parse_objective(field<std::string>(c, "objective"));
        claim.mode = parse_mode(field<std::string>(c, "mode"));
        claim.network = parse_network_kind(field<std::string>(c, "network"));
        claim.information = parse_information(c.value("information", std::string{"full"}));
        claim.constraint = parse_constraint(c.value("constraint", std::string{"none"}));
        claim.verdict = parse_verdict(field<std::string>(c, "verdict"));
        claim.k = c.value("k", 2);
        if (c.contains("max_n")) claim.max_n = field<int>(c, "max_n");
        if (c.contains("max_n_directed")) claim.max_n_directed = field<int>(c, "max_n_directed");
        if (c.contains("note")) claim.note = field<std::string>(c, "note");
        if (c.contains("witness")) {
            const json& w = c.at("witness");
            auto resolve = [&](const std::string& p) {
                const std::filesystem::path path(p);
                return path.is_absolute() || base_dir.empty() ? path : base_dir / path;
            };
            if (w.is_string()) {
                claim.witnesses["directed"] = claim.witnesses["undirected"] = resolve(w.get<std::string>());
            } else if (w.is_object()) {
                for (const auto& [key, value] : w.items()) {
                    if (key != "directed" && key != "undirected") throw ParseError("witness key must name a direction");
                    claim.witnesses[key] = resolve(value.get<std::string>());
                }
            } else {
                throw ParseError("witness must be a path or a per-direction object");
            }
        }
        out.push_back(std::move(claim));
    }
    return out;
}

std::vector<Claim> load_claims(const std::filesystem::path& path) {
    try {
        return claims_from_json(read_json_file(path), path.parent_path());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

// ---------------------------------------------------------------- synthesis

namespace {

struct Instance {
    SocialNetwork network;
    std::size_t free_slots = 0;
};

/// Networks (full information) or view generators (limited information) on n
/// agents, one per class up to relabelling agents 1..n-1, in canonical order.
std::shared_ptr<const std::vector<Instance>> instance_space(int n, bool directed, Information info) {
    static std::mutex mutex;
    static std::map<std::tuple<int, bool, Information>, std::shared_ptr<const std::vector<Instance>>> cache;
    std::lock_guard lock(mutex);
    const auto key = std::make_tuple(n, directed, info);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    auto out = std::make_shared<std::vector<Instance>>();
    const std::vector<SocialNetwork> classes = rooted_classes(n, directed);
    if (info == Information::Full) {
        for (const SocialNetwork& net : classes) out->push_back({net, 0});
    } else {
        std::map<AdjacencyCode, SocialNetwork> views;
        for (const SocialNetwork& net : classes) {
            SocialNetwork known = canonical_form(extract_view(net, 0, distance_of(info)).known());
            AdjacencyCode code = adjacency_code(known);
            views.emplace(std::move(code), std::move(known));
        }
        for (auto& [code, known] : views) {
            const PartialView view(known, 0, distance_of(info));
            out->push_back({known, view.free_slots().size()});
        }
    }
    cache.emplace(key, out);
    return out;
}

Bounds bounds_on(const SocialNetwork& reported, const SocialNetwork& truth, const GameSettings& game) {
    return solution_bounds(reported, truth, 0, game.k, game.objective, game.constraint);
}

/// First delta (bitmask order) reaching target on one instance, if any.
std::optional<ManipulationSpec> first_hit(const Instance& inst, Mode mode, Information info, ImprovementType target,
                                          const GameSettings& game, std::size_t slot_cap) {
    const std::vector<Edge> candidates = candidate_edges(inst.network, 0, mode);
    if (candidates.empty()) return std::nullopt;
    std::optional<ManipulationSpec> hit;
    if (info == Information::Full) {
        const Bounds before = bounds_on(inst.network, inst.network, game);
        for_each_delta(candidates, -1, [&](const std::vector<Edge>& delta) {
            if (hit) return;
            const ManipulationSpec spec{0, mode, delta};
            const Bounds after = bounds_on(apply_manipulation(inst.network, spec), inst.network, game);
            if (improved(target, ImprovementReport::from_bounds(before, after))) hit = spec;
        });
        return hit;
    }
    if (inst.free_slots > slot_cap) return std::nullopt;
    const PartialView view(inst.network, 0, distance_of(info));
    for_each_delta(candidates, -1, [&](const std::vector<Edge>& delta) {
        if (hit) return;
        const ManipulationSpec spec{0, mode, delta};
        if (classify_d_safe(view, spec, game, slot_cap).safe(target)) hit = spec;
    });
    return hit;
}

}  // namespace

std::optional<ManipulationWitness> synthesize_witness(const SynthesisQuery& query, const SearchBounds& bounds,
                                                      SynthesisStats* stats) {
    const GameSettings game{query.k, query.objective, query.constraint};
    SynthesisStats local;
    for (int n = std::max({query.min_n, query.k, 2}); n <= query.max_n; ++n) {
        const auto space = instance_space(n, query.directed, query.information);
        std::vector<std::optional<ManipulationSpec>> hits(space->size());
        const auto found = parallel_find_first(space->size(), bounds.workers, [&](std::size_t i) {
            hits[i] = first_hit((*space)[i], query.mode, query.information, query.target, game, bounds.slot_cap);
            return hits[i].has_value();
        });
        const std::size_t scanned = found ? *found + 1 : space->size();
        local.instances += scanned;
        for (std::size_t i = 0; i < scanned; ++i) {
            if ((*space)[i].free_slots > bounds.slot_cap && !candidate_edges((*space)[i].network, 0, query.mode).empty()) {
                ++local.skipped_over_cap;
            }
        }
        if (found) {
            if (stats) *stats = local;
            return ManipulationWitness{"synthesized", (*space)[*found].network, *hits[*found], {}};
        }
    }
    if (stats) *stats = local;
    return std::nullopt;
}

// --------------------------------------------------------------- exhaustion

namespace {

/// Every labelled network on n agents, indexed by the subset of its pairs.
SocialNetwork labelled_network(int n, bool directed, const std::vector<Edge>& pairs, std::uint64_t subset) {
    SocialNetwork net(n, directed);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (subset & (std::uint64_t{1} << i)) net.add_edge(pairs[i].from, pairs[i].to);
    }
    return net;
}

std::vector<Edge> all_pairs(int n, bool directed) {
    std::vector<Edge> pairs;
    for (AgentId u = 0; u < n; ++u) {
        for (AgentId v = directed ? 0 : u + 1; v < n; ++v) {
            if (u != v) pairs.push_back({u, v});
        }
    }
    return pairs;
}

std::uint64_t delta_count(const SocialNetwork& net, Mode mode) {
    const std::size_t c = candidate_edges(net, 0, mode).size();
    return (std::uint64_t{1} << c) - 1;
}

}  // namespace

ExhaustionResult exhaust_resistance(Objective objective, Mode mode, bool directed, Information info,
                                    SizeConstraint constraint, const std::vector<ImprovementType>& forbidden,
                                    int max_n, int k, const SearchBounds& bounds) {
    const GameSettings game{k, objective, constraint};
    ExhaustionResult result;
    for (int n = std::max(2, k); n <= max_n; ++n) {
        const std::vector<Edge> pairs = all_pairs(n, directed);
        if (pairs.size() >= 63) throw InvalidInput("too many agents for labelled exhaustion");

        std::vector<SocialNetwork> instances;
        if (info == Information::Full) {
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
                instances.push_back(labelled_network(n, directed, pairs, s));
            }
        } else {
            // Only pairs touching the frontier matter; distinct views come
            // from distinct known-edge sets.
            std::set<std::vector<Edge>> seen;
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
                SocialNetwork known = extract_view(labelled_network(n, directed, pairs, s), 0, distance_of(info)).known();
                if (seen.insert(known.edges()).second) instances.push_back(std::move(known));
            }
        }

        std::vector<std::optional<std::pair<ManipulationSpec, ImprovementType>>> hits(instances.size());
        const auto found = parallel_find_first(instances.size(), bounds.workers, [&](std::size_t i) {
            const SocialNetwork& net = instances[i];
            const std::vector<Edge> candidates = candidate_edges(net, 0, mode);
            std::optional<std::pair<ManipulationSpec, ImprovementType>> hit;
            if (info == Information::Full) {
                const Bounds before = bounds_on(net, net, game);
                for_each_delta(candidates, -1, [&](const std::vector<Edge>& delta) {
                    if (hit) return;
                    const ManipulationSpec spec{0, mode, delta};
                    const ImprovementReport r =
                        ImprovementReport::from_bounds(before, bounds_on(apply_manipulation(net, spec), net, game));
                    for (ImprovementType t : forbidden) {
                        if (improved(t, r)) {
                            hit = std::make_pair(spec, t);
                            return;
                        }
                    }
                });
            } else {
                const PartialView view(net, 0, distance_of(info));
                for_each_delta(candidates, -1, [&](const std::vector<Edge>& delta) {
                    if (hit) return;
                    const ManipulationSpec spec{0, mode, delta};
                    const SafeReport r = classify_d_safe(view, spec, game, bounds.slot_cap);
                    for (ImprovementType t : forbidden) {
                        if (r.safe(t)) {
                            hit = std::make_pair(spec, t);
                            return;
                        }
                    }
                });
            }
            hits[i] = hit;
            return hit.has_value();
        });

        const std::size_t scanned = found ? *found + 1 : instances.size();
        result.instances += scanned;
        for (std::size_t i = 0; i < scanned; ++i) result.checks += delta_count(instances[i], mode);
        if (found) {
            result.violation = ManipulationWitness{"violation", instances[*found], hits[*found]->first, {}};
            result.violated_type = hits[*found]->second;
            return result;
        }
    }
    return result;
}

// ------------------------------------------------------------- verification

namespace {

std::string summary(const json& report) {
    std::string out;
    if (report.contains("completions")) {
        out = "completions=" + report["completions"].dump() + " safe:";
        for (const char* t : {"lb", "ub", "weak", "strict"}) {
            if (report[t]["safe"].get<bool>()) out += std::string(" ") + t;
        }
        return out;
    }
    out = "u=[" + report["u0"].dump() + "," + report["u1"].dump() + "] v=[" + report["v0"].dump() + "," +
          report["v1"].dump() + "] flags:";
    for (const char* t : {"lb", "ub", "weak", "strict"}) {
        if (report[t].get<bool>()) out += std::string(" ") + t;
    }
    return out;
}

CheckResult check_direction(const Claim& claim, bool directed, const SearchBounds& bounds) {
    CheckResult out;
    out.directed = directed;
    const GameSettings game{claim.k, claim.objective, claim.constraint};
    const std::vector<ImprovementType> types = verdict_types(claim.verdict);
    try {
        if (is_resistance(claim.verdict)) {
            const int max_n = directed ? claim.max_n_directed.value_or(bounds.max_n_directed)
                                       : claim.max_n.value_or(bounds.max_n);
            out.method = "exhaustion";
            const ExhaustionResult r = exhaust_resistance(claim.objective, claim.mode, directed, claim.information,
                                                          claim.constraint, types, max_n, claim.k, bounds);
            out.pass = !r.violation.has_value();
            out.evidence = {{"max_n", max_n}, {"instances", r.instances}, {"deltas", r.checks}};
            if (r.violation) {
                out.evidence["violation"] = witness_to_json(*r.violation);
                out.evidence["type"] = to_string(*r.violated_type);
                out.detail = "violation (" + to_string(*r.violated_type) + ") at n=" +
                             std::to_string(r.violation->network.size()) + ": " +
                             witness_to_json(*r.violation).dump();
            } else {
                out.detail = std::to_string(r.instances) + " instances, " + std::to_string(r.checks) +
                             " deltas, n<=" + std::to_string(max_n) + ", 0 violations";
            }
            return out;
        }

        const ImprovementType target = types.front();
        const auto file = claim.witnesses.find(directed ? "directed" : "undirected");
        if (file != claim.witnesses.end()) {
            out.method = "witness-file";
            const ManipulationWitness w = load_witness(file->second);
            if (w.network.directed() != directed) throw InvalidInput(file->second.string() + ": wrong directedness");
            const WitnessCheck c = check_witness(w, claim.information, target, game, bounds.slot_cap);
            out.pass = c.exact;
            out.evidence = c.evidence;
            out.detail = file->second.filename().string() + " (n=" + std::to_string(w.network.size()) + ") " +
                         summary(c.evidence["report"]);
            return out;
        }

        out.method = "synthesized";
        SynthesisQuery q{claim.objective, claim.mode, directed, claim.information, claim.constraint, target, claim.k,
                         directed ? claim.max_n_directed.value_or(bounds.synth_max_n_directed)
                                  : claim.max_n.value_or(bounds.synth_max_n)};
        SynthesisStats stats;
        const auto w = synthesize_witness(q, bounds, &stats);
        if (!w) {
            out.pass = false;
            out.evidence = {{"max_n", q.max_n}, {"instances", stats.instances}, {"skipped_over_cap", stats.skipped_over_cap}};
            out.detail = "no witness with n<=" + std::to_string(q.max_n) + " (" + std::to_string(stats.instances) +
                         " instances, " + std::to_string(stats.skipped_over_cap) + " over slot cap)";
            return out;
        }
        const WitnessCheck c = check_witness(*w, claim.information, target, game, bounds.slot_cap);
        out.pass = c.exact;
        out.evidence = c.evidence;
        out.detail = "n=" + std::to_string(w->network.size()) + " " + summary(c.evidence["report"]) + " " +
                     witness_to_json(*w).dump();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("error: ") + e.what();
    }
    return out;
}

}  // namespace

std::vector<ClaimResult> verify_claims(const std::vector<Claim>& claims, const SearchBounds& bounds,
                                       const std::function<void(const ClaimResult&)>& progress) {
    std::vector<ClaimResult> out;
    for (const Claim& claim : claims) {
        ClaimResult r{claim, true, {}};
        for (bool directed : {true, false}) {
            if (claim.network == NetworkKind::Directed && !directed) continue;
            if (claim.network == NetworkKind::Undirected && directed) continue;
            r.checks.push_back(check_direction(claim, directed, bounds));
            r.pass = r.pass && r.checks.back().pass;
        }
        if (progress) progress(r);
        out.push_back(std::move(r));
    }
    return out;
}

json claim_result_to_json(const ClaimResult& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        checks.push_back({{"network", c.directed ? "directed" : "undirected"},
                          {"pass", c.pass},
                          {"method", c.method},
                          {"detail", c.detail},
                          {"evidence", c.evidence}});
    }
    json out{{"id", r.claim.id},
             {"objective", to_string(r.claim.objective)},
             {"mode", to_string(r.claim.mode)},
             {"network", to_string(r.claim.network)},
             {"information", to_string(r.claim.information)},
             {"constraint", to_string(r.claim.constraint)},
             {"verdict", to_string(r.claim.verdict)},
             {"pass", r.pass},
             {"checks", checks}};
    if (!r.claim.source.empty()) out["source"] = r.claim.source;
    if (r.claim.note) out["note"] = *r.claim.note;
    return out;
}

// --------------------------------------------------------------- conjecture

ConjectureResult conjecture_search(int max_n, std::size_t slot_cap, int workers, int k) {
    const GameSettings game{k, Objective::MaxUtil, SizeConstraint::None};
    ConjectureResult result;
    for (int n = std::max(2, k); n <= max_n; ++n) {
        const auto space = instance_space(n, false, Information::Distance2);
        for (const Instance& inst : *space) {
            if (inst.free_slots > slot_cap && !candidate_edges(inst.network, 0, Mode::RemoveOnly).empty()) {
                throw SlotCapExceeded(inst.free_slots, slot_cap);
            }
        }
        std::vector<std::optional<ManipulationSpec>> hits(space->size());
        const auto found = parallel_find_first(space->size(), workers, [&](std::size_t i) {
            hits[i] = first_hit((*space)[i], Mode::RemoveOnly, Information::Distance2, ImprovementType::Weak, game,
                                slot_cap);
            return hits[i].has_value();
        });
        const std::size_t scanned = found ? *found + 1 : space->size();
        result.views += scanned;
        for (std::size_t i = 0; i < scanned; ++i) result.deltas += delta_count((*space)[i].network, Mode::RemoveOnly);
        if (found) {
            const SocialNetwork& known = (*space)[*found].network;
            const SafeReport again = classify_d_safe(PartialView(known, 0, 2), *hits[*found], game, slot_cap);
            if (!again.weak.safe) throw std::logic_error("conjecture counterexample failed re-classification");
            result.counterexample = ManipulationWitness{"conjecture", known, *hits[*found], {}};
            result.report = again;
            return result;
        }
    }
    return result;
}

}  // namespace coalmanip
