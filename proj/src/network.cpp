#include "coalmanip/network.hpp"

#include <algorithm>

namespace coalmanip {

std::vector<AgentId> agents_of(AgentMask mask) {
    std::vector<AgentId> out;
    out.reserve(popcount(mask));
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

SocialNetwork::SocialNetwork(int n, bool directed) : n_(n), directed_(directed) {
    if (n <= 0 || n > kMaxAgents) {
        throw InvalidInput("agent count must be in [1, " + std::to_string(kMaxAgents) + "], got " +
                           std::to_string(n));
    }
    out_.assign(static_cast<std::size_t>(n), 0);
}

SocialNetwork::SocialNetwork(int n, bool directed, const std::vector<Edge>& edges)
    : SocialNetwork(n, directed) {
    for (const Edge& e : edges) add_edge(e.from, e.to);
}

void SocialNetwork::check_agent(AgentId a) const {
    if (a < 0 || a >= n_) {
        throw InvalidInput("agent " + std::to_string(a) + " out of range [0, " + std::to_string(n_) + ")");
    }
}

bool SocialNetwork::has_edge(AgentId u, AgentId v) const {
    check_agent(u);
    check_agent(v);
    return (out_[u] & bit(v)) != 0;
}

AgentMask SocialNetwork::neighbours(AgentId a) const {
    check_agent(a);
    return out_[a];
}

AgentMask SocialNetwork::in_neighbours(AgentId a) const {
    check_agent(a);
    if (!directed_) return out_[a];
    AgentMask in = 0;
    for (AgentId u = 0; u < n_; ++u) {
        if (out_[u] & bit(a)) in |= bit(u);
    }
    return in;
}

std::vector<Edge> SocialNetwork::edges() const {
    std::vector<Edge> out;
    for (AgentId u = 0; u < n_; ++u) {
        for (AgentId v : agents_of(out_[u])) {
            if (directed_ || u < v) out.push_back({u, v});
        }
    }
    return out;
}

std::size_t SocialNetwork::edge_count() const {
    std::size_t arcs = 0;
    for (AgentMask row : out_) arcs += static_cast<std::size_t>(popcount(row));
    return directed_ ? arcs : arcs / 2;
}

void SocialNetwork::add_edge(AgentId u, AgentId v) {
    check_agent(u);
    check_agent(v);
    if (u == v) throw InvalidInput("self loop on agent " + std::to_string(u));
    out_[u] |= bit(v);
    if (!directed_) out_[v] |= bit(u);
}

void SocialNetwork::remove_edge(AgentId u, AgentId v) {
    check_agent(u);
    check_agent(v);
    out_[u] &= ~bit(v);
    if (!directed_) out_[v] &= ~bit(u);
}

Edge normalize(const SocialNetwork& net, Edge e) {
    if (!net.directed() && e.from > e.to) std::swap(e.from, e.to);
    return e;
}

SocialNetwork build_from_reports(const ReportProfile& reports, bool directed, Aggregation aggregation) {
    const int n = static_cast<int>(reports.size());
    SocialNetwork reported(n, true);
    for (AgentId i = 0; i < n; ++i) {
        for (AgentId j : reports[i]) {
            if (j < 0 || j >= n) {
                throw InvalidInput("agent " + std::to_string(i) + " reports out-of-range agent " + std::to_string(j));
            }
            if (j == i) throw InvalidInput("agent " + std::to_string(i) + " reports itself");
            reported.add_edge(i, j);
        }
    }
    if (directed) return reported;

    SocialNetwork net(n, false);
    for (AgentId i = 0; i < n; ++i) {
        for (AgentId j = i + 1; j < n; ++j) {
            const bool ij = reported.has_edge(i, j);
            const bool ji = reported.has_edge(j, i);
            if (aggregation == Aggregation::Or ? (ij || ji) : (ij && ji)) net.add_edge(i, j);
        }
    }
    return net;
}

int utility(const SocialNetwork& net, AgentId a, AgentMask coalition) {
    net.check_agent(a);
    if ((coalition & bit(a)) == 0) {
        throw InvalidInput("agent " + std::to_string(a) + " is not a member of the coalition");
    }
    return popcount(net.rows()[a] & coalition);
}

void validate_manipulation(const SocialNetwork& net, const ManipulationSpec& spec) {
    const AgentId m = spec.manipulator;
    net.check_agent(m);
    for (const Edge& e : spec.delta) {
        net.check_agent(e.from);
        net.check_agent(e.to);
        const std::string name = "(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
        if (e.from == e.to) throw InvalidInput("delta edge " + name + " is a self loop");
        if (net.directed()) {
            if (e.from != m) throw InvalidInput("delta edge " + name + " is not an outgoing edge of the manipulator");
        } else if (e.from != m && e.to != m) {
            throw InvalidInput("delta edge " + name + " is not incident to the manipulator");
        }
        const bool present = net.has_edge(e.from, e.to);
        if (spec.mode == Mode::AddOnly && present) {
            throw InvalidInput("delta edge " + name + " is already present; cannot add it");
        }
        if (spec.mode == Mode::RemoveOnly && !present) {
            throw InvalidInput("delta edge " + name + " is absent; cannot remove it");
        }
    }
}

SocialNetwork apply_manipulation(const SocialNetwork& net, const ManipulationSpec& spec) {
    validate_manipulation(net, spec);
    SocialNetwork out = net;
    for (const Edge& e : spec.delta) {
        if (spec.mode == Mode::AddOnly) {
            out.add_edge(e.from, e.to);
        } else {
            out.remove_edge(e.from, e.to);
        }
    }
    return out;
}

std::vector<Edge> candidate_edges(const SocialNetwork& net, AgentId m, Mode mode) {
    net.check_agent(m);
    std::vector<Edge> out;
    const AgentMask row = net.rows()[m];
    for (AgentId v = 0; v < net.size(); ++v) {
        if (v == m) continue;
        const bool present = (row & bit(v)) != 0;
        if (present == (mode == Mode::RemoveOnly)) out.push_back(normalize(net, {m, v}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(Mode mode) { return mode == Mode::AddOnly ? "add" : "remove"; }

Mode parse_mode(const std::string& text) {
    if (text == "add" || text == "add-only" || text == "m+") return Mode::AddOnly;
    if (text == "remove" || text == "remove-only" || text == "m-") return Mode::RemoveOnly;
    throw InvalidInput("unknown manipulation mode '" + text + "' (expected add or remove)");
}

}  // namespace coalmanip
