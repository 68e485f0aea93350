#include "coalmanip/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coalmanip {

namespace {

// Colour refinement with agent 0 individualized. Colours are ranks of
// sorted signatures, so they do not depend on the input labelling.
std::vector<int> refine_colours(const SocialNetwork& net) {
    const int n = net.size();
    std::vector<AgentMask> in(static_cast<std::size_t>(n), 0);
    for (AgentId u = 0; u < n; ++u) {
        for (AgentMask r = net.rows()[u]; r; r &= r - 1) in[std::countr_zero(r)] |= bit(u);
    }
    std::vector<int> colour(static_cast<std::size_t>(n), 1);
    colour[0] = 0;
    int classes = n > 1 ? 2 : 1;
    while (true) {
        std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
        for (AgentId v = 0; v < n; ++v) {
            std::vector<int>& s = signature[v];
            s.push_back(colour[v]);
            std::vector<int> outs;
            std::vector<int> ins;
            for (AgentId u : agents_of(net.rows()[v])) outs.push_back(colour[u]);
            for (AgentId u : agents_of(in[v])) ins.push_back(colour[u]);
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            s.push_back(static_cast<int>(outs.size()));
            s.insert(s.end(), outs.begin(), outs.end());
            s.push_back(-1);
            s.insert(s.end(), ins.begin(), ins.end());
        }
        std::vector<std::vector<int>> sorted(signature.begin(), signature.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (AgentId v = 0; v < n; ++v) {
            colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), signature[v]) - sorted.begin());
        }
        const int next = static_cast<int>(sorted.size());
        if (next == classes) break;
        classes = next;
    }
    return colour;
}

AdjacencyCode relabelled_code(const SocialNetwork& net, const std::vector<AgentId>& order) {
    // order[i] is the old label of new agent i
    const int n = net.size();
    std::vector<AgentId> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    AdjacencyCode code(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        AgentMask row = 0;
        for (AgentMask r = net.rows()[order[i]]; r; r &= r - 1) row |= bit(position[std::countr_zero(r)]);
        code[i] = row;
    }
    return code;
}

}  // namespace

AdjacencyCode adjacency_code(const SocialNetwork& net) { return net.rows(); }

SocialNetwork canonical_form(const SocialNetwork& net) {
    const int n = net.size();
    const std::vector<int> colour = refine_colours(net);
    std::vector<AgentId> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](AgentId a, AgentId b) { return colour[a] < colour[b]; });

    // Cells of equal colour; agent 0 is alone in the first cell.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && colour[order[j]] == colour[order[i]]) ++j;
        if (j - i > 1) cells.push_back({i, j});
        i = j;
    }

    AdjacencyCode best = relabelled_code(net, order);
    std::vector<AgentId> best_order = order;
    // Odometer over the permutations of every cell.
    std::function<void(std::size_t)> walk = [&](std::size_t c) {
        if (c == cells.size()) {
            AdjacencyCode code = relabelled_code(net, order);
            if (code < best) {
                best = std::move(code);
                best_order = order;
            }
            return;
        }
        auto first = order.begin() + cells[c].first;
        auto last = order.begin() + cells[c].second;
        std::sort(first, last);
        do {
            walk(c + 1);
        } while (std::next_permutation(first, last));
    };
    walk(0);

    SocialNetwork out(n, net.directed());
    for (int i = 0; i < n; ++i) {
        for (AgentId j : agents_of(best[i])) {
            if (net.directed() || i < j) out.add_edge(i, j);
        }
    }
    return out;
}

std::vector<SocialNetwork> rooted_classes(int n, bool directed, const std::function<bool(const SocialNetwork&)>& keep) {
    if (n <= 0 || n > kMaxAgents) throw InvalidInput("agent count out of range");
    std::vector<SocialNetwork> level{SocialNetwork(1, directed)};
    for (int size = 2; size <= n; ++size) {
        std::map<AdjacencyCode, SocialNetwork> next;
        const AgentId fresh = size - 1;
        const std::uint64_t choices = std::uint64_t{1} << (directed ? 2 * fresh : fresh);
        for (const SocialNetwork& parent : level) {
            for (std::uint64_t s = 0; s < choices; ++s) {
                SocialNetwork child(size, directed);
                for (const Edge& e : parent.edges()) child.add_edge(e.from, e.to);
                for (AgentId u = 0; u < fresh; ++u) {
                    if (s & (std::uint64_t{1} << u)) child.add_edge(u, fresh);
                    if (directed && (s & (std::uint64_t{1} << (fresh + u)))) child.add_edge(fresh, u);
                }
                if (keep && !keep(child)) continue;
                SocialNetwork canon = canonical_form(child);
                AdjacencyCode code = adjacency_code(canon);
                next.try_emplace(std::move(code), std::move(canon));
            }
        }
        level.clear();
        for (auto& [code, net] : next) level.push_back(std::move(net));
    }
    return level;
}

}  // namespace coalmanip
