#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond reading a network's edge list: partitions come from all
// k^n label assignments, adjacency is a plain boolean matrix, and view
// completions are found by filtering every network on n agents.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "coalmanip/network.hpp"
#include "coalmanip/partitions.hpp"

namespace oracle {

using Labels = std::vector<int>;

struct Graph {
    int n = 0;
    bool directed = false;
    std::vector<std::vector<bool>> adj;

    explicit Graph(int n_, bool directed_ = false) : n(n_), directed(directed_), adj(n_, std::vector<bool>(n_, false)) {}

    void add(int u, int v) {
        adj[u][v] = true;
        if (!directed) adj[v][u] = true;
    }
    void remove(int u, int v) {
        adj[u][v] = false;
        if (!directed) adj[v][u] = false;
    }
    bool operator==(const Graph&) const = default;
};

inline Graph from(const coalmanip::SocialNetwork& net) {
    Graph g(net.size(), net.directed());
    for (const auto& e : net.edges()) g.add(e.from, e.to);
    return g;
}

inline coalmanip::SocialNetwork to_network(const Graph& g) {
    coalmanip::SocialNetwork net(g.n, g.directed);
    for (int u = 0; u < g.n; ++u) {
        for (int v = 0; v < g.n; ++v) {
            if (g.adj[u][v] && (g.directed || u < v)) net.add_edge(u, v);
        }
    }
    return net;
}

inline Labels canonical(const Labels& raw) {
    std::map<int, int> rename;
    Labels out;
    for (int l : raw) {
        auto it = rename.find(l);
        if (it == rename.end()) it = rename.emplace(l, static_cast<int>(rename.size())).first;
        out.push_back(it->second);
    }
    return out;
}

inline bool equal_sizes(const Labels& labels, int k) {
    const int n = static_cast<int>(labels.size());
    std::vector<int> sizes(k, 0);
    for (int l : labels) ++sizes[l];
    int big = 0;
    for (int s : sizes) {
        if (s == n / k + 1 && n % k != 0) ++big;
        else if (s != n / k) return false;
    }
    return big == n % k;
}

/// Every k-block partition of n agents as canonical labels, sorted.
inline std::vector<Labels> partitions(int n, int k, bool equal_size = false) {
    std::set<Labels> out;
    Labels raw(n, 0);
    while (true) {
        const Labels c = canonical(raw);
        if (*std::max_element(c.begin(), c.end()) == k - 1 && (!equal_size || equal_sizes(c, k))) out.insert(c);
        int i = 0;
        while (i < n && ++raw[i] == k) raw[i++] = 0;
        if (i == n) break;
    }
    return {out.begin(), out.end()};
}

inline Labels labels_of(const coalmanip::CoalitionStructure& p) {
    Labels out(p.agent_count());
    for (int b = 0; b < p.k(); ++b) {
        for (int a = 0; a < p.agent_count(); ++a) {
            if (p.blocks()[b] >> a & 1) out[a] = b;
        }
    }
    return out;
}

inline std::uint64_t stirling(int n, int k) {
    std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    }
    return s[n][k];
}

inline int util(const Graph& g, int a, const Labels& p) {
    int u = 0;
    for (int b = 0; b < g.n; ++b) {
        if (b != a && p[b] == p[a] && g.adj[a][b]) ++u;
    }
    return u;
}

inline int utilitarian(const Graph& g, const Labels& p) {
    int s = 0;
    for (int a = 0; a < g.n; ++a) s += util(g, a, p);
    return s;
}

inline int egalitarian(const Graph& g, const Labels& p) {
    int s = g.n;
    for (int a = 0; a < g.n; ++a) s = std::min(s, util(g, a, p));
    return s;
}

inline int cut(const Graph& g, const Labels& p) {
    int c = 0;
    for (int u = 0; u < g.n; ++u) {
        for (int v = 0; v < g.n; ++v) {
            if (g.adj[u][v] && p[u] != p[v] && (g.directed || u < v)) ++c;
        }
    }
    return c;
}

enum class Obj { Util, Egal, Least1 };

inline std::vector<Labels> solutions(const Graph& g, int k, Obj obj, bool equal_size = false) {
    std::vector<Labels> all = partitions(g.n, k, equal_size);
    if (obj == Obj::Least1) {
        std::vector<Labels> out;
        for (const Labels& p : all) {
            if (egalitarian(g, p) >= 1) out.push_back(p);
        }
        return out;
    }
    auto score = [&](const Labels& p) { return obj == Obj::Util ? utilitarian(g, p) : egalitarian(g, p); };
    int best = -1;
    for (const Labels& p : all) best = std::max(best, score(p));
    std::vector<Labels> out;
    for (const Labels& p : all) {
        if (score(p) == best) out.push_back(p);
    }
    return out;
}

inline std::pair<int, int> bounds(const Graph& reported, const Graph& truth, int m, int k, Obj obj,
                                  bool equal_size = false) {
    const std::vector<Labels> s = solutions(reported, k, obj, equal_size);
    if (s.empty()) return {0, 0};
    int lo = truth.n, hi = -1;
    for (const Labels& p : s) {
        const int u = util(truth, m, p);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    return {lo, hi};
}

struct Report {
    int u0, u1, v0, v1;
    bool lb() const { return v0 > u0; }
    bool ub() const { return v1 > u1; }
    bool weak() const { return lb() && ub(); }
    bool strict() const { return v0 > u1; }
};

inline Graph manipulate(Graph g, bool add, const std::vector<std::pair<int, int>>& delta) {
    for (auto [u, v] : delta) {
        if (add) g.add(u, v);
        else g.remove(u, v);
    }
    return g;
}

inline Report classify(const Graph& truth, int m, bool add, const std::vector<std::pair<int, int>>& delta, int k,
                       Obj obj, bool equal_size = false) {
    const auto [u0, u1] = bounds(truth, truth, m, k, obj, equal_size);
    const auto [v0, v1] = bounds(manipulate(truth, add, delta), truth, m, k, obj, equal_size);
    return {u0, u1, v0, v1};
}

/// Agents whose incident pairs are known at distance d.
inline std::vector<bool> frontier(const Graph& g, int m, int d) {
    std::vector<bool> f(g.n, false);
    f[m] = true;
    if (d == 2) {
        for (int a = 0; a < g.n; ++a) {
            if (g.adj[m][a] || g.adj[a][m]) f[a] = true;
        }
    }
    return f;
}

/// Every network on n agents that agrees with `known` on all pairs touching
/// the frontier.
inline std::vector<Graph> completions(const Graph& known, int m, int d) {
    const std::vector<bool> f = frontier(known, m, d);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < known.n; ++u) {
        for (int v = known.directed ? 0 : u + 1; v < known.n; ++v) {
            if (u != v) pairs.emplace_back(u, v);
        }
    }
    std::vector<Graph> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
        Graph g(known.n, known.directed);
        bool agrees = true;
        for (std::size_t i = 0; i < pairs.size() && agrees; ++i) {
            const auto [u, v] = pairs[i];
            const bool present = s >> i & 1;
            if (present) g.add(u, v);
            if ((f[u] || f[v]) && present != static_cast<bool>(known.adj[u][v])) agrees = false;
        }
        if (agrees) out.push_back(g);
    }
    return out;
}

struct Safety {
    bool lb = false, ub = false, weak = false, strict = false;
    std::size_t completions = 0;
};

inline Safety d_safe(const Graph& known, int m, int d, bool add, const std::vector<std::pair<int, int>>& delta,
                     int k, Obj obj, bool equal_size = false) {
    bool ge_lb = true, ge_ub = true, ge_strict = true;
    bool gt_lb = false, gt_ub = false, gt_weak = false, gt_strict = false;
    bool ge_weak = true;
    const std::vector<Graph> all = completions(known, m, d);
    for (const Graph& g : all) {
        const Report r = classify(g, m, add, delta, k, obj, equal_size);
        ge_lb = ge_lb && r.v0 >= r.u0;
        ge_ub = ge_ub && r.v1 >= r.u1;
        ge_weak = ge_weak && r.v0 >= r.u0 && r.v1 >= r.u1;
        ge_strict = ge_strict && r.v0 >= r.u1;
        gt_lb = gt_lb || r.lb();
        gt_ub = gt_ub || r.ub();
        gt_weak = gt_weak || r.weak();
        gt_strict = gt_strict || r.strict();
    }
    return {ge_lb && gt_lb, ge_ub && gt_ub, ge_weak && gt_weak, ge_strict && gt_strict, all.size()};
}

inline Graph random_graph(std::mt19937& rng, int n, bool directed, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n, directed);
    for (int u = 0; u < n; ++u) {
        for (int v = directed ? 0 : u + 1; v < n; ++v) {
            if (u != v && coin(rng)) g.add(u, v);
        }
    }
    return g;
}

}  // namespace oracle
