#include "coalmanip/objectives.hpp"

#include <algorithm>
#include <climits>

namespace coalmanip {

namespace {

int block_utilitarian(const std::vector<AgentMask>& rows, AgentMask block) {
    int total = 0;
    for (AgentMask rest = block; rest; rest &= rest - 1) total += popcount(rows[std::countr_zero(rest)] & block);
    return total;
}

int block_egalitarian(const std::vector<AgentMask>& rows, AgentMask block, int floor_value) {
    int worst = INT_MAX;
    for (AgentMask rest = block; rest; rest &= rest - 1) {
        worst = std::min(worst, popcount(rows[std::countr_zero(rest)] & block));
        if (worst < floor_value) break;
    }
    return worst;
}

// Objective value of one structure; std::nullopt marks an AtLeast1 failure.
// floor_value lets MaxEgal stop scanning once the structure cannot reach it.
std::optional<int> score_of(const std::vector<AgentMask>& rows, const AgentMask* blocks, int k, Objective objective,
                            int floor_value) {
    switch (objective) {
        case Objective::MaxUtil: {
            int total = 0;
            for (int b = 0; b < k; ++b) total += block_utilitarian(rows, blocks[b]);
            return total;
        }
        case Objective::MaxEgal: {
            int worst = INT_MAX;
            for (int b = 0; b < k && worst >= floor_value; ++b) {
                worst = std::min(worst, block_egalitarian(rows, blocks[b], floor_value));
            }
            return worst;
        }
        case Objective::AtLeast1: {
            for (int b = 0; b < k; ++b) {
                if (block_egalitarian(rows, blocks[b], 1) < 1) return std::nullopt;
            }
            return 1;
        }
    }
    return std::nullopt;
}

int utility_in(const std::vector<AgentMask>& rows, const AgentMask* blocks, int k, AgentId m) {
    for (int b = 0; b < k; ++b) {
        if (blocks[b] & bit(m)) return popcount(rows[m] & blocks[b]);
    }
    return 0;
}

}  // namespace

std::string to_string(Objective objective) {
    switch (objective) {
        case Objective::MaxUtil: return "max-util";
        case Objective::MaxEgal: return "max-egal";
        case Objective::AtLeast1: return "at-least-1";
    }
    return "?";
}

Objective parse_objective(const std::string& text) {
    if (text == "max-util" || text == "util" || text == "Max-Util") return Objective::MaxUtil;
    if (text == "max-egal" || text == "egal" || text == "Max-Egal") return Objective::MaxEgal;
    if (text == "at-least-1" || text == "least1" || text == "At-least-1" || text == "At-Least-1") {
        return Objective::AtLeast1;
    }
    throw InvalidInput("unknown objective '" + text + "' (expected max-util, max-egal or at-least-1)");
}

int utilitarian_sw(const SocialNetwork& net, const CoalitionStructure& p) {
    int total = 0;
    for (AgentMask b : p.blocks()) total += block_utilitarian(net.rows(), b);
    return total;
}

int egalitarian_sw(const SocialNetwork& net, const CoalitionStructure& p) {
    int worst = INT_MAX;
    for (AgentMask b : p.blocks()) worst = std::min(worst, block_egalitarian(net.rows(), b, INT_MIN));
    return worst;
}

bool at_least_1_satisfied(const SocialNetwork& net, const CoalitionStructure& p) { return egalitarian_sw(net, p) >= 1; }

int cut_size(const SocialNetwork& net, const CoalitionStructure& p) {
    int arcs = 0;
    for (AgentMask b : p.blocks()) {
        for (AgentId a : agents_of(b)) arcs += popcount(net.rows()[a] & ~b);
    }
    return net.directed() ? arcs : arcs / 2;
}

SolutionSet solution_set(const SocialNetwork& net, int k, Objective objective, SizeConstraint constraint) {
    const int n = net.size();
    check_block_count(n, k);
    SolutionSet out;
    out.objective = objective;
    out.k = k;
    out.constraint = constraint;
    int best = INT_MIN;
    std::vector<std::vector<AgentMask>> kept;
    for_each_structure(n, k, constraint, [&](const AgentMask* blocks) {
        const auto s = score_of(net.rows(), blocks, k, objective, best);
        if (!s) return;
        if (*s > best) {
            best = *s;
            kept.clear();
        }
        if (*s == best) kept.emplace_back(blocks, blocks + k);
    });
    for (auto& blocks : kept) out.structures.emplace_back(n, std::move(blocks));
    if (objective != Objective::AtLeast1 && !out.structures.empty()) out.score = best;
    return out;
}

Bounds manipulator_bounds(const SolutionSet& sols, const SocialNetwork& net_true, AgentId m) {
    net_true.check_agent(m);
    if (sols.structures.empty()) return {0, 0};
    Bounds b{INT_MAX, INT_MIN};
    for (const CoalitionStructure& p : sols.structures) {
        const int u = utility(net_true, m, p.coalition_of(m));
        b.min_u = std::min(b.min_u, u);
        b.max_u = std::max(b.max_u, u);
    }
    return b;
}

Bounds solution_bounds(const SocialNetwork& reported, const SocialNetwork& truth, AgentId m, int k,
                       Objective objective, SizeConstraint constraint) {
    const int n = reported.size();
    if (truth.size() != n) throw InvalidInput("reported and true networks differ in agent count");
    truth.check_agent(m);
    check_block_count(n, k);
    int best = INT_MIN;
    Bounds b{0, 0};
    bool any = false;
    for_each_structure(n, k, constraint, [&](const AgentMask* blocks) {
        const auto s = score_of(reported.rows(), blocks, k, objective, best);
        if (!s || *s < best) return;
        const int u = utility_in(truth.rows(), blocks, k, m);
        if (*s > best) {
            best = *s;
            b = {u, u};
            any = true;
        } else {
            b.min_u = std::min(b.min_u, u);
            b.max_u = std::max(b.max_u, u);
        }
    });
    return any ? b : Bounds{0, 0};
}

int min_kcut_value(const SocialNetwork& net, int k, SizeConstraint constraint) {
    const int n = net.size();
    check_block_count(n, k);
    int best = INT_MAX;
    for_each_structure(n, k, constraint, [&](const AgentMask* blocks) {
        int arcs = 0;
        for (int b = 0; b < k; ++b) {
            for (AgentMask rest = blocks[b]; rest; rest &= rest - 1) {
                arcs += popcount(net.rows()[std::countr_zero(rest)] & ~blocks[b]);
            }
        }
        best = std::min(best, net.directed() ? arcs : arcs / 2);
    });
    return best;
}

}  // namespace coalmanip
