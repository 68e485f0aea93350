#include "coalmanip/manipulation.hpp"

namespace coalmanip {

ImprovementReport ImprovementReport::from_bounds(Bounds before, Bounds after) {
    ImprovementReport r;
    r.u0 = before.min_u;
    r.u1 = before.max_u;
    r.v0 = after.min_u;
    r.v1 = after.max_u;
    r.lb = r.v0 > r.u0;
    r.ub = r.v1 > r.u1;
    r.weak = r.lb && r.ub;
    r.strict = r.v0 > r.u1;
    return r;
}

ImprovementReport classify(const SocialNetwork& net_true, const ManipulationSpec& spec, const GameSettings& game) {
    const SocialNetwork manipulated = apply_manipulation(net_true, spec);
    const AgentId m = spec.manipulator;
    const Bounds before = solution_bounds(net_true, net_true, m, game.k, game.objective, game.constraint);
    const Bounds after = solution_bounds(manipulated, net_true, m, game.k, game.objective, game.constraint);
    return ImprovementReport::from_bounds(before, after);
}

std::optional<RankedManipulation> search(const SocialNetwork& net_true, AgentId m, Mode mode, const GameSettings& game,
                                         int max_delta) {
    net_true.check_agent(m);
    const Bounds before = solution_bounds(net_true, net_true, m, game.k, game.objective, game.constraint);
    const std::vector<Edge> candidates = candidate_edges(net_true, m, mode);

    std::optional<RankedManipulation> best;
    RankKey best_key;
    for_each_delta(candidates, max_delta, [&](const std::vector<Edge>& delta) {
        ManipulationSpec spec{m, mode, delta};
        const SocialNetwork manipulated = apply_manipulation(net_true, spec);
        const Bounds after = solution_bounds(manipulated, net_true, m, game.k, game.objective, game.constraint);
        const ImprovementReport report = ImprovementReport::from_bounds(before, after);
        if (!report.any()) return;
        const RankKey key{report.strict, report.weak, report.ub, report.lb, report.v0, report.v1};
        if (!best || key > best_key || (key == best_key && delta < best->spec.delta)) {
            best = RankedManipulation{std::move(spec), report};
            best_key = key;
        }
    });
    return best;
}

}  // namespace coalmanip
