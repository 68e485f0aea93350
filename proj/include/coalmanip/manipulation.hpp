#pragma once

#include <optional>
#include <utility>

#include "coalmanip/network.hpp"
#include "coalmanip/objectives.hpp"

namespace coalmanip {

/// Manipulator utility range before (u0, u1) and after (v0, v1) a
/// manipulation, always measured on the true network.
struct ImprovementReport {
    int u0 = 0;
    int u1 = 0;
    int v0 = 0;
    int v1 = 0;
    bool lb = false;
    bool ub = false;
    bool weak = false;
    bool strict = false;

    static ImprovementReport from_bounds(Bounds before, Bounds after);
    bool any() const { return lb || ub; }

    friend bool operator==(const ImprovementReport&, const ImprovementReport&) = default;
};

/// Shared settings of one analysis: how many coalitions, which objective, and
/// whether the equal-size constraint applies.
struct GameSettings {
    int k = 2;
    Objective objective = Objective::MaxUtil;
    SizeConstraint constraint = SizeConstraint::None;
};

ImprovementReport classify(const SocialNetwork& net_true, const ManipulationSpec& spec, const GameSettings& game);

struct RankedManipulation {
    ManipulationSpec spec;
    ImprovementReport report;
};

/// Exhaustive best-manipulation search over all deltas of at most max_delta
/// candidate edges. Prefers strict > weak > ub > lb, then larger v0, then
/// larger v1, then the lexicographically smallest delta. Returns nothing when
/// no delta sets any flag. max_delta < 0 means unbounded.
std::optional<RankedManipulation> search(const SocialNetwork& net_true, AgentId m, Mode mode, const GameSettings& game,
                                         int max_delta = -1);

/// Lexicographic ranking key shared by the full- and partial-information
/// searches: (strict, weak, ub, lb, v0, v1).
struct RankKey {
    bool strict = false;
    bool weak = false;
    bool ub = false;
    bool lb = false;
    int v0 = 0;
    int v1 = 0;

    friend auto operator<=>(const RankKey&, const RankKey&) = default;
};

/// Visits every subset of candidates with 1..max_size members, in order of
/// increasing bitmask. Candidates must number at most 63.
template <typename Visit>
void for_each_delta(const std::vector<Edge>& candidates, int max_size, Visit&& visit) {
    const std::size_t c = candidates.size();
    if (c >= 64) throw InvalidInput("too many candidate edges for exhaustive search");
    const std::uint64_t limit = std::uint64_t{1} << c;
    std::vector<Edge> delta;
    for (std::uint64_t s = 1; s < limit; ++s) {
        if (max_size >= 0 && std::popcount(s) > max_size) continue;
        delta.clear();
        for (std::size_t i = 0; i < c; ++i) {
            if (s & (std::uint64_t{1} << i)) delta.push_back(candidates[i]);
        }
        visit(delta);
    }
}

}  // namespace coalmanip
