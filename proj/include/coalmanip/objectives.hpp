#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coalmanip/network.hpp"
#include "coalmanip/partitions.hpp"

namespace coalmanip {

enum class Objective { MaxUtil, MaxEgal, AtLeast1 };

std::string to_string(Objective objective);
Objective parse_objective(const std::string& text);

int utilitarian_sw(const SocialNetwork& net, const CoalitionStructure& p);
int egalitarian_sw(const SocialNetwork& net, const CoalitionStructure& p);
bool at_least_1_satisfied(const SocialNetwork& net, const CoalitionStructure& p);

/// Edges (undirected) or arcs (directed) whose endpoints lie in different coalitions.
int cut_size(const SocialNetwork& net, const CoalitionStructure& p);

/// O_obj(G): every structure that is optimal for (MaxUtil, MaxEgal) or
/// satisfies (AtLeast1) the objective.
struct SolutionSet {
    Objective objective = Objective::MaxUtil;
    int k = 0;
    SizeConstraint constraint = SizeConstraint::None;
    std::vector<CoalitionStructure> structures;
    /// Optimal objective value; absent for AtLeast1.
    std::optional<int> score;

    bool infeasible() const { return structures.empty(); }
};

SolutionSet solution_set(const SocialNetwork& net, int k, Objective objective, SizeConstraint constraint);

/// Range of the manipulator's utility across a solution set.
struct Bounds {
    int min_u = 0;
    int max_u = 0;

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Utilities are measured on net_true. An empty (infeasible) set yields (0, 0).
Bounds manipulator_bounds(const SolutionSet& sols, const SocialNetwork& net_true, AgentId m);

/// Same as manipulator_bounds(solution_set(reported, ...), truth, m) without
/// materializing the solution set. reported and truth must share n.
Bounds solution_bounds(const SocialNetwork& reported, const SocialNetwork& truth, AgentId m, int k,
                       Objective objective, SizeConstraint constraint);

/// Minimum number of crossing edges over all admissible k-structures.
int min_kcut_value(const SocialNetwork& net, int k, SizeConstraint constraint);

/// Calls visit(blocks) with a pointer to the k block masks of every
/// admissible structure, in canonical order.
template <typename Visit>
void for_each_structure(int n, int k, SizeConstraint constraint, Visit&& visit);

namespace detail {
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 21;
}

template <typename Visit>
void for_each_structure(int n, int k, SizeConstraint constraint, Visit&& visit) {
    if (count_partitions(n, k, constraint) <= detail::kTableLimit) {
        const auto table = partition_table(n, k, constraint);
        const std::size_t count = table->size();
        for (std::size_t i = 0; i < count; ++i) visit(table->structure(i));
        return;
    }
    PartitionEnumerator it(n, k, constraint);
    std::vector<AgentMask> blocks;
    while (it.next(blocks)) visit(static_cast<const AgentMask*>(blocks.data()));
}

}  // namespace coalmanip
