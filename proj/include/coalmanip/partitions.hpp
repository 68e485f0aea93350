#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coalmanip/network.hpp"

namespace coalmanip {

enum class SizeConstraint { None, EqualSize };

/// A partition of agents 0..n-1 into exactly k non-empty coalitions,
/// blocks ordered by their minimum member.
class CoalitionStructure {
public:
    CoalitionStructure() = default;
    /// Validates disjointness, coverage, non-emptiness and canonicalizes order.
    CoalitionStructure(int n, std::vector<AgentMask> blocks);

    /// Builds from a restricted-growth string (label of each agent).
    static CoalitionStructure from_labels(const std::vector<int>& labels);

    int agent_count() const { return n_; }
    int k() const { return static_cast<int>(blocks_.size()); }
    const std::vector<AgentMask>& blocks() const { return blocks_; }

    AgentMask coalition_of(AgentId a) const;
    std::string to_string() const;

    friend auto operator<=>(const CoalitionStructure&, const CoalitionStructure&) = default;

private:
    int n_ = 0;
    std::vector<AgentMask> blocks_;
};

inline AgentMask coalition_of(const CoalitionStructure& p, AgentId a) { return p.coalition_of(a); }

/// True when the block sizes are the equal-size multiset for (n, k):
/// n mod k blocks of size ceil(n/k), the rest of size floor(n/k).
bool admissible_sizes(int n, const std::vector<AgentMask>& blocks);

/// Lazily walks every k-block partition of n agents in lexicographic
/// restricted-growth-string order.
///
/// A shard (index, count) restricts the walk to every count-th admissible
/// structure starting at position index, so disjoint shards cover the
/// sequence exactly once.
class PartitionEnumerator {
public:
    PartitionEnumerator(int n, int k, SizeConstraint constraint, int shard_index = 0, int shard_count = 1);

    std::optional<CoalitionStructure> next();
    /// Allocation-free variant: writes the blocks of the next structure.
    bool next(std::vector<AgentMask>& blocks);

private:
    bool advance();
    bool admissible();

    int n_;
    int k_;
    SizeConstraint constraint_;
    int shard_index_;
    int shard_count_;
    std::uint64_t position_ = 0;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> labels_;
    std::vector<int> prefix_max_;
    std::vector<AgentMask> blocks_;
};

/// Throws InvalidInput unless 0 < k <= n.
void check_block_count(int n, int k);

std::vector<CoalitionStructure> enumerate_partitions(int n, int k, SizeConstraint constraint);

std::uint64_t count_partitions(int n, int k, SizeConstraint constraint);

/// Flattened, cached list of every admissible structure for (n, k, constraint):
/// structure i occupies blocks[i*k, (i+1)*k).
struct PartitionTable {
    int n = 0;
    int k = 0;
    SizeConstraint constraint = SizeConstraint::None;
    std::vector<AgentMask> blocks;

    std::size_t size() const { return k == 0 ? 0 : blocks.size() / static_cast<std::size_t>(k); }
    const AgentMask* structure(std::size_t i) const { return blocks.data() + i * static_cast<std::size_t>(k); }
    CoalitionStructure materialize(std::size_t i) const;
};

std::shared_ptr<const PartitionTable> partition_table(int n, int k, SizeConstraint constraint);

std::string to_string(SizeConstraint constraint);

}  // namespace coalmanip
