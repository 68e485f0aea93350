#include "coalmanip/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace coalmanip {

CoalitionStructure::CoalitionStructure(int n, std::vector<AgentMask> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n <= 0 || n > kMaxAgents) throw InvalidInput("coalition structure over invalid agent count");
    AgentMask seen = 0;
    for (AgentMask b : blocks_) {
        if (b == 0) throw InvalidInput("coalition structure contains an empty coalition");
        if (seen & b) throw InvalidInput("coalitions overlap");
        seen |= b;
    }
    if (seen != all_agents(n)) throw InvalidInput("coalitions do not cover every agent");
    std::sort(blocks_.begin(), blocks_.end(),
              [](AgentMask a, AgentMask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

CoalitionStructure CoalitionStructure::from_labels(const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    int k = 0;
    for (int l : labels) {
        if (l < 0) throw InvalidInput("negative coalition label");
        k = std::max(k, l + 1);
    }
    std::vector<AgentMask> blocks(static_cast<std::size_t>(k), 0);
    for (AgentId a = 0; a < n; ++a) blocks[labels[a]] |= bit(a);
    return CoalitionStructure(n, std::move(blocks));
}

AgentMask CoalitionStructure::coalition_of(AgentId a) const {
    if (a < 0 || a >= n_) throw InvalidInput("agent " + std::to_string(a) + " out of range");
    for (AgentMask b : blocks_) {
        if (b & bit(a)) return b;
    }
    throw InvalidInput("agent not covered by coalition structure");
}

std::string CoalitionStructure::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += '|';
        out += '{';
        bool first = true;
        for (AgentId a : agents_of(blocks_[i])) {
            if (!first) out += ',';
            out += std::to_string(a);
            first = false;
        }
        out += '}';
    }
    return out;
}

bool admissible_sizes(int n, const std::vector<AgentMask>& blocks) {
    const int k = static_cast<int>(blocks.size());
    if (k == 0) return false;
    const int floor_size = n / k;
    const int ceil_count = n % k;
    int seen_ceil = 0;
    for (AgentMask b : blocks) {
        const int s = popcount(b);
        if (s == floor_size + 1 && ceil_count > 0) {
            ++seen_ceil;
        } else if (s != floor_size) {
            return false;
        }
    }
    return seen_ceil == ceil_count;
}

void check_block_count(int n, int k) {
    if (n <= 0 || n > kMaxAgents) throw InvalidInput("agent count " + std::to_string(n) + " out of range");
    if (k <= 0 || k > n) {
        throw InvalidInput("coalition count k=" + std::to_string(k) + " must satisfy 0 < k <= n=" + std::to_string(n));
    }
}

PartitionEnumerator::PartitionEnumerator(int n, int k, SizeConstraint constraint, int shard_index, int shard_count)
    : n_(n), k_(k), constraint_(constraint), shard_index_(shard_index), shard_count_(shard_count) {
    check_block_count(n, k);
    if (shard_count <= 0 || shard_index < 0 || shard_index >= shard_count) {
        throw InvalidInput("invalid partition shard");
    }
    labels_.assign(static_cast<std::size_t>(n), 0);
    prefix_max_.assign(static_cast<std::size_t>(n), 0);
    blocks_.assign(static_cast<std::size_t>(k), 0);
}

// Successor of the restricted-growth string in lexicographic order, with
// labels capped below k.
bool PartitionEnumerator::advance() {
    if (!started_) {
        started_ = true;
        return true;
    }
    for (int i = n_ - 1; i >= 1; --i) {
        const int limit = std::min(prefix_max_[i - 1] + 1, k_ - 1);
        if (labels_[i] < limit) {
            ++labels_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
            for (int j = i + 1; j < n_; ++j) {
                labels_[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            return true;
        }
    }
    return false;
}

bool PartitionEnumerator::admissible() {
    if (prefix_max_[n_ - 1] != k_ - 1) return false;
    std::fill(blocks_.begin(), blocks_.end(), 0);
    for (AgentId a = 0; a < n_; ++a) blocks_[labels_[a]] |= bit(a);
    return constraint_ == SizeConstraint::None || admissible_sizes(n_, blocks_);
}

bool PartitionEnumerator::next(std::vector<AgentMask>& blocks) {
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        if (!admissible()) continue;
        const std::uint64_t pos = position_++;
        if (pos % static_cast<std::uint64_t>(shard_count_) != static_cast<std::uint64_t>(shard_index_)) continue;
        blocks = blocks_;
        return true;
    }
    return false;
}

std::optional<CoalitionStructure> PartitionEnumerator::next() {
    std::vector<AgentMask> blocks;
    if (!next(blocks)) return std::nullopt;
    return CoalitionStructure(n_, std::move(blocks));
}

std::vector<CoalitionStructure> enumerate_partitions(int n, int k, SizeConstraint constraint) {
    PartitionEnumerator it(n, k, constraint);
    std::vector<CoalitionStructure> out;
    while (auto p = it.next()) out.push_back(std::move(*p));
    return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("partition count exceeds 64 bits");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("partition count exceeds 64 bits");
    return r;
}

std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t out = 1;
    for (int i = 1; i <= r; ++i) {
        // out * (n - r + i) is divisible by i at every step
        out = checked_mul(out, static_cast<std::uint64_t>(n - r + i)) / static_cast<std::uint64_t>(i);
    }
    return out;
}

}  // namespace

std::uint64_t count_partitions(int n, int k, SizeConstraint constraint) {
    check_block_count(n, k);
    if (constraint == SizeConstraint::None) {
        // S(i, j) = j * S(i-1, j) + S(i-1, j-1)
        std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
        row[0] = 1;
        for (int i = 1; i <= n; ++i) {
            for (int j = std::min(i, k); j >= 1; --j) {
                row[j] = checked_add(checked_mul(static_cast<std::uint64_t>(j), row[j]), row[j - 1]);
            }
            row[0] = 0;
        }
        return row[k];
    }
    // Fill labelled blocks one after another, then forget the order among
    // blocks of equal size.
    const int floor_size = n / k;
    const int ceil_count = n % k;
    std::uint64_t ordered = 1;
    int remaining = n;
    for (int b = 0; b < k; ++b) {
        const int s = b < ceil_count ? floor_size + 1 : floor_size;
        ordered = checked_mul(ordered, binomial(remaining, s));
        remaining -= s;
    }
    std::uint64_t symmetry = 1;
    for (int i = 2; i <= ceil_count; ++i) symmetry *= static_cast<std::uint64_t>(i);
    for (int i = 2; i <= k - ceil_count; ++i) symmetry = checked_mul(symmetry, static_cast<std::uint64_t>(i));
    return ordered / symmetry;
}

CoalitionStructure PartitionTable::materialize(std::size_t i) const {
    const AgentMask* s = structure(i);
    return CoalitionStructure(n, std::vector<AgentMask>(s, s + k));
}

std::shared_ptr<const PartitionTable> partition_table(int n, int k, SizeConstraint constraint) {
    check_block_count(n, k);
    static std::mutex mutex;
    static std::map<std::tuple<int, int, SizeConstraint>, std::shared_ptr<const PartitionTable>> cache;
    const auto key = std::make_tuple(n, k, constraint);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto table = std::make_shared<PartitionTable>();
    table->n = n;
    table->k = k;
    table->constraint = constraint;
    PartitionEnumerator it(n, k, constraint);
    std::vector<AgentMask> blocks;
    while (it.next(blocks)) table->blocks.insert(table->blocks.end(), blocks.begin(), blocks.end());
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(table)).first->second;
}

std::string to_string(SizeConstraint constraint) {
    return constraint == SizeConstraint::None ? "none" : "equal-size";
}

}  // namespace coalmanip
