#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coalmanip {

/// Index of an agent in [0, n).
using AgentId = int;

/// Bit set over agents; bit a is agent a.
using AgentMask = std::uint64_t;

inline constexpr int kMaxAgents = 64;

constexpr AgentMask bit(AgentId a) { return AgentMask{1} << a; }
inline int popcount(AgentMask m) { return std::popcount(m); }
constexpr AgentMask all_agents(int n) { return n >= 64 ? ~AgentMask{0} : (bit(n) - 1); }

std::vector<AgentId> agents_of(AgentMask mask);

/// Raised for malformed networks, reports, manipulations and views.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An edge (from, to). Undirected edges are normalized to from < to.
struct Edge {
    AgentId from = 0;
    AgentId to = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Friendship graph over agents 0..n-1 without self loops.
///
/// Stored as out-adjacency bit rows. An undirected network keeps both rows
/// of every edge in sync, so neighbours() is symmetric there.
class SocialNetwork {
public:
    SocialNetwork() = default;
    SocialNetwork(int n, bool directed);
    SocialNetwork(int n, bool directed, const std::vector<Edge>& edges);

    int size() const { return n_; }
    bool directed() const { return directed_; }

    bool has_edge(AgentId u, AgentId v) const;
    AgentMask neighbours(AgentId a) const;
    std::vector<AgentId> neighbour_list(AgentId a) const { return agents_of(neighbours(a)); }
    /// Agents with an edge into a (equal to neighbours() when undirected).
    AgentMask in_neighbours(AgentId a) const;

    /// Canonical edge list: directed pairs in (from, to) order, undirected
    /// pairs as (min, max), sorted.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

    void add_edge(AgentId u, AgentId v);
    void remove_edge(AgentId u, AgentId v);

    /// Row access for hot loops.
    const std::vector<AgentMask>& rows() const { return out_; }

    void check_agent(AgentId a) const;

    friend bool operator==(const SocialNetwork&, const SocialNetwork&) = default;

private:
    int n_ = 0;
    bool directed_ = false;
    std::vector<AgentMask> out_;
};

Edge normalize(const SocialNetwork& net, Edge e);

/// r_i: the agents that agent i names as friends.
using ReportProfile = std::vector<std::vector<AgentId>>;

enum class Aggregation { Or, And };

SocialNetwork build_from_reports(const ReportProfile& reports, bool directed, Aggregation aggregation);

inline AgentMask neighbours(const SocialNetwork& net, AgentId a) { return net.neighbours(a); }

/// |coalition ∩ N(a)|; a must belong to the coalition.
int utility(const SocialNetwork& net, AgentId a, AgentMask coalition);

enum class Mode { AddOnly, RemoveOnly };

/// Edge delta a single manipulator applies to the true network.
struct ManipulationSpec {
    AgentId manipulator = 0;
    Mode mode = Mode::AddOnly;
    std::vector<Edge> delta;
};

/// Throws InvalidInput when spec is not a legal manipulation of net.
void validate_manipulation(const SocialNetwork& net, const ManipulationSpec& spec);

SocialNetwork apply_manipulation(const SocialNetwork& net, const ManipulationSpec& spec);

/// Edges the manipulator may toggle under mode: non-edges (AddOnly) or
/// edges (RemoveOnly) incident to m, outgoing when directed. Sorted.
std::vector<Edge> candidate_edges(const SocialNetwork& net, AgentId m, Mode mode);

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

}  // namespace coalmanip
