#pragma once

#include <functional>
#include <vector>

#include "coalmanip/network.hpp"

namespace coalmanip {

/// Adjacency rows of a relabelled network; compared lexicographically.
using AdjacencyCode = std::vector<AgentMask>;

/// Relabels agents 1..n-1 so that the adjacency code is minimal among all
/// relabellings that keep agent 0 in place. Two networks receive equal
/// canonical forms iff an isomorphism fixing agent 0 maps one onto the other.
SocialNetwork canonical_form(const SocialNetwork& net);

AdjacencyCode adjacency_code(const SocialNetwork& net);

/// Every network on n agents up to relabelling of agents 1..n-1, in
/// increasing canonical code order. keep() prunes the generation: it must be
/// hereditary in the sense that every kept network on n agents arises from a
/// kept network on n-1 agents by appending one agent.
std::vector<SocialNetwork> rooted_classes(int n, bool directed,
                                          const std::function<bool(const SocialNetwork&)>& keep = {});

}  // namespace coalmanip
