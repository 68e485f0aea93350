#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "coalmanip/manipulation.hpp"
#include "coalmanip/network.hpp"
#include "coalmanip/objectives.hpp"
#include "coalmanip/views.hpp"

namespace coalmanip {

using json = nlohmann::json;

/// Raised for unreadable or malformed input files.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::filesystem::path& path);

/// { "n": int, "directed": bool, "edges": [[u, v], ...] }. Undirected files
/// may list an edge once in either orientation (or twice).
SocialNetwork network_from_json(const json& j);
json network_to_json(const SocialNetwork& net);

/// { "n", "directed", "m", "d", "known_edges": [[u, v], ...] }
PartialView view_from_json(const json& j);
json view_to_json(const PartialView& view);

std::vector<Edge> edges_from_json(const json& j);
json edges_to_json(const std::vector<Edge>& edges);

json structure_to_json(const CoalitionStructure& p);
json report_to_json(const ImprovementReport& r);
json safe_report_to_json(const SafeReport& r);

}  // namespace coalmanip
