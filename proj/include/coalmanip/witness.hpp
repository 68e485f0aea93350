#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coalmanip/io.hpp"
#include "coalmanip/manipulation.hpp"
#include "coalmanip/views.hpp"

namespace coalmanip {

/// Compact graph description: named single agents,
/// named cliques of a given size, and links between them. A link into a
/// clique reaches every member, or only the `count` lowest-indexed members.
struct WitnessSpec {
    struct Clique {
        std::string name;
        int size = 0;
    };
    struct Link {
        std::string from;
        std::string to;
        std::optional<int> count;
        bool directed = false;
    };

    bool directed = false;
    std::vector<std::string> nodes;
    std::vector<Clique> cliques;
    std::vector<Link> links;
};

/// A network together with agent names. Nodes are numbered first, in
/// declaration order, then clique members; member i of clique C is "C.i".
struct ExpandedWitness {
    SocialNetwork network;
    std::vector<std::string> labels;

    AgentId agent(const std::string& name) const;
};

ExpandedWitness expand_witness(const WitnessSpec& spec);
WitnessSpec witness_spec_from_json(const json& j);
json witness_spec_to_json(const WitnessSpec& spec);

enum class Information { Full, Distance1, Distance2 };

std::string to_string(Information info);
Information parse_information(const std::string& text);
inline int distance_of(Information info) { return info == Information::Distance1 ? 1 : 2; }

/// A concrete manipulation instance. For limited information the view is
/// extracted from `network`, which is then one of its completions.
struct ManipulationWitness {
    std::string id;
    SocialNetwork network;
    ManipulationSpec spec;
    std::vector<std::string> labels;
};

/// Reads a witness file: either a WitnessSpec ("nodes"/"cliques"/"links") or
/// a plain network ("n"/"edges"), plus "manipulator", "mode" and "delta".
/// Agents may be given by name or by index.
ManipulationWitness witness_from_json(const json& j);
ManipulationWitness load_witness(const std::filesystem::path& path);
json witness_to_json(const ManipulationWitness& w);

enum class Verdict { Strict, Weak, UB, LB, UBProof, LBProof, WeakProof, Strategyproof };

std::string to_string(Verdict verdict);
Verdict parse_verdict(const std::string& text);
bool is_resistance(Verdict verdict);

/// Improvement types that a verdict says are reachable (susceptibility) or
/// unreachable (resistance).
std::vector<ImprovementType> verdict_types(Verdict verdict);

enum class NetworkKind { Directed, Undirected, Both };

std::string to_string(NetworkKind kind);
NetworkKind parse_network_kind(const std::string& text);

struct Claim {
    std::string id;
    std::string source;
    Objective objective = Objective::MaxUtil;
    Mode mode = Mode::AddOnly;
    NetworkKind network = NetworkKind::Both;
    Information information = Information::Full;
    SizeConstraint constraint = SizeConstraint::None;
    Verdict verdict = Verdict::Strict;
    int k = 2;
    /// Bundled witness per direction, keyed by "directed" / "undirected".
    std::map<std::string, std::filesystem::path> witnesses;
    std::optional<int> max_n;
    std::optional<int> max_n_directed;
    /// A documented expected outcome; verification still runs unchanged.
    std::optional<std::string> note;
};

/// Manifest: { "claims": [ {...}, ... ] }. Relative witness paths resolve
/// against base_dir.
std::vector<Claim> claims_from_json(const json& j, const std::filesystem::path& base_dir = {});
std::vector<Claim> load_claims(const std::filesystem::path& path);

struct SearchBounds {
    int max_n = 5;
    int max_n_directed = 4;
    int synth_max_n = 6;
    int synth_max_n_directed = 5;
    std::size_t slot_cap = kDefaultSlotCap;
    int workers = 1;
};

/// Whether the witness reaches `target` in the given information setting.
/// exact: no type above the target in the lattice is also reached (strict
/// above weak, weak above LB and UB).
struct WitnessCheck {
    bool holds = false;
    bool exact = false;
    json evidence;
};

WitnessCheck check_witness(const ManipulationWitness& w, Information info, ImprovementType target,
                           const GameSettings& game, std::size_t slot_cap = kDefaultSlotCap);

struct SynthesisQuery {
    Objective objective = Objective::MaxUtil;
    Mode mode = Mode::AddOnly;
    bool directed = false;
    Information information = Information::Full;
    SizeConstraint constraint = SizeConstraint::None;
    ImprovementType target = ImprovementType::LB;
    int k = 2;
    int max_n = 6;
    int min_n = 2;
};

struct SynthesisStats {
    std::uint64_t instances = 0;
    std::uint64_t skipped_over_cap = 0;
};

/// First instance (in increasing n, then canonical order of the network or
/// view, then delta bitmask order) on which the target flag is set. Agent 0
/// is the manipulator. Views above the slot cap are skipped and counted.
std::optional<ManipulationWitness> synthesize_witness(const SynthesisQuery& query, const SearchBounds& bounds,
                                                      SynthesisStats* stats = nullptr);

struct ExhaustionResult {
    std::uint64_t instances = 0;
    std::uint64_t checks = 0;
    std::optional<ManipulationWitness> violation;
    std::optional<ImprovementType> violated_type;
};

/// Resistance check over every labelled network on 2..max_n agents with
/// manipulator 0 (every distinct view, for limited information) and every
/// legal nonempty delta. Reports the first instance reaching any forbidden
/// type.
ExhaustionResult exhaust_resistance(Objective objective, Mode mode, bool directed, Information info,
                                    SizeConstraint constraint, const std::vector<ImprovementType>& forbidden,
                                    int max_n, int k, const SearchBounds& bounds);

struct CheckResult {
    bool directed = false;
    bool pass = false;
    std::string method;
    std::string detail;
    json evidence;
};

struct ClaimResult {
    Claim claim;
    bool pass = false;
    std::vector<CheckResult> checks;
};

std::vector<ClaimResult> verify_claims(const std::vector<Claim>& claims, const SearchBounds& bounds,
                                       const std::function<void(const ClaimResult&)>& progress = {});
json claim_result_to_json(const ClaimResult& r);

struct ConjectureResult {
    std::optional<ManipulationWitness> counterexample;
    std::optional<SafeReport> report;
    std::uint64_t views = 0;
    std::uint64_t deltas = 0;
};

/// Bounded search for a 2-safe weak improvement under Max-Util with a
/// removing manipulator on undirected views of up to max_n agents. Throws
/// SlotCapExceeded rather than skip a view it would need to decide.
ConjectureResult conjecture_search(int max_n, std::size_t slot_cap = kDefaultSlotCap, int workers = 1, int k = 2);

}  // namespace coalmanip
