#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coalmanip/manipulation.hpp"
#include "coalmanip/network.hpp"

namespace coalmanip {

/// Raised when a view has more free slots than the configured cap. Safety
/// verdicts are only ever computed over the complete set of completions.
class SlotCapExceeded : public std::runtime_error {
public:
    SlotCapExceeded(std::size_t slots, std::size_t cap);
    std::size_t slots;
    std::size_t cap;
};

inline constexpr std::size_t kDefaultSlotCap = 22;

/// What the manipulator m knows at distance d: every true edge touching the
/// frontier A_{d-1} ({m} for d = 1; m plus the endpoints of m's edges for
/// d = 2). Pairs with both endpoints outside the frontier are unknown.
class PartialView {
public:
    /// Validates that every known edge touches the frontier implied by d.
    PartialView(SocialNetwork known, AgentId m, int d);

    int size() const { return known_.size(); }
    bool directed() const { return known_.directed(); }
    AgentId manipulator() const { return m_; }
    int distance() const { return d_; }
    const SocialNetwork& known() const { return known_; }
    AgentMask frontier() const { return frontier_; }

    /// Unknown pairs in canonical order (ordered pairs when directed).
    const std::vector<Edge>& free_slots() const { return free_slots_; }
    /// 2^(free slots); throws std::overflow_error past 63 slots.
    std::uint64_t completion_count() const;

    /// Completion number index: slot i is present iff bit i of index is set.
    SocialNetwork completion(std::uint64_t index) const;

    friend bool operator==(const PartialView& a, const PartialView& b) {
        return a.m_ == b.m_ && a.d_ == b.d_ && a.known_ == b.known_;
    }

private:
    SocialNetwork known_;
    AgentId m_ = 0;
    int d_ = 1;
    AgentMask frontier_ = 0;
    std::vector<Edge> free_slots_;
};

PartialView extract_view(const SocialNetwork& net, AgentId m, int d);

/// Lazily yields every completion of a view exactly once, in increasing
/// completion index. Refuses views above the slot cap.
class CompletionEnumerator {
public:
    explicit CompletionEnumerator(const PartialView& view, std::size_t slot_cap = kDefaultSlotCap);

    std::optional<SocialNetwork> next();
    std::uint64_t count() const { return count_; }

private:
    const PartialView* view_;
    std::uint64_t count_;
    std::uint64_t index_ = 0;
};

std::vector<SocialNetwork> enumerate_completions(const PartialView& view, std::size_t slot_cap = kDefaultSlotCap);

enum class ImprovementType { LB, UB, Weak, Strict };

inline constexpr ImprovementType kImprovementTypes[] = {ImprovementType::LB, ImprovementType::UB,
                                                        ImprovementType::Weak, ImprovementType::Strict};

std::string to_string(ImprovementType type);

/// Whether a type's defining inequality holds with >= (no worse) and with >
/// (improved) on one completion.
bool no_worse(ImprovementType type, const ImprovementReport& r);
bool improved(ImprovementType type, const ImprovementReport& r);

struct SafetyVerdict {
    bool safe = false;
    /// First completion (canonical order) on which the type strictly improves.
    std::optional<SocialNetwork> witness_completion;
    /// First completion on which the manipulation makes the type worse.
    std::optional<SocialNetwork> violating_completion;
};

struct SafeReport {
    SafetyVerdict lb;
    SafetyVerdict ub;
    SafetyVerdict weak;
    SafetyVerdict strict;
    std::uint64_t completions = 0;

    const SafetyVerdict& verdict(ImprovementType type) const;
    SafetyVerdict& verdict(ImprovementType type);
    bool safe(ImprovementType type) const { return verdict(type).safe; }
    bool any() const { return lb.safe || ub.safe; }
};

/// d-safe classification: type T is safe iff T's inequality holds weakly on
/// every completion and strictly on at least one.
SafeReport classify_d_safe(const PartialView& view, const ManipulationSpec& spec, const GameSettings& game,
                           std::size_t slot_cap = kDefaultSlotCap);

struct RankedSafeManipulation {
    ManipulationSpec spec;
    SafeReport report;
};

/// Exhaustive search over deltas on the manipulator's known edges. Ranks by
/// (strict, weak, ub, lb) then the lexicographically smallest delta.
std::optional<RankedSafeManipulation> search_safe(const PartialView& view, Mode mode, const GameSettings& game,
                                                  std::size_t slot_cap = kDefaultSlotCap);

}  // namespace coalmanip
