#include "coalmanip/views.hpp"

#include <string>

namespace coalmanip {

SlotCapExceeded::SlotCapExceeded(std::size_t slots_, std::size_t cap_)
    : std::runtime_error("view has " + std::to_string(slots_) + " free slots, above the cap of " +
                         std::to_string(cap_) + "; refusing to sample completions"),
      slots(slots_),
      cap(cap_) {}

PartialView::PartialView(SocialNetwork known, AgentId m, int d) : known_(std::move(known)), m_(m), d_(d) {
    known_.check_agent(m);
    if (d != 1 && d != 2) throw InvalidInput("view distance must be 1 or 2, got " + std::to_string(d));
    const int n = known_.size();
    frontier_ = bit(m);
    if (d == 2) frontier_ |= known_.neighbours(m) | known_.in_neighbours(m);
    for (const Edge& e : known_.edges()) {
        if (((frontier_ >> e.from) & 1) == 0 && ((frontier_ >> e.to) & 1) == 0) {
            throw InvalidInput("known edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                               ") does not touch the manipulator's distance-" + std::to_string(d) + " frontier");
        }
    }
    for (AgentId u = 0; u < n; ++u) {
        if (frontier_ & bit(u)) continue;
        for (AgentId v = known_.directed() ? 0 : u + 1; v < n; ++v) {
            if (v == u || (frontier_ & bit(v))) continue;
            free_slots_.push_back({u, v});
        }
    }
}

std::uint64_t PartialView::completion_count() const {
    if (free_slots_.size() >= 64) throw std::overflow_error("completion count exceeds 64 bits");
    return std::uint64_t{1} << free_slots_.size();
}

SocialNetwork PartialView::completion(std::uint64_t index) const {
    SocialNetwork out = known_;
    for (std::size_t i = 0; i < free_slots_.size(); ++i) {
        if (index & (std::uint64_t{1} << i)) out.add_edge(free_slots_[i].from, free_slots_[i].to);
    }
    return out;
}

PartialView extract_view(const SocialNetwork& net, AgentId m, int d) {
    net.check_agent(m);
    if (d != 1 && d != 2) throw InvalidInput("view distance must be 1 or 2, got " + std::to_string(d));
    AgentMask frontier = bit(m);
    if (d == 2) frontier |= net.neighbours(m) | net.in_neighbours(m);
    SocialNetwork known(net.size(), net.directed());
    for (const Edge& e : net.edges()) {
        if ((frontier & bit(e.from)) || (frontier & bit(e.to))) known.add_edge(e.from, e.to);
    }
    return PartialView(std::move(known), m, d);
}

CompletionEnumerator::CompletionEnumerator(const PartialView& view, std::size_t slot_cap) : view_(&view) {
    if (view.free_slots().size() > slot_cap) throw SlotCapExceeded(view.free_slots().size(), slot_cap);
    count_ = view.completion_count();
}

std::optional<SocialNetwork> CompletionEnumerator::next() {
    if (index_ >= count_) return std::nullopt;
    return view_->completion(index_++);
}

std::vector<SocialNetwork> enumerate_completions(const PartialView& view, std::size_t slot_cap) {
    CompletionEnumerator it(view, slot_cap);
    std::vector<SocialNetwork> out;
    while (auto c = it.next()) out.push_back(std::move(*c));
    return out;
}

std::string to_string(ImprovementType type) {
    switch (type) {
        case ImprovementType::LB: return "lb";
        case ImprovementType::UB: return "ub";
        case ImprovementType::Weak: return "weak";
        case ImprovementType::Strict: return "strict";
    }
    return "?";
}

bool no_worse(ImprovementType type, const ImprovementReport& r) {
    switch (type) {
        case ImprovementType::LB: return r.v0 >= r.u0;
        case ImprovementType::UB: return r.v1 >= r.u1;
        case ImprovementType::Weak: return r.v0 >= r.u0 && r.v1 >= r.u1;
        case ImprovementType::Strict: return r.v0 >= r.u1;
    }
    return false;
}

bool improved(ImprovementType type, const ImprovementReport& r) {
    switch (type) {
        case ImprovementType::LB: return r.lb;
        case ImprovementType::UB: return r.ub;
        case ImprovementType::Weak: return r.weak;
        case ImprovementType::Strict: return r.strict;
    }
    return false;
}

const SafetyVerdict& SafeReport::verdict(ImprovementType type) const {
    switch (type) {
        case ImprovementType::LB: return lb;
        case ImprovementType::UB: return ub;
        case ImprovementType::Weak: return weak;
        case ImprovementType::Strict: return strict;
    }
    return lb;
}

SafetyVerdict& SafeReport::verdict(ImprovementType type) {
    return const_cast<SafetyVerdict&>(std::as_const(*this).verdict(type));
}

namespace {

// Folds per-completion reports into safety verdicts. Returns false from
// add() once every type has been violated, since no verdict can change.
class SafetyFold {
public:
    bool add(const ImprovementReport& r, std::uint64_t index, const PartialView& view) {
        bool open = false;
        for (ImprovementType t : kImprovementTypes) {
            SafetyVerdict& v = report_.verdict(t);
            if (!no_worse(t, r)) {
                if (!v.violating_completion) v.violating_completion = view.completion(index);
            } else if (improved(t, r) && !v.witness_completion) {
                v.witness_completion = view.completion(index);
            }
            if (!v.violating_completion) open = true;
        }
        return open;
    }

    SafeReport finish(std::uint64_t completions) {
        for (ImprovementType t : kImprovementTypes) {
            SafetyVerdict& v = report_.verdict(t);
            v.safe = !v.violating_completion && v.witness_completion.has_value();
        }
        report_.completions = completions;
        return std::move(report_);
    }

private:
    SafeReport report_;
};

}  // namespace

SafeReport classify_d_safe(const PartialView& view, const ManipulationSpec& spec, const GameSettings& game,
                           std::size_t slot_cap) {
    if (spec.manipulator != view.manipulator()) {
        throw InvalidInput("manipulation is for agent " + std::to_string(spec.manipulator) +
                           " but the view belongs to agent " + std::to_string(view.manipulator()));
    }
    // Every delta edge touches m, so the known edges decide its legality.
    validate_manipulation(view.known(), spec);
    CompletionEnumerator completions(view, slot_cap);
    SafetyFold fold;
    const AgentId m = view.manipulator();
    for (std::uint64_t i = 0; i < completions.count(); ++i) {
        const SocialNetwork truth = view.completion(i);
        const SocialNetwork manipulated = apply_manipulation(truth, spec);
        const Bounds before = solution_bounds(truth, truth, m, game.k, game.objective, game.constraint);
        const Bounds after = solution_bounds(manipulated, truth, m, game.k, game.objective, game.constraint);
        if (!fold.add(ImprovementReport::from_bounds(before, after), i, view)) break;
    }
    return fold.finish(completions.count());
}

std::optional<RankedSafeManipulation> search_safe(const PartialView& view, Mode mode, const GameSettings& game,
                                                  std::size_t slot_cap) {
    CompletionEnumerator completions(view, slot_cap);
    const std::uint64_t count = completions.count();
    const AgentId m = view.manipulator();
    const std::vector<Edge> candidates = candidate_edges(view.known(), m, mode);

    std::vector<std::optional<Bounds>> before(count);
    std::optional<RankedSafeManipulation> best;
    RankKey best_key;
    for_each_delta(candidates, -1, [&](const std::vector<Edge>& delta) {
        const ManipulationSpec spec{m, mode, delta};
        SafetyFold fold;
        for (std::uint64_t i = 0; i < count; ++i) {
            const SocialNetwork truth = view.completion(i);
            if (!before[i]) before[i] = solution_bounds(truth, truth, m, game.k, game.objective, game.constraint);
            const SocialNetwork manipulated = apply_manipulation(truth, spec);
            const Bounds after = solution_bounds(manipulated, truth, m, game.k, game.objective, game.constraint);
            if (!fold.add(ImprovementReport::from_bounds(*before[i], after), i, view)) break;
        }
        SafeReport report = fold.finish(count);
        if (!report.any()) return;
        const RankKey key{report.strict.safe, report.weak.safe, report.ub.safe, report.lb.safe, 0, 0};
        if (!best || key > best_key || (key == best_key && delta < best->spec.delta)) {
            best = RankedSafeManipulation{spec, std::move(report)};
            best_key = key;
        }
    });
    return best;
}

}  // namespace coalmanip
