// Acceptance suite: one PASS/FAIL line per criterion. Run with no arguments
// for all criteria, or --criterion N for one.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "coalmanip/witness.hpp"
#include "oracle.hpp"

using namespace coalmanip;

namespace {

const std::filesystem::path kData = COALMANIP_DATA_DIR;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
};

std::string describe(const ExhaustionResult& r) {
    std::ostringstream s;
    s << r.instances << " instances, " << r.checks << " deltas";
    if (r.violation) {
        s << "; violation " << to_string(*r.violated_type) << " on " << witness_to_json(*r.violation).dump();
    }
    return s.str();
}

Outcome resistance_theorems() {
    Outcome o;
    const SearchBounds bounds;
    struct Case {
        std::string name;
        Objective objective;
        Mode mode;
        bool directed;
        std::vector<ImprovementType> forbidden;
    };
    const Case cases[] = {
        {"max-egal add undirected: no weak", Objective::MaxEgal, Mode::AddOnly, false, {ImprovementType::Weak}},
        {"max-egal add directed: no lb/ub", Objective::MaxEgal, Mode::AddOnly, true,
         {ImprovementType::LB, ImprovementType::UB}},
        {"at-least-1 add directed: no lb/ub", Objective::AtLeast1, Mode::AddOnly, true,
         {ImprovementType::LB, ImprovementType::UB}},
        {"at-least-1 remove undirected: no ub", Objective::AtLeast1, Mode::RemoveOnly, false, {ImprovementType::UB}},
        {"at-least-1 remove directed: no ub", Objective::AtLeast1, Mode::RemoveOnly, true, {ImprovementType::UB}},
    };
    for (const Case& c : cases) {
        const int max_n = c.directed ? 4 : 5;
        const ExhaustionResult r = exhaust_resistance(c.objective, c.mode, c.directed, Information::Full,
                                                      SizeConstraint::None, c.forbidden, max_n, 2, bounds);
        // Labelled networks on 2..max_n agents: 1024 undirected at n=5, 4096 directed at n=4.
        const std::uint64_t expected = c.directed ? 4 + 64 + 4096 : 2 + 8 + 64 + 1024;
        o.require(!r.violation && r.instances == expected, c.name + " (n<=" + std::to_string(max_n) + "): " + describe(r));
    }
    return o;
}

Outcome three_clique_witness() {
    Outcome o;
    const ManipulationWitness w = load_witness(kData / "witnesses" / "util-remove-strict-full-undirected.json");
    const ImprovementReport r = classify(w.network, w.spec, {2, Objective::MaxUtil, SizeConstraint::None});
    const int before = min_kcut_value(w.network, 2, SizeConstraint::None);
    const int after = min_kcut_value(apply_manipulation(w.network, w.spec), 2, SizeConstraint::None);
    o.require(r.strict, "strict improvement");
    o.require(r.u1 == 5, "u1 = " + std::to_string(r.u1) + " (want 5)");
    o.require(r.v0 == 6, "v0 = " + std::to_string(r.v0) + " (want 6)");
    o.require(before == 3 && after == 2,
              "min 2-cut " + std::to_string(before) + " -> " + std::to_string(after) + " (want 3 -> 2)");
    return o;
}

void verify_rows(Outcome& o, const std::vector<Claim>& claims, SearchBounds bounds) {
    for (const ClaimResult& r : verify_claims(claims, bounds)) {
        std::string line = r.claim.id + ":";
        for (const CheckResult& c : r.checks) {
            line += std::string(" [") + (c.directed ? "directed" : "undirected") + " " + c.method + " " + c.detail + "]";
        }
        o.require(r.pass, line);
    }
}

std::vector<Claim> susceptibility_rows(const std::string& manifest) {
    std::vector<Claim> out;
    for (const Claim& c : load_claims(kData / "claims" / manifest)) {
        if (!is_resistance(c.verdict)) out.push_back(c);
    }
    return out;
}

Outcome distance2_susceptibility() {
    Outcome o;
    const std::vector<Claim> rows = susceptibility_rows("distance2.json");
    o.require(rows.size() == 10, std::to_string(rows.size()) + " rows");
    verify_rows(o, rows, SearchBounds{});
    return o;
}

/// First distance-1 view (by n, then by m's incident pairs) on which
/// search_safe finds a 1-safe UB manipulation.
std::optional<std::pair<PartialView, RankedSafeManipulation>> first_safe_ub(Objective objective, Mode mode,
                                                                            bool directed, int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Edge> pairs;
        for (AgentId v = 1; v < n; ++v) {
            pairs.push_back({0, v});
            if (directed) pairs.push_back({v, 0});
        }
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
            SocialNetwork known(n, directed);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (s >> i & 1) known.add_edge(pairs[i].from, pairs[i].to);
            }
            PartialView view(known, 0, 1);
            const auto r = search_safe(view, mode, {2, objective, SizeConstraint::None});
            if (r && r->report.ub.safe) return std::make_pair(view, *r);
        }
    }
    return std::nullopt;
}

Outcome distance1_util() {
    Outcome o;
    const std::vector<ImprovementType> all(std::begin(kImprovementTypes), std::end(kImprovementTypes));
    for (Mode mode : {Mode::AddOnly, Mode::RemoveOnly}) {
        const ExhaustionResult r = exhaust_resistance(Objective::MaxUtil, mode, false, Information::Distance1,
                                                      SizeConstraint::None, all, 5, 2, SearchBounds{});
        std::string note = "max-util " + to_string(mode) + " undirected d1 (n<=5), no 1-safe type: " + describe(r);
        if (r.violation) {
            const GameSettings game{2, Objective::MaxUtil, SizeConstraint::None};
            const SafeReport safe = classify_d_safe(extract_view(r.violation->network, 0, 1), r.violation->spec, game);
            note += "; view " + view_to_json(extract_view(r.violation->network, 0, 1)).dump() + " report " +
                    safe_report_to_json(safe).dump();
        }
        o.require(!r.violation, note);
    }

    const struct {
        std::string name;
        Objective objective;
        Mode mode;
        bool directed;
        int max_n;
    } exceptions[] = {
        {"max-egal remove directed", Objective::MaxEgal, Mode::RemoveOnly, true, 4},
        {"at-least-1 add undirected", Objective::AtLeast1, Mode::AddOnly, false, 5},
    };
    for (const auto& e : exceptions) {
        const auto hit = first_safe_ub(e.objective, e.mode, e.directed, e.max_n);
        std::string note = e.name + ": 1-safe UB via search_safe";
        if (hit) {
            const auto& [view, found] = *hit;
            const SafeReport again =
                classify_d_safe(view, found.spec, {2, e.objective, SizeConstraint::None});
            note += " on " + view_to_json(view).dump() + " delta " + edges_to_json(found.spec.delta).dump();
            o.require(again.ub.safe, note);
        } else {
            o.require(false, note + ": none found");
        }
    }
    return o;
}

Outcome equal_size() {
    Outcome o;
    bool enumeration = true;
    int cases = 0;
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= std::min(n, 4); ++k) {
            std::vector<oracle::Labels> got;
            for (const CoalitionStructure& p : enumerate_partitions(n, k, SizeConstraint::EqualSize)) {
                got.push_back(oracle::labels_of(p));
            }
            std::sort(got.begin(), got.end());
            if (got != oracle::partitions(n, k, true)) enumeration = false;
            if (count_partitions(n, k, SizeConstraint::EqualSize) != got.size()) enumeration = false;
            ++cases;
        }
    }
    o.require(enumeration, "equal-size enumeration equals filtered brute force on " + std::to_string(cases) +
                               " (n, k) pairs, n <= 8, k <= 4");

    const std::vector<Claim> rows = susceptibility_rows("equal-size.json");
    o.require(rows.size() == 6, std::to_string(rows.size()) + " table rows");
    verify_rows(o, rows, SearchBounds{});

    // Distance-1 positives for the removing (LB, UB) and adding (At-least-1 UB) cases.
    std::vector<Claim> positives;
    for (const Claim& c : susceptibility_rows("distance1.json")) {
        if (c.constraint == SizeConstraint::EqualSize) positives.push_back(c);
    }
    o.require(positives.size() == 4, std::to_string(positives.size()) + " distance-1 equal-size positives");
    verify_rows(o, positives, SearchBounds{});
    return o;
}

Outcome cut_duality() {
    Outcome o;
    std::mt19937 rng(20240611);
    int graphs = 0, mismatches = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + trial % 7;
        const oracle::Graph g = oracle::random_graph(rng, n, false, 0.15 + 0.1 * (trial % 7));
        const SocialNetwork net = oracle::to_network(g);
        for (int k : {2, 3}) {
            if (k > n) continue;
            ++graphs;
            const int edges = static_cast<int>(net.edge_count());
            int best = edges + 1;
            std::vector<oracle::Labels> all = oracle::partitions(n, k);
            for (const oracle::Labels& p : all) best = std::min(best, oracle::cut(g, p));
            std::vector<oracle::Labels> min_cuts;
            for (const oracle::Labels& p : all) {
                if (oracle::cut(g, p) == best) min_cuts.push_back(p);
            }
            std::vector<oracle::Labels> util;
            for (const auto& p : solution_set(net, k, Objective::MaxUtil, SizeConstraint::None).structures) {
                util.push_back(oracle::labels_of(p));
            }
            std::sort(util.begin(), util.end());
            bool ok = util == min_cuts && min_kcut_value(net, k, SizeConstraint::None) == best;
            for (const CoalitionStructure& p : enumerate_partitions(n, k, SizeConstraint::None)) {
                ok = ok && 2 * edges - utilitarian_sw(net, p) == 2 * cut_size(net, p);
                ok = ok && cut_size(net, p) == oracle::cut(g, oracle::labels_of(p));
            }
            if (!ok) ++mismatches;
        }
    }
    o.require(graphs >= 200 && mismatches == 0,
              std::to_string(graphs) + " random undirected graphs, " + std::to_string(mismatches) + " mismatches");
    return o;
}

Outcome partition_counts() {
    Outcome o;
    int bad = 0;
    for (int n = 1; n <= 10; ++n) {
        for (int k = 1; k <= n; ++k) {
            if (count_partitions(n, k, SizeConstraint::None) != oracle::stirling(n, k)) ++bad;
        }
        if (n >= 2 && count_partitions(n, 2, SizeConstraint::None) != (std::uint64_t{1} << (n - 1)) - 1) ++bad;
    }
    o.require(bad == 0, "Stirling recurrence for 1 <= k <= n <= 10 and 2^(n-1)-1 at k=2: " + std::to_string(bad) +
                            " mismatches");
    return o;
}

Outcome conjecture() {
    Outcome o;
    const ConjectureResult r = conjecture_search(5);
    std::string note = "max-util remove undirected d2, n <= 5: " + std::to_string(r.views) + " views, " +
                       std::to_string(r.deltas) + " deltas";
    if (r.counterexample) {
        const SafeReport again = classify_d_safe(extract_view(r.counterexample->network, 0, 2), r.counterexample->spec,
                                                 {2, Objective::MaxUtil, SizeConstraint::None});
        note += "; hit " + witness_to_json(*r.counterexample).dump() + " re-classifies weak-safe=" +
                (again.weak.safe ? "true" : "false");
    }
    o.require(!r.counterexample && r.views > 0, note);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    bool verbose = false;
    app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 8));
    app.add_flag("-v,--verbose", verbose, "print every check");
    CLI11_PARSE(app, argc, argv);

    const std::pair<const char*, Outcome (*)()> criteria[] = {
        {"resistance exhaustion", resistance_theorems},
        {"three-clique removal witness", three_clique_witness},
        {"distance-2 susceptibility rows", distance2_susceptibility},
        {"distance-1 exhaustion and exceptions", distance1_util},
        {"equal-size enumeration and rows", equal_size},
        {"cut duality", cut_duality},
        {"partition counts", partition_counts},
        {"bounded conjecture search", conjecture},
    };
    bool all = true;
    for (int i = 1; i <= 8; ++i) {
        if (only && only != i) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i - 1].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i << ": " << criteria[i - 1].first << " ("
                  << std::fixed << std::setprecision(1) << secs << "s)\n";
        for (const std::string& n : o.notes) {
            if (verbose || !o.pass || only) std::cout << "    " << n << "\n";
        }
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
