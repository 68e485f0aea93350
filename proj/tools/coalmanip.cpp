#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "coalmanip/io.hpp"
#include "coalmanip/manipulation.hpp"
#include "coalmanip/parallel.hpp"
#include "coalmanip/views.hpp"
#include "coalmanip/witness.hpp"

using namespace coalmanip;

namespace {

enum Exit { kOk = 0, kClaimFailure = 1, kInputError = 2, kRefused = 3 };

struct Common {
    int k = 2;
    std::string objective = "max-util";
    bool equal_size = false;
    bool as_json = false;
    int workers = default_workers();
    std::size_t slot_cap = kDefaultSlotCap;

    GameSettings game() const {
        return {k, parse_objective(objective), equal_size ? SizeConstraint::EqualSize : SizeConstraint::None};
    }
};

void add_game_options(CLI::App* cmd, Common& c) {
    cmd->add_option("-k", c.k, "number of coalitions")->check(CLI::PositiveNumber);
    cmd->add_option("-o,--objective", c.objective, "max-util | max-egal | at-least-1");
    cmd->add_flag("--equal-size", c.equal_size, "restrict coalition sizes to floor/ceil of n/k");
}

std::string flag(bool b) { return b ? "yes" : "no"; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

/// Loads a network file; witness files also supply a manipulation.
struct Loaded {
    SocialNetwork network{1, false};
    std::optional<ManipulationSpec> spec;
    std::vector<std::string> labels;
};

Loaded load_graph(const std::string& path) {
    const json j = read_json_file(path);
    if (j.contains("mode")) {
        ManipulationWitness w = witness_from_json(j);
        return {std::move(w.network), std::move(w.spec), std::move(w.labels)};
    }
    if (j.contains("nodes") || j.contains("cliques")) {
        ExpandedWitness e = expand_witness(witness_spec_from_json(j));
        return {std::move(e.network), std::nullopt, std::move(e.labels)};
    }
    return {network_from_json(j), std::nullopt, {}};
}

std::vector<Edge> parse_delta(const std::string& text) {
    try {
        return edges_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
        throw ParseError("delta must be a JSON edge list such as [[0,2]]: " + std::string(e.what()));
    }
}

ManipulationSpec manipulation_from(const std::optional<ManipulationSpec>& bundled, std::optional<int> m,
                                   const std::string& mode, const std::optional<std::string>& delta) {
    ManipulationSpec spec = bundled.value_or(ManipulationSpec{});
    if (m) spec.manipulator = *m;
    if (!mode.empty()) spec.mode = parse_mode(mode);
    if (delta) spec.delta = parse_delta(*delta);
    if (!bundled && mode.empty()) throw ParseError("--mode is required");
    return spec;
}

// ------------------------------------------------------------------ solve

int run_solve(const Common& c, const std::string& path, std::size_t limit) {
    const SocialNetwork net = load_graph(path).network;
    const GameSettings g = c.game();
    const SolutionSet sols = solution_set(net, g.k, g.objective, g.constraint);
    const bool infeasible = sols.structures.empty();
    if (c.as_json) {
        json structures = json::array();
        for (std::size_t i = 0; i < sols.structures.size() && i < limit; ++i) {
            const CoalitionStructure& p = sols.structures[i];
            json utilities = json::array();
            for (AgentId a = 0; a < net.size(); ++a) utilities.push_back(utility(net, a, p.coalition_of(a)));
            structures.push_back({{"blocks", structure_to_json(p)}, {"utilities", utilities}});
        }
        json out{{"objective", to_string(g.objective)},
                 {"k", g.k},
                 {"constraint", to_string(g.constraint)},
                 {"count", sols.structures.size()},
                 {"infeasible", infeasible},
                 {"structures", structures}};
        out["score"] = sols.score ? json(*sols.score) : json(nullptr);
        print_json(out);
        return kOk;
    }
    std::cout << to_string(g.objective) << " k=" << g.k << " constraint=" << to_string(g.constraint) << "\n";
    if (sols.score) std::cout << "score: " << *sols.score << "\n";
    if (infeasible) std::cout << "INFEASIBLE\n";
    std::cout << "structures: " << sols.structures.size() << "\n";
    for (std::size_t i = 0; i < sols.structures.size() && i < limit; ++i) {
        const CoalitionStructure& p = sols.structures[i];
        std::cout << "  " << p.to_string() << "  utilities:";
        for (AgentId a = 0; a < net.size(); ++a) std::cout << ' ' << utility(net, a, p.coalition_of(a));
        std::cout << "\n";
    }
    if (sols.structures.size() > limit) std::cout << "  ... " << sols.structures.size() - limit << " more\n";
    return kOk;
}

// --------------------------------------------------------------- classify

void print_report(const ImprovementReport& r) {
    std::printf("  before  [u0, u1] = [%d, %d]\n  after   [v0, v1] = [%d, %d]\n", r.u0, r.u1, r.v0, r.v1);
    std::printf("  lb %s  ub %s  weak %s  strict %s\n", flag(r.lb).c_str(), flag(r.ub).c_str(), flag(r.weak).c_str(),
                flag(r.strict).c_str());
}

int run_classify(const Common& c, const std::string& path, std::optional<int> m, const std::string& mode,
                 const std::optional<std::string>& delta, bool do_search, int max_delta) {
    const Loaded in = load_graph(path);
    const GameSettings g = c.game();
    if (do_search) {
        if (mode.empty() && !in.spec) throw ParseError("--mode is required");
        const AgentId who = m.value_or(in.spec ? in.spec->manipulator : 0);
        const Mode md = mode.empty() ? in.spec->mode : parse_mode(mode);
        const auto best = search(in.network, who, md, g, max_delta);
        if (c.as_json) {
            json out{{"found", best.has_value()}};
            if (best) {
                out["manipulator"] = who;
                out["mode"] = to_string(md);
                out["delta"] = edges_to_json(best->spec.delta);
                out["report"] = report_to_json(best->report);
            }
            print_json(out);
        } else if (!best) {
            std::cout << "no improving manipulation\n";
        } else {
            std::cout << "best delta " << edges_to_json(best->spec.delta).dump() << "\n";
            print_report(best->report);
        }
        return kOk;
    }
    const ManipulationSpec spec = manipulation_from(in.spec, m, mode, delta);
    const ImprovementReport r = classify(in.network, spec, g);
    if (c.as_json) {
        json out = report_to_json(r);
        out["manipulator"] = spec.manipulator;
        out["mode"] = to_string(spec.mode);
        out["delta"] = edges_to_json(spec.delta);
        out["min_kcut_before"] = min_kcut_value(in.network, g.k, g.constraint);
        out["min_kcut_after"] = min_kcut_value(apply_manipulation(in.network, spec), g.k, g.constraint);
        print_json(out);
        return kOk;
    }
    std::cout << to_string(g.objective) << " k=" << g.k << " m=" << spec.manipulator << " " << to_string(spec.mode)
              << " " << edges_to_json(spec.delta).dump() << "\n";
    print_report(r);
    return kOk;
}

// ------------------------------------------------------------------- safe

PartialView load_view(const std::string& path, std::optional<int> d, std::optional<ManipulationSpec>& bundled) {
    const json j = read_json_file(path);
    if (j.contains("known_edges")) return view_from_json(j);
    const Loaded in = load_graph(path);
    bundled = in.spec;
    const AgentId m = in.spec ? in.spec->manipulator : 0;
    return extract_view(in.network, m, d.value_or(2));
}

void print_safe(const SafeReport& r) {
    std::cout << "  completions: " << r.completions << "\n";
    for (ImprovementType t : kImprovementTypes) {
        const SafetyVerdict& v = r.verdict(t);
        std::printf("  %-6s safe %s", to_string(t).c_str(), flag(v.safe).c_str());
        if (v.violating_completion) std::cout << "  violated by " << edges_to_json(v.violating_completion->edges()).dump();
        std::cout << "\n";
    }
}

int run_safe(const Common& c, const std::string& path, std::optional<int> d, std::optional<int> m,
             const std::string& mode, const std::optional<std::string>& delta, bool do_search) {
    std::optional<ManipulationSpec> bundled;
    const PartialView view = load_view(path, d, bundled);
    const GameSettings g = c.game();
    if (do_search) {
        if (mode.empty() && !bundled) throw ParseError("--mode is required");
        const Mode md = mode.empty() ? bundled->mode : parse_mode(mode);
        const auto best = search_safe(view, md, g, c.slot_cap);
        if (c.as_json) {
            json out{{"view", view_to_json(view)}, {"found", best.has_value()}, {"completions", view.completion_count()}};
            if (best) {
                out["delta"] = edges_to_json(best->spec.delta);
                out["report"] = safe_report_to_json(best->report);
            }
            print_json(out);
        } else if (!best) {
            std::cout << "no safe manipulation over " << view.completion_count() << " completions\n";
        } else {
            std::cout << "best delta " << edges_to_json(best->spec.delta).dump() << "\n";
            print_safe(best->report);
        }
        return kOk;
    }
    ManipulationSpec spec = manipulation_from(bundled, m, mode, delta);
    if (!m && !bundled) spec.manipulator = view.manipulator();
    const SafeReport r = classify_d_safe(view, spec, g, c.slot_cap);
    if (c.as_json) {
        json out = safe_report_to_json(r);
        out["view"] = view_to_json(view);
        out["delta"] = edges_to_json(spec.delta);
        print_json(out);
    } else {
        std::cout << to_string(g.objective) << " d=" << view.distance() << " m=" << spec.manipulator << " "
                  << to_string(spec.mode) << " " << edges_to_json(spec.delta).dump() << "\n";
        print_safe(r);
    }
    return kOk;
}

// ----------------------------------------------------------------- verify

int run_verify(const Common& c, const std::vector<std::string>& manifests, SearchBounds bounds) {
    bounds.workers = c.workers;
    bounds.slot_cap = c.slot_cap;
    std::vector<Claim> claims;
    for (const std::string& path : manifests) {
        std::vector<Claim> more = load_claims(path);
        claims.insert(claims.end(), more.begin(), more.end());
    }
    bool all = true;
    json results = json::array();
    verify_claims(claims, bounds, [&](const ClaimResult& r) {
        all = all && r.pass;
        if (c.as_json) {
            results.push_back(claim_result_to_json(r));
            return;
        }
        std::printf("%s %-28s %-10s %-7s %-10s %-5s %-10s %s\n", r.pass ? "PASS" : "FAIL", r.claim.id.c_str(),
                    to_string(r.claim.objective).c_str(), to_string(r.claim.mode).c_str(),
                    to_string(r.claim.network).c_str(), to_string(r.claim.information).c_str(),
                    to_string(r.claim.constraint).c_str(), to_string(r.claim.verdict).c_str());
        for (const CheckResult& chk : r.checks) {
            std::printf("     %-10s %-12s %s\n", chk.directed ? "directed" : "undirected", chk.method.c_str(),
                        chk.detail.c_str());
        }
        std::fflush(stdout);
    });
    if (c.as_json) print_json(json{{"pass", all}, {"claims", results}});
    return all ? kOk : kClaimFailure;
}

// ---------------------------------------------------------------- witness

int run_witness(const Common& c, SynthesisQuery q, const std::string& network, const std::string& info,
                const std::string& target, const std::string& mode) {
    const GameSettings g = c.game();
    q.objective = g.objective;
    q.constraint = g.constraint;
    q.k = g.k;
    q.mode = parse_mode(mode);
    const NetworkKind kind = parse_network_kind(network);
    if (kind == NetworkKind::Both) throw ParseError("--network must be directed or undirected");
    q.directed = kind == NetworkKind::Directed;
    q.information = parse_information(info);
    const std::vector<ImprovementType> types = verdict_types(parse_verdict(target));
    if (is_resistance(parse_verdict(target))) throw ParseError("--target must be Strict, Weak, UB or LB");
    q.target = types.front();
    SearchBounds bounds;
    bounds.workers = c.workers;
    bounds.slot_cap = c.slot_cap;
    SynthesisStats stats;
    const auto w = synthesize_witness(q, bounds, &stats);
    if (c.as_json) {
        json out{{"found", w.has_value()}, {"instances", stats.instances}, {"skipped_over_cap", stats.skipped_over_cap}};
        if (w) {
            out["witness"] = witness_to_json(*w);
            out["check"] = check_witness(*w, q.information, q.target, g, c.slot_cap).evidence["report"];
        }
        print_json(out);
    } else if (!w) {
        std::cout << "none with n<=" << q.max_n << " (" << stats.instances << " instances, " << stats.skipped_over_cap
                  << " over slot cap)\n";
    } else {
        std::cout << witness_to_json(*w).dump() << "\n";
    }
    return kOk;
}

// ------------------------------------------------------------- conjecture

int run_conjecture(const Common& c, int max_n) {
    const ConjectureResult r = conjecture_search(max_n, c.slot_cap, c.workers, c.k);
    if (c.as_json) {
        json out{{"max_n", max_n}, {"views", r.views}, {"deltas", r.deltas}, {"found", r.counterexample.has_value()}};
        if (r.counterexample) {
            out["counterexample"] = witness_to_json(*r.counterexample);
            out["report"] = safe_report_to_json(*r.report);
        }
        print_json(out);
    } else if (r.counterexample) {
        std::cout << "COUNTEREXAMPLE " << witness_to_json(*r.counterexample).dump() << "\n";
    } else {
        std::cout << "none found: " << r.views << " views, " << r.deltas << " deltas, n<=" << max_n << "\n";
    }
    return r.counterexample ? kClaimFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of edge manipulation in k-coalitional games"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_flag("--json", c.as_json, "machine-readable output");
    app.add_option("--workers", c.workers, "worker threads (default: COALMANIP_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--slot-cap", c.slot_cap, "largest number of free slots a view may have")
        ->check(CLI::PositiveNumber);

    std::string path;
    std::optional<int> m;
    std::optional<int> d;
    std::string mode;
    std::optional<std::string> delta;
    bool do_search = false;

    auto* solve = app.add_subcommand("solve", "solution set of a network");
    std::size_t limit = 50;
    solve->add_option("graph", path, "network JSON")->required();
    solve->add_option("--limit", limit, "structures to print");
    add_game_options(solve, c);

    auto* cls = app.add_subcommand("classify", "classify a manipulation under full information");
    int max_delta = -1;
    cls->add_option("graph", path, "network or witness JSON")->required();
    cls->add_option("-m,--manipulator", m, "manipulating agent");
    cls->add_option("--mode", mode, "add | remove");
    cls->add_option("--delta", delta, "edge list, e.g. [[0,2]]");
    cls->add_flag("--search", do_search, "search all deltas for the best one");
    cls->add_option("--max-delta", max_delta, "largest delta considered by --search");
    add_game_options(cls, c);

    auto* safe = app.add_subcommand("safe", "d-safe classification over all completions of a view");
    safe->add_option("view", path, "view JSON, or a network/witness JSON to extract the view from")->required();
    safe->add_option("-d,--distance", d, "distance when extracting from a network (default 2)")
        ->check(CLI::Range(1, 2));
    safe->add_option("-m,--manipulator", m, "manipulating agent");
    safe->add_option("--mode", mode, "add | remove");
    safe->add_option("--delta", delta, "edge list, e.g. [[0,2]]");
    safe->add_flag("--search", do_search, "search all deltas for the best one");
    add_game_options(safe, c);

    auto* verify = app.add_subcommand("verify", "check claim manifests");
    std::vector<std::string> manifests;
    SearchBounds bounds;
    verify->add_option("manifest", manifests, "claims JSON files")->required();
    verify->add_option("--max-n", bounds.max_n, "exhaustion bound for undirected networks");
    verify->add_option("--max-n-directed", bounds.max_n_directed, "exhaustion bound for directed networks");
    verify->add_option("--synth-max-n", bounds.synth_max_n, "synthesis bound for undirected networks");
    verify->add_option("--synth-max-n-directed", bounds.synth_max_n_directed, "synthesis bound for directed networks");

    auto* wit = app.add_subcommand("witness", "search for the first instance reaching a flag");
    SynthesisQuery q;
    std::string network = "undirected";
    std::string info = "full";
    std::string target;
    wit->add_option("--mode", mode, "add | remove")->required();
    wit->add_option("--network", network, "directed | undirected");
    wit->add_option("--information", info, "full | d1 | d2");
    wit->add_option("--target", target, "Strict | Weak | UB | LB")->required();
    wit->add_option("--max-n", q.max_n, "largest agent count")->check(CLI::Range(2, 10));
    add_game_options(wit, c);

    auto* conj = app.add_subcommand("conjecture", "bounded search for a 2-safe weak improvement by removal");
    int conj_max_n = 5;
    conj->add_option("--max-n", conj_max_n, "largest agent count")->check(CLI::Range(1, 12));
    conj->add_option("-k", c.k, "number of coalitions")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*solve) return run_solve(c, path, limit);
        if (*cls) return run_classify(c, path, m, mode, delta, do_search, max_delta);
        if (*safe) return run_safe(c, path, d, m, mode, delta, do_search);
        if (*verify) return run_verify(c, manifests, bounds);
        if (*wit) return run_witness(c, q, network, info, target, mode);
        if (*conj) return run_conjecture(c, conj_max_n);
    } catch (const SlotCapExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefused;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
