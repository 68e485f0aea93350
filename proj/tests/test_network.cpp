#include <doctest.h>

#include <random>

#include "coalmanip/network.hpp"
#include "oracle.hpp"

using namespace coalmanip;

namespace {

SocialNetwork triangle() { return SocialNetwork(3, false, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("build_from_reports aggregation rules") {
    const ReportProfile one_sided{{1}, {}};
    CHECK(build_from_reports(one_sided, false, Aggregation::Or).has_edge(0, 1));
    CHECK(build_from_reports(one_sided, false, Aggregation::And).edge_count() == 0);

    const SocialNetwork d = build_from_reports({{1}, {0, 2}, {}}, true, Aggregation::And);
    CHECK(d.edges() == std::vector<Edge>{{0, 1}, {1, 0}, {1, 2}});

    CHECK(build_from_reports({{1}, {0}}, false, Aggregation::And).has_edge(1, 0));
    CHECK_THROWS_AS(build_from_reports({{0}, {}}, false, Aggregation::Or), InvalidInput);
    CHECK_THROWS_AS(build_from_reports({{2}, {}}, false, Aggregation::Or), InvalidInput);
}

TEST_CASE("neighbours") {
    CHECK(neighbours(triangle(), 0) == (bit(1) | bit(2)));
    CHECK(neighbours(SocialNetwork(2, true, {{0, 1}}), 1) == 0);
    CHECK(neighbours(SocialNetwork(4, false), 3) == 0);
    CHECK_THROWS_AS(neighbours(triangle(), 3), InvalidInput);
}

TEST_CASE("network invariants") {
    CHECK_THROWS_AS(SocialNetwork(3, false, {{1, 1}}), InvalidInput);
    CHECK_THROWS_AS(SocialNetwork(3, false, {{0, 3}}), InvalidInput);
    const SocialNetwork u(3, false, {{2, 0}});
    CHECK(u.has_edge(0, 2));
    CHECK(u.has_edge(2, 0));
    CHECK(u.edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("apply_manipulation examples") {
    const SocialNetwork t = triangle();
    CHECK(apply_manipulation(t, {0, Mode::RemoveOnly, {}}) == t);

    const SocialNetwork r = apply_manipulation(t, {0, Mode::RemoveOnly, {{0, 1}}});
    CHECK(r.edges() == std::vector<Edge>{{0, 2}, {1, 2}});

    const SocialNetwork d(2, true, {{0, 1}, {1, 0}});
    const SocialNetwork dm = apply_manipulation(d, {0, Mode::RemoveOnly, {{0, 1}}});
    CHECK(dm.edges() == std::vector<Edge>{{1, 0}});
    CHECK(neighbours(dm, 1) == bit(0));
}

TEST_CASE("manipulation preconditions") {
    const SocialNetwork t = triangle();
    CHECK_THROWS_AS(apply_manipulation(t, {0, Mode::AddOnly, {{0, 1}}}), InvalidInput);
    CHECK_THROWS_AS(apply_manipulation(SocialNetwork(3, false), {0, Mode::RemoveOnly, {{0, 1}}}), InvalidInput);
    CHECK_THROWS_AS(apply_manipulation(SocialNetwork(3, false), {0, Mode::AddOnly, {{1, 2}}}), InvalidInput);
    // Directed manipulators only touch their own outgoing edges.
    const SocialNetwork d(3, true, {{1, 0}});
    CHECK_THROWS_AS(apply_manipulation(d, {0, Mode::RemoveOnly, {{1, 0}}}), InvalidInput);
    CHECK_THROWS_AS(apply_manipulation(d, {0, Mode::AddOnly, {{2, 0}}}), InvalidInput);
    CHECK(apply_manipulation(d, {0, Mode::AddOnly, {{0, 2}}}).has_edge(0, 2));
}

TEST_CASE("utility examples") {
    CHECK(utility(triangle(), 0, all_agents(3)) == 2);
    CHECK(utility(triangle(), 1, bit(1)) == 0);
    CHECK(utility(SocialNetwork(2, true, {{0, 1}}), 1, bit(0) | bit(1)) == 0);
    CHECK_THROWS_AS(utility(triangle(), 0, bit(1)), InvalidInput);
}

TEST_CASE("manipulation round trips and locality on random networks") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const bool directed = trial % 2 == 1;
        const int n = 2 + trial % 7;
        const SocialNetwork net = oracle::to_network(oracle::random_graph(rng, n, directed, 0.4));
        const AgentId m = static_cast<AgentId>(rng() % n);
        for (Mode mode : {Mode::AddOnly, Mode::RemoveOnly}) {
            const std::vector<Edge> cand = candidate_edges(net, m, mode);
            std::vector<Edge> delta;
            for (const Edge& e : cand) {
                if (rng() % 2) delta.push_back(e);
            }
            const SocialNetwork after = apply_manipulation(net, {m, mode, delta});
            const Mode back = mode == Mode::AddOnly ? Mode::RemoveOnly : Mode::AddOnly;
            CHECK(apply_manipulation(after, {m, back, delta}) == net);
            for (AgentId a = 0; a < n; ++a) {
                if (directed && a != m) CHECK(after.neighbours(a) == net.neighbours(a));
                for (AgentId b = 0; b < n; ++b) {
                    if (!directed) CHECK(net.has_edge(a, b) == net.has_edge(b, a));
                }
            }
            for (AgentMask c = 1; c < (AgentMask{1} << n); c += 1 + rng() % 5) {
                for (AgentId a : agents_of(c)) {
                    if (directed && a != m) CHECK(utility(after, a, c) == utility(net, a, c));
                }
            }
        }
    }
}

TEST_CASE("mode names") {
    CHECK(parse_mode("add") == Mode::AddOnly);
    CHECK(parse_mode("remove") == Mode::RemoveOnly);
    CHECK(to_string(Mode::RemoveOnly) == "remove");
    CHECK_THROWS(parse_mode("toggle"));
}
