#include <doctest.h>

#include <random>

#include "zzag/dual_graph.hpp"

using namespace zzag;

namespace {

std::vector<Weight> wl(std::initializer_list<long long> ws) {
    std::vector<Weight> v;
    for (long long w : ws) v.emplace_back(w);
    return v;
}

bool same_graph(const DualGraph& a, const DualGraph& b) {
    if (a.node_count() != b.node_count() || a.edges() != b.edges()) return false;
    for (NodeId id : a.node_ids()) {
        if (!b.has_node(id)) return false;
        if (a.node(id).weight != b.node(id).weight) return false;
    }
    return true;
}

} // namespace

TEST_CASE("free blow-up") {
    auto [g, ids] = DualGraph::chain(wl({0}));
    auto up = g.blow_up_free(ids[0]);
    CHECK(up.graph.node(ids[0]).weight == -1);
    CHECK(up.graph.node(up.exceptional).weight == -1);
    CHECK(up.graph.adjacent(ids[0], up.exceptional));
    CHECK(up.graph.total_weight() == g.total_weight() - 2);

    auto [fc, fcids] = DualGraph::chain(wl({0, -1})); // F - C
    auto up2 = fc.blow_up_free(fcids[0]);
    CHECK(up2.graph.extract_chain_type(fcids[1]) == ZigzagType(wl({-1, -1, -1})));
}

TEST_CASE("intersection blow-up") {
    auto [g, ids] = DualGraph::chain(wl({0, -1}));
    auto up = g.blow_up_intersection(ids[0], ids[1]);
    CHECK(up.graph.extract_chain_type(ids[0]) == ZigzagType(wl({-1, -1, -2})));
    CHECK(up.graph.total_weight() == g.total_weight() - 3);
    CHECK_FALSE(up.graph.adjacent(ids[0], ids[1]));

    // inverse pair: contracting the fresh curve restores the graph exactly
    CHECK(same_graph(up.graph.blow_down(up.exceptional), g));

    auto [h, hids] = DualGraph::chain(wl({-2, -1}));
    CHECK(h.blow_up_intersection(hids[0], hids[1]).graph.extract_chain_type(hids[0]) ==
          ZigzagType(wl({-3, -1, -2})));

    CHECK_THROWS_AS(g.blow_up_intersection(ids[0], ids[0]), DomainError);
}

TEST_CASE("blow-down") {
    auto [g, ids] = DualGraph::chain(wl({-1, -1, -2}));
    DualGraph down = g.blow_down(ids[1]);
    CHECK(down.extract_chain_type(ids[0]) == ZigzagType(wl({0, -1})));

    auto [m, mids] = DualGraph::chain(wl({-3, -1, -2}));
    CHECK(m.blow_down(mids[1]).extract_chain_type(mids[0]) == ZigzagType(wl({-2, -1})));

    DualGraph isolated;
    NodeId n = isolated.add_node(Weight(-1));
    CHECK(isolated.blow_down(n).node_count() == 0);
}

TEST_CASE("blow-down rejections") {
    auto [g, ids] = DualGraph::chain(wl({-2, -1}));
    CHECK_THROWS_AS(g.blow_down(ids[0]), NotApplicable); // weight -2

    DualGraph star;
    NodeId c = star.add_node(Weight(-1));
    for (int i = 0; i < 3; ++i) star.add_edge(c, star.add_node(Weight(-2)));
    CHECK_THROWS_AS(star.blow_down(c), NotApplicable); // three branches

    DualGraph tri;
    NodeId a = tri.add_node(Weight(-2)), b = tri.add_node(Weight(-2)),
           e = tri.add_node(Weight(-1));
    tri.add_edge(a, e);
    tri.add_edge(e, b);
    tri.add_edge(a, b);
    CHECK_THROWS_AS(tri.blow_down(e), NotApplicable); // would double the a-b edge
}

TEST_CASE("chain extraction") {
    auto [g, ids] = DualGraph::chain(wl({0, -1, -3}));
    CHECK(g.extract_chain_type(ids[0]) == ZigzagType(wl({0, -1, -3})));
    CHECK(g.extract_chain_type(ids[2]) == ZigzagType(wl({-3, -1, 0})));
    CHECK_THROWS_AS(g.extract_chain_type(ids[1]), DomainError); // not an endpoint

    auto [single, sid] = DualGraph::chain(wl({0}));
    CHECK(single.extract_chain_type(sid[0]) == ZigzagType(wl({0})));

    DualGraph tree;
    NodeId c = tree.add_node(Weight(-2));
    for (int i = 0; i < 3; ++i) tree.add_edge(c, tree.add_node(Weight(-2)));
    CHECK_THROWS_AS(tree.extract_chain_type(tree.node_ids().front()), DomainError);
}

TEST_CASE("blow-ups invert exactly") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Weight> w;
        std::size_t n = 1 + rng() % 6;
        for (std::size_t i = 0; i < n; ++i) w.emplace_back(-static_cast<long long>(rng() % 5));
        auto [g, ids] = DualGraph::chain(w);
        NodeId at = ids[rng() % ids.size()];
        auto free = g.blow_up_free(at);
        CHECK(same_graph(free.graph.blow_down(free.exceptional), g));
        CHECK(free.graph.node_count() == g.node_count() + 1);
        if (n >= 2) {
            std::size_t i = rng() % (n - 1);
            auto cross = g.blow_up_intersection(ids[i], ids[i + 1]);
            CHECK(same_graph(cross.graph.blow_down(cross.exceptional), g));
            CHECK(cross.graph.total_weight() == g.total_weight() - 3);
        }
    }
}

TEST_CASE("replay contraction on the two-sided resolution chain") {
    // total boundary transform of the reversion with tail (-3,-3)
    std::vector<std::string> labels{"E2", "E1", "C", "F", "H", "F'", "C'", "E1'", "E2'"};
    auto weights = wl({-3, -3, -1, -2, -3, -2, -1, -3, -3});
    DualGraph g;
    std::vector<NodeId> ids;
    for (std::size_t i = 0; i < weights.size(); ++i) ids.push_back(g.add_node(weights[i], labels[i]));
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) g.add_edge(ids[i], ids[i + 1]);

    auto left = g.replay_contraction({ids[0], ids[1], ids[2], ids[3]});
    CHECK(left.graph.extract_chain_type(ids[0]) == ZigzagType(wl({-3, -3, -1, 0})));
    CHECK(left.steps.size() == 5);

    auto right = g.replay_contraction({ids[5], ids[6], ids[7], ids[8]});
    CHECK(right.graph.extract_chain_type(ids[5]) == ZigzagType(wl({0, -1, -3, -3})));

    // confluence: contraction order does not change the result
    for (std::uint64_t seed = 1; seed <= 16; ++seed) {
        auto r = g.replay_contraction({ids[0], ids[1], ids[2], ids[3]}, seed);
        CHECK(same_graph(r.graph, left.graph));
    }

    CHECK_THROWS_AS(g.replay_contraction({ids[0]}), NotApplicable); // stuck on (-3)-curves
}

TEST_CASE("dot export carries weights") {
    auto [g, ids] = DualGraph::chain(wl({0, -1}));
    std::string dot = g.to_dot();
    CHECK(dot.find("graph dual") != std::string::npos);
    CHECK(dot.find("-1") != std::string::npos);
}
