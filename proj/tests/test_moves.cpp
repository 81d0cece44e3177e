#include <doctest.h>

#include "zzag/moves.hpp"

using namespace zzag;

namespace {

ZigzagType zt(std::initializer_list<long long> ws) {
    std::vector<Weight> v;
    for (long long w : ws) v.emplace_back(w);
    return ZigzagType(std::move(v));
}

std::vector<Weight> chain_of(const DualGraph& g, const std::string& from_label) {
    auto id = g.find_label(from_label);
    REQUIRE(id.has_value());
    return g.extract_chain_type(*id).weights();
}

MarkedZigzag run_links(const ReversionLinks& rl) {
    MarkedZigzag cur = rl.start;
    for (const auto& link : rl.links) cur = apply_link(cur, link).zigzag;
    return cur;
}

} // namespace

TEST_CASE("tail reversal") {
    CHECK(reversion_transform(zt({0, -1, -2, -3})) == zt({0, -1, -3, -2}));
    CHECK(reversion_transform(zt({0, -1})) == zt({0, -1}));
    CHECK(reversion_transform(zt({0, -1, -2, -2})) == zt({0, -1, -2, -2}));
    CHECK_THROWS_AS(reversion_transform(zt({0, -2, -3})), DomainError);
}

TEST_CASE("link word for the tail (-3)") {
    auto rl = reversion_links(zt({0, -1, -3}));
    CHECK(rl.links.size() == 5);
    auto counts = count_kinds(rl.links);
    CHECK(counts == LinkKindCounts{2, 1, 0, 2});
    CHECK(counts == expected_reversion_link_counts(zt({0, -1, -3}).tail()));

    // sweep schedule from the composite-move figures
    REQUIRE(rl.schedule.size() == 3);
    CHECK(rl.schedule[0].name == "theta0");
    CHECK(rl.schedule[0].after == zt({-2, 0, -1}));
    CHECK(rl.schedule[1].name == "phi1");
    CHECK(rl.schedule[1].after == zt({-1, 0, -2}));
    CHECK(rl.schedule[2].name == "theta1");
    CHECK(rl.schedule[2].after == zt({0, -1, -3}));

    CHECK(run_links(rl).oriented_type() == reversion_transform(zt({0, -1, -3})));
}

TEST_CASE("link word for a general tail replays to the reversed tail") {
    for (auto tail : std::vector<std::vector<long long>>{
             {}, {-2}, {-3}, {-4}, {-2, -2}, {-2, -3}, {-3, -2}, {-4, -3}, {-2, -2, -2},
             {-3, -2, -4}, {-5, -2, -2, -3}}) {
        std::vector<Weight> w{Weight(0), Weight(-1)};
        for (long long t : tail) w.emplace_back(t);
        ZigzagType t(w);
        auto rl = reversion_links(t);
        CHECK(run_links(rl).oriented_type() == reversion_transform(t));
        CHECK(count_kinds(rl.links) == expected_reversion_link_counts(t.tail()));
    }
}

TEST_CASE("runs of (-2)-curves use one contraction and one blow-up per sweep step") {
    // a tail of r (-2)-curves: r+1 contractions and r+1 blow-ups of kind III/IV
    for (std::size_t r = 1; r <= 4; ++r) {
        std::vector<Weight> w{Weight(0), Weight(-1)};
        for (std::size_t i = 0; i < r; ++i) w.emplace_back(-2);
        auto rl = reversion_links(ZigzagType(w));
        auto c = count_kinds(rl.links);
        CHECK(c.i == r + 1);
        CHECK(c.ii == 0);
        CHECK(c.iii + c.iv == r + 1);
        CHECK(c.iv == 2);
    }
}

TEST_CASE("graph replay agrees with the chain rewriting") {
    for (auto tail : std::vector<std::vector<long long>>{{-3}, {-2, -2}, {-4, -3}, {-2, -3, -2}}) {
        std::vector<Weight> w{Weight(0), Weight(-1)};
        for (long long t : tail) w.emplace_back(t);
        ZigzagType t(w);
        auto rl = reversion_links(t);
        GraphLinkReplay replay(rl.start);
        MarkedZigzag direct = rl.start;
        for (const auto& link : rl.links) {
            replay.apply(link);
            direct = apply_link(direct, link).zigzag;
            CHECK(replay.marked() == direct);
        }
        CHECK(replay.marked().oriented_type() == reversion_transform(t));
    }
}

TEST_CASE("resolution chain for the tail (-3,-3)") {
    DualGraph g = reversion_resolution(zt({0, -1, -3, -3}));
    CHECK(chain_of(g, "E2") ==
          std::vector<Weight>{Weight(-3), Weight(-3), Weight(-1), Weight(-2), Weight(-3),
                              Weight(-2), Weight(-1), Weight(-3), Weight(-3)});
    // the designated contractions recover both boundaries
    std::set<NodeId> keep_src{*g.find_label("E2"), *g.find_label("E1"), *g.find_label("C"),
                              *g.find_label("F")};
    CHECK(g.replay_contraction(keep_src).graph.extract_chain_type(*g.find_label("E2")) ==
          zt({-3, -3, -1, 0}));
    std::set<NodeId> keep_dst{*g.find_label("F'"), *g.find_label("C'"), *g.find_label("E1'"),
                              *g.find_label("E2'")};
    CHECK(g.replay_contraction(keep_dst).graph.extract_chain_type(*g.find_label("F'")) ==
          zt({0, -1, -3, -3}));
}

TEST_CASE("resolution chain for the mixed tail (-4,-3)") {
    DualGraph g = reversion_resolution(zt({0, -1, -4, -3}));
    CHECK(chain_of(g, "E2") ==
          std::vector<Weight>{Weight(-3), Weight(-4), Weight(-1), Weight(-2), Weight(-2),
                              Weight(-3), Weight(-2), Weight(-1), Weight(-3), Weight(-4)});
    std::set<NodeId> keep{*g.find_label("F'"), *g.find_label("C'"), *g.find_label("E1'"),
                          *g.find_label("E2'")};
    CHECK(g.replay_contraction(keep).graph.extract_chain_type(*g.find_label("F'")) ==
          zt({0, -1, -3, -4}));
}

TEST_CASE("an all-(-2) tail glues along a single middle curve") {
    DualGraph g = reversion_resolution(zt({0, -1, -2, -2}));
    CHECK(g.node_count() == 7); // both boundaries of length 4 sharing one curve
    CHECK(g.is_chain());
    // the shared middle curve is the original 0-curve, hit by one blow-up per
    // sweep step
    auto f = g.find_label("F");
    REQUIRE(f.has_value());
    CHECK(g.node(*f).weight == -3);
    CHECK_FALSE(g.find_label("F'").has_value());
    std::set<NodeId> keep{*g.find_label("E2"), *g.find_label("E1"), *g.find_label("C"), *f};
    CHECK(g.replay_contraction(keep).graph.extract_chain_type(*g.find_label("E2")) ==
          zt({-2, -2, -1, 0}));

    DualGraph h = reversion_resolution(zt({0, -1}));
    CHECK(h.node_count() == 3);
    CHECK(chain_of(h, "C") == std::vector<Weight>{Weight(-1), Weight(-1), Weight(-1)});
}

TEST_CASE("fibration-preserving resolution tree") {
    DualGraph d2 = fibered_resolution(Weight(2));
    CHECK(d2.node_count() == 5);
    CHECK(d2.node(*d2.find_label("C")).weight == -2);
    CHECK(d2.adjacent(*d2.find_label("M"), *d2.find_label("F")));
    CHECK(d2.adjacent(*d2.find_label("M"), *d2.find_label("F'")));

    DualGraph d3 = fibered_resolution(Weight(3));
    CHECK(d3.node_count() == 7);
    CHECK(d3.node(*d3.find_label("C")).weight == -3);
    CHECK(d3.adjacent(*d3.find_label("M"), *d3.find_label("H1")));
    CHECK(d3.adjacent(*d3.find_label("H1"), *d3.find_label("F")));

    for (long long d = 2; d <= 6; ++d) {
        DualGraph g = fibered_resolution(Weight(d));
        CHECK(g.node_count() == 2 * (static_cast<std::size_t>(d) - 2) + 5);
        // contracting everything except one designated side recovers the
        // 1-standard chain with the same tail
        std::set<NodeId> keep{*g.find_label("E"), *g.find_label("C"), *g.find_label("F")};
        auto res = g.replay_contraction(keep);
        CHECK(res.graph.extract_chain_type(*g.find_label("F")) == zt({0, -1, -2}));
        std::set<NodeId> keep2{*g.find_label("E"), *g.find_label("C"), *g.find_label("F'")};
        CHECK(g.replay_contraction(keep2).graph.extract_chain_type(*g.find_label("F'")) ==
              zt({0, -1, -2}));
    }

    CHECK_THROWS_AS(fibered_resolution(Weight(1)), DomainError);
}

TEST_CASE("adjacent move composition") {
    std::vector<Weight> deep{Weight(-2), Weight(-3)};
    std::vector<Weight> shallow{Weight(-2), Weight(-2)};

    auto same = compose_adjacent(Reversion{"p", "p'"}, Reversion{"p'", "q"}, deep);
    CHECK(same.composed);
    CHECK(is_isomorphism(same.move));

    auto merged = compose_adjacent(Reversion{"p", "p'"}, Reversion{"q", "q'"}, shallow);
    CHECK(merged.composed);
    REQUIRE(is_reversion(merged.move));
    CHECK(std::get<Reversion>(merged.move) == Reversion{"p", "q'"});

    auto blocked = compose_adjacent(Reversion{"p", "p'"}, Reversion{"q", "q'"}, deep);
    CHECK_FALSE(blocked.composed);

    auto fibs = compose_adjacent(FiberedModification{Weight(2), "", false},
                                 FiberedModification{Weight(3), "", false}, deep);
    CHECK(fibs.composed);
    REQUIRE(is_fibered(fibs.move));
    CHECK(std::get<FiberedModification>(fibs.move).possibly_identity);
    CHECK(std::get<FiberedModification>(fibs.move).degree == 3);

    auto cross = compose_adjacent(Reversion{"p", "p'"}, FiberedModification{Weight(2), "", false},
                                  shallow);
    CHECK_FALSE(cross.composed);
}
