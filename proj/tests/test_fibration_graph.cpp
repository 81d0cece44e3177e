#include <doctest.h>

#include "zzag/fibration_graph.hpp"

using namespace zzag;

namespace {

FibrationGraph loop_graph() {
    FibrationGraph g;
    g.add_vertex("v");
    g.add_arrow("a", "v", "v", "a"); // self-inverse loop
    g.validate();
    return g;
}

// Toy oracle: vertex groups Z/2 = {"", "g"}, every edge group the full Z/2.
struct ToyOracle : GroupOracle {
    bool in_vertex_group(const std::string&, const GroupElement& g) const override {
        return g.token.empty() || g.token == "g";
    }
    GroupElement multiply(const std::string&, const GroupElement& a,
                          const GroupElement& b) const override {
        if (a.token == b.token) return GroupElement{};
        return GroupElement{"g"};
    }
    std::optional<GroupElement> slide(const Arrow&, const GroupElement& g) const override {
        return g; // symmetric edge group
    }
};

// Oracle with trivial edge groups: nothing slides.
struct RigidOracle : ToyOracle {
    std::optional<GroupElement> slide(const Arrow&, const GroupElement& g) const override {
        if (g.token.empty()) return g;
        return std::nullopt;
    }
};

} // namespace

TEST_CASE("cycle rank and the tree predicate") {
    FibrationGraph loop = loop_graph();
    CHECK(loop.cycle_rank() == 1);
    CHECK_FALSE(loop.is_tree());

    FibrationGraph point;
    point.add_vertex("v");
    CHECK(point.cycle_rank() == 0);
    CHECK(point.is_tree());

    FibrationGraph star;
    star.add_vertex("c");
    for (int i = 0; i < 5; ++i) {
        std::string v = "v" + std::to_string(i);
        star.add_vertex(v);
        star.add_arrow("c>" + v, "c", v, v + ">c");
        star.add_arrow(v + ">c", v, "c", "c>" + v);
    }
    star.validate();
    CHECK(star.geometric_edge_count() == 5);
    CHECK(star.is_tree());

    FibrationGraph doubled;
    doubled.add_vertex("a");
    doubled.add_vertex("b");
    doubled.add_arrow("e1", "a", "b", "e1'");
    doubled.add_arrow("e1'", "b", "a", "e1");
    doubled.add_arrow("e2", "a", "b", "e2'");
    doubled.add_arrow("e2'", "b", "a", "e2");
    doubled.validate();
    CHECK(doubled.cycle_rank() == 1);

    FibrationGraph disconnected;
    disconnected.add_vertex("a");
    disconnected.add_vertex("b");
    CHECK_THROWS_AS(disconnected.cycle_rank(), DomainError);
}

TEST_CASE("bar involution is validated") {
    FibrationGraph bad;
    bad.add_vertex("a");
    bad.add_vertex("b");
    bad.add_arrow("e", "a", "b", "missing");
    CHECK_THROWS_AS(bad.validate(), DomainError);

    FibrationGraph mismatched;
    mismatched.add_vertex("a");
    mismatched.add_vertex("b");
    mismatched.add_arrow("e", "a", "b", "f");
    mismatched.add_arrow("f", "a", "b", "e"); // endpoints not swapped
    CHECK_THROWS_AS(mismatched.validate(), OracleInconsistency);
}

TEST_CASE("tree criterion reports only under its hypothesis") {
    FibrationGraph g = loop_graph();
    g.set_deep_curve_hypothesis(false);
    auto refused = tree_criterion(g);
    CHECK_FALSE(refused.hypothesis_holds);
    CHECK_FALSE(refused.generated.has_value());

    g.set_deep_curve_hypothesis(true);
    auto verdict = tree_criterion(g);
    CHECK(verdict.hypothesis_holds);
    REQUIRE(verdict.generated.has_value());
    CHECK_FALSE(*verdict.generated);
}

TEST_CASE("breadth-first closure under a transition oracle") {
    TransitionOracle oracle = [](const std::string& v) -> std::vector<Transition> {
        if (v == "s") return {{"t", "s>t", "t>s"}};
        if (v == "t") return {{"s", "t>s", "s>t"}, {"t", "loop", "loop"}};
        return {};
    };
    FibrationGraph g = build_graph(oracle, {"s"}, true);
    CHECK(g.vertex_count() == 2);
    CHECK(g.geometric_edge_count() == 2);
    CHECK(g.connected());
    CHECK(g.cycle_rank() == 1);

    TransitionOracle broken = [](const std::string&) -> std::vector<Transition> {
        return {{"x", "one-way", "never-produced"}};
    };
    CHECK_THROWS_AS(build_graph(broken, {"s"}, false), OracleInconsistency);
}

TEST_CASE("path reduction cancels an arrow against its inverse") {
    FibrationGraph g;
    g.add_vertex("u");
    g.add_vertex("v");
    g.add_arrow("a", "u", "v", "a'");
    g.add_arrow("a'", "v", "u", "a");
    RigidOracle oracle;
    GraphOfGroups gog(g, oracle);

    GroupPath p{"u", {GroupElement{}, GroupElement{}, GroupElement{"g"}}, {"a", "a'"}};
    GroupPath r = reduce_path(gog, p);
    CHECK(r.arrows.empty());
    REQUIRE(r.groups.size() == 1);
    CHECK(r.groups[0].token == "g");

    // blocked when a nontrivial element sits between the pair
    GroupPath blocked{"u", {GroupElement{}, GroupElement{"g"}, GroupElement{}}, {"a", "a'"}};
    CHECK(reduce_path(gog, blocked).arrows.size() == 2);

    GroupPath ill{"u", {GroupElement{}, GroupElement{}}, {"a'"}};
    CHECK_THROWS_AS(reduce_path(gog, ill), DomainError);
}

TEST_CASE("edge-group elements slide across their arrow") {
    FibrationGraph g;
    g.add_vertex("u");
    g.add_vertex("v");
    g.add_arrow("a", "u", "v", "a'");
    g.add_arrow("a'", "v", "u", "a");
    ToyOracle oracle;
    GraphOfGroups gog(g, oracle);

    GroupPath p{"u", {GroupElement{}, GroupElement{"g"}}, {"a"}};
    GroupPath r = reduce_path(gog, p);
    REQUIRE(r.arrows.size() == 1);
    CHECK(r.groups[0].token == "g"); // moved before the arrow
    CHECK(r.groups[1].token.empty());

    // sliding enables the cancellation
    GroupPath two{"u",
                  {GroupElement{}, GroupElement{"g"}, GroupElement{"g"}},
                  {"a", "a'"}};
    GroupPath done = reduce_path(gog, two);
    CHECK(done.arrows.empty());
    CHECK(done.groups[0].token.empty()); // g then g cancels in Z/2
}

TEST_CASE("self-inverse loops keep their square") {
    FibrationGraph g = loop_graph();
    ToyOracle oracle;
    GraphOfGroups gog(g, oracle);
    gog.set_representative("a", "r");
    CHECK(gog.representative("a") == "r");
    gog.set_loop_square("a", GroupElement{"g"});

    GroupPath p{"v", {GroupElement{}, GroupElement{}, GroupElement{}}, {"a", "a"}};
    GroupPath r = reduce_path(gog, p);
    CHECK(r.arrows.empty());
    REQUIRE(r.groups.size() == 1);
    CHECK(r.groups[0].token == "g"); // the tracked square, not the identity
}

TEST_CASE("fixed paths stay fixed") {
    FibrationGraph g;
    g.add_vertex("u");
    g.add_vertex("v");
    g.add_vertex("w");
    g.add_arrow("a", "u", "v", "a'");
    g.add_arrow("a'", "v", "u", "a");
    g.add_arrow("b", "v", "w", "b'");
    g.add_arrow("b'", "w", "v", "b");
    RigidOracle oracle;
    GraphOfGroups gog(g, oracle);
    GroupPath p{"u", {GroupElement{}, GroupElement{}, GroupElement{}}, {"a", "b"}};
    GroupPath r = reduce_path(gog, p);
    CHECK(r.arrows == std::vector<std::string>{"a", "b"});
}
