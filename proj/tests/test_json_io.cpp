#include <doctest.h>

#include "zzag/json_io.hpp"
#include "zzag/moves.hpp"

using namespace zzag;

namespace {

template <typename T, typename Emit, typename Parse>
void round_trip(const T& value, Emit emit, Parse parse) {
    Json first = emit(value);
    T back = parse(first);
    CHECK(emit(back) == first);
}

} // namespace

TEST_CASE("zigzag round trips") {
    ZigzagType t = ZigzagType::parse("0,-1,-2,-3");
    round_trip(t, [](const ZigzagType& x) { return to_json(x); },
               [](const Json& j) { return zigzag_from_json(j); });
    CHECK(to_json(t)["weights"][0] == 0);

    MarkedZigzag z = MarkedZigzag::from_type(t);
    Json jz = to_json(z);
    CHECK(jz["m"] == 0);
    CHECK(jz["l"] == 1);
    CHECK(to_json(marked_from_json(jz)) == jz);

    Json bad = jz;
    bad["l"] = 2;
    CHECK_THROWS_AS(marked_from_json(bad), DomainError);
}

TEST_CASE("oversized weights fall back to strings") {
    Weight big{"123456789012345678901234567890"};
    Json j = weight_to_json(big);
    CHECK(j.is_string());
    CHECK(weight_from_json(j) == big);
    CHECK(weight_to_json(Weight(-7)) == Json(-7));
}

TEST_CASE("dual graph round trips") {
    DualGraph g = reversion_resolution(ZigzagType::parse("0,-1,-3,-2"));
    round_trip(g, [](const DualGraph& x) { return to_json(x); },
               [](const Json& j) { return dual_graph_from_json(j); });
}

TEST_CASE("links round trip") {
    for (const ElementaryLink& l :
         {ElementaryLink::contract(), ElementaryLink::blow_at_minus_one(LinkSide::Left),
          ElementaryLink::blow_interior(LinkSide::Right),
          ElementaryLink::blow_boundary_intersection(),
          ElementaryLink::blow_boundary_free("tok")}) {
        CHECK(link_from_json(to_json(l)) == l);
    }
    CHECK(to_json(ElementaryLink::blow_interior(LinkSide::Right))["side"] == "right");
}

TEST_CASE("words round trip") {
    MoveWord w(ZigzagType::parse("0,-1,-3"),
               {Reversion{"p0", "p1"}, FiberedModification{Weight(3), "payload", false},
                Isomorphism{}});
    Json j = to_json(w);
    CHECK(j["moves"][0]["kind"] == "rev");
    CHECK(j["moves"][0]["in"] == "p0");
    CHECK(to_json(word_from_json(j)) == j);
    CHECK_THROWS_AS(word_from_json(Json{{"base", Json{{"weights", Json::array({0, -2})}}},
                                        {"moves", Json::array()}}),
                    DomainError);
}

TEST_CASE("fibration graphs round trip") {
    FibrationGraph g;
    g.add_vertex("v");
    g.add_arrow("a", "v", "v", "a");
    g.set_deep_curve_hypothesis(true);
    round_trip(g, [](const FibrationGraph& x) { return to_json(x); },
               [](const Json& j) { return fibration_graph_from_json(j); });
}

TEST_CASE("family descriptors round trip") {
    Field F5 = Field::prime(5);
    Pair23 p = make_pair23(Family23::II, F5.from_int(3));
    Json j = to_json(p, F5);
    CHECK(j["family"] == "II");
    CHECK(j["a"] == "3");
    CHECK(j["field"] == "F5");
    auto [back, k] = pair23_from_json(j);
    CHECK(back == p);
    CHECK(k == F5);
}

TEST_CASE("polynomials and plane maps round trip") {
    Field Q = Field::rationals();
    Poly1 p = Poly1::parse(Q, "w^2-1/2w+3", 'w');
    CHECK(poly1_from_json(Q, to_json(p)) == p);
    CHECK(poly1_from_json(Q, Json::array({"-1", "0", "1"})) == Poly1::parse(Q, "w^2-1", 'w'));

    PolyAut f = PolyAut::parse(Q, "y+x^2, x");
    Json j = to_json(f);
    CHECK(poly_aut_from_json(Q, j) == f);
}

TEST_CASE("json output is deterministic") {
    ZigzagType t = ZigzagType::parse("0,-1,-2");
    CHECK(dump_sorted(to_json(t)) == dump_sorted(to_json(ZigzagType::parse("0,-1,-2"))));
}
