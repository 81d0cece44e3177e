#include <doctest.h>

#include "zzag/family23.hpp"
#include "zzag/moves.hpp"

using namespace zzag;

namespace {

const Field F5 = Field::prime(5);
const Field Q = Field::rationals();

} // namespace

TEST_CASE("transition table") {
    // reduced pair with a center off the two marked points
    auto r1 = revert(make_pair23(Family23::I), Center23{Q.from_int(2)});
    CHECK(r1.target.family == Family23::II);
    CHECK(*r1.target.param == *Q.parse_scalar("1/2"));
    CHECK(r1.out_range == LambdaRange::Nonzero);

    auto r2 = revert(make_pair23(Family23::I), Center23{Q.zero()});
    CHECK(r2.target.family == Family23::IV);
    CHECK(r2.out_range == LambdaRange::AnyValue);
    CHECK(revert(make_pair23(Family23::I), Center23{Q.one()}).target.family == Family23::IV);

    Scalar a = Q.from_int(3);
    auto r3 = revert(make_pair23(Family23::II, a), Center23{Q.zero()});
    CHECK(r3.target.family == Family23::III);
    CHECK(*r3.target.param == a);

    auto r4 = revert(make_pair23(Family23::II, a), Center23{Q.from_int(7)});
    CHECK(r4.target.family == Family23::I);
    REQUIRE(r4.out_range == LambdaRange::Fixed);
    CHECK(*r4.out_value == (Q.one() - a).inverse()); // 1/(1-a)

    auto r5 = revert(make_pair23(Family23::III, a), Center23{Q.from_int(4)});
    CHECK(r5.target.family == Family23::II);
    CHECK(*r5.target.param == a);
    CHECK(*r5.out_value == Q.zero());

    auto r6 = revert(make_pair23(Family23::IV), Center23{Q.from_int(9)});
    CHECK(r6.target.family == Family23::I);
    CHECK(r6.out_range == LambdaRange::ZeroOrOne);
}

TEST_CASE("round trip through the one-parameter family recovers the reduced pair") {
    Scalar lambda = Q.from_int(4);
    auto out = revert(make_pair23(Family23::I), Center23{lambda});
    REQUIRE(out.target.family == Family23::II);
    auto back = revert(out.target, Center23{Q.from_int(2)}); // any nonzero center
    CHECK(back.target.family == Family23::I);
}

TEST_CASE("parameters avoid 0 and 1") {
    CHECK_THROWS_AS(make_pair23(Family23::II, Q.zero()), DomainError);
    CHECK_THROWS_AS(make_pair23(Family23::II, Q.one()), DomainError);
    CHECK_THROWS_AS(make_pair23(Family23::I, Q.from_int(2)), DomainError);
    CHECK_THROWS_AS(make_pair23(Family23::II), DomainError);
}

TEST_CASE("boundary types flip across every transition") {
    std::vector<std::pair<Pair23, Scalar>> cases{
        {make_pair23(Family23::I), Q.from_int(2)},
        {make_pair23(Family23::I), Q.zero()},
        {make_pair23(Family23::II, Q.from_int(3)), Q.zero()},
        {make_pair23(Family23::II, Q.from_int(3)), Q.one()},
        {make_pair23(Family23::III, Q.from_int(3)), Q.from_int(5)},
        {make_pair23(Family23::IV), Q.from_int(5)},
    };
    for (const auto& [pair, lambda] : cases) {
        auto out = revert(pair, Center23{lambda});
        CHECK(boundary_type(out.target.family) ==
              reversion_transform(boundary_type(pair.family)));
    }
}

TEST_CASE("parameter classes under inversion") {
    CHECK(iso_class_label(make_pair23(Family23::II, F5.from_int(3))) == "II{2,3}");
    CHECK(iso_class_label(make_pair23(Family23::II, F5.from_int(2))) == "II{2,3}");
    CHECK(iso_class_label(make_pair23(Family23::II, F5.from_int(4))) == "II{4}");
    CHECK(iso_class_label(make_pair23(Family23::III, F5.from_int(3))) ==
          iso_class_label(make_pair23(Family23::III, F5.from_int(2))));
    CHECK(iso_class_label(make_pair23(Family23::I)) == "I");
}

TEST_CASE("fibration-class graph over small prime fields") {
    FibrationGraph g5 = build_graph23(F5);
    CHECK(g5.vertex_count() == 6); // I, IV, II{2,3}, III{2,3}, II{4}, III{4}
    CHECK(g5.geometric_edge_count() == 5);
    CHECK(g5.connected());
    CHECK(g5.is_tree());
    CHECK(g5.deep_curve_hypothesis());
    auto verdict = tree_criterion(g5);
    REQUIRE(verdict.generated.has_value());
    CHECK(*verdict.generated);

    FibrationGraph g7 = build_graph23(Field::prime(7));
    CHECK(g7.vertex_count() == 8); // classes {2,4}, {3,5}, {6}
    CHECK(g7.geometric_edge_count() == 7);
    CHECK(g7.is_tree());

    CHECK_THROWS_AS(build_graph23(Field::prime(2)), DomainError);
    CHECK_THROWS_AS(build_graph23(Q), DomainError);
}

TEST_CASE("partial graph over the rationals") {
    std::vector<Scalar> params{Q.from_int(2)};
    FibrationGraph g = build_graph23(Q, params);
    CHECK(g.vertex_count() == 4); // I, IV, II{1/2,2}, III{1/2,2}
    CHECK(g.is_tree());
    CHECK(g.has_vertex("II{1/2,2}"));
}

TEST_CASE("every graph edge is realized by a transition") {
    FibrationGraph g = build_graph23(F5);
    // one witness per geometric edge, produced by revert itself
    auto lambda_for = [&](const Scalar& a) { return (F5.one() - a).inverse(); };
    CHECK(revert(make_pair23(Family23::I), Center23{F5.zero()}).target.family == Family23::IV);
    for (long long v : {2, 3, 4}) {
        Scalar a = F5.from_int(v);
        auto to2 = revert(make_pair23(Family23::I), Center23{lambda_for(a)});
        CHECK(g.has_vertex(iso_class_label(to2.target)));
        auto to3 = revert(make_pair23(Family23::II, a), Center23{F5.zero()});
        CHECK(g.has_vertex(iso_class_label(to3.target)));
    }
}
