#include <doctest.h>

#include "zzag/links.hpp"

using namespace zzag;

namespace {

MarkedZigzag mz(std::initializer_list<long long> ws, std::size_t m) {
    std::vector<Weight> v;
    for (long long w : ws) v.emplace_back(w);
    return MarkedZigzag(std::move(v), m);
}

} // namespace

TEST_CASE("link I contracts next to the positive curve") {
    // (0,-1,-3) oriented with the positive curve last
    auto r = apply_link(mz({-3, -1, 0}, 2), ElementaryLink::contract());
    CHECK(r.zigzag == mz({-2, 1}, 1));
    CHECK(r.almost_standard);
    CHECK_THROWS_AS(apply_link(mz({-2, 0, -3}, 1), ElementaryLink::contract()), NotApplicable);
}

TEST_CASE("link II blows up the corner with the (-1)-curve") {
    // (..., B_m = 0, B_l = -1): blow up, then contract the old 0-curve
    auto r = apply_link(mz({-2, 0, -1}, 1), ElementaryLink::blow_at_minus_one(LinkSide::Right));
    CHECK(r.zigzag == mz({-1, 0, -2}, 1));
    CHECK(r.almost_standard);

    // without the contraction when the positive curve is not a 0-curve
    auto q = apply_link(mz({-1, 1}, 1), ElementaryLink::blow_at_minus_one(LinkSide::Left));
    CHECK(q.zigzag == mz({-2, -1, 0}, 2));

    CHECK_THROWS_AS(apply_link(mz({-2, 0, -3}, 1), ElementaryLink::blow_at_minus_one(LinkSide::Right)),
                    NotApplicable);
}

TEST_CASE("link III at an interior positive curve") {
    // (-b, a, -c) at the right point, a != 0
    auto r = apply_link(mz({-2, 1, -3}, 1), ElementaryLink::blow_interior(LinkSide::Right));
    CHECK(r.zigzag == mz({-2, 0, -1, -4}, 1));

    // a = 0 contracts the old positive curve
    auto z = apply_link(mz({-2, 0, -3}, 1), ElementaryLink::blow_interior(LinkSide::Right));
    CHECK(z.zigzag == mz({-1, 0, -4}, 1));

    auto l = apply_link(mz({-2, 0, -3}, 1), ElementaryLink::blow_interior(LinkSide::Left));
    CHECK(l.zigzag == mz({-3, 0, -2}, 1));
}

TEST_CASE("link IV at a boundary positive curve") {
    auto inter = apply_link(mz({1, -2}, 0), ElementaryLink::blow_boundary_intersection());
    CHECK(inter.zigzag == mz({0, -1, -3}, 0));

    auto free = apply_link(mz({-2, 1}, 1), ElementaryLink::blow_boundary_free("q"));
    CHECK(free.zigzag == mz({-2, 0, -1}, 1));

    // a single 0-curve returns to itself
    auto single = apply_link(mz({0}, 0), ElementaryLink::blow_boundary_free("q"));
    CHECK(single.zigzag == mz({0}, 0));

    CHECK_THROWS_AS(apply_link(mz({-2, 0, -3}, 1), ElementaryLink::blow_boundary_free("q")),
                    NotApplicable);
}

TEST_CASE("transient states carry a validity flag instead of failing") {
    // sweep start for the tail (-2): two (-1)-curves appear
    auto s1 = apply_link(mz({-2, -1, 0}, 2), ElementaryLink::contract());
    CHECK(s1.zigzag == mz({-1, 1}, 1));
    auto s2 = apply_link(s1.zigzag, ElementaryLink::blow_boundary_free("q"));
    CHECK(s2.zigzag == mz({-1, 0, -1}, 1));
    CHECK_FALSE(s2.almost_standard);
    CHECK_FALSE(s2.zigzag.minus_one_index().has_value());
}

TEST_CASE("applicable links enumeration") {
    auto with_minus_one = applicable_links(MarkedZigzag::from_type(ZigzagType::parse("0,-1,-3")));
    REQUIRE(with_minus_one.size() == 2);
    CHECK(with_minus_one[0].kind == LinkKind::I);
    CHECK(with_minus_one[1].kind == LinkKind::II);
    CHECK(with_minus_one[1].side == LinkSide::Right);

    auto interior = applicable_links(mz({-2, 0, -3}, 1));
    REQUIRE(interior.size() == 2);
    CHECK(interior[0].kind == LinkKind::III);
    CHECK(interior[0].side == LinkSide::Left);
    CHECK(interior[1].kind == LinkKind::III);
    CHECK(interior[1].side == LinkSide::Right);

    auto boundary = applicable_links(mz({0, -2}, 0));
    REQUIRE(boundary.size() == 2);
    CHECK(boundary[0].kind == LinkKind::IV);
    CHECK(boundary[0].point == PointMode::Intersection);
    CHECK(boundary[1].kind == LinkKind::IV);
    CHECK(boundary[1].point == PointMode::Free);

    CHECK_THROWS_AS(applicable_links(mz({-1, 0, -1}, 1)), DomainError);
}

TEST_CASE("free links with distinct centers are distinct links") {
    auto a = ElementaryLink::blow_boundary_free("p");
    auto b = ElementaryLink::blow_boundary_free("q");
    CHECK(a != b);
    CHECK(a == ElementaryLink::blow_boundary_free("p"));
}
