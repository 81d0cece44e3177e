#include <doctest.h>

#include <random>

#include "zzag/zigzag.hpp"

using namespace zzag;

namespace {

ZigzagType zt(std::initializer_list<long long> ws) {
    std::vector<Weight> v;
    for (long long w : ws) v.emplace_back(w);
    return ZigzagType(std::move(v));
}

} // namespace

TEST_CASE("reverse") {
    CHECK(zt({0, -1, -2, -3}).reversed() == zt({-3, -2, -1, 0}));
    CHECK(zt({0, -1, -3, -2}).reversed() == zt({-2, -3, -1, 0}));
    CHECK(zt({0, 0}).reversed() == zt({0, 0}));
}

TEST_CASE("reverse is an involution") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Weight> w;
        std::size_t n = 1 + rng() % 7;
        for (std::size_t i = 0; i < n; ++i) w.emplace_back(static_cast<long long>(rng() % 13) - 9);
        ZigzagType t(w);
        CHECK(t.reversed().reversed() == t);
    }
}

TEST_CASE("m-standard predicate") {
    CHECK(zt({0, -1, -2, -3}).is_m_standard(1));
    CHECK(zt({0, -1}).is_m_standard(1));
    CHECK_FALSE(zt({0, -1, -1}).is_m_standard(1));
    CHECK(zt({0, -2, -5}).is_m_standard(2));
    CHECK_FALSE(zt({0}).is_m_standard(0));
    CHECK_FALSE(zt({-1, 0, -2}).is_m_standard(1));
}

TEST_CASE("one-standard implies almost standard with the expected marks") {
    ZigzagType t = zt({0, -1, -2, -3});
    MarkedZigzag z = MarkedZigzag::from_type(t);
    CHECK(z.positive_index() == 0);
    REQUIRE(z.minus_one_index().has_value());
    CHECK(*z.minus_one_index() == 1);
    CHECK(validate_almost_standard(z));
}

TEST_CASE("almost standard validation") {
    CHECK(validate_almost_standard(MarkedZigzag({Weight(-2), Weight(0), Weight(-3)}, 1)));
    CHECK(validate_almost_standard(MarkedZigzag({Weight(0), Weight(-1), Weight(-2)}, 0)));
    CHECK_FALSE(validate_almost_standard(MarkedZigzag({Weight(-1), Weight(0), Weight(-1)}, 1)));
    // (-1)-curve not adjacent to the positive curve
    CHECK_FALSE(validate_almost_standard(MarkedZigzag({Weight(-1), Weight(-2), Weight(0)}, 2)));
    // two non-negative curves
    CHECK_FALSE(validate_almost_standard(MarkedZigzag({Weight(0), Weight(0)}, 0)));
}

TEST_CASE("concat") {
    CHECK(concat(zt({0}), zt({-1, -2})) == zt({0, -1, -2}));
    CHECK(concat(zt({0, -1}).weights(), std::vector<Weight>{}) == zt({0, -1}));
    CHECK(concat(zt({-3, -1}), zt({-2, -1, -3})) == zt({-3, -1, -2, -1, -3}));
    CHECK_THROWS_AS(concat(std::vector<Weight>{}, std::vector<Weight>{}), DomainError);
}

TEST_CASE("concat is associative and anti-compatible with reverse") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto rnd = [&] {
            std::vector<Weight> w;
            std::size_t n = 1 + rng() % 4;
            for (std::size_t i = 0; i < n; ++i)
                w.emplace_back(static_cast<long long>(rng() % 9) - 6);
            return ZigzagType(w);
        };
        ZigzagType a = rnd(), b = rnd(), c = rnd();
        CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
        CHECK(concat(a, b).reversed() == concat(b.reversed(), a.reversed()));
    }
}

TEST_CASE("parsing") {
    CHECK(ZigzagType::parse("0,-1,-2,-3") == zt({0, -1, -2, -3}));
    CHECK(ZigzagType::parse(" 0, -1 ") == zt({0, -1}));
    CHECK_THROWS_AS(ZigzagType::parse(""), DomainError);
    CHECK_THROWS_AS(ZigzagType::parse("0,,1"), DomainError);
    CHECK_THROWS_AS(ZigzagType::parse("0,x"), DomainError);
    CHECK(zt({0, -1, -2}).str() == "0,-1,-2");
}

TEST_CASE("tail helpers") {
    CHECK(zt({0, -1, -2, -3}).tail() == std::vector<Weight>{Weight(-2), Weight(-3)});
    CHECK(zt({0, -1}).tail().empty());
    CHECK(zt({0, -1, -2, -2}).tail_all_minus_two());
    CHECK(zt({0, -1}).tail_all_minus_two());
    CHECK_FALSE(zt({0, -1, -3}).tail_all_minus_two());
    CHECK(zt({0, -1, -2, -3}).tail_has_leq_minus_three());
    CHECK_FALSE(zt({0, -1, -2, -2}).tail_has_leq_minus_three());
    CHECK_THROWS_AS(zt({0, -2}).tail(), DomainError);
}

TEST_CASE("oriented type needs a boundary positive curve") {
    MarkedZigzag end({Weight(-2), Weight(-1), Weight(0)}, 2);
    CHECK(end.oriented_type() == zt({0, -1, -2}));
    MarkedZigzag interior({Weight(-2), Weight(0), Weight(-3)}, 1);
    CHECK_THROWS_AS(interior.oriented_type(), DomainError);
}
