#include <doctest.h>

#include "spckit/errors.hpp"
#include "spckit/group.hpp"

using namespace spckit;

TEST_CASE("trivial and cyclic groups") {
    auto one = FiniteGroup::trivial();
    CHECK(one.order() == 1);
    CHECK(one.identity() == 0);
    CHECK(one.is_abelian());

    auto z2 = FiniteGroup::cyclic(2);
    CHECK(z2.order() == 2);
    CHECK(z2.mul(1, 1) == 0);
    CHECK(z2.inv(1) == 1);
    CHECK(z2.element_order(1) == 2);

    auto z6 = FiniteGroup::cyclic(6);
    CHECK(z6.element_order(1) == 6);
    CHECK(z6.element_order(2) == 3);
    CHECK(z6.element_order(3) == 2);
    CHECK(z6.mul(4, 5) == 3);
    CHECK(z6.inv(2) == 4);
}

TEST_CASE("klein four group") {
    auto v4 = FiniteGroup::klein4();
    CHECK(v4.order() == 4);
    CHECK(v4.is_abelian());
    for (int x = 1; x < 4; ++x) {
        CHECK(v4.element_order(x) == 2);
        CHECK(v4.inv(x) == x);
    }
    CHECK(!groups_isomorphic(v4, FiniteGroup::cyclic(4)).has_value());
    CHECK(groups_isomorphic(
              v4, FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)))
              .has_value());
}

TEST_CASE("symmetric group on three letters") {
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK(!s3.is_abelian());
    int two = 0, three = 0;
    for (int x = 1; x < 6; ++x) {
        int o = s3.element_order(x);
        if (o == 2) ++two;
        if (o == 3) ++three;
    }
    CHECK(two == 3);
    CHECK(three == 2);
}

TEST_CASE("cayley table validation") {
    // column 1 never hits 0, so 0 has no right inverse
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}, {"e", "a"}), NoInverse);
    // no identity row/column at all
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 0}, {0, 0}}, {"e", "a"}), NoIdentity);
    // ragged table
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}, {"e", "a"}), BadTable);
    // relabeled Z2 with the identity in position 1 is fine
    auto g = FiniteGroup::from_table({{1, 0}, {0, 1}}, {"a", "e"});
    CHECK(g.identity() == 1);
    CHECK(g.order() == 2);
}

TEST_CASE("non-associative magma is rejected") {
    // identity 0 and all inverses exist, but (1*1)*2 = 2 while 1*(1*2) = 1
    std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(t, {"e", "a", "b"}), Error);
}

TEST_CASE("group specs") {
    CHECK(FiniteGroup::from_spec("1").order() == 1);
    CHECK(FiniteGroup::from_spec("trivial").order() == 1);
    CHECK(FiniteGroup::from_spec("Z2").order() == 2);
    CHECK(FiniteGroup::from_spec("Z12").order() == 12);
    CHECK(groups_isomorphic(FiniteGroup::from_spec("V4"), FiniteGroup::from_spec("Z2xZ2"))
              .has_value());
    CHECK(FiniteGroup::from_spec("S3").order() == 6);
    CHECK_THROWS_AS(FiniteGroup::from_spec("Q8"), BadGroupSpec);
    CHECK_THROWS_AS(FiniteGroup::from_spec(""), BadGroupSpec);
    // order cap: Z13 never reaches cyclic(13), the spec itself is rejected
    CHECK_THROWS_AS(FiniteGroup::from_spec("Z13"), BadGroupSpec);
    CHECK_THROWS_AS(FiniteGroup::cyclic(13), OrderTooLarge);
}

TEST_CASE("labels round trip") {
    auto z3 = FiniteGroup::cyclic(3);
    for (int x = 0; x < 3; ++x) {
        auto back = z3.element_by_label(z3.label(x));
        REQUIRE(back.has_value());
        CHECK(*back == x);
    }
    CHECK(!z3.element_by_label("nope").has_value());
}

TEST_CASE("direct products and isomorphism search") {
    auto z2 = FiniteGroup::cyclic(2);
    auto z3 = FiniteGroup::cyclic(3);
    auto p = FiniteGroup::direct_product(z2, z3);
    CHECK(p.order() == 6);
    CHECK(groups_isomorphic(p, FiniteGroup::cyclic(6)).has_value());
    CHECK(!groups_isomorphic(p, FiniteGroup::symmetric(3)).has_value());
    // the found map is a homomorphism
    auto iso = groups_isomorphic(p, FiniteGroup::cyclic(6));
    REQUIRE(iso.has_value());
    auto z6 = FiniteGroup::cyclic(6);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK((*iso)[p.mul(a, b)] == z6.mul((*iso)[a], (*iso)[b]));
}
