#include <doctest.h>

#include <algorithm>
#include <vector>

#include "spckit/errors.hpp"
#include "spckit/group.hpp"
#include "spckit/partition.hpp"
#include "spckit/spc.hpp"

using namespace spckit;

namespace {
Spc make(int n, const FiniteGroup& g, std::vector<Mask> blocks, std::vector<int> raw) {
    return Spc(g, PartialPartition(n, std::move(blocks)), std::move(raw));
}
}  // namespace

TEST_CASE("cross sections are canonical") {
    auto z2 = FiniteGroup::cyclic(2);
    // same block {1,2}; raw sections (e,g) and (g,e) differ by a left translation
    auto a = make(2, z2, {0b11}, {0, 1});
    auto b = make(2, z2, {0b11}, {1, 0});
    CHECK(a == b);
    CHECK(a.cs(1) == 0);  // block minimum pinned to the identity
    CHECK(a.cs(2) == 1);
    // a genuinely different section
    auto c = make(2, z2, {0b11}, {0, 0});
    CHECK(a != c);
    // raw values off the domain must be -1
    CHECK_THROWS_AS(make(2, z2, {0b01}, {0, 0}), DomainMismatch);
}

TEST_CASE("enumeration counts") {
    auto one = FiniteGroup::trivial();
    auto z2 = FiniteGroup::cyclic(2);
    CHECK(enumerate_spc(1, z2).size() == 2);
    CHECK(enumerate_spc(2, one).size() == 5);
    CHECK(enumerate_spc(2, z2).size() == 6);
    CHECK(enumerate_spc(3, z2).size() == 24);
    CHECK(enumerate_spc(3, FiniteGroup::cyclic(3)).size() == 35);
    CHECK(enumerate_spc(3, FiniteGroup::cyclic(4)).size() == 48);
    CHECK(enumerate_spc(3, FiniteGroup::cyclic(5)).size() == 63);
    // the guard fires on |G|^n before any partition work
    CHECK_THROWS_AS(enumerate_spc(6, FiniteGroup::symmetric(3)), BoundsExceeded);
}

TEST_CASE("the six SPCs over two points and Z2") {
    auto z2 = FiniteGroup::cyclic(2);
    auto all = enumerate_spc(2, z2);
    REQUIRE(all.size() == 6);
    std::vector<Spc> expected = {
        Spc::empty(2, z2),
        make(2, z2, {0b01}, {0, -1}),       // ({1})
        make(2, z2, {0b10}, {-1, 0}),       // ({2})
        make(2, z2, {0b01, 0b10}, {0, 0}),  // ({1|2})
        make(2, z2, {0b11}, {0, 0}),        // ({1,2}), 2 -> e
        make(2, z2, {0b11}, {0, 1}),        // ({1,2}), 2 -> g
    };
    for (const auto& e : expected)
        CHECK(std::find(all.begin(), all.end(), e) != all.end());
}

TEST_CASE("dowling order basics") {
    auto z2 = FiniteGroup::cyclic(2);
    auto empty = Spc::empty(2, z2);
    auto singles = make(2, z2, {0b01, 0b10}, {0, 0});
    auto block_e = make(2, z2, {0b11}, {0, 0});
    auto block_g = make(2, z2, {0b11}, {0, 1});
    // the empty SPC is the top
    for (const auto& s : enumerate_spc(2, z2)) CHECK(dowling_leq(s, empty));
    // merging the two singleton blocks moves up; the two merges are incomparable
    CHECK(dowling_leq(singles, block_e));
    CHECK(dowling_leq(singles, block_g));
    CHECK(!dowling_leq(block_e, block_g));
    CHECK(!dowling_leq(block_g, block_e));
    CHECK(!dowling_leq(block_e, singles));
}

TEST_CASE("rhodes order basics") {
    auto z2 = FiniteGroup::cyclic(2);
    auto empty = Spc::empty(2, z2);
    auto one_pt = make(2, z2, {0b01}, {0, -1});
    auto singles = make(2, z2, {0b01, 0b10}, {0, 0});
    auto block_e = make(2, z2, {0b11}, {0, 0});
    // the empty SPC is the bottom
    for (const auto& s : enumerate_spc(2, z2)) CHECK(rhodes_leq(empty, s));
    CHECK(rhodes_leq(one_pt, singles));
    CHECK(rhodes_leq(singles, block_e));
    CHECK(rhodes_leq(one_pt, block_e));
    CHECK(!rhodes_leq(block_e, singles));
}

TEST_CASE("rhodes meet splits on section ratios") {
    auto z2 = FiniteGroup::cyclic(2);
    auto block_e = make(2, z2, {0b11}, {0, 0});
    auto block_g = make(2, z2, {0b11}, {0, 1});
    // same block, sections differing on point 2: the ratios disagree there
    auto m = rhodes_meet(block_e, block_g);
    CHECK(m.partition().size() == 2);
    CHECK(m.domain() == 0b11u);
    // meets also shrink the domain to the intersection
    auto one_pt = make(2, z2, {0b01}, {0, -1});
    CHECK(rhodes_meet(block_e, one_pt) == one_pt);
}

TEST_CASE("compatibility and joins") {
    auto z2 = FiniteGroup::cyclic(2);
    auto block_e = make(2, z2, {0b11}, {0, 0});
    auto block_g = make(2, z2, {0b11}, {0, 1});
    // both force the pair {1,2} into one block but with clashing sections
    CHECK(!has_common_upper_bound(block_e, block_g));
    CHECK(!rhodes_join(block_e, block_g).has_value());

    auto p1 = make(2, z2, {0b01}, {0, -1});
    auto p2 = make(2, z2, {0b10}, {-1, 0});
    auto j = rhodes_join(p1, p2);
    REQUIRE(j.has_value());
    CHECK(*j == make(2, z2, {0b01, 0b10}, {0, 0}));

    // the necklace graph of the clashing pair carries both colors
    auto ng = necklace_graph(block_e, block_g);
    CHECK(ng.vertices == 0b11u);
    CHECK(ng.edges.size() == 2);
}

TEST_CASE("generators and atoms") {
    auto z2 = FiniteGroup::cyclic(2);
    CHECK(join_irreducibles_rhodes(3, z2).size() == 9);   // 3 singletons + 3 pairs x 2
    CHECK(atoms_dowling(3, z2).size() == 9);              // 3 co-singletons + 3 pairs x 2
    CHECK(join_irreducibles_rhodes(2, FiniteGroup::trivial()).size() == 3);
    // singleton generators come first, in point order
    auto gens = join_irreducibles_rhodes(2, z2);
    CHECK(gens[0].domain() == 0b01u);
    CHECK(gens[1].domain() == 0b10u);
    CHECK(gens[2].domain() == 0b11u);
}

TEST_CASE("text forms") {
    auto z2 = FiniteGroup::cyclic(2);
    CHECK(Spc::empty(2, z2).to_text().find("∅") != std::string::npos);
    auto s = make(2, z2, {0b11}, {0, 1});
    CHECK(s.to_text().find("{1,2}") != std::string::npos);
}

TEST_CASE("full-support all-singleton SPC is a universal comparator only up to two points") {
    // ordered against everything for n <= 2, but not from n = 3 on
    for (const auto& g : {FiniteGroup::trivial(), FiniteGroup::cyclic(2)}) {
        for (int n = 1; n <= 2; ++n) {
            auto hub = Spc(g, PartialPartition::singletons(n, full_mask(n)),
                           std::vector<int>(n, g.identity()));
            for (const auto& s : enumerate_spc(n, g))
                CHECK((rhodes_leq(hub, s) || rhodes_leq(s, hub)));
        }
        auto hub3 = Spc(g, PartialPartition::singletons(3, full_mask(3)),
                        std::vector<int>(3, g.identity()));
        std::vector<int> raw = {g.identity(), g.identity(), -1};
        auto pair_block = Spc(g, PartialPartition(3, std::vector<Mask>{0b011}), raw);
        CHECK(!rhodes_leq(hub3, pair_block));
        CHECK(!rhodes_leq(pair_block, hub3));
    }
}
