#include <doctest.h>

#include <vector>

#include "spckit/errors.hpp"
#include "spckit/partition.hpp"

using namespace spckit;

TEST_CASE("construction and accessors") {
    auto p = PartialPartition::singletons(3, 0b101);  // domain {1,3}
    CHECK(p.ground_size() == 3);
    CHECK(p.domain() == 0b101u);
    CHECK(p.size() == 2);
    CHECK(p.block_of(1) == 0);
    CHECK(p.block_of(3) == 1);
    CHECK(p.block_of(2) == -1);

    auto q = PartialPartition::one_block(3, 0b011);
    CHECK(q.size() == 1);
    CHECK(q.block_of(1) == q.block_of(2));

    // overlapping blocks are rejected
    CHECK_THROWS_AS(PartialPartition(3, std::vector<Mask>{0b011, 0b110}), Error);
}

TEST_CASE("text round trip") {
    auto p = PartialPartition(4, std::vector<Mask>{0b0011, 0b1000});  // {1,2 | 4}
    CHECK(PartialPartition::from_text(4, p.to_text()) == p);
    auto empty = PartialPartition(3);
    CHECK(PartialPartition::from_text(3, empty.to_text()) == empty);
}

TEST_CASE("refinement") {
    auto fine = PartialPartition(3, std::vector<Mask>{0b001, 0b010, 0b100});
    auto mid = PartialPartition(3, std::vector<Mask>{0b011, 0b100});
    auto coarse = PartialPartition(3, std::vector<Mask>{0b111});
    CHECK(refines(fine, mid));
    CHECK(refines(mid, coarse));
    CHECK(refines(fine, coarse));
    CHECK(!refines(coarse, fine));
    CHECK(refines(fine, fine));
    // smaller domains may refine larger ones, never the reverse
    auto small = PartialPartition(3, std::vector<Mask>{0b011});
    CHECK(refines(small, coarse));
    CHECK(!refines(coarse, small));
}

TEST_CASE("meet and join of partitions") {
    auto a = PartialPartition(4, std::vector<Mask>{0b0011, 0b1100});
    auto b = PartialPartition(4, std::vector<Mask>{0b0110, 0b1001});
    CHECK(meet_blocks(a, b).size() == 4);  // common refinement: all singletons
    CHECK(join_blocks(a, b).size() == 1);  // transitive closure glues everything
    // meet restricts to the intersection of the domains
    auto c = PartialPartition(4, std::vector<Mask>{0b0011});
    CHECK(meet_blocks(a, c).domain() == 0b0011u);
    CHECK(join_blocks(a, c).domain() == a.domain());
}

TEST_CASE("enumeration counts") {
    // partial partitions of an n-set biject with partitions of an (n+1)-set
    CHECK(enumerate_partial_partitions(1).size() == 2);
    CHECK(enumerate_partial_partitions(2).size() == 5);
    CHECK(enumerate_partial_partitions(3).size() == 15);
    CHECK(enumerate_partial_partitions(4).size() == 52);
    CHECK(enumerate_set_partitions(3).size() == 5);
    CHECK(enumerate_set_partitions(4).size() == 15);
    CHECK_THROWS_AS(enumerate_partial_partitions(6), ArgumentOutOfRange);
}

TEST_CASE("enumeration is duplicate-free") {
    auto all = enumerate_partial_partitions(3);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
}
