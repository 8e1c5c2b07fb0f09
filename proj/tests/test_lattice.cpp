#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "spckit/errors.hpp"
#include "spckit/lattice.hpp"

using namespace spckit;

namespace {
FiniteLattice chain(int k) {
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
    return FiniteLattice::from_poset(labels, [](int a, int b) { return a <= b; });
}
}  // namespace

TEST_CASE("chains and diamonds") {
    auto c = chain(4);
    CHECK(c.size() == 4);
    CHECK(c.bottom() == 0);
    CHECK(c.top() == 3);
    CHECK(c.meet(1, 2) == 1);
    CHECK(c.join(1, 2) == 2);
    CHECK(c.covers().size() == 3);

    // M3: bottom, three incomparable middles, top
    auto leq = [](int a, int b) { return a == b || a == 0 || b == 4; };
    auto m3 = FiniteLattice::from_poset({"0", "x", "y", "z", "1"}, leq);
    CHECK(m3.meet(1, 2) == 0);
    CHECK(m3.join(1, 2) == 4);
    CHECK(m3.atoms().size() == 3);
    CHECK(m3.is_geometric());
}

TEST_CASE("posets without joins are rejected") {
    // two incomparable elements, no top
    auto leq = [](int a, int b) { return a == b; };
    CHECK_THROWS_AS(FiniteLattice::from_poset({"a", "b"}, leq), NotALattice);
    // broken antisymmetry
    auto bad = [](int, int) { return true; };
    CHECK_THROWS_AS(FiniteLattice::from_poset({"a", "b"}, bad), NotAPartialOrder);
}

TEST_CASE("irreducibles and rank") {
    auto p = powerset_lattice(3);
    CHECK(p.size() == 8);
    CHECK(p.bottom() == 0);
    CHECK(p.top() == 7);
    CHECK(p.leq(0b001, 0b011));
    CHECK(!p.leq(0b011, 0b001));
    CHECK(p.meet(0b011, 0b110) == 0b010);
    CHECK(p.join(0b001, 0b100) == 0b101);
    auto ji = p.join_irreducibles();
    CHECK(ji == std::vector<int>{1, 2, 4});
    auto mi = p.meet_irreducibles();
    CHECK(mi == std::vector<int>{3, 5, 6});
    auto rk = p.rank();
    CHECK(rk[0] == 0);
    CHECK(rk[7] == 3);
    CHECK(p.is_geometric());
}

TEST_CASE("partition lattices") {
    auto p3 = partition_lattice(3);
    CHECK(p3.size() == 5);
    CHECK(p3.atoms().size() == 3);
    CHECK(p3.is_geometric());
    CHECK(partition_lattice(4).size() == 15);
    CHECK(partition_lattice(4).is_geometric());
}

TEST_CASE("lattice isomorphism search") {
    auto a = powerset_lattice(2);
    auto leq = [](int x, int y) { return (x & y) == x; };
    auto b = FiniteLattice::from_poset({"00", "01", "10", "11"}, leq);
    auto iso = lattice_isomorphic(a, b);
    REQUIRE(iso.has_value());
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            CHECK(a.leq(x, y) == b.leq((*iso)[x], (*iso)[y]));
    CHECK(!lattice_isomorphic(powerset_lattice(3), chain(8)).has_value());
    CHECK(lattice_isomorphic(partition_lattice(3),
                             build_dowling(2, FiniteGroup::trivial()).lattice)
              .has_value());
}

TEST_CASE("rhodes posets and their completions") {
    auto one = FiniteGroup::trivial();
    auto z2 = FiniteGroup::cyclic(2);
    auto z3 = FiniteGroup::cyclic(3);

    CHECK(build_rhodes(1, z3).is_lattice);
    CHECK(build_rhodes(3, one).is_lattice);
    auto broken = build_rhodes(2, z2);
    CHECK(!broken.is_lattice);
    REQUIRE(broken.no_lub_pair.has_value());

    auto hat = build_rhodes_hat(2, z2);
    CHECK(hat.lattice.size() == 7);  // the 6 SPCs plus the sentinel top
    CHECK(hat.spcs.size() == 6);
    REQUIRE(hat.sentinel_top >= 0);
    CHECK(hat.lattice.label(hat.sentinel_top) == "T");
    CHECK(hat.lattice.top() == hat.sentinel_top);

    auto plain = build_rhodes_hat(2, one);
    CHECK(plain.sentinel_top == -1);
    CHECK(plain.lattice.size() == 5);
    CHECK(static_cast<int>(plain.spcs.size()) == plain.lattice.size());

    // R_n(1) counts are the Bell numbers shifted by one
    CHECK(build_rhodes_hat(4, one).lattice.size() == 52);
}

TEST_CASE("covers in the trivial-group rhodes lattice add a point or merge two blocks") {
    auto one = FiniteGroup::trivial();
    for (int n = 1; n <= 4; ++n) {
        auto sl = build_rhodes_hat(n, one);
        for (auto [lo, hi] : sl.lattice.covers()) {
            const auto& a = sl.spcs[lo];
            const auto& b = sl.spcs[hi];
            bool grew = b.domain() == a.domain() ? false : true;
            if (grew) {
                // one new point, in a block of its own, blocks otherwise equal
                CHECK(popcount(b.domain() & ~a.domain()) == 1);
                CHECK(b.partition().size() == a.partition().size() + 1);
            } else {
                // two blocks merged into one
                CHECK(b.partition().size() == a.partition().size() - 1);
            }
        }
    }
}

TEST_CASE("dowling lattices are geometric") {
    auto z2 = FiniteGroup::cyclic(2);
    auto q = build_dowling(2, z2);
    CHECK(q.lattice.size() == 6);
    CHECK(q.sentinel_top == -1);
    CHECK(q.lattice.is_geometric());
    CHECK(q.lattice.atoms().size() == 4);  // 2 co-singleton domains + 2 sections on the pair
    CHECK(build_dowling(2, FiniteGroup::cyclic(3)).lattice.is_geometric());
    CHECK(build_dowling(3, z2).lattice.is_geometric());
    // the top is the empty SPC, the bottom the all-singleton one
    CHECK(q.spcs[q.lattice.top()].domain() == 0u);
    CHECK(q.spcs[q.lattice.bottom()].partition().size() == 2);
}

TEST_CASE("the minimal-degree lattice") {
    auto ln = build_Ln(3);
    CHECK(ln.lattice.size() == 7);  // chain of 3 + powerset of {1,2}
    // coords follow (subset, level) with joins (union, max) and meets (intersection, min)
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            auto [sa, la] = ln.coords[a];
            auto [sb, lb] = ln.coords[b];
            auto [sj, lj] = ln.coords[ln.lattice.join(a, b)];
            CHECK(sj == (sa | sb));
            CHECK(lj == std::max(la, lb));
            auto [sm, lm] = ln.coords[ln.lattice.meet(a, b)];
            CHECK(sm == (sa & sb));
            CHECK(lm == std::min(la, lb));
        }
    CHECK(ln.lattice.meet_irreducibles().size() == 5);  // 2n-1
    CHECK(!ln.lattice.is_atomistic());                  // the chain breaks atomisticity
    CHECK(build_Ln(2).lattice.size() == 4);
    CHECK(build_Ln(4).lattice.size() == 12);
    CHECK_THROWS_AS(build_Ln(1), ArgumentOutOfRange);
}
