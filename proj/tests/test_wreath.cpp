#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "spckit/errors.hpp"
#include "spckit/spc.hpp"
#include "spckit/wreath.hpp"

using namespace spckit;

namespace {
using Entry = ColumnMonomialMatrix::Entry;

ColumnMonomialMatrix mat(int n, const FiniteGroup& g,
                         std::vector<std::optional<Entry>> cols) {
    return ColumnMonomialMatrix(n, g, std::move(cols));
}
}  // namespace

TEST_CASE("identity, zero, and multiplication") {
    auto z2 = FiniteGroup::cyclic(2);
    auto i = ColumnMonomialMatrix::identity(2, z2);
    auto zero = ColumnMonomialMatrix::zero(2, z2);
    auto a = mat(2, z2, {Entry{1, 0}, Entry{1, 1}});  // both columns on row 1
    CHECK(monomial_multiply(a, i) == a);
    CHECK(monomial_multiply(i, a) == a);
    CHECK(monomial_multiply(zero, a) == zero);
    CHECK(monomial_multiply(a, zero) == zero);
    CHECK(i.is_unit());
    CHECK(!a.is_unit());
    CHECK(!zero.is_unit());

    // associativity across the whole 2x2 monoid over Z2
    auto all = enumerate_monomial(2, z2);
    CHECK(all.size() == 25);
    for (const auto& x : all)
        for (const auto& y : all)
            for (const auto& z : all)
                CHECK(monomial_multiply(monomial_multiply(x, y), z) ==
                      monomial_multiply(x, monomial_multiply(y, z)));
}

TEST_CASE("units form the wreath product") {
    auto z2 = FiniteGroup::cyclic(2);
    auto units = enumerate_units(2, z2);
    CHECK(units.size() == 8);  // 2! * 2^2
    auto i = ColumnMonomialMatrix::identity(2, z2);
    for (const auto& u : units) {
        CHECK(u.is_unit());
        CHECK(monomial_multiply(u, unit_inverse(u)) == i);
        CHECK(monomial_multiply(unit_inverse(u), u) == i);
    }
    auto swap = mat(2, z2, {Entry{2, 0}, Entry{1, 0}});
    CHECK(std::find(units.begin(), units.end(), swap) != units.end());
    CHECK_THROWS_AS(unit_inverse(ColumnMonomialMatrix::zero(2, z2)), ArgumentOutOfRange);
}

TEST_CASE("matrix to SPC") {
    auto z2 = FiniteGroup::cyclic(2);
    auto i = ColumnMonomialMatrix::identity(2, z2);
    auto si = spc_of_matrix(i);
    CHECK(si.domain() == 0b11u);
    CHECK(si.partition().size() == 2);

    CHECK(spc_of_matrix(ColumnMonomialMatrix::zero(2, z2)) == Spc::empty(2, z2));

    // both columns on one row: a single block, the section read off the entries
    auto a = mat(2, z2, {Entry{1, 0}, Entry{1, 1}});
    auto sa = spc_of_matrix(a);
    CHECK(sa.partition().size() == 1);
    CHECK(sa.cs(1) == 0);
    CHECK(sa.cs(2) == 1);
    // left translation of the entries lands in the same SPC
    auto b = mat(2, z2, {Entry{2, 1}, Entry{2, 0}});
    CHECK(spc_of_matrix(b) == sa);
}

TEST_CASE("the L-order via explicit division") {
    auto z2 = FiniteGroup::cyclic(2);
    auto zero = ColumnMonomialMatrix::zero(2, z2);
    auto i = ColumnMonomialMatrix::identity(2, z2);
    auto a = mat(2, z2, {Entry{1, 0}, Entry{1, 1}});
    // zero divides everything; everything divides itself
    for (const auto& m : enumerate_monomial(2, z2)) {
        CHECK(l_below(zero, m));
        CHECK(l_below(m, m));
    }
    // the identity is only below units
    CHECK(!l_below(i, a));
    CHECK(l_below(i, i));
    // collapsing distinct rows moves strictly down
    CHECK(l_below(a, i));
    CHECK(!l_below(i, a));
    CHECK(l_below_exhaustive(a, i));
    CHECK(!l_below_exhaustive(i, a));
}

TEST_CASE("enumeration bounds") {
    CHECK_THROWS_AS(enumerate_monomial(6, FiniteGroup::cyclic(3)), SearchSpaceTooLarge);
}

TEST_CASE("conjugation by a unit respects the SPC fibers") {
    auto z2 = FiniteGroup::cyclic(2);
    auto all = enumerate_monomial(2, z2);
    for (const auto& u : enumerate_units(2, z2)) {
        auto ui = unit_inverse(u);
        auto conj = [&](const ColumnMonomialMatrix& x) {
            return monomial_multiply(monomial_multiply(u, x), ui);
        };
        for (const auto& x : all)
            for (const auto& y : all) {
                CHECK(l_below(x, y) == l_below(conj(x), conj(y)));
                CHECK((spc_of_matrix(x) == spc_of_matrix(y)) ==
                      (spc_of_matrix(conj(x)) == spc_of_matrix(conj(y))));
            }
    }
}

TEST_CASE("brandt groupoid and trivial subgroupoids") {
    auto z2 = FiniteGroup::cyclic(2);
    CHECK(brandt_groupoid(2, z2).size() == 8);  // n^2 |G|
    CHECK(brandt_groupoid(3, z2).size() == 18);

    // the subgroupoid of a one-block SPC with section 1 -> e, 2 -> g
    std::vector<int> raw = {0, 1};
    Spc s(z2, PartialPartition::one_block(2, 0b11), raw);
    auto t = subgroupoid_of_spc(s);
    std::vector<Morphism> expect = {{1, 0, 1}, {1, 1, 2}, {2, 0, 2}, {2, 1, 1}};
    std::sort(expect.begin(), expect.end());
    CHECK(t.morphisms() == expect);
    CHECK(t.objects() == 0b11u);
    CHECK(spc_of_subgroupoid(t) == s);

    // missing identities
    CHECK_THROWS_AS(TrivialSubgroupoid(2, z2, {{1, 1, 2}}), NotClosed);
    // two morphisms on one ordered pair
    CHECK_THROWS_AS(TrivialSubgroupoid(2, z2,
                                       {{1, 0, 1}, {2, 0, 2}, {1, 0, 2}, {1, 1, 2},
                                        {2, 0, 1}, {2, 1, 1}}),
                    NotTrivial);
    // inclusion is subset ordering within the same ambient groupoid
    auto empty = TrivialSubgroupoid(2, z2, {});
    CHECK(t.includes(empty));
    CHECK(!empty.includes(t));
    CHECK_THROWS_AS(t.includes(TrivialSubgroupoid(3, z2, {})), MismatchedContext);
}
