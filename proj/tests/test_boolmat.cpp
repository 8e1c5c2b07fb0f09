#include <doctest.h>

#include <algorithm>
#include <vector>

#include "spckit/boolmat.hpp"
#include "spckit/complex.hpp"
#include "spckit/errors.hpp"
#include "spckit/group.hpp"
#include "spckit/models.hpp"

using namespace spckit;

TEST_CASE("text round trips") {
    auto m = BooleanMatrix::from_text("110\n011\n");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.get(1, 1));
    CHECK(!m.get(1, 3));
    CHECK(m.row(2) == 0b110u);  // bit v-1 carries column v
    CHECK(BooleanMatrix::from_text(m.to_text()) == m);
    CHECK_THROWS_AS(BooleanMatrix::from_text("10\n011\n"), Error);
    CHECK_THROWS_AS(BooleanMatrix::from_text("1x\n"), Error);
}

TEST_CASE("unitriangular witnesses, greedy and exhaustive") {
    auto m = BooleanMatrix::from_text("111\n011\n001\n");
    for (Mask w = 0; w < 8; ++w) {
        CHECK(has_unitriangular_witness(m, w));
        CHECK(has_unitriangular_witness_exhaustive(m, w));
    }
    auto flat = BooleanMatrix::from_text("111\n");
    CHECK(has_unitriangular_witness(flat, 0b001));
    CHECK(!has_unitriangular_witness(flat, 0b011));
    CHECK(!has_unitriangular_witness_exhaustive(flat, 0b011));
}

TEST_CASE("complex of a matrix") {
    auto m = BooleanMatrix::from_text("110\n101\n");
    CHECK(complex_of_matrix(m) == uniform_matroid(2, 3));
    auto full = BooleanMatrix::from_text("111\n011\n001\n");
    CHECK(complex_of_matrix(full) == uniform_matroid(3, 3));
    // a zero column is a loop: no singleton witness
    auto z = BooleanMatrix::from_text("10\n10\n");
    auto hz = complex_of_matrix(z);
    CHECK(hz.rank() == 1);
    CHECK(!hz.contains(0b10));
}

TEST_CASE("the flats matrix recovers boolean representable complexes") {
    auto u22 = uniform_matroid(2, 2);
    auto m = mat_of_flats(u22);
    CHECK(m.to_text() == "11\n01\n10\n00\n");  // flats by ascending mask, complemented
    CHECK(complex_of_matrix(m) == u22);

    auto u23 = uniform_matroid(2, 3);
    CHECK(complex_of_matrix(mat_of_flats(u23)) == u23);

    auto k3 = graphic_matroid(complete_graph(3));
    CHECK(mat_of_flats(k3).rows() == 5);
    CHECK(complex_of_matrix(mat_of_flats(k3)) == k3);
}

TEST_CASE("matrices from lattice representations") {
    auto one = FiniteGroup::trivial();
    auto rep = ln_representation(3, one);
    auto m = matrix_from_lattice_rep(rep);
    CHECK(m.to_text() == "111111\n011111\n001111\n000101\n000110\n");
    CHECK(complex_of_matrix(m, rep.ground_labels) == complex_from_lattice(rep));

    auto p = powerset_representation(2);
    auto mp = matrix_from_lattice_rep(p);
    CHECK(mp.rows() == 2);
    CHECK(complex_of_matrix(mp, p.ground_labels) == complex_from_lattice(p));
}

TEST_CASE("minimality of representations") {
    auto one = FiniteGroup::trivial();
    CHECK(is_minimal_lattice_rep(ln_representation(2, one)));
    CHECK(is_minimal_lattice_rep(powerset_representation(2)));
    // the lattice of flats of U_{2,3} is a representation but not a minimal
    // one: collapsing an atom onto the top leaves the same complex
    auto fl = lattice_of_flats(uniform_matroid(2, 3));
    std::vector<int> phi;
    for (int v = 1; v <= 3; ++v)
        for (int i = 0; i < fl.lattice.size(); ++i)
            if (fl.flat_masks[i] == point_bit(v)) phi.push_back(i);
    auto rep = make_representation(fl.lattice, phi, {"1", "2", "3"});
    CHECK(complex_from_lattice(rep) == uniform_matroid(2, 3));
    CHECK(!is_minimal_lattice_rep(rep));
}

TEST_CASE("minimal degree search") {
    auto u = uniform_matroid(2, 3);
    CHECK(mindeg_lower_bound(u) == 2);
    auto w = mindeg_exhaustive(u, 2);
    REQUIRE(w.has_value());
    CHECK(w->rows() == 2);
    CHECK(complex_of_matrix(*w) == u);
    CHECK(!mindeg_exhaustive(u, 1).has_value());
    CHECK_THROWS_AS(mindeg_exhaustive(uniform_matroid(2, 6), 2), SearchSpaceTooLarge);
}

TEST_CASE("distinct binary columns witness every pair") {
    // the 3 x 7 matrix whose columns are all nonzero binary words
    std::vector<Mask> rows(3, 0);
    for (int v = 1; v <= 7; ++v)
        for (int i = 0; i < 3; ++i)
            if (v & (1 << i)) rows[i] |= point_bit(v);
    BooleanMatrix m(7, rows);
    auto h = complex_of_matrix(m);
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b) CHECK(h.contains(point_bit(a) | point_bit(b)));
    // but triples of independent columns push the rank past two
    CHECK(h.rank() == 3);
}
