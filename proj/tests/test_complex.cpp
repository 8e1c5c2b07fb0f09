#include <doctest.h>

#include <algorithm>
#include <vector>

#include "spckit/complex.hpp"
#include "spckit/errors.hpp"

using namespace spckit;

namespace {
std::vector<std::string> pts(int m) {
    std::vector<std::string> out;
    for (int v = 1; v <= m; ++v) out.push_back("p" + std::to_string(v));
    return out;
}
}  // namespace

TEST_CASE("hereditary closure on ingest") {
    auto h = SimplicialComplex::from_facets(pts(3), {0b111});
    CHECK(h.sets().size() == 8);
    CHECK(h.rank() == 3);
    CHECK(h.f_vector() == std::vector<int>{1, 3, 3, 1});
    CHECK(h.facets() == std::vector<Mask>{0b111});
    CHECK(h.circuits().empty());
}

TEST_CASE("uniform matroids") {
    auto u = uniform_matroid(2, 3);
    CHECK(u.rank() == 2);
    CHECK(u.f_vector() == std::vector<int>{1, 3, 3});
    CHECK(u.facets().size() == 3);
    CHECK(u.circuits() == std::vector<Mask>{0b111});
    CHECK(is_matroid(u));
    CHECK(is_boolean_representable(u));
    CHECK(uniform_matroid(3, 3).sets().size() == 8);
}

TEST_CASE("from_oracle agrees with explicit ingestion") {
    auto direct = uniform_matroid(2, 4);
    auto oracled = SimplicialComplex::from_oracle(pts(4), [](Mask x) { return popcount(x) <= 2; });
    CHECK(direct == oracled);
}

TEST_CASE("graphic matroids") {
    Multigraph k3{3, {{1, 2}, {1, 3}, {2, 3}}};
    auto g = graphic_matroid(k3);
    CHECK(g.rank() == 2);
    CHECK(g.circuits() == std::vector<Mask>{0b111});
    CHECK(is_matroid(g));
    CHECK(complexes_isomorphic(g, uniform_matroid(2, 3)).has_value());

    Multigraph withloop{2, {{1, 2}, {2, 2}}};
    auto gl = graphic_matroid(withloop);
    CHECK(gl.rank() == 1);
    CHECK(gl.circuits() == std::vector<Mask>{0b10});  // the loop alone

    Multigraph parallel{2, {{1, 2}, {1, 2}}};
    CHECK(graphic_matroid(parallel).circuits() == std::vector<Mask>{0b11});
}

TEST_CASE("direct sums and restrictions") {
    auto s = direct_sum(uniform_matroid(1, 1), uniform_matroid(2, 3));
    CHECK(s.ground_size() == 4);
    CHECK(s.rank() == 3);
    CHECK(is_matroid(s));
    // independent sets multiply: 2 * 7
    CHECK(s.sets().size() == 14);

    auto r = restriction(s, 0b1110);  // drop the free point
    CHECK(r == uniform_matroid(2, 3));
    CHECK_THROWS_AS(restriction(s, 0u), EmptyRestriction);

    // summing with an empty-ground complex is the identity
    Multigraph k1{1, {}};
    auto empty = graphic_matroid(k1);
    CHECK(empty.ground_size() == 0);
    CHECK(direct_sum(uniform_matroid(2, 3), empty) == uniform_matroid(2, 3));
}

TEST_CASE("flats and closure of small matroids") {
    auto u = uniform_matroid(2, 3);
    auto f = flats(u);
    std::sort(f.begin(), f.end());
    CHECK(f == std::vector<Mask>{0b000, 0b001, 0b010, 0b100, 0b111});
    CHECK(closure(u, 0b011) == 0b111u);
    CHECK(closure(u, 0b001) == 0b001u);
    CHECK(lattice_of_flats(u).lattice.size() == 5);
    CHECK(lattice_of_flats(u).lattice.is_geometric());
}

TEST_CASE("a complex with too few flats is not boolean representable") {
    // facets {1,2} and {3}: the only flats are the border ones, so no chain
    // of flats can separate the two points of the big facet
    auto h = SimplicialComplex::from_facets(pts(3), {0b011, 0b100});
    CHECK(!is_matroid(h));
    auto f = flats(h);
    std::sort(f.begin(), f.end());
    CHECK(f == std::vector<Mask>{0b000, 0b111});
    CHECK(!is_boolean_representable(h));
}

TEST_CASE("matroids are boolean representable") {
    Multigraph k4{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    auto g = graphic_matroid(k4);
    CHECK(is_matroid(g));
    CHECK(is_boolean_representable(g));
}

TEST_CASE("complex isomorphism is label-blind but structure-aware") {
    auto a = SimplicialComplex::from_facets(pts(3), {0b011, 0b100});
    auto b = SimplicialComplex::from_facets({"x", "y", "z"}, {0b110, 0b001});
    CHECK(complexes_isomorphic(a, b).has_value());
    CHECK(!complexes_isomorphic(a, uniform_matroid(2, 3)).has_value());
}

TEST_CASE("lattice representations and chain certificates") {
    // chain 0 < 1 < 2 with phi the two non-bottom elements: the free matroid U_{2,2}
    auto chain = FiniteLattice::from_poset({"0", "1", "2"}, [](int a, int b) { return a <= b; });
    auto rep = make_representation(chain, {1, 2}, {"a", "b"});
    CHECK(chain_certificate_greedy(rep, 0b11));
    CHECK(chain_certificate_exhaustive(rep, 0b11));
    CHECK(complex_from_lattice(rep) == uniform_matroid(2, 2));

    // both points on the top of a 2-chain: the joins cannot form a 2-chain
    auto chain2 = FiniteLattice::from_poset({"0", "1"}, [](int a, int b) { return a <= b; });
    auto rep2 = make_representation(chain2, {1, 1}, {"a", "b"});
    CHECK(!chain_certificate_greedy(rep2, 0b11));
    CHECK(complex_from_lattice(rep2).rank() == 1);

    // phi must avoid the bottom and join-generate
    CHECK_THROWS_AS(make_representation(chain, {0, 2}, {"a", "b"}), Error);
    CHECK_THROWS_AS(make_representation(chain, {1, 1}, {"a"}), MismatchedGroundSet);
}

TEST_CASE("banned total join carves out a subcomplex") {
    // M3 diamond: three atoms joining pairwise to the top
    auto leq = [](int a, int b) { return a == b || a == 0 || b == 4; };
    auto m3 = FiniteLattice::from_poset({"0", "x", "y", "z", "1"}, leq);
    auto rep = make_representation(m3, {1, 2, 3}, {"x", "y", "z"});
    // without a ban, every pair chains through the top
    CHECK(complex_from_lattice(rep) == uniform_matroid(2, 3));
    // banning the top keeps only the singletons
    CHECK(complex_from_lattice(rep, 4).rank() == 1);
    CHECK(complex_from_lattice(rep, 4).f_vector() == std::vector<int>{1, 3});
}

TEST_CASE("ground bound is enforced") {
    CHECK_THROWS_AS(uniform_matroid(2, 25), GroundTooLarge);
}
