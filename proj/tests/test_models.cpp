#include <doctest.h>

#include <vector>

#include "spckit/complex.hpp"
#include "spckit/gain_graph.hpp"
#include "spckit/group.hpp"
#include "spckit/lattice.hpp"
#include "spckit/models.hpp"

using namespace spckit;

TEST_CASE("graph builders align with the pair generators") {
    auto k4 = complete_graph(4);
    CHECK(k4.vertices == 4);
    CHECK(k4.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4},
                                                       {2, 3}, {2, 4}, {3, 4}});
    auto p = parallel_complete_graph(2, 3);
    CHECK(p.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 2}, {1, 2}});
}

TEST_CASE("rhodes complexes over the trivial group") {
    auto one = FiniteGroup::trivial();
    auto h2 = rhodes_complex(2, one);
    CHECK(h2.ground_size() == 3);  // two singletons and one pair generator
    CHECK(h2.rank() == 3);
    CHECK(h2.sets().size() == 8);  // the full boolean lattice on 3 points

    auto h3 = rhodes_complex(3, one);
    CHECK(h3.ground_size() == 6);
    CHECK(h3.rank() == 5);           // 2n - 1
    CHECK(h3.facets().size() == 3);  // spanning trees of a triangle
    for (Mask f : h3.facets()) CHECK(popcount(f) == 5);
}

TEST_CASE("rhodes complexes over Z2") {
    auto z2 = FiniteGroup::cyclic(2);
    auto h = rhodes_complex(2, z2);
    CHECK(h.ground_size() == 4);
    CHECK(h.rank() == 3);
    CHECK(h.facets().size() == 2);  // one section per merged pair

    auto hat = rhodes_hat_complex(2, z2);
    CHECK(hat.ground_size() == 4);
    CHECK(hat.rank() == 4);  // 2n with the sentinel available
    CHECK(hat.facets().size() == 1);
    CHECK(hat.sets().size() == 16);

    // without a sentinel the two complexes coincide
    auto one = FiniteGroup::trivial();
    CHECK(rhodes_complex(3, one) == rhodes_hat_complex(3, one));
}

TEST_CASE("dowling complexes") {
    auto z2 = FiniteGroup::cyclic(2);
    auto m = dowling_complex(2, z2);
    CHECK(m.ground_size() == 4);
    CHECK(m.rank() == 2);
    CHECK(is_matroid(m));
    auto one = FiniteGroup::trivial();
    for (int n = 2; n <= 3; ++n)
        CHECK(complexes_isomorphic(dowling_complex(n, one),
                                   graphic_matroid(complete_graph(n + 1)))
                  .has_value());
}

TEST_CASE("representation over the join irreducibles") {
    auto z2 = FiniteGroup::cyclic(2);
    auto hat = build_rhodes_hat(2, z2);
    auto rep = representation_of(hat);
    CHECK(rep.phi.size() == 4);
    CHECK(rep.ground_labels.size() == 4);
    CHECK(complex_from_lattice(rep, hat.sentinel_top) == rhodes_complex(2, z2));
    CHECK(complex_from_lattice(rep) == rhodes_hat_complex(2, z2));
}

TEST_CASE("minimal lattice representations reproduce the complexes") {
    auto z2 = FiniteGroup::cyclic(2);
    auto one = FiniteGroup::trivial();
    CHECK(complex_from_lattice(ln_representation(2, z2)) == rhodes_complex(2, z2));
    CHECK(complex_from_lattice(ln_representation(3, one)) == rhodes_complex(3, one));
    CHECK(complex_from_lattice(powerset_representation(2)) ==
          graphic_matroid(complete_graph(3)));
    CHECK(complex_from_lattice(powerset_representation(3)) ==
          graphic_matroid(complete_graph(4)));
}

TEST_CASE("pair generator images ignore the group label") {
    auto z3 = FiniteGroup::cyclic(3);
    auto rep = ln_representation(2, z3);
    // ground: two singletons then the three sections of the pair {1,2}
    REQUIRE(rep.phi.size() == 5);
    CHECK(rep.phi[2] == rep.phi[3]);
    CHECK(rep.phi[3] == rep.phi[4]);
}
