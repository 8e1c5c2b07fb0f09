#pragma once

#include "spckit/complex.hpp"
#include "spckit/gain_graph.hpp"
#include "spckit/lattice.hpp"

namespace spckit {

/// Representation of a Rhodes-order lattice (sentinel-completed or not) over
/// the join irreducibles, φ mapping each generator to its lattice element.
LatticeRepresentation representation_of(const SpcLattice& sl);

/// H_n(G): subsets of the join irreducibles whose partial joins can form a
/// strict chain avoiding the sentinel top (when one was adjoined).
SimplicialComplex rhodes_complex(int n, const FiniteGroup& g);
/// Ĥ_n(G): same, with the sentinel allowed as a final join.
SimplicialComplex rhodes_hat_complex(int n, const FiniteGroup& g);
/// M_n(G): the matroid of the Dowling lattice over its atoms.
SimplicialComplex dowling_complex(int n, const FiniteGroup& g);

/// (L_n, φ): φ sends the singleton generators to the chain (the n-th to the
/// bottom of the powerset layer) and each pair generator {i,j} to
/// ({i,j} \ {n}, n), independently of its group label.
LatticeRepresentation ln_representation(int n, const FiniteGroup& g);

/// (2^n, φ′): ground is the edge set of the complete graph on {0..n}, pairs
/// in lexicographic order; φ′(η_ij) = {i,j} \ {0} as a subset of {1..n}.
LatticeRepresentation powerset_representation(int n);

/// Complete graph on vertices 1..m, edges in pair-lexicographic order.
Multigraph complete_graph(int m);
/// Each K_m edge repeated `copies` times consecutively — the graph |G|K_m,
/// edge order aligned with the pair generators and with delta(m, G).
Multigraph parallel_complete_graph(int m, int copies);

}  // namespace spckit
