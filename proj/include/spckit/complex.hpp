#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "spckit/bits.hpp"
#include "spckit/lattice.hpp"

namespace spckit {

/// A finite simplicial complex: a ground set (points 1..m) plus a hereditary
/// family of independent sets. The family always contains ∅ and is completed
/// downward on ingest, so any set list (facets included) is a valid source.
class SimplicialComplex {
public:
    static constexpr int kMaxGround = 24;

    SimplicialComplex(std::vector<std::string> ground_labels, const std::vector<Mask>& sets);
    static SimplicialComplex from_facets(std::vector<std::string> ground_labels,
                                         const std::vector<Mask>& facets);
    /// Materialize from a hereditary membership oracle by breadth-first
    /// extension (an independent set is reached through its sorted prefixes).
    static SimplicialComplex from_oracle(std::vector<std::string> ground_labels,
                                         const std::function<bool(Mask)>& independent);

    int ground_size() const { return m_; }
    const std::string& label(int v) const { return labels_[v - 1]; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool contains(Mask x) const { return set_lookup_.count(x) > 0; }
    /// All independent sets, sorted by (cardinality, mask).
    const std::vector<Mask>& sets() const { return sets_; }
    std::vector<Mask> facets() const;
    /// Minimal dependent sets.
    std::vector<Mask> circuits() const;
    int rank() const;
    /// Counts by cardinality, index 0 = the empty set.
    std::vector<int> f_vector() const;

    /// Same ground size and identical family (labels are advisory).
    bool operator==(const SimplicialComplex& o) const { return m_ == o.m_ && sets_ == o.sets_; }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

private:
    int m_ = 0;
    std::vector<std::string> labels_;
    std::vector<Mask> sets_;
    std::unordered_set<Mask> set_lookup_;

    void finalize(std::vector<Mask> sets);
};

/// Flats: X such that every independent I ⊆ X extends independently by every
/// point outside X.
std::vector<Mask> flats(const SimplicialComplex& h);
/// Smallest flat containing x (flats are closed under intersection).
Mask closure(const SimplicialComplex& h, Mask x);
/// Lattice of flats under inclusion; flat_masks[i] is the carrier of element i.
struct FlatLattice {
    FiniteLattice lattice;
    std::vector<Mask> flat_masks;
};
FlatLattice lattice_of_flats(const SimplicialComplex& h);

/// Exchange property: for |I| = |J|+1 independent, some point of I\J extends J.
bool is_matroid(const SimplicialComplex& h);

/// Every independent set is a transversal of the successive differences of a
/// chain of flats — equivalently it admits an enumeration along which the
/// partial closures strictly grow.
bool is_boolean_representable(const SimplicialComplex& h);

SimplicialComplex uniform_matroid(int k, int m);

/// A multigraph on vertices 1..vertices; loops and parallel edges allowed.
struct Multigraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};
/// Independent = forests (loops are dependent, parallel pairs form 2-cycles).
SimplicialComplex graphic_matroid(const Multigraph& g);

/// Grounds are concatenated (second shifted); independent = union of one
/// independent set from each summand.
SimplicialComplex direct_sum(const SimplicialComplex& a, const SimplicialComplex& b);

/// Restriction to a nonempty subset of the ground, reindexed compactly in
/// increasing vertex order (labels follow).
SimplicialComplex restriction(const SimplicialComplex& h, Mask w);

/// Brute-force complex isomorphism over vertex bijections, pruned by
/// per-vertex membership profiles. Grounds above max_ground are rejected.
std::optional<std::vector<int>> complexes_isomorphic(const SimplicialComplex& a,
                                                     const SimplicialComplex& b,
                                                     int max_ground = 12);

/// A ∨-generated lattice representation: φ maps ground points (1..m) to
/// lattice elements, none of them the bottom, whose joins reach every element.
struct LatticeRepresentation {
    FiniteLattice lattice;
    std::vector<int> phi;  // phi[v-1] = element index for point v
    std::vector<std::string> ground_labels;
};
LatticeRepresentation make_representation(FiniteLattice lattice, std::vector<int> phi,
                                          std::vector<std::string> ground_labels);

/// Membership test behind complex_from_lattice: X is independent iff deleting
/// one element at a time keeps strictly dropping the total join. Any element
/// whose deletion drops the join may be removed (heredity makes the greedy
/// choice safe); the exhaustive variant tries every enumeration and exists to
/// guard the greedy one.
bool chain_certificate_greedy(const LatticeRepresentation& rep, Mask x, int banned_total = -1);
bool chain_certificate_exhaustive(const LatticeRepresentation& rep, Mask x, int banned_total = -1);

/// The simplicial complex of subsets admitting an enumeration whose partial
/// joins form a strict chain. With banned_total >= 0, sets whose total join
/// is that element are excluded (used to carve the Rhodes complex out of its
/// sentinel completion).
SimplicialComplex complex_from_lattice(const LatticeRepresentation& rep, int banned_total = -1);

}  // namespace spckit
