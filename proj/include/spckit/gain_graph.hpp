#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spckit/complex.hpp"
#include "spckit/group.hpp"

namespace spckit {

/// A G-labeled multigraph on vertices 1..n. Edges are stored with u <= v and
/// the label read in that direction; traversing v->u reads the inverse.
/// Loops (u == v) are allowed and count as cycles of length one.
class GainGraph {
public:
    struct Edge {
        int u, v;   // u <= v after normalization
        int label;  // group element index, read u -> v
    };

    GainGraph(int vertices, FiniteGroup group, const std::vector<Edge>& edges);

    int vertices() const { return n_; }
    const FiniteGroup& group() const { return group_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[e - 1]; }  // 1-based ids
    const std::vector<Edge>& edges() const { return edges_; }
    std::string edge_text(int e) const;

private:
    int n_ = 0;
    FiniteGroup group_;
    std::vector<Edge> edges_;
};

/// Δ_n(G): one edge (i,j,g) for every pair i<j and every g, pairs in
/// lexicographic order and labels in group order — the same order as the
/// two-element join irreducibles, so complexes over the two grounds align
/// index-by-index.
GainGraph delta(int n, const FiniteGroup& g);

/// Δ'_n(G): Δ_n(G) plus one loop per vertex carrying the first non-identity
/// label (which particular one is irrelevant to the frame matroid).
GainGraph delta_prime(int n, const FiniteGroup& g);

/// Product of labels along a closed walk given as (edge id, forward?) steps;
/// consecutive steps must chain, edges may not repeat, and the walk must
/// return to its start. Whether the result is the identity is independent of
/// basepoint and orientation, even though the label itself is not.
int cycle_label(const GainGraph& g, const std::vector<std::pair<int, bool>>& walk);
bool is_balanced(const GainGraph& g, const std::vector<std::pair<int, bool>>& walk);

/// Edge subsets (masks over edge ids) with every component a tree or an
/// unbalanced unicycle.
bool frame_independent(const GainGraph& g, Mask edges);
/// Frame independence plus: at most one component carries a cycle.
bool lift_independent(const GainGraph& g, Mask edges);

SimplicialComplex frame_matroid(const GainGraph& g);
SimplicialComplex lift_matroid(const GainGraph& g);

enum class MatroidKind { Frame, Lift };
enum class CircuitKind {
    BalancedCycle,
    TightHandcuff,            // two unbalanced cycles sharing one vertex
    LooseHandcuff,            // frame only: vertex-disjoint cycles plus a minimal path
    DisjointUnbalancedPair,   // lift only: two vertex-disjoint unbalanced cycles
    UnbalancedTheta,          // three internally disjoint paths, all cycles unbalanced
};
std::string to_string(CircuitKind k);

/// Classify a circuit of the chosen matroid; validates minimal dependence
/// first (NotACircuit).
CircuitKind classify_circuit(const GainGraph& g, Mask edges, MatroidKind kind);

/// All edge-simple cycles of the graph, as edge masks.
std::vector<Mask> simple_cycles(const GainGraph& g);
bool cycle_mask_balanced(const GainGraph& g, Mask cycle);

/// Direct evaluation of the frame-flat conditions: balanced cycles never meet
/// the complement in exactly one edge; unbalanced cycles never exceed an
/// unbalanced component of X by exactly one edge; no graph edge joins two
/// unbalanced components of X.
bool frame_flat(const GainGraph& g, Mask x);
/// Lift version: the second and third conditions collapse into one about the
/// whole subgraph when it is unbalanced.
bool lift_flat(const GainGraph& g, Mask x);

/// Closed forms for the facet (basis) count of lift_matroid(delta(n, G)).
/// lift_facets_formula evaluates
///   [ n!/(n-2)! · n^(n-3)  +  Σ_{k=3..n} n!/(2(n-k)!) · n^(n-k-1) ] · |G|^(n-1)(|G|-1)
/// exactly (the k = n summand is fractional before the final product). It
/// double-counts bases whose cycle has length 2, since the leading term lacks
/// the 1/2 symmetry factor of the others. lift_facets_formula_corrected folds
/// the leading term into the uniform sum, i.e. Σ runs over k = 2..n with
/// weight 1/2 throughout; it agrees with exhaustive basis enumeration.
long long lift_facets_formula(int n, int gorder);
long long lift_facets_formula_corrected(int n, int gorder);

/// Reconstruct the gain group from the 3-subset membership data of a complex
/// shaped like the two-element-generator part of a rank-3 sentinel-completed
/// Rhodes complex (|G| >= 4): identify the parallel classes, read the
/// permutation delta and the composition table epsilon from excluded triples,
/// and return the induced group. Errors: NotAFrameOfExpectedShape.
FiniteGroup group_from_matroid(const SimplicialComplex& h);

}  // namespace spckit
