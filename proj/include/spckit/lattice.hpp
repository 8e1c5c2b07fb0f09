#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spckit/group.hpp"
#include "spckit/spc.hpp"

namespace spckit {

/// A finite lattice over elements 0..size-1. Construction validates the
/// partial-order axioms and the existence of all meets and joins (the
/// offending pair travels with the NotALattice error). Meet/join tables are
/// materialized up to kTableBound elements and computed per query beyond.
class FiniteLattice {
public:
    static constexpr int kTableBound = 2000;
    static constexpr int kMaxSize = 100000;

    /// Placeholder state (size 0) so lattices can sit inside aggregates;
    /// every usable instance comes from from_poset.
    FiniteLattice() = default;

    static FiniteLattice from_poset(std::vector<std::string> labels,
                                    const std::function<bool(int, int)>& leq);

    int size() const { return n_; }
    bool leq(int a, int b) const { return leq_[a * n_ + b]; }
    int meet(int a, int b) const;
    int join(int a, int b) const;
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const std::string& label(int a) const { return labels_[a]; }

    /// Covering pairs (a,b) with a covered by b, sorted.
    std::vector<std::pair<int, int>> covers() const;
    std::vector<int> atoms() const;                 // covers of the bottom
    std::vector<int> join_irreducibles() const;     // cover exactly one element
    std::vector<int> meet_irreducibles() const;     // covered by exactly one element
    /// Height of each element (longest chain from the bottom).
    std::vector<int> rank() const;

    bool is_atomistic() const;   // every element is a join of atoms
    /// Cover-style semimodularity: whenever v covers v∧w, v∨w covers w.
    bool is_semimodular() const;
    bool is_geometric() const { return is_atomistic() && is_semimodular(); }

private:
    int n_ = 0;
    int bottom_ = -1, top_ = -1;
    std::vector<std::string> labels_;
    std::vector<std::uint8_t> leq_;
    std::vector<int> meet_, join_;  // empty above kTableBound

    int compute_meet(int a, int b) const;
    int compute_join(int a, int b) const;
};

/// Brute-force lattice isomorphism with iterated invariant refinement
/// (rank, up/down cover degrees, neighbor invariant multisets). Returns an
/// element map or nullopt. Sizes above max_size are rejected (TooLarge).
std::optional<std::vector<int>> lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b,
                                                   int max_size = 2000);

/// The Rhodes order on all SPCs over {1..n} and G. A lattice only when n = 1
/// or |G| = 1; otherwise `no_lub_pair` holds indices of a witnessing pair.
struct SpcPoset {
    std::vector<Spc> elements;
    bool is_lattice = false;
    std::optional<std::pair<int, int>> no_lub_pair;
};
SpcPoset build_rhodes(int n, const FiniteGroup& g);

/// An SPC-carried lattice; spcs[i] corresponds to lattice element i. When a
/// sentinel top was adjoined it sits at index `sentinel_top` (label "T") and
/// has no SPC. Dowling lattices never need one.
struct SpcLattice {
    FiniteLattice lattice;
    std::vector<Spc> spcs;
    int sentinel_top = -1;
};

/// Rhodes order completed to a lattice. For n = 1 or |G| = 1 the order is
/// already a lattice and is returned as-is; otherwise a sentinel top absorbs
/// the joins of incompatible pairs.
SpcLattice build_rhodes_hat(int n, const FiniteGroup& g);

/// Dowling lattice of all SPCs under the Dowling order (a geometric lattice;
/// bottom = all singletons on the full set, top = empty SPC).
SpcLattice build_dowling(int n, const FiniteGroup& g);

/// Partition lattice Π_m under refinement.
FiniteLattice partition_lattice(int m);

/// Powerset of {1..n} ordered by inclusion; element i is the mask i.
FiniteLattice powerset_lattice(int n);

/// The minimal-degree lattice: a chain (∅,0) < ... < (∅,n-1) below a copy of
/// the powerset of {1..n-1} at level n. Join is (union, max), meet is
/// (intersection, min). coords[i] holds (subset mask, level).
struct LnLattice {
    FiniteLattice lattice;
    std::vector<std::pair<Mask, int>> coords;
};
LnLattice build_Ln(int n);

}  // namespace spckit
