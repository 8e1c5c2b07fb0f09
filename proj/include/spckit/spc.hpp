#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spckit/group.hpp"
#include "spckit/partition.hpp"

namespace spckit {

/// An SPC over {1..n} and a finite group G: a subset I (the partition's
/// domain), a partition of I, and one cross-section per block — a function
/// block -> G taken up to left translation. The stored form is canonical:
/// each block's minimum is mapped to the identity.
class Spc {
public:
    /// Normalize a raw assignment. `raw[p-1]` is the group element at point p
    /// and must be -1 exactly off the partition's domain (DomainMismatch).
    Spc(FiniteGroup group, PartialPartition partition, std::vector<int> raw);

    static Spc empty(int n, const FiniteGroup& g);

    int ground_size() const { return partition_.ground_size(); }
    const FiniteGroup& group() const { return group_; }
    const PartialPartition& partition() const { return partition_; }
    Mask domain() const { return partition_.domain(); }
    /// Canonical cross-section value at p (block minimum |-> identity); -1 off domain.
    int cs(int p) const { return cs_[p - 1]; }
    const std::vector<int>& cs_raw() const { return cs_; }

    bool operator==(const Spc& o) const {
        return partition_ == o.partition_ && cs_ == o.cs_ && group_ == o.group_;
    }
    bool operator!=(const Spc& o) const { return !(*this == o); }
    bool operator<(const Spc& o) const {  // deterministic enumeration order only
        if (partition_ != o.partition_) return partition_ < o.partition_;
        return cs_ < o.cs_;
    }

    /// "({1,2|3}; 1↦e,2↦g,3↦e)"; the empty SPC prints as "(∅)".
    std::string to_text() const;

private:
    FiniteGroup group_;
    PartialPartition partition_;
    std::vector<int> cs_;  // length n, -1 off domain, canonical per block
};

/// Dowling order: (I,π,[f]) ≤ (J,τ,[h]) iff J ⊆ I, every block of τ is a
/// union of π-blocks, and on each π-block inside J the cross-sections agree
/// up to a left translation. The empty SPC is the maximum.
bool dowling_leq(const Spc& a, const Spc& b);

/// Rhodes order: I ⊆ J, each π-block inside a τ-block, and on each π-block
/// the restriction of h agrees with f up to a left translation. The empty
/// SPC is the minimum.
bool rhodes_leq(const Spc& a, const Spc& b);

/// Greatest lower bound in the Rhodes order (always exists): points of I∩J
/// are grouped when they share both blocks and the ratio f(x)h(x)^{-1}.
Spc rhodes_meet(const Spc& a, const Spc& b);

/// Two-colored labeled graph deciding compatibility: vertices I1 ∪ I2, all
/// pairs within a π1-block (color 1) and within a π2-block (color 2); the
/// edge a->b of color i is labeled f_i(a)^{-1} f_i(b). Labels are independent
/// of the chosen cross-section representatives; reversal inverts the label.
struct NecklaceGraph {
    struct Edge {
        int a, b;    // endpoints, 1-based
        int color;   // 1 or 2
        int label;   // group element index for orientation a->b
    };
    int n = 0;
    Mask vertices = 0;
    std::vector<Edge> edges;
};

NecklaceGraph necklace_graph(const Spc& a, const Spc& b);

/// True iff a and b have a common upper bound in the Rhodes order — iff every
/// cycle of the necklace graph (equivalently every alternating-color
/// "necklace") carries the trivial label. Decided by propagating potentials
/// over a spanning forest and checking every remaining edge.
bool has_common_upper_bound(const Spc& a, const Spc& b);

/// Least upper bound in the Rhodes order, when a common upper bound exists:
/// blocks are the connected components of the necklace graph and the
/// cross-section is propagated from each component's minimum.
std::optional<Spc> rhodes_join(const Spc& a, const Spc& b);

/// All SPCs over {1..n} and G, deterministically ordered (partition, then
/// cross-section). Guarded: throws BoundsExceeded when |G|^n exceeds `bound`.
std::vector<Spc> enumerate_spc(int n, const FiniteGroup& g, std::uint64_t bound = 4096);

/// Join irreducibles of the Rhodes order: the n singleton-domain SPCs and,
/// for each pair i<j and each g in G, the SPC with the single block {i,j}
/// and cross-section i|->e, j|->g. This order is the canonical ground used by
/// every complex built over these generators.
std::vector<Spc> join_irreducibles_rhodes(int n, const FiniteGroup& g);

/// Atoms of the Dowling lattice: co-singleton domains with all-singleton
/// blocks, and full domains whose only non-singleton block is a pair {i,j}
/// carrying one of the |G| cross-sections.
std::vector<Spc> atoms_dowling(int n, const FiniteGroup& g);

}  // namespace spckit
