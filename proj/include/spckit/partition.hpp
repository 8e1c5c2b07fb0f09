#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spckit/bits.hpp"

namespace spckit {

/// A partition of a subset of {1,...,n} into disjoint nonempty blocks.
/// The domain may be empty (no blocks). Blocks are kept canonical: each is a
/// bitmask, and the list is sorted by smallest element.
class PartialPartition {
public:
    /// Empty partition (empty domain) over a ground of size n.
    explicit PartialPartition(int n);
    /// Adopt explicit blocks, validating disjointness / range; any block order accepted.
    PartialPartition(int n, const std::vector<std::vector<int>>& blocks);
    PartialPartition(int n, std::vector<Mask> block_masks);

    static PartialPartition singletons(int n, Mask domain);
    static PartialPartition one_block(int n, Mask block);

    int ground_size() const { return n_; }
    Mask domain() const { return domain_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Mask>& blocks() const { return blocks_; }
    /// Index of the block containing p, or -1 when p is outside the domain.
    int block_of(int p) const;

    bool operator==(const PartialPartition& o) const {
        return n_ == o.n_ && blocks_ == o.blocks_;
    }
    bool operator!=(const PartialPartition& o) const { return !(*this == o); }
    /// Lexicographic on the canonical block lists; a total order used for
    /// deterministic enumeration output.
    bool operator<(const PartialPartition& o) const { return blocks_ < o.blocks_; }

    /// "{1,2|3}"; the empty partition prints as "∅".
    std::string to_text() const;
    static PartialPartition from_text(int n, std::string_view text);

private:
    int n_ = 0;
    Mask domain_ = 0;
    std::vector<Mask> blocks_;

    void canonicalize_and_check();
};

/// a refines b: domain(a) ⊆ domain(b) and every block of a lies inside one block of b.
bool refines(const PartialPartition& a, const PartialPartition& b);

/// Blockwise intersection: blocks are the nonempty pairwise intersections.
PartialPartition meet_blocks(const PartialPartition& a, const PartialPartition& b);

/// Finest common coarsening on the union of the domains (union-find closure).
PartialPartition join_blocks(const PartialPartition& a, const PartialPartition& b);

/// All partial partitions of {1..n} in deterministic order (domains by mask
/// value, then refinement-lex). Count is Bell(n+1). Bounded to n <= 5.
std::vector<PartialPartition> enumerate_partial_partitions(int n);

/// Partitions with full domain {1..n} only (the classical partition lattice carrier).
std::vector<PartialPartition> enumerate_set_partitions(int n);

}  // namespace spckit
