#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spckit/group.hpp"
#include "spckit/spc.hpp"

namespace spckit {

/// An n x n matrix over G-with-zero in which every column holds at most one
/// nonzero entry. These matrices form a monoid under the obvious product
/// (columns stay monomial); the invertible ones are exactly those whose
/// columns are all nonzero with pairwise distinct rows.
class ColumnMonomialMatrix {
public:
    struct Entry {
        int row;    // 1-based
        int label;  // group element index
        bool operator==(const Entry&) const = default;
    };

    /// columns[j-1] is column j: empty or (row, label).
    ColumnMonomialMatrix(int n, FiniteGroup group, std::vector<std::optional<Entry>> columns);

    static ColumnMonomialMatrix identity(int n, const FiniteGroup& g);
    static ColumnMonomialMatrix zero(int n, const FiniteGroup& g);

    int size() const { return n_; }
    const FiniteGroup& group() const { return group_; }
    const std::optional<Entry>& column(int j) const { return cols_[j - 1]; }

    bool is_unit() const;

    /// n lines of n space-separated entries, "." for zero, the label otherwise.
    std::string to_text() const;

    bool operator==(const ColumnMonomialMatrix& o) const {
        return n_ == o.n_ && group_ == o.group_ && cols_ == o.cols_;
    }

private:
    int n_;
    FiniteGroup group_;
    std::vector<std::optional<Entry>> cols_;
};

/// The product BA (apply A first). Throws MismatchedContext on size or group
/// disagreement.
ColumnMonomialMatrix monomial_multiply(const ColumnMonomialMatrix& b,
                                       const ColumnMonomialMatrix& a);

/// Inverse of a unit (every column nonzero, rows a permutation).
/// Throws ArgumentOutOfRange when the matrix is not a unit.
ColumnMonomialMatrix unit_inverse(const ColumnMonomialMatrix& u);

/// The SPC S(A): domain = nonzero columns, columns sharing a row fall in one
/// block, and the cross-section reads the entries (canonicalized).
Spc spc_of_matrix(const ColumnMonomialMatrix& a);

/// Whether some B solves C = BA, i.e. C lies weakly below A in the L-order.
/// Decided constructively: each nonzero row of C must match one G-multiple of
/// one row of A on its whole support. The exhaustive variant searches every
/// candidate B and exists as a cross-check; it throws SearchSpaceTooLarge when
/// (1 + n|G|)^n exceeds the bound.
bool l_below(const ColumnMonomialMatrix& c, const ColumnMonomialMatrix& a);
bool l_below_exhaustive(const ColumnMonomialMatrix& c, const ColumnMonomialMatrix& a,
                        long long bound = 200000);

/// All column monomial matrices of size n over g, in odometer order over the
/// columns; throws SearchSpaceTooLarge when (1 + n|G|)^n exceeds the bound.
std::vector<ColumnMonomialMatrix> enumerate_monomial(int n, const FiniteGroup& g,
                                                     long long bound = 200000);
/// The group of units G wr S_n, all n! |G|^n of them.
std::vector<ColumnMonomialMatrix> enumerate_units(int n, const FiniteGroup& g,
                                                  long long bound = 200000);

struct Morphism {
    int src;    // 1-based object
    int label;  // group element index
    int dst;
    bool operator==(const Morphism&) const = default;
    auto operator<=>(const Morphism&) const = default;
};

/// A subgroupoid of the Brandt groupoid B(G, n) with at most one morphism per
/// ordered object pair. Construction checks closure under identities,
/// inverses, and composition (NotClosed) and the one-morphism-per-pair
/// condition (NotTrivial).
class TrivialSubgroupoid {
public:
    TrivialSubgroupoid(int n, FiniteGroup group, std::vector<Morphism> morphisms);

    int ambient_size() const { return n_; }
    const FiniteGroup& group() const { return group_; }
    Mask objects() const { return objects_; }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    bool contains(const Morphism& m) const;

    /// Subgroupoid inclusion within the same ambient B(G, n).
    bool includes(const TrivialSubgroupoid& other) const;

    bool operator==(const TrivialSubgroupoid& o) const {
        return n_ == o.n_ && group_ == o.group_ && morphisms_ == o.morphisms_;
    }

private:
    int n_;
    FiniteGroup group_;
    Mask objects_ = 0;
    std::vector<Morphism> morphisms_;  // sorted
};

/// Every morphism (i, g, j) of the Brandt groupoid B(G, n).
std::vector<Morphism> brandt_groupoid(int n, const FiniteGroup& g);

/// The trivial subgroupoid of an SPC: all (a, f(a)^{-1} f(b), b) with a, b in
/// a common block. Inverse of spc_of_subgroupoid (objects regrouped into
/// blocks by connectivity, cross-sections read off the morphisms).
TrivialSubgroupoid subgroupoid_of_spc(const Spc& s);
Spc spc_of_subgroupoid(const TrivialSubgroupoid& t);

}  // namespace spckit
