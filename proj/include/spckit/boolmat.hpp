#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spckit/complex.hpp"

namespace spckit {

/// A 0/1 matrix whose columns index a ground set (column v <-> point v).
/// Rows are stored as bitmasks with bit v-1 carrying column v.
class BooleanMatrix {
public:
    BooleanMatrix(int cols, std::vector<Mask> row_bits);

    /// Parse lines of 0/1 characters (uniform length); blank lines ignored.
    static BooleanMatrix from_text(const std::string& text);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool get(int i, int v) const { return contains(rows_[i - 1], v); }  // 1-based
    Mask row(int i) const { return rows_[i - 1]; }

    /// One line of 0/1 characters per row.
    std::string to_text() const;

    bool operator==(const BooleanMatrix&) const = default;

private:
    int cols_ = 0;
    std::vector<Mask> rows_;
};

/// Whether some |W| rows, suitably ordered against an ordering of W, form a
/// lower unitriangular submatrix. Decided greedily: repeatedly take the
/// lowest-index unused row with exactly one 1 on the remaining columns and
/// peel that column (heredity of the witnesses makes any greedy choice safe).
/// The exhaustive variant backtracks over every admissible (row, column)
/// pairing; it guards the greedy one and is bounded to |W| <= 8.
bool has_unitriangular_witness(const BooleanMatrix& m, Mask w);
bool has_unitriangular_witness_exhaustive(const BooleanMatrix& m, Mask w);

/// The simplicial complex of witnessed column subsets (cols <= 24, TooLarge).
SimplicialComplex complex_of_matrix(const BooleanMatrix& m,
                                    std::vector<std::string> ground_labels = {});

/// The flats-by-points matrix: one row per flat (ascending mask order), entry
/// 0 exactly where the point lies in the flat. Recovers the complex whenever
/// it is Boolean representable.
BooleanMatrix mat_of_flats(const SimplicialComplex& h);

/// One row per meet-irreducible lattice element (in element order), entry 0
/// exactly where the point's image sits below it. Yields the same complex as
/// the chain certificates of the representation.
BooleanMatrix matrix_from_lattice_rep(const LatticeRepresentation& rep);

/// A representation is minimal when collapsing any meet-irreducible onto its
/// unique cover never yields a lattice representation of the same complex
/// (the collapse may fail outright — no lattice, no join generation — or
/// produce a different complex; both count as a changed outcome).
bool is_minimal_lattice_rep(const LatticeRepresentation& rep);

/// Every representing matrix needs one row per element of a largest
/// independent set, so rank(h) bounds the minimal degree from below.
int mindeg_lower_bound(const SimplicialComplex& h);

/// Exhaustive search for a representing matrix with at most max_rows rows,
/// trying sorted tuples of distinct nonzero rows, fewest rows first. Bounded
/// to cols <= 5 and max_rows <= 4 (SearchSpaceTooLarge).
std::optional<BooleanMatrix> mindeg_exhaustive(const SimplicialComplex& h, int max_rows);

}  // namespace spckit
