#include "spckit/boolmat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "spckit/errors.hpp"

namespace spckit {

BooleanMatrix::BooleanMatrix(int cols, std::vector<Mask> row_bits)
    : cols_(cols), rows_(std::move(row_bits)) {
    if (cols < 0 || cols > SimplicialComplex::kMaxGround)
        throw ArgumentOutOfRange("column count out of range");
    for (Mask r : rows_)
        if (r & ~full_mask(cols)) throw ArgumentOutOfRange("row has bits beyond the columns");
}

BooleanMatrix BooleanMatrix::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int cols = -1;
    std::vector<Mask> rows;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        Mask r = 0;
        for (size_t v = 0; v < line.size(); ++v) {
            if (line[v] == '1')
                r |= point_bit(static_cast<int>(v) + 1);
            else if (line[v] != '0')
                throw ArgumentOutOfRange("matrix text must be 0/1 characters");
        }
        if (cols < 0) cols = static_cast<int>(line.size());
        if (cols != static_cast<int>(line.size()))
            throw ArgumentOutOfRange("matrix rows differ in length");
        rows.push_back(r);
    }
    return BooleanMatrix(cols < 0 ? 0 : cols, std::move(rows));
}

std::string BooleanMatrix::to_text() const {
    std::string out;
    for (Mask r : rows_) {
        for (int v = 1; v <= cols_; ++v) out += contains(r, v) ? '1' : '0';
        out += '\n';
    }
    return out;
}

bool has_unitriangular_witness(const BooleanMatrix& m, Mask w) {
    if (popcount(w) > m.rows()) return false;
    std::vector<Mask> avail;
    for (int i = 1; i <= m.rows(); ++i) avail.push_back(m.row(i));
    Mask remaining = w;
    while (remaining) {
        bool peeled = false;
        for (size_t i = 0; i < avail.size() && !peeled; ++i) {
            Mask hits = avail[i] & remaining;
            if (popcount(hits) != 1) continue;
            remaining &= ~hits;
            avail.erase(avail.begin() + static_cast<long>(i));
            peeled = true;
        }
        if (!peeled) return false;
    }
    return true;
}

bool has_unitriangular_witness_exhaustive(const BooleanMatrix& m, Mask w) {
    if (popcount(w) > 8) throw SearchSpaceTooLarge("exhaustive witness limited to 8 columns");
    if (popcount(w) > m.rows()) return false;
    const int nr = m.rows();
    std::function<bool(Mask, Mask)> rec = [&](Mask remaining, Mask used_rows) {
        if (!remaining) return true;
        for (int i = 1; i <= nr; ++i) {
            if (contains(used_rows, i)) continue;
            Mask hits = m.row(i) & remaining;
            if (popcount(hits) != 1) continue;
            if (rec(remaining & ~hits, used_rows | point_bit(i))) return true;
        }
        return false;
    };
    return rec(w, 0);
}

SimplicialComplex complex_of_matrix(const BooleanMatrix& m,
                                    std::vector<std::string> ground_labels) {
    if (m.cols() > SimplicialComplex::kMaxGround)
        throw TooLarge("too many columns to materialize the complex");
    if (ground_labels.empty())
        for (int v = 1; v <= m.cols(); ++v) ground_labels.push_back("c" + std::to_string(v));
    return SimplicialComplex::from_oracle(
        std::move(ground_labels), [&m](Mask x) { return has_unitriangular_witness(m, x); });
}

BooleanMatrix mat_of_flats(const SimplicialComplex& h) {
    std::vector<Mask> fl = flats(h);
    std::sort(fl.begin(), fl.end());
    std::vector<Mask> rows;
    for (Mask f : fl) rows.push_back(full_mask(h.ground_size()) & ~f);
    return BooleanMatrix(h.ground_size(), std::move(rows));
}

BooleanMatrix matrix_from_lattice_rep(const LatticeRepresentation& rep) {
    const int m = static_cast<int>(rep.phi.size());
    std::vector<Mask> rows;
    for (int i : rep.lattice.meet_irreducibles()) {
        Mask r = 0;
        for (int v = 1; v <= m; ++v)
            if (!rep.lattice.leq(rep.phi[v - 1], i)) r |= point_bit(v);
        rows.push_back(r);
    }
    return BooleanMatrix(m, std::move(rows));
}

bool is_minimal_lattice_rep(const LatticeRepresentation& rep) {
    const SimplicialComplex original = complex_from_lattice(rep);
    const FiniteLattice& L = rep.lattice;
    auto cover_list = L.covers();
    for (int mi : L.meet_irreducibles()) {
        int cover = -1;
        for (auto [a, b] : cover_list)
            if (a == mi) cover = b;
        // collapse mi onto its unique cover: drop mi, remap phi
        std::vector<int> keep, back(L.size(), -1);
        std::vector<std::string> labels;
        for (int x = 0; x < L.size(); ++x)
            if (x != mi) {
                back[x] = static_cast<int>(keep.size());
                keep.push_back(x);
                labels.push_back(L.label(x));
            }
        std::vector<int> phi2;
        for (int p : rep.phi) phi2.push_back(back[p == mi ? cover : p]);
        bool changed;
        try {
            FiniteLattice L2 = FiniteLattice::from_poset(
                labels, [&](int a, int b) { return L.leq(keep[a], keep[b]); });
            LatticeRepresentation rep2 =
                make_representation(std::move(L2), std::move(phi2), rep.ground_labels);
            changed = complex_from_lattice(rep2) != original;
        } catch (const NotALattice&) {
            changed = true;
        } catch (const NotAJoinGenerator&) {
            changed = true;
        }
        if (!changed) return false;
    }
    return true;
}

int mindeg_lower_bound(const SimplicialComplex& h) { return h.rank(); }

std::optional<BooleanMatrix> mindeg_exhaustive(const SimplicialComplex& h, int max_rows) {
    if (h.ground_size() > 5 || max_rows > 4)
        throw SearchSpaceTooLarge("mindeg search limited to 5 columns and 4 rows");
    const Mask row_top = full_mask(h.ground_size());
    for (int r = 1; r <= max_rows; ++r) {
        // sorted tuples of distinct nonzero rows (row order never matters)
        std::vector<Mask> rows(r);
        std::function<std::optional<BooleanMatrix>(int, Mask)> rec =
            [&](int k, Mask start) -> std::optional<BooleanMatrix> {
            if (k == r) {
                BooleanMatrix cand(h.ground_size(), rows);
                if (complex_of_matrix(cand) == h) return cand;
                return std::nullopt;
            }
            for (Mask m = start; m <= row_top; ++m) {
                rows[k] = m;
                if (auto found = rec(k + 1, m + 1)) return found;
            }
            return std::nullopt;
        };
        if (auto found = rec(0, 1)) return found;
    }
    return std::nullopt;
}

}  // namespace spckit
