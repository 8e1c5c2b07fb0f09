#include "spckit/wreath.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "spckit/errors.hpp"

namespace spckit {

namespace {
constexpr int kMaxGround = 24;  // same ceiling as partitions: masks must fit
}

ColumnMonomialMatrix::ColumnMonomialMatrix(int n, FiniteGroup group,
                                           std::vector<std::optional<Entry>> columns)
    : n_(n), group_(std::move(group)), cols_(std::move(columns)) {
    if (n < 0 || n > kMaxGround)
        throw ArgumentOutOfRange("matrix size out of range");
    if (static_cast<int>(cols_.size()) != n)
        throw ArgumentOutOfRange("column count does not match the size");
    for (const auto& c : cols_) {
        if (!c) continue;
        if (c->row < 1 || c->row > n) throw ArgumentOutOfRange("entry row out of range");
        if (c->label < 0 || c->label >= group_.order())
            throw ArgumentOutOfRange("entry label outside group");
    }
}

ColumnMonomialMatrix ColumnMonomialMatrix::identity(int n, const FiniteGroup& g) {
    std::vector<std::optional<Entry>> cols(n);
    for (int j = 1; j <= n; ++j) cols[j - 1] = Entry{j, g.identity()};
    return ColumnMonomialMatrix(n, g, std::move(cols));
}

ColumnMonomialMatrix ColumnMonomialMatrix::zero(int n, const FiniteGroup& g) {
    return ColumnMonomialMatrix(n, g, std::vector<std::optional<Entry>>(n));
}

bool ColumnMonomialMatrix::is_unit() const {
    Mask rows = 0;
    for (const auto& c : cols_) {
        if (!c) return false;
        rows |= point_bit(c->row);
    }
    return rows == full_mask(n_);
}

std::string ColumnMonomialMatrix::to_text() const {
    std::string out;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (j > 1) out += ' ';
            if (cols_[j - 1] && cols_[j - 1]->row == i)
                out += group_.label(cols_[j - 1]->label);
            else
                out += '.';
        }
        out += '\n';
    }
    return out;
}

ColumnMonomialMatrix monomial_multiply(const ColumnMonomialMatrix& b,
                                       const ColumnMonomialMatrix& a) {
    if (b.size() != a.size() || !(b.group() == a.group()))
        throw MismatchedContext("matrix product needs equal sizes and groups");
    const FiniteGroup& G = a.group();
    const int n = a.size();
    std::vector<std::optional<ColumnMonomialMatrix::Entry>> cols(n);
    for (int j = 1; j <= n; ++j) {
        const auto& ca = a.column(j);
        if (!ca) continue;
        const auto& cb = b.column(ca->row);
        if (!cb) continue;
        cols[j - 1] = ColumnMonomialMatrix::Entry{cb->row, G.mul(cb->label, ca->label)};
    }
    return ColumnMonomialMatrix(n, G, std::move(cols));
}

ColumnMonomialMatrix unit_inverse(const ColumnMonomialMatrix& u) {
    if (!u.is_unit()) throw ArgumentOutOfRange("matrix is not a unit");
    const FiniteGroup& G = u.group();
    const int n = u.size();
    std::vector<std::optional<ColumnMonomialMatrix::Entry>> cols(n);
    for (int j = 1; j <= n; ++j) {
        const auto& c = u.column(j);
        cols[c->row - 1] = ColumnMonomialMatrix::Entry{j, G.inv(c->label)};
    }
    return ColumnMonomialMatrix(n, G, std::move(cols));
}

Spc spc_of_matrix(const ColumnMonomialMatrix& a) {
    const int n = a.size();
    std::map<int, Mask> by_row;
    std::vector<int> raw(n, -1);
    for (int j = 1; j <= n; ++j) {
        const auto& c = a.column(j);
        if (!c) continue;
        by_row[c->row] |= point_bit(j);
        raw[j - 1] = c->label;
    }
    std::vector<Mask> blocks;
    for (const auto& [row, mask] : by_row) blocks.push_back(mask);
    return Spc(a.group(), PartialPartition(n, std::move(blocks)), std::move(raw));
}

bool l_below(const ColumnMonomialMatrix& c, const ColumnMonomialMatrix& a) {
    if (c.size() != a.size() || !(c.group() == a.group()))
        throw MismatchedContext("L-order comparison needs equal sizes and groups");
    const FiniteGroup& G = a.group();
    const int n = a.size();
    // column j of BA is empty whenever column j of A is
    for (int j = 1; j <= n; ++j)
        if (!a.column(j) && c.column(j)) return false;
    // each nonzero A-row r forces B's column r: all columns of A supported on
    // row r must induce the same entry (or all demand it empty)
    for (int r = 1; r <= n; ++r) {
        bool first = true;
        std::optional<ColumnMonomialMatrix::Entry> forced;
        for (int j = 1; j <= n; ++j) {
            const auto& ca = a.column(j);
            if (!ca || ca->row != r) continue;
            std::optional<ColumnMonomialMatrix::Entry> want;
            if (const auto& cc = c.column(j))
                want = ColumnMonomialMatrix::Entry{cc->row, G.mul(cc->label, G.inv(ca->label))};
            if (first) {
                forced = want;
                first = false;
            } else if (forced != want) {
                return false;
            }
        }
    }
    return true;
}

std::vector<ColumnMonomialMatrix> enumerate_monomial(int n, const FiniteGroup& g,
                                                     long long bound) {
    const long long options = 1 + static_cast<long long>(n) * g.order();
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= options;
        if (total > bound) throw SearchSpaceTooLarge("too many column monomial matrices");
    }
    std::vector<ColumnMonomialMatrix> out;
    out.reserve(total);
    std::vector<int> digit(n, 0);  // 0 = empty column, 1.. = (row, label) pairs
    for (long long t = 0; t < total; ++t) {
        std::vector<std::optional<ColumnMonomialMatrix::Entry>> cols(n);
        for (int j = 0; j < n; ++j)
            if (digit[j] > 0) {
                int k = digit[j] - 1;
                cols[j] = ColumnMonomialMatrix::Entry{k / g.order() + 1, k % g.order()};
            }
        out.emplace_back(n, g, std::move(cols));
        for (int j = n - 1; j >= 0; --j) {
            if (++digit[j] < options) break;
            digit[j] = 0;
        }
    }
    return out;
}

std::vector<ColumnMonomialMatrix> enumerate_units(int n, const FiniteGroup& g,
                                                  long long bound) {
    long long total = 1;
    for (int i = 1; i <= n; ++i) {
        total *= i * g.order();
        if (total > bound) throw SearchSpaceTooLarge("too many units");
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<ColumnMonomialMatrix> out;
    out.reserve(total);
    do {
        std::vector<int> label(n, 0);
        while (true) {
            std::vector<std::optional<ColumnMonomialMatrix::Entry>> cols(n);
            for (int j = 0; j < n; ++j)
                cols[j] = ColumnMonomialMatrix::Entry{perm[j], label[j]};
            out.emplace_back(n, g, std::move(cols));
            int j = n - 1;
            while (j >= 0 && ++label[j] == g.order()) label[j--] = 0;
            if (j < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool l_below_exhaustive(const ColumnMonomialMatrix& c, const ColumnMonomialMatrix& a,
                        long long bound) {
    if (c.size() != a.size() || !(c.group() == a.group()))
        throw MismatchedContext("L-order comparison needs equal sizes and groups");
    for (const auto& b : enumerate_monomial(a.size(), a.group(), bound))
        if (monomial_multiply(b, a) == c) return true;
    return false;
}

TrivialSubgroupoid::TrivialSubgroupoid(int n, FiniteGroup group, std::vector<Morphism> morphisms)
    : n_(n), group_(std::move(group)), morphisms_(std::move(morphisms)) {
    if (n < 0 || n > kMaxGround)
        throw ArgumentOutOfRange("ambient size out of range");
    std::sort(morphisms_.begin(), morphisms_.end());
    morphisms_.erase(std::unique(morphisms_.begin(), morphisms_.end()), morphisms_.end());
    std::set<std::pair<int, int>> pairs;
    for (const auto& m : morphisms_) {
        if (m.src < 1 || m.src > n || m.dst < 1 || m.dst > n)
            throw ArgumentOutOfRange("morphism object out of range");
        if (m.label < 0 || m.label >= group_.order())
            throw ArgumentOutOfRange("morphism label outside group");
        if (!pairs.insert({m.src, m.dst}).second)
            throw NotTrivial("two morphisms from " + std::to_string(m.src) + " to " +
                             std::to_string(m.dst));
        objects_ |= point_bit(m.src) | point_bit(m.dst);
    }
    for (int p : points_of(objects_))
        if (!contains({p, group_.identity(), p}))
            throw NotClosed("missing identity at object " + std::to_string(p));
    for (const auto& m : morphisms_) {
        if (!contains({m.dst, group_.inv(m.label), m.src}))
            throw NotClosed("missing inverse of " + std::to_string(m.src) + "->" +
                            std::to_string(m.dst));
        for (const auto& k : morphisms_) {
            if (k.src != m.dst) continue;
            if (!contains({m.src, group_.mul(m.label, k.label), k.dst}))
                throw NotClosed("missing composite " + std::to_string(m.src) + "->" +
                                std::to_string(m.dst) + "->" + std::to_string(k.dst));
        }
    }
}

bool TrivialSubgroupoid::contains(const Morphism& m) const {
    return std::binary_search(morphisms_.begin(), morphisms_.end(), m);
}

bool TrivialSubgroupoid::includes(const TrivialSubgroupoid& other) const {
    if (n_ != other.n_ || !(group_ == other.group_))
        throw MismatchedContext("inclusion needs a common ambient groupoid");
    for (const auto& m : other.morphisms_)
        if (!contains(m)) return false;
    return true;
}

std::vector<Morphism> brandt_groupoid(int n, const FiniteGroup& g) {
    if (n < 0 || n > kMaxGround)
        throw ArgumentOutOfRange("ambient size out of range");
    std::vector<Morphism> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int x = 0; x < g.order(); ++x) out.push_back({i, x, j});
    return out;
}

TrivialSubgroupoid subgroupoid_of_spc(const Spc& s) {
    const FiniteGroup& G = s.group();
    std::vector<Morphism> ms;
    for (Mask block : s.partition().blocks())
        for (int a : points_of(block))
            for (int b : points_of(block))
                ms.push_back({a, G.mul(G.inv(s.cs(a)), s.cs(b)), b});
    return TrivialSubgroupoid(s.ground_size(), G, std::move(ms));
}

Spc spc_of_subgroupoid(const TrivialSubgroupoid& t) {
    const FiniteGroup& G = t.group();
    const int n = t.ambient_size();
    // objects related by a morphism form an equivalence (identities, inverses
    // and composites are present), so blocks can be read off directly
    std::vector<Mask> blocks;
    std::vector<int> raw(n, -1);
    Mask seen = 0;
    for (int p : points_of(t.objects())) {
        if (contains(seen, p)) continue;
        Mask block = 0;
        for (const auto& m : t.morphisms())
            if (m.src == p) {
                block |= point_bit(m.dst);
                raw[m.dst - 1] = m.label;  // p is the block minimum: raw(min) = e
            }
        blocks.push_back(block);
        seen |= block;
    }
    return Spc(G, PartialPartition(n, std::move(blocks)), std::move(raw));
}

}  // namespace spckit
