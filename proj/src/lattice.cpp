#include "spckit/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spckit/errors.hpp"

namespace spckit {

FiniteLattice FiniteLattice::from_poset(std::vector<std::string> labels,
                                        const std::function<bool(int, int)>& leq) {
    FiniteLattice L;
    L.n_ = static_cast<int>(labels.size());
    if (L.n_ == 0) throw NotALattice("empty carrier");
    if (L.n_ > kMaxSize) throw TooLarge("lattice carrier exceeds bound");
    L.labels_ = std::move(labels);
    L.leq_.assign(static_cast<size_t>(L.n_) * L.n_, 0);
    for (int a = 0; a < L.n_; ++a)
        for (int b = 0; b < L.n_; ++b) L.leq_[a * L.n_ + b] = leq(a, b) ? 1 : 0;

    for (int a = 0; a < L.n_; ++a)
        if (!L.leq(a, a)) throw NotAPartialOrder("not reflexive at " + std::to_string(a));
    for (int a = 0; a < L.n_; ++a)
        for (int b = 0; b < L.n_; ++b) {
            if (a != b && L.leq(a, b) && L.leq(b, a))
                throw NotAPartialOrder("antisymmetry fails at (" + std::to_string(a) + "," +
                                       std::to_string(b) + ")");
            if (!L.leq(a, b)) continue;
            for (int c = 0; c < L.n_; ++c)
                if (L.leq(b, c) && !L.leq(a, c))
                    throw NotAPartialOrder("transitivity fails at (" + std::to_string(a) + "," +
                                           std::to_string(b) + "," + std::to_string(c) + ")");
        }

    for (int a = 0; a < L.n_; ++a) {
        bool bot = true, top = true;
        for (int b = 0; b < L.n_; ++b) {
            bot = bot && L.leq(a, b);
            top = top && L.leq(b, a);
        }
        if (bot) L.bottom_ = a;
        if (top) L.top_ = a;
    }
    if (L.bottom_ < 0 || L.top_ < 0)
        throw NotALattice(L.bottom_ < 0 ? "no bottom element" : "no top element");

    // validate every pairwise meet and join; materialize tables when small
    const bool store = L.n_ <= kTableBound;
    if (store) {
        L.meet_.assign(static_cast<size_t>(L.n_) * L.n_, -1);
        L.join_.assign(static_cast<size_t>(L.n_) * L.n_, -1);
    }
    for (int a = 0; a < L.n_; ++a)
        for (int b = a; b < L.n_; ++b) {
            int m = L.compute_meet(a, b);
            int j = L.compute_join(a, b);
            if (m < 0) throw NotALattice("pair has no meet", a, b);
            if (j < 0) throw NotALattice("pair has no join", a, b);
            if (store) {
                L.meet_[a * L.n_ + b] = L.meet_[b * L.n_ + a] = m;
                L.join_[a * L.n_ + b] = L.join_[b * L.n_ + a] = j;
            }
        }
    return L;
}

int FiniteLattice::compute_meet(int a, int b) const {
    // greatest element of the common lower bounds; -1 when absent
    int best = -1;
    for (int c = 0; c < n_; ++c)
        if (leq(c, a) && leq(c, b) && (best < 0 || leq(best, c))) best = c;
    if (best < 0) return -1;
    for (int c = 0; c < n_; ++c)
        if (leq(c, a) && leq(c, b) && !leq(c, best)) return -1;
    return best;
}

int FiniteLattice::compute_join(int a, int b) const {
    int best = -1;
    for (int c = 0; c < n_; ++c)
        if (leq(a, c) && leq(b, c) && (best < 0 || leq(c, best))) best = c;
    if (best < 0) return -1;
    for (int c = 0; c < n_; ++c)
        if (leq(a, c) && leq(b, c) && !leq(best, c)) return -1;
    return best;
}

int FiniteLattice::meet(int a, int b) const {
    if (!meet_.empty()) return meet_[a * n_ + b];
    return compute_meet(a, b);
}

int FiniteLattice::join(int a, int b) const {
    if (!join_.empty()) return join_[a * n_ + b];
    return compute_join(a, b);
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n_ && cover; ++c)
                cover = !(c != a && c != b && leq(a, c) && leq(c, b));
            if (cover) out.push_back({a, b});
        }
    return out;
}

std::vector<int> FiniteLattice::atoms() const {
    std::vector<int> out;
    for (auto [a, b] : covers())
        if (a == bottom_) out.push_back(b);
    return out;
}

std::vector<int> FiniteLattice::join_irreducibles() const {
    std::vector<int> below(n_, 0);
    for (auto [a, b] : covers()) ++below[b];
    std::vector<int> out;
    for (int x = 0; x < n_; ++x)
        if (below[x] == 1) out.push_back(x);
    return out;
}

std::vector<int> FiniteLattice::meet_irreducibles() const {
    std::vector<int> above(n_, 0);
    for (auto [a, b] : covers()) ++above[a];
    std::vector<int> out;
    for (int x = 0; x < n_; ++x)
        if (above[x] == 1) out.push_back(x);
    return out;
}

std::vector<int> FiniteLattice::rank() const {
    auto cov = covers();
    std::vector<int> r(n_, 0);
    // heights propagate along covers; iterate to fixpoint (graph is acyclic)
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : cov)
            if (r[b] < r[a] + 1) {
                r[b] = r[a] + 1;
                changed = true;
            }
    }
    return r;
}

bool FiniteLattice::is_atomistic() const {
    auto at = atoms();
    for (int x = 0; x < n_; ++x) {
        int j = bottom_;
        for (int a : at)
            if (leq(a, x)) j = join(j, a);
        if (j != x) return false;
    }
    return true;
}

bool FiniteLattice::is_semimodular() const {
    auto cov = covers();
    std::vector<std::uint8_t> is_cover(static_cast<size_t>(n_) * n_, 0);
    for (auto [a, b] : cov) is_cover[a * n_ + b] = 1;
    for (int v = 0; v < n_; ++v)
        for (int w = 0; w < n_; ++w) {
            if (is_cover[meet(v, w) * n_ + v] && !is_cover[w * n_ + join(v, w)]) return false;
        }
    return true;
}

namespace {

/// Iterated invariant refinement: start from (rank, up-degree, down-degree)
/// and fold in sorted neighbor invariants until stable.
std::vector<std::uint64_t> element_invariants(const FiniteLattice& L) {
    const int n = L.size();
    auto cov = L.covers();
    std::vector<std::vector<int>> up(n), down(n);
    for (auto [a, b] : cov) {
        up[a].push_back(b);
        down[b].push_back(a);
    }
    auto rk = L.rank();
    std::vector<std::uint64_t> inv(n);
    for (int x = 0; x < n; ++x)
        inv[x] = (static_cast<std::uint64_t>(rk[x]) << 32) ^ (up[x].size() << 16) ^ down[x].size();
    for (int round = 0; round < n; ++round) {
        std::vector<std::uint64_t> next(n);
        for (int x = 0; x < n; ++x) {
            std::vector<std::uint64_t> nb;
            for (int y : up[x]) nb.push_back(inv[y] * 3);
            for (int y : down[x]) nb.push_back(inv[y] * 5);
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = inv[x];
            for (auto v : nb) h = h * 1000003u + v;
            next[x] = h;
        }
        if (next == inv) break;
        inv = std::move(next);
    }
    return inv;
}

}  // namespace

std::optional<std::vector<int>> lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b,
                                                   int max_size) {
    if (a.size() > max_size || b.size() > max_size)
        throw TooLarge("lattice isomorphism bounded to " + std::to_string(max_size) + " elements");
    if (a.size() != b.size()) return std::nullopt;
    const int n = a.size();
    auto ia = element_invariants(a), ib = element_invariants(b);
    {
        auto sa = ia, sb = ib;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    // order the search by invariant rarity
    std::map<std::uint64_t, int> freq;
    for (auto v : ia) ++freq[v];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (freq[ia[x]] != freq[ia[y]]) return freq[ia[x]] < freq[ia[y]];
        return x < y;
    });

    std::vector<int> map(n, -1), used(n, 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) return true;
        int x = order[i];
        for (int y = 0; y < n; ++y) {
            if (used[y] || ib[y] != ia[x]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k) {
                int u = order[k];
                ok = (a.leq(x, u) == b.leq(y, map[u])) && (a.leq(u, x) == b.leq(map[u], y));
            }
            if (!ok) continue;
            map[x] = y;
            used[y] = 1;
            if (rec(i + 1)) return true;
            map[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    if (rec(0)) return map;
    return std::nullopt;
}

SpcPoset build_rhodes(int n, const FiniteGroup& g) {
    SpcPoset P;
    P.elements = enumerate_spc(n, g);
    const int N = static_cast<int>(P.elements.size());
    // the order is a meet-semilattice with bottom; it is a lattice iff every
    // pair has a least upper bound, checked directly against the order
    std::vector<std::uint8_t> leq(static_cast<size_t>(N) * N, 0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            leq[i * N + j] = rhodes_leq(P.elements[i], P.elements[j]) ? 1 : 0;
    P.is_lattice = true;
    for (int i = 0; i < N && P.is_lattice; ++i)
        for (int j = i + 1; j < N; ++j) {
            int best = -1;
            bool ok = false;
            for (int c = 0; c < N; ++c) {
                if (!leq[i * N + c] || !leq[j * N + c]) continue;
                if (best < 0 || leq[c * N + best]) best = c;
            }
            if (best >= 0) {
                ok = true;
                for (int c = 0; c < N && ok; ++c)
                    if (leq[i * N + c] && leq[j * N + c] && !leq[best * N + c]) ok = false;
            }
            if (!ok) {
                P.is_lattice = false;
                P.no_lub_pair = {i, j};
                break;
            }
        }
    return P;
}

SpcLattice build_rhodes_hat(int n, const FiniteGroup& g) {
    SpcLattice out;
    out.spcs = enumerate_spc(n, g);
    const int N = static_cast<int>(out.spcs.size());
    std::vector<std::string> labels(N);
    for (int i = 0; i < N; ++i) labels[i] = out.spcs[i].to_text();

    // already a lattice when n = 1 or |G| = 1; otherwise adjoin a sentinel top
    const bool needs_top = n > 1 && g.order() > 1;
    if (needs_top) {
        labels.push_back("T");
        out.sentinel_top = N;
    }
    const int top = out.sentinel_top;
    out.lattice = FiniteLattice::from_poset(labels, [&](int i, int j) {
        if (j == top && needs_top) return true;
        if (i == top && needs_top) return i == j;
        return rhodes_leq(out.spcs[i], out.spcs[j]);
    });
    return out;
}

SpcLattice build_dowling(int n, const FiniteGroup& g) {
    SpcLattice out;
    out.spcs = enumerate_spc(n, g);
    const int N = static_cast<int>(out.spcs.size());
    std::vector<std::string> labels(N);
    for (int i = 0; i < N; ++i) labels[i] = out.spcs[i].to_text();
    out.lattice = FiniteLattice::from_poset(labels, [&](int i, int j) {
        return dowling_leq(out.spcs[i], out.spcs[j]);
    });
    return out;
}

FiniteLattice partition_lattice(int m) {
    auto parts = enumerate_set_partitions(m);
    std::vector<std::string> labels;
    for (const auto& p : parts) labels.push_back(p.to_text());
    return FiniteLattice::from_poset(labels,
                                     [&](int i, int j) { return refines(parts[i], parts[j]); });
}

FiniteLattice powerset_lattice(int n) {
    if (n < 0 || n > 10) throw ArgumentOutOfRange("powerset lattice bounded to n <= 10");
    const int N = 1 << n;
    std::vector<std::string> labels(N);
    for (Mask m = 0; m < static_cast<Mask>(N); ++m) {
        if (!m) {
            labels[m] = "∅";
            continue;
        }
        std::string s = "{";
        auto pts = points_of(m);
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(pts[i]);
        }
        labels[m] = s + "}";
    }
    return FiniteLattice::from_poset(labels, [](int i, int j) { return (i & ~j) == 0; });
}

LnLattice build_Ln(int n) {
    if (n < 2 || n > 6) throw ArgumentOutOfRange("Ln bounded to 2 <= n <= 6");
    LnLattice out;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        out.coords.push_back({0, i});
        labels.push_back("(∅," + std::to_string(i) + ")");
    }
    for (Mask I = 0; I < (Mask{1} << (n - 1)); ++I) {
        out.coords.push_back({I, n});
        std::string s = "({";
        auto pts = points_of(I);
        for (size_t k = 0; k < pts.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(pts[k]);
        }
        labels.push_back(s + "}," + std::to_string(n) + ")");
    }
    out.lattice = FiniteLattice::from_poset(labels, [&](int i, int j) {
        auto [I, a] = out.coords[i];
        auto [J, b] = out.coords[j];
        return (I & ~J) == 0 && a <= b;
    });
    return out;
}

}  // namespace spckit
