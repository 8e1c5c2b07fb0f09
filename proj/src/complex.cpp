#include "spckit/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spckit/errors.hpp"

namespace spckit {

namespace {

void check_ground(int m) {
    if (m < 0 || m > SimplicialComplex::kMaxGround)
        throw GroundTooLarge("complex ground bounded to " +
                             std::to_string(SimplicialComplex::kMaxGround));
}

bool card_mask_less(Mask a, Mask b) {
    int ca = popcount(a), cb = popcount(b);
    return ca != cb ? ca < cb : a < b;
}

}  // namespace

void SimplicialComplex::finalize(std::vector<Mask> sets) {
    // complete downward and dedupe
    std::unordered_set<Mask> all;
    std::vector<Mask> stack(sets.begin(), sets.end());
    all.insert(0);
    while (!stack.empty()) {
        Mask x = stack.back();
        stack.pop_back();
        if (!all.insert(x).second) continue;
        for (Mask m = x; m; m &= m - 1) stack.push_back(x & ~(m & ~(m - 1)));
    }
    sets_.assign(all.begin(), all.end());
    std::sort(sets_.begin(), sets_.end(), card_mask_less);
    set_lookup_ = std::move(all);
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> ground_labels,
                                     const std::vector<Mask>& sets) {
    m_ = static_cast<int>(ground_labels.size());
    check_ground(m_);
    labels_ = std::move(ground_labels);
    for (Mask x : sets)
        if (x & ~full_mask(m_)) throw ArgumentOutOfRange("independent set outside ground");
    finalize(sets);
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> ground_labels,
                                                 const std::vector<Mask>& facets) {
    return SimplicialComplex(std::move(ground_labels), facets);
}

SimplicialComplex SimplicialComplex::from_oracle(std::vector<std::string> ground_labels,
                                                 const std::function<bool(Mask)>& independent) {
    const int m = static_cast<int>(ground_labels.size());
    check_ground(m);
    std::vector<Mask> found{0};
    // extend each reached set by points above its maximum: heredity ensures
    // every independent set is reached through its sorted prefix chain
    for (size_t k = 0; k < found.size(); ++k) {
        Mask x = found[k];
        int lo = x ? 32 - std::countl_zero(x) : 0;  // highest occupied bit index
        for (int v = lo + 1; v <= m; ++v)
            if (independent(x | point_bit(v))) found.push_back(x | point_bit(v));
    }
    return SimplicialComplex(std::move(ground_labels), found);
}

std::vector<Mask> SimplicialComplex::facets() const {
    std::vector<Mask> out;
    for (Mask x : sets_) {
        bool maximal = true;
        for (int v = 1; v <= m_ && maximal; ++v)
            maximal = (x >> (v - 1)) & 1u ? true : !contains(x | point_bit(v));
        if (maximal) out.push_back(x);
    }
    std::sort(out.begin(), out.end(), card_mask_less);
    return out;
}

std::vector<Mask> SimplicialComplex::circuits() const {
    std::vector<Mask> out;
    for (Mask x = 1; x <= full_mask(m_); ++x) {
        if (contains(x)) continue;
        bool minimal = true;
        for (Mask m = x; m && minimal; m &= m - 1)
            minimal = contains(x & ~(m & ~(m - 1)));
        if (minimal) out.push_back(x);
    }
    std::sort(out.begin(), out.end(), card_mask_less);
    return out;
}

int SimplicialComplex::rank() const {
    int r = 0;
    for (Mask x : sets_) r = std::max(r, popcount(x));
    return r;
}

std::vector<int> SimplicialComplex::f_vector() const {
    std::vector<int> f(rank() + 1, 0);
    for (Mask x : sets_) ++f[popcount(x)];
    return f;
}

std::vector<Mask> flats(const SimplicialComplex& h) {
    const int m = h.ground_size();
    const Mask full = full_mask(m);
    // bad(I) = points p outside I with I ∪ {p} dependent; X is a flat iff
    // every independent I ⊆ X keeps its bad points inside X
    std::vector<std::pair<Mask, Mask>> bad;
    for (Mask i : h.sets()) {
        Mask b = 0;
        for (int p = 1; p <= m; ++p)
            if (!contains(i, p) && !h.contains(i | point_bit(p))) b |= point_bit(p);
        if (b) bad.push_back({i, b});
    }
    std::vector<Mask> out;
    for (Mask x = 0;; ++x) {
        bool flat = true;
        for (const auto& [i, b] : bad)
            if ((i & ~x) == 0 && (b & ~x) != 0) {
                flat = false;
                break;
            }
        if (flat) out.push_back(x);
        if (x == full) break;
    }
    std::sort(out.begin(), out.end(), card_mask_less);
    return out;
}

Mask closure(const SimplicialComplex& h, Mask x) {
    const int m = h.ground_size();
    bool grew = true;
    while (grew) {
        grew = false;
        for (Mask i : h.sets()) {
            if (i & ~x) continue;
            for (int p = 1; p <= m; ++p)
                if (!contains(x, p) && !h.contains(i | point_bit(p))) {
                    x |= point_bit(p);
                    grew = true;
                }
        }
    }
    return x;
}

FlatLattice lattice_of_flats(const SimplicialComplex& h) {
    FlatLattice out;
    out.flat_masks = flats(h);
    std::vector<std::string> labels;
    for (Mask f : out.flat_masks) {
        std::string s = "{";
        auto pts = points_of(f);
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) s += ',';
            s += h.label(pts[i]);
        }
        labels.push_back(s + "}");
    }
    out.lattice = FiniteLattice::from_poset(labels, [&](int i, int j) {
        return (out.flat_masks[i] & ~out.flat_masks[j]) == 0;
    });
    return out;
}

bool is_matroid(const SimplicialComplex& h) {
    // exchange property over all pairs with |I| = |J| + 1
    const auto& sets = h.sets();
    for (Mask i : sets)
        for (Mask j : sets) {
            if (popcount(i) != popcount(j) + 1) continue;
            bool ok = false;
            for (Mask d = i & ~j; d && !ok; d &= d - 1)
                ok = h.contains(j | (d & ~(d - 1)));
            if (!ok) return false;
        }
    return true;
}

bool is_boolean_representable(const SimplicialComplex& h) {
    // X admits a chain of flats transversal iff removing elements whose
    // deletion strictly shrinks the closure succeeds down to ∅
    std::map<Mask, Mask> cl_cache;
    auto cl = [&](Mask x) {
        auto it = cl_cache.find(x);
        if (it != cl_cache.end()) return it->second;
        Mask c = closure(h, x);
        cl_cache.emplace(x, c);
        return c;
    };
    for (Mask x : h.sets()) {
        Mask cur = x;
        while (cur) {
            Mask next = 0;
            bool found = false;
            for (Mask m = cur; m && !found; m &= m - 1) {
                Mask cand = cur & ~(m & ~(m - 1));
                if (cl(cand) != cl(cur)) {
                    next = cand;
                    found = true;
                }
            }
            if (!found) return false;
            cur = next;
        }
    }
    return true;
}

SimplicialComplex uniform_matroid(int k, int m) {
    check_ground(m);
    if (k < 0) throw ArgumentOutOfRange("uniform matroid needs k >= 0");
    std::vector<std::string> labels(m);
    for (int v = 1; v <= m; ++v) labels[v - 1] = std::to_string(v);
    return SimplicialComplex::from_oracle(std::move(labels),
                                          [k](Mask x) { return popcount(x) <= k; });
}

SimplicialComplex graphic_matroid(const Multigraph& g) {
    const int m = static_cast<int>(g.edges.size());
    check_ground(m);
    for (auto [u, v] : g.edges)
        if (u < 1 || v < 1 || u > g.vertices || v > g.vertices)
            throw ArgumentOutOfRange("edge endpoint outside vertex range");
    std::vector<std::string> labels(m);
    for (int e = 1; e <= m; ++e) {
        auto [u, v] = g.edges[e - 1];
        labels[e - 1] = std::to_string(u) + "-" + std::to_string(v);
    }
    auto forest = [&](Mask x) {
        std::vector<int> parent(g.vertices + 1);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int a) {
            return parent[a] == a ? a : parent[a] = find(parent[a]);
        };
        for (int e : points_of(x)) {
            auto [u, v] = g.edges[e - 1];
            int ru = find(u), rv = find(v);
            if (ru == rv) return false;  // loops included: find(u) == find(v)
            parent[ru] = rv;
        }
        return true;
    };
    return SimplicialComplex::from_oracle(std::move(labels), forest);
}

SimplicialComplex direct_sum(const SimplicialComplex& a, const SimplicialComplex& b) {
    const int ma = a.ground_size(), mb = b.ground_size();
    check_ground(ma + mb);
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::vector<Mask> sets;
    for (Mask x : a.sets())
        for (Mask y : b.sets()) sets.push_back(x | (y << ma));
    return SimplicialComplex(std::move(labels), sets);
}

SimplicialComplex restriction(const SimplicialComplex& h, Mask w) {
    if (w == 0) throw EmptyRestriction("restriction to the empty ground");
    if (w & ~full_mask(h.ground_size())) throw ArgumentOutOfRange("restriction outside ground");
    auto pts = points_of(w);
    std::vector<std::string> labels;
    for (int p : pts) labels.push_back(h.label(p));
    std::vector<Mask> sets;
    for (Mask x : h.sets()) {
        if (x & ~w) continue;
        Mask packed = 0;
        for (size_t i = 0; i < pts.size(); ++i)
            if (contains(x, pts[i])) packed |= Mask{1} << i;
        sets.push_back(packed);
    }
    return SimplicialComplex(std::move(labels), sets);
}

std::optional<std::vector<int>> complexes_isomorphic(const SimplicialComplex& a,
                                                     const SimplicialComplex& b,
                                                     int max_ground) {
    if (a.ground_size() > max_ground || b.ground_size() > max_ground)
        throw GroundTooLarge("complex isomorphism bounded to " + std::to_string(max_ground));
    if (a.ground_size() != b.ground_size()) return std::nullopt;
    if (a.sets().size() != b.sets().size()) return std::nullopt;
    const int m = a.ground_size();

    // per-vertex profile: number of independent sets of each cardinality through v
    auto profile = [m](const SimplicialComplex& h) {
        std::vector<std::vector<int>> pr(m + 1, std::vector<int>(m + 1, 0));
        for (Mask x : h.sets())
            for (int v : points_of(x)) ++pr[v][popcount(x)];
        return pr;
    };
    auto pa = profile(a), pb = profile(b);
    // pair profile: sets through both u and v, by cardinality, packed into a hash
    auto pair_profile = [m](const SimplicialComplex& h) {
        std::vector<std::uint64_t> pr((m + 1) * (m + 1), 0);
        for (Mask x : h.sets()) {
            auto pts = points_of(x);
            for (int u : pts)
                for (int v : pts)
                    if (u != v) pr[u * (m + 1) + v] += std::uint64_t{1} << (4 * popcount(x));
        }
        return pr;
    };
    auto qa = pair_profile(a), qb = pair_profile(b);

    std::vector<int> map(m + 1, -1), used(m + 1, 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v > m) {
            for (Mask x : a.sets()) {
                Mask y = 0;
                for (int p : points_of(x)) y |= point_bit(map[p]);
                if (!b.contains(y)) return false;
            }
            return true;
        }
        for (int w = 1; w <= m; ++w) {
            if (used[w] || pa[v] != pb[w]) continue;
            bool ok = true;
            for (int u = 1; u < v && ok; ++u)
                ok = qa[u * (m + 1) + v] == qb[map[u] * (m + 1) + w];
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (rec(v + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (rec(1)) return std::vector<int>(map.begin() + 1, map.end());
    return std::nullopt;
}

LatticeRepresentation make_representation(FiniteLattice lattice, std::vector<int> phi,
                                          std::vector<std::string> ground_labels) {
    if (phi.size() != ground_labels.size())
        throw MismatchedGroundSet("phi and ground labels disagree in length");
    LatticeRepresentation rep{std::move(lattice), std::move(phi), std::move(ground_labels)};
    const auto& L = rep.lattice;
    for (int e : rep.phi) {
        if (e < 0 || e >= L.size()) throw ArgumentOutOfRange("phi image outside lattice");
        if (e == L.bottom()) throw NotAJoinGenerator("phi maps a point to the bottom");
    }
    // ∨-generation: closing the image under joins (with the empty join = bottom)
    // must reach the whole lattice
    std::vector<std::uint8_t> reached(L.size(), 0);
    reached[L.bottom()] = 1;
    for (int e : rep.phi) reached[e] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < L.size(); ++x)
            if (reached[x])
                for (int y = 0; y < L.size(); ++y)
                    if (reached[y] && !reached[L.join(x, y)]) {
                        reached[L.join(x, y)] = 1;
                        grew = true;
                    }
    }
    for (int x = 0; x < L.size(); ++x)
        if (!reached[x])
            throw NotAJoinGenerator("lattice element " + L.label(x) + " is not a join of images");
    return rep;
}

namespace {

int total_join(const LatticeRepresentation& rep, Mask x) {
    int j = rep.lattice.bottom();
    for (int v : points_of(x)) j = rep.lattice.join(j, rep.phi[v - 1]);
    return j;
}

}  // namespace

bool chain_certificate_greedy(const LatticeRepresentation& rep, Mask x, int banned_total) {
    if (banned_total >= 0 && total_join(rep, x) == banned_total) return false;
    Mask cur = x;
    while (cur) {
        int jcur = total_join(rep, cur);
        bool found = false;
        for (Mask m = cur; m && !found; m &= m - 1) {
            Mask cand = cur & ~(m & ~(m - 1));
            if (total_join(rep, cand) != jcur) {
                cur = cand;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool chain_certificate_exhaustive(const LatticeRepresentation& rep, Mask x, int banned_total) {
    if (banned_total >= 0 && total_join(rep, x) == banned_total) return false;
    auto pts = points_of(x);
    std::sort(pts.begin(), pts.end());
    do {
        int j = rep.lattice.bottom();
        bool strict = true;
        for (int v : pts) {
            int nj = rep.lattice.join(j, rep.phi[v - 1]);
            if (nj == j) {
                strict = false;
                break;
            }
            j = nj;
        }
        if (strict) return true;
    } while (std::next_permutation(pts.begin(), pts.end()));
    return x == 0;
}

SimplicialComplex complex_from_lattice(const LatticeRepresentation& rep, int banned_total) {
    return SimplicialComplex::from_oracle(rep.ground_labels, [&rep, banned_total](Mask x) {
        return chain_certificate_greedy(rep, x, banned_total);
    });
}

}  // namespace spckit
