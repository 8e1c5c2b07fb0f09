#include "spckit/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spckit/boolmat.hpp"
#include "spckit/complex.hpp"
#include "spckit/errors.hpp"
#include "spckit/gain_graph.hpp"
#include "spckit/group.hpp"
#include "spckit/lattice.hpp"
#include "spckit/models.hpp"
#include "spckit/spc.hpp"
#include "spckit/wreath.hpp"

namespace spckit {
namespace {

std::vector<FiniteGroup> small_groups() {
    return {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)};
}

/// Accumulates pass/fail counts; the first few failure witnesses ride along in
/// the details string so a red line is actionable on its own.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (witnesses_.size() < 3) witnesses_.push_back(what);
    }
    void note(const std::string& s) { notes_.push_back(s); }
    CheckResult result(const std::string& name) const {
        std::ostringstream out;
        if (failures_ == 0) {
            out << checks_ << " checks";
            for (const auto& s : notes_) out << "; " << s;
        } else {
            out << failures_ << " of " << checks_ << " checks failed";
            for (const auto& s : witnesses_) out << "; " << s;
        }
        return {name, failures_ == 0, out.str()};
    }

private:
    long long checks_ = 0, failures_ = 0;
    std::vector<std::string> witnesses_;
    std::vector<std::string> notes_;
};

std::string cfg(int n, const FiniteGroup& g) {
    return "n=" + std::to_string(n) + ",|G|=" + std::to_string(g.order());
}

int index_of(const std::vector<Spc>& all, const Spc& s) {
    auto it = std::find(all.begin(), all.end(), s);
    return it == all.end() ? -1 : static_cast<int>(it - all.begin());
}

}  // namespace

CheckResult check_orders() {
    Tally t;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& g : small_groups()) {
            auto all = enumerate_spc(n, g);
            int m = static_cast<int>(all.size());
            std::vector<std::uint8_t> dl(m * m), rl(m * m);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    dl[a * m + b] = dowling_leq(all[a], all[b]);
                    rl[a * m + b] = rhodes_leq(all[a], all[b]);
                }
            // Partial-order axioms for both orders.
            for (const auto* ord : {&dl, &rl}) {
                const auto& q = *ord;
                const char* tag = (ord == &dl) ? "dowling" : "rhodes";
                for (int a = 0; a < m; ++a)
                    t.expect(q[a * m + a], std::string(tag) + " not reflexive at " +
                                               all[a].to_text() + " (" + cfg(n, g) + ")");
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b) {
                        if (a != b && q[a * m + b] && q[b * m + a])
                            t.expect(false, std::string(tag) + " not antisymmetric: " +
                                                all[a].to_text() + " vs " + all[b].to_text());
                        if (!q[a * m + b]) continue;
                        for (int c = 0; c < m; ++c)
                            if (q[b * m + c] && !q[a * m + c])
                                t.expect(false, std::string(tag) + " not transitive (" +
                                                    cfg(n, g) + ")");
                    }
            }
            // rhodes_meet is the greatest lower bound.
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    Spc mt = rhodes_meet(all[a], all[b]);
                    int mi = index_of(all, mt);
                    if (mi < 0) {
                        t.expect(false, "meet escapes enumeration: " + mt.to_text());
                        continue;
                    }
                    bool lower = rl[mi * m + a] && rl[mi * m + b];
                    bool greatest = true;
                    for (int x = 0; x < m; ++x)
                        if (rl[x * m + a] && rl[x * m + b] && !rl[x * m + mi]) greatest = false;
                    t.expect(lower && greatest,
                             "rhodes_meet(" + all[a].to_text() + ", " + all[b].to_text() +
                                 ") is not the glb (" + cfg(n, g) + ")");
                }
            // rhodes_join is the least upper bound exactly when one exists.
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    std::vector<int> ubs;
                    for (int x = 0; x < m; ++x)
                        if (rl[a * m + x] && rl[b * m + x]) ubs.push_back(x);
                    auto j = rhodes_join(all[a], all[b]);
                    if (ubs.empty()) {
                        t.expect(!j.has_value(), "join exists without upper bounds (" +
                                                     cfg(n, g) + ")");
                        continue;
                    }
                    if (!j) {
                        t.expect(false, "join missing despite upper bounds: " +
                                            all[a].to_text() + ", " + all[b].to_text());
                        continue;
                    }
                    int ji = index_of(all, *j);
                    bool least = ji >= 0 && rl[a * m + ji] && rl[b * m + ji];
                    for (int u : ubs)
                        if (ji < 0 || !rl[ji * m + u]) least = false;
                    t.expect(least, "rhodes_join(" + all[a].to_text() + ", " +
                                        all[b].to_text() + ") is not the lub (" + cfg(n, g) + ")");
                }
        }
    }
    t.note("both orders on all SPCs, n<=3, |G|<=3; glb/lub vs exhaustive search");
    return t.result("orders");
}

CheckResult check_necklace(std::uint32_t seed) {
    Tally t;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& g : small_groups()) {
            auto all = enumerate_spc(n, g);
            for (const auto& a : all)
                for (const auto& b : all) {
                    bool exhaustive = false;
                    for (const auto& x : all)
                        if (rhodes_leq(a, x) && rhodes_leq(b, x)) {
                            exhaustive = true;
                            break;
                        }
                    bool flag = has_common_upper_bound(a, b);
                    t.expect(flag == exhaustive,
                             "necklace criterion disagrees with search at " + a.to_text() +
                                 ", " + b.to_text() + " (" + cfg(n, g) + ")");
                    t.expect(rhodes_join(a, b).has_value() == exhaustive,
                             "rhodes_join presence disagrees with search (" + cfg(n, g) + ")");
                }
        }
    }
    auto z2 = FiniteGroup::cyclic(2);
    auto big = enumerate_spc(4, z2);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(big.size()) - 1);
    int compatible = 0;
    for (int k = 0; k < 10000; ++k) {
        const Spc& a = big[pick(rng)];
        const Spc& b = big[pick(rng)];
        bool exhaustive = false;
        for (const auto& x : big)
            if (rhodes_leq(a, x) && rhodes_leq(b, x)) {
                exhaustive = true;
                break;
            }
        if (exhaustive) ++compatible;
        t.expect(has_common_upper_bound(a, b) == exhaustive,
                 "necklace criterion disagrees at n=4: " + a.to_text() + ", " + b.to_text());
    }
    t.note("all pairs n<=3, |G|<=3; 10000 seeded pairs over " +
           std::to_string(big.size()) + " SPCs at n=4, |G|=2 (" + std::to_string(compatible) +
           " compatible)");
    return t.result("necklace");
}

CheckResult check_lattice_flag() {
    Tally t;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& g : small_groups()) {
            auto poset = build_rhodes(n, g);
            bool expected = (n == 1 || g.order() == 1);
            t.expect(poset.is_lattice == expected,
                     "lattice flag wrong at " + cfg(n, g) + ": got " +
                         (poset.is_lattice ? "true" : "false"));
            if (!poset.is_lattice) {
                if (!poset.no_lub_pair) {
                    t.expect(false, "non-lattice without witness pair at " + cfg(n, g));
                    continue;
                }
                const auto& [ia, ib] = *poset.no_lub_pair;
                const auto& all = poset.elements;
                std::vector<int> ubs;
                for (int x = 0; x < static_cast<int>(all.size()); ++x)
                    if (rhodes_leq(all[ia], all[x]) && rhodes_leq(all[ib], all[x]))
                        ubs.push_back(x);
                bool least = false;
                for (int u : ubs) {
                    bool below_all = true;
                    for (int v : ubs)
                        if (!rhodes_leq(all[u], all[v])) below_all = false;
                    if (below_all) least = true;
                }
                t.expect(!least, "witness pair has a least upper bound at " + cfg(n, g));
            }
        }
    }
    t.note("flag true iff n=1 or |G|=1; every negative carries a checked witness pair");
    return t.result("lattice-flag");
}

CheckResult check_wreath() {
    Tally t;
    struct Case {
        int n;
        FiniteGroup g;
    };
    std::vector<Case> cases = {{2, FiniteGroup::cyclic(2)},
                               {2, FiniteGroup::cyclic(3)},
                               {3, FiniteGroup::cyclic(2)}};
    for (const auto& c : cases) {
        auto mats = enumerate_monomial(c.n, c.g);
        int m = static_cast<int>(mats.size());
        std::vector<Spc> img;
        img.reserve(m);
        for (const auto& a : mats) img.push_back(spc_of_matrix(a));
        std::vector<std::uint8_t> lb(static_cast<std::size_t>(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                bool below = l_below(mats[i], mats[j]);
                lb[static_cast<std::size_t>(i) * m + j] = below;
                t.expect(below == dowling_leq(img[j], img[i]),
                         "L-order vs Dowling order disagree at matrices " + std::to_string(i) +
                             "," + std::to_string(j) + " (" + cfg(c.n, c.g) + ")");
            }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                bool equiv = lb[static_cast<std::size_t>(i) * m + j] &&
                             lb[static_cast<std::size_t>(j) * m + i];
                t.expect(equiv == (img[i] == img[j]),
                         "L-equivalence class differs from SPC fiber (" + cfg(c.n, c.g) + ")");
            }
        t.note(std::to_string(m) + " matrices, " + std::to_string(m * m) + " ordered pairs at " +
               cfg(c.n, c.g));
    }
    return t.result("wreath");
}

CheckResult check_groupoid() {
    Tally t;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& g : small_groups()) {
            auto all = enumerate_spc(n, g);
            std::vector<TrivialSubgroupoid> sub;
            sub.reserve(all.size());
            for (const auto& s : all) {
                sub.push_back(subgroupoid_of_spc(s));
                t.expect(spc_of_subgroupoid(sub.back()) == s,
                         "SPC round trip broken at " + s.to_text() + " (" + cfg(n, g) + ")");
            }
            for (std::size_t a = 0; a < all.size(); ++a)
                for (std::size_t b = 0; b < all.size(); ++b)
                    t.expect(rhodes_leq(all[a], all[b]) == sub[b].includes(sub[a]),
                             "order vs inclusion disagree: " + all[a].to_text() + ", " +
                                 all[b].to_text() + " (" + cfg(n, g) + ")");
        }
    }
    // Brute force at n = 2 over Z2: every subset of the Brandt groupoid that
    // happens to be a trivial subgroupoid arises from exactly one SPC.
    auto z2 = FiniteGroup::cyclic(2);
    auto universe = brandt_groupoid(2, z2);
    int valid = 0;
    for (std::uint32_t mask = 0; mask < (1u << universe.size()); ++mask) {
        std::vector<Morphism> chosen;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask & (1u << i)) chosen.push_back(universe[i]);
        try {
            TrivialSubgroupoid sg(2, z2, chosen);
            ++valid;
            t.expect(subgroupoid_of_spc(spc_of_subgroupoid(sg)) == sg,
                     "subgroupoid round trip broken at subset mask " + std::to_string(mask));
        } catch (const Error&) {
        }
    }
    t.expect(valid == 6, "expected 6 trivial subgroupoids of B(Z2,2), found " +
                             std::to_string(valid));
    t.note("round trips and order agreement n<=3, |G|<=3; 256-subset brute force at n=2, |G|=2");
    return t.result("groupoid");
}

CheckResult check_rhodes_trivial() {
    Tally t;
    auto one = FiniteGroup::trivial();
    for (int n = 1; n <= 4; ++n) {
        auto h = rhodes_complex(n, one);
        auto model = direct_sum(uniform_matroid(n, n), graphic_matroid(complete_graph(n)));
        t.expect(h == model, "complex differs from U+graphic at n=" + std::to_string(n));
        t.expect(complexes_isomorphic(h, model).has_value(),
                 "no isomorphism found at n=" + std::to_string(n));
    }
    t.note("equality on the aligned ground plus an explicit bijection, n<=4");
    return t.result("rhodes-trivial");
}

CheckResult check_rhodes_graphic() {
    Tally t;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& g : small_groups()) {
            auto h = rhodes_complex(n, g);
            auto model = direct_sum(uniform_matroid(n, n),
                                    graphic_matroid(parallel_complete_graph(n, g.order())));
            t.expect(h == model, "complex differs from U+parallel graphic at " + cfg(n, g));
            t.expect(complexes_isomorphic(h, model).has_value(),
                     "no isomorphism found at " + cfg(n, g));
        }
    }
    t.note("equality on the aligned ground plus an explicit bijection, n<=3, |G|<=3");
    return t.result("rhodes-graphic");
}

CheckResult check_rhodes_lift() {
    Tally t;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& g : small_groups()) {
            auto h = rhodes_hat_complex(n, g);
            auto model = (n == 1) ? uniform_matroid(1, 1)
                                  : direct_sum(uniform_matroid(n, n), lift_matroid(delta(n, g)));
            t.expect(h == model, "completed complex differs from U+lift at " + cfg(n, g));
            t.expect(complexes_isomorphic(h, model).has_value(),
                     "no isomorphism found at " + cfg(n, g));
            if (n >= 2 && g.order() >= 2) {
                t.expect(h.rank() == 2 * n, "rank != 2n at " + cfg(n, g) + ": got " +
                                                std::to_string(h.rank()));
                Mask pairs_only = full_mask(h.ground_size()) & ~full_mask(n);
                t.expect(restriction(h, pairs_only) == lift_matroid(delta(n, g)),
                         "restriction to pair generators differs from the lift at " + cfg(n, g));
            }
        }
    }
    t.note("equality, bijection, rank 2n and pair-generator restriction, n<=3, |G|<=3");
    return t.result("rhodes-lift");
}

CheckResult check_facet_counts() {
    Tally t;
    struct Row {
        int n;
        const char* spec;
        long long oracle;
        long long closed;
    };
    const Row rows[] = {{2, "Z2", 1, 2}, {2, "Z3", 3, 6}, {3, "Z2", 16, 28}};
    for (const auto& r : rows) {
        auto g = FiniteGroup::from_spec(r.spec);
        auto lm = lift_matroid(delta(r.n, g));
        long long count = static_cast<long long>(lm.facets().size());
        long long closed = lift_facets_formula(r.n, g.order());
        long long corrected = lift_facets_formula_corrected(r.n, g.order());
        t.expect(count == r.oracle, "facet count at n=" + std::to_string(r.n) + ", G=" + r.spec +
                                        ": got " + std::to_string(count) + " expected " +
                                        std::to_string(r.oracle));
        t.expect(closed == r.closed, "closed form drifted at n=" + std::to_string(r.n) + ", G=" +
                                         r.spec + ": got " + std::to_string(closed));
        t.expect(corrected == count, "corrected closed form misses the enumeration at n=" +
                                         std::to_string(r.n) + ", G=" + r.spec);
        std::ostringstream line;
        line << "n=" << r.n << ",G=" << r.spec << ": enumerated " << count << ", closed form "
             << closed << " (x" << (closed / static_cast<double>(count))
             << ", 2-cycle bases double-counted), corrected " << corrected;
        t.note(line.str());
    }
    return t.result("facet-counts");
}

CheckResult check_group_reconstruction() {
    Tally t;
    std::vector<std::pair<std::string, FiniteGroup>> targets = {
        {"Z4", FiniteGroup::cyclic(4)},
        {"V4", FiniteGroup::klein4()},
        {"Z5", FiniteGroup::cyclic(5)}};
    std::vector<FiniteGroup> rebuilt;
    for (const auto& [name, g] : targets) {
        try {
            auto h = lift_matroid(delta(3, g));
            FiniteGroup r = group_from_matroid(h);
            rebuilt.push_back(r);
            t.expect(groups_isomorphic(r, g).has_value(),
                     "reconstruction of " + name + " is not isomorphic to it");
        } catch (const Error& e) {
            rebuilt.push_back(FiniteGroup::trivial());
            t.expect(false, "reconstruction threw for " + name + ": " + e.what());
        }
    }
    if (rebuilt.size() == targets.size())
        t.expect(!groups_isomorphic(rebuilt[0], rebuilt[1]).has_value(),
                 "reconstructions of Z4 and V4 should stay non-isomorphic");
    t.note("gain group recovered from 3-subset membership alone for Z4, V4, Z5");
    return t.result("group-reconstruction");
}

CheckResult check_brsc_properties() {
    Tally t;
    // The constructed complexes of the three comparison suites.
    std::vector<std::pair<std::string, SimplicialComplex>> complexes;
    auto one = FiniteGroup::trivial();
    for (int n = 2; n <= 4; ++n)
        complexes.emplace_back("H_" + std::to_string(n) + "(1)", rhodes_complex(n, one));
    for (int n = 2; n <= 3; ++n)
        for (int q : {2, 3}) {
            auto g = FiniteGroup::cyclic(q);
            complexes.emplace_back("H_" + std::to_string(n) + "(Z" + std::to_string(q) + ")",
                                   rhodes_complex(n, g));
            complexes.emplace_back("H^_" + std::to_string(n) + "(Z" + std::to_string(q) + ")",
                                   rhodes_hat_complex(n, g));
        }
    for (const auto& [name, h] : complexes) {
        t.expect(is_matroid(h), name + " is not a matroid");
        t.expect(is_boolean_representable(h), name + " is not Boolean representable");
    }
    // Gain graph corpus, frame and lift matroids.
    std::vector<std::pair<std::string, GainGraph>> graphs;
    graphs.emplace_back("delta(2,Z2)", delta(2, FiniteGroup::cyclic(2)));
    graphs.emplace_back("delta(2,Z3)", delta(2, FiniteGroup::cyclic(3)));
    graphs.emplace_back("delta(2,Z4)", delta(2, FiniteGroup::cyclic(4)));
    graphs.emplace_back("delta(3,1)", delta(3, one));
    graphs.emplace_back("delta(3,Z2)", delta(3, FiniteGroup::cyclic(2)));
    graphs.emplace_back("delta(3,Z3)", delta(3, FiniteGroup::cyclic(3)));
    graphs.emplace_back("delta(4,1)", delta(4, one));
    graphs.emplace_back("delta(4,Z2)", delta(4, FiniteGroup::cyclic(2)));
    graphs.emplace_back("delta'(2,Z2)", delta_prime(2, FiniteGroup::cyclic(2)));
    graphs.emplace_back("delta'(2,Z3)", delta_prime(2, FiniteGroup::cyclic(3)));
    graphs.emplace_back("delta'(3,Z2)", delta_prime(3, FiniteGroup::cyclic(2)));
    std::map<CircuitKind, int> seen;
    for (const auto& [name, g] : graphs) {
        for (MatroidKind kind : {MatroidKind::Frame, MatroidKind::Lift}) {
            auto h = (kind == MatroidKind::Frame) ? frame_matroid(g) : lift_matroid(g);
            std::string tag =
                std::string(kind == MatroidKind::Frame ? "frame" : "lift") + "(" + name + ")";
            t.expect(is_matroid(h), tag + " is not a matroid");
            t.expect(is_boolean_representable(h), tag + " is not Boolean representable");
            for (Mask c : h.circuits()) {
                try {
                    ++seen[classify_circuit(g, c, kind)];
                } catch (const Error& e) {
                    t.expect(false, tag + " circuit unclassified: " + e.what());
                }
            }
            if (g.edge_count() <= 10) {
                auto generic = flats(h);
                std::sort(generic.begin(), generic.end());
                std::vector<Mask> direct;
                for (Mask x = 0; x < (Mask{1} << g.edge_count()); ++x) {
                    bool f = (kind == MatroidKind::Frame) ? frame_flat(g, x) : lift_flat(g, x);
                    if (f) direct.push_back(x);
                }
                t.expect(generic == direct, tag + ": direct flat predicate differs from the " +
                                                "complex-derived flats");
            }
        }
    }
    for (CircuitKind k :
         {CircuitKind::BalancedCycle, CircuitKind::TightHandcuff, CircuitKind::LooseHandcuff,
          CircuitKind::DisjointUnbalancedPair, CircuitKind::UnbalancedTheta})
        t.expect(seen[k] > 0, "circuit kind never observed in the corpus: " + to_string(k));
    std::ostringstream cov;
    cov << "circuit kinds observed:";
    for (const auto& [k, c] : seen) cov << " " << to_string(k) << "=" << c;
    t.note(cov.str());
    t.note(std::to_string(complexes.size()) + " constructed complexes, " +
           std::to_string(graphs.size()) + " gain graphs x {frame,lift}");
    return t.result("brsc-properties");
}

CheckResult check_minimal_reps() {
    Tally t;
    auto one = FiniteGroup::trivial();
    for (int n = 2; n <= 4; ++n) {
        t.expect(is_minimal_lattice_rep(ln_representation(n, one)),
                 "chain-over-powerset representation not minimal at n=" + std::to_string(n));
        t.expect(is_minimal_lattice_rep(powerset_representation(n)),
                 "powerset representation not minimal at n=" + std::to_string(n));
    }
    for (int n = 2; n <= 3; ++n)
        for (const auto& g : small_groups())
            t.expect(complex_from_lattice(ln_representation(n, g)) == rhodes_complex(n, g),
                     "minimal lattice misses the complex at " + cfg(n, g));
    for (int n = 1; n <= 4; ++n)
        t.expect(complex_from_lattice(powerset_representation(n)) ==
                     graphic_matroid(complete_graph(n + 1)),
                 "powerset representation misses graphic K_" + std::to_string(n + 1));
    t.note("minimality by exhaustive meet-irreducible collapse; represented complexes pinned");
    return t.result("minimal-reps");
}

CheckResult check_mindeg() {
    Tally t;
    auto one = FiniteGroup::trivial();
    for (int n = 2; n <= 4; ++n) {
        auto h = rhodes_complex(n, one);
        t.expect(mindeg_lower_bound(h) == 2 * n - 1,
                 "rank of H_n(1) is not 2n-1 at n=" + std::to_string(n));
        auto rep = ln_representation(n, one);
        auto w = matrix_from_lattice_rep(rep);
        t.expect(w.rows() == 2 * n - 1, "witness for H_n(1) has " + std::to_string(w.rows()) +
                                            " rows at n=" + std::to_string(n));
        t.expect(complex_of_matrix(w, rep.ground_labels) == h,
                 "witness matrix misrepresents H_n(1) at n=" + std::to_string(n));

        auto p = powerset_representation(n);
        auto m = complex_from_lattice(p);
        t.expect(mindeg_lower_bound(m) == n,
                 "rank of the graphic complex is not n at n=" + std::to_string(n));
        auto v = matrix_from_lattice_rep(p);
        t.expect(v.rows() == n, "graphic witness has " + std::to_string(v.rows()) +
                                    " rows at n=" + std::to_string(n));
        t.expect(complex_of_matrix(v, p.ground_labels) == m,
                 "graphic witness misrepresents the complex at n=" + std::to_string(n));
    }
    // Matrix round trip across the representation corpus.
    std::vector<std::pair<std::string, LatticeRepresentation>> reps;
    for (int n = 2; n <= 3; ++n)
        for (int q : {1, 2}) {
            auto g = (q == 1) ? one : FiniteGroup::cyclic(q);
            reps.emplace_back("Ln(" + cfg(n, g) + ")", ln_representation(n, g));
        }
    reps.emplace_back("Ln(n=4,|G|=1)", ln_representation(4, one));
    for (int n = 2; n <= 4; ++n)
        reps.emplace_back("powerset(n=" + std::to_string(n) + ")", powerset_representation(n));
    reps.emplace_back("rhodes-hat(n=2,|G|=2)",
                      representation_of(build_rhodes_hat(2, FiniteGroup::cyclic(2))));
    for (const auto& [name, rep] : reps)
        t.expect(complex_of_matrix(matrix_from_lattice_rep(rep), rep.ground_labels) ==
                     complex_from_lattice(rep),
                 "matrix and chain certificates disagree for " + name);
    // U_{2,3}: minimal degree 2, met exhaustively and never by one row.
    auto u = uniform_matroid(2, 3);
    t.expect(mindeg_lower_bound(u) == 2, "rank of U_{2,3} is not 2");
    auto found = mindeg_exhaustive(u, 2);
    t.expect(found.has_value() && found->rows() == 2 && complex_of_matrix(*found) == u,
             "no 2-row matrix found for U_{2,3}");
    t.expect(!mindeg_exhaustive(u, 1).has_value(), "U_{2,3} wrongly representable by one row");
    t.note("degree 2n-1 certified for H_n(1) and n for the graphic complex, n in {2,3,4}; "
           "matrix round trips on " +
           std::to_string(reps.size()) + " representations; U_{2,3} pinned at 2");
    return t.result("mindeg");
}

CheckResult check_oracle_guards() {
    Tally t;
    auto one = FiniteGroup::trivial();
    auto z2 = FiniteGroup::cyclic(2);
    // Chain certificates: greedy deletion vs full permutation search.
    struct RepCase {
        std::string name;
        LatticeRepresentation rep;
        int banned;
    };
    std::vector<RepCase> reps;
    {
        auto hat2 = build_rhodes_hat(2, z2);
        auto r2 = representation_of(hat2);
        reps.push_back({"rhodes-hat(2,Z2) banned", r2, hat2.sentinel_top});
        reps.push_back({"rhodes-hat(2,Z2)", r2, -1});
        auto hat3 = build_rhodes_hat(3, z2);
        auto r3 = representation_of(hat3);
        reps.push_back({"rhodes-hat(3,Z2) banned", r3, hat3.sentinel_top});
        reps.push_back({"rhodes-hat(3,Z2)", r3, -1});
        reps.push_back({"Ln(3,Z2)", ln_representation(3, z2), -1});
        reps.push_back({"powerset(3)", powerset_representation(3), -1});
        reps.push_back({"Ln(4,1)", ln_representation(4, one), -1});
    }
    long long chain_masks = 0;
    for (const auto& rc : reps) {
        int m = static_cast<int>(rc.rep.phi.size());
        for (Mask x = 0; x < (Mask{1} << m); ++x) {
            if (popcount(x) > 8) continue;
            ++chain_masks;
            bool greedy = chain_certificate_greedy(rc.rep, x, rc.banned);
            bool full = chain_certificate_exhaustive(rc.rep, x, rc.banned);
            t.expect(greedy == full, "chain certificates disagree for " + rc.name + " at mask " +
                                         std::to_string(x));
        }
    }
    // Unitriangular witnesses: greedy peeling vs backtracking.
    std::vector<std::pair<std::string, BooleanMatrix>> mats;
    mats.emplace_back("flats(H_2(Z2))", mat_of_flats(rhodes_complex(2, z2)));
    mats.emplace_back("flats(U_{2,3})", mat_of_flats(uniform_matroid(2, 3)));
    mats.emplace_back("flats(graphic K_4)",
                      mat_of_flats(graphic_matroid(complete_graph(4))));
    mats.emplace_back("rep(Ln(3,1))", matrix_from_lattice_rep(ln_representation(3, one)));
    mats.emplace_back("rep(powerset(3))", matrix_from_lattice_rep(powerset_representation(3)));
    long long witness_masks = 0;
    for (const auto& [name, mat] : mats) {
        for (Mask w = 0; w < (Mask{1} << mat.cols()); ++w) {
            if (popcount(w) > 6) continue;
            ++witness_masks;
            t.expect(has_unitriangular_witness(mat, w) ==
                         has_unitriangular_witness_exhaustive(mat, w),
                     "unitriangular witness oracles disagree for " + name + " at mask " +
                         std::to_string(w));
        }
    }
    // Constructive division vs exhaustive search for B.
    long long division_pairs = 0;
    for (int n = 1; n <= 2; ++n) {
        for (const auto& g : {one, z2}) {
            auto mats_n = enumerate_monomial(n, g);
            for (const auto& c : mats_n)
                for (const auto& a : mats_n) {
                    ++division_pairs;
                    t.expect(l_below(c, a) == l_below_exhaustive(c, a),
                             "division oracles disagree at " + cfg(n, g));
                }
        }
    }
    t.note(std::to_string(chain_masks) + " chain-certificate masks over " +
           std::to_string(reps.size()) + " representations (|X|<=8); " +
           std::to_string(witness_masks) + " witness masks over " + std::to_string(mats.size()) +
           " matrices (|W|<=6); " + std::to_string(division_pairs) + " division pairs");
    return t.result("oracle-guards");
}

std::vector<CheckResult> run_all_checks(std::uint32_t seed) {
    return {check_orders(),
            check_necklace(seed),
            check_lattice_flag(),
            check_wreath(),
            check_groupoid(),
            check_rhodes_trivial(),
            check_rhodes_graphic(),
            check_rhodes_lift(),
            check_facet_counts(),
            check_group_reconstruction(),
            check_brsc_properties(),
            check_minimal_reps(),
            check_mindeg(),
            check_oracle_guards()};
}

std::vector<std::string> suite_names() {
    return {"orders",       "necklace",       "lattice-flag",   "wreath",
            "groupoid",     "rhodes-trivial", "rhodes-graphic", "rhodes-lift",
            "facet-counts", "group-reconstruction",             "brsc-properties",
            "minimal-reps", "mindeg",         "oracle-guards"};
}

bool known_suite(const std::string& name) {
    auto names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

CheckResult run_suite(const std::string& name, std::uint32_t seed) {
    if (name == "orders") return check_orders();
    if (name == "necklace") return check_necklace(seed);
    if (name == "lattice-flag") return check_lattice_flag();
    if (name == "wreath") return check_wreath();
    if (name == "groupoid") return check_groupoid();
    if (name == "rhodes-trivial") return check_rhodes_trivial();
    if (name == "rhodes-graphic") return check_rhodes_graphic();
    if (name == "rhodes-lift") return check_rhodes_lift();
    if (name == "facet-counts") return check_facet_counts();
    if (name == "group-reconstruction") return check_group_reconstruction();
    if (name == "brsc-properties") return check_brsc_properties();
    if (name == "minimal-reps") return check_minimal_reps();
    if (name == "mindeg") return check_mindeg();
    if (name == "oracle-guards") return check_oracle_guards();
    return {name, false, "unknown suite"};
}

}  // namespace spckit
