#include "spckit/gain_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "spckit/errors.hpp"

namespace spckit {

GainGraph::GainGraph(int vertices, FiniteGroup group, const std::vector<Edge>& edges)
    : n_(vertices), group_(std::move(group)) {
    if (vertices < 0) throw ArgumentOutOfRange("negative vertex count");
    if (edges.size() > 32) throw GroundTooLarge("gain graphs bounded to 32 edges (mask width)");
    for (Edge e : edges) {
        if (e.u < 1 || e.v < 1 || e.u > vertices || e.v > vertices)
            throw ArgumentOutOfRange("edge endpoint outside vertex range");
        if (e.label < 0 || e.label >= group_.order())
            throw ArgumentOutOfRange("edge label outside group");
        if (e.u > e.v) {
            std::swap(e.u, e.v);
            e.label = group_.inv(e.label);
        }
        edges_.push_back(e);
    }
}

std::string GainGraph::edge_text(int e) const {
    const Edge& ed = edges_[e - 1];
    return std::to_string(ed.u) + "-" + std::to_string(ed.v) + ":" + group_.label(ed.label);
}

GainGraph delta(int n, const FiniteGroup& g) {
    if (n < 2) throw ArgumentOutOfRange("delta needs n >= 2");
    std::vector<GainGraph::Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int x = 0; x < g.order(); ++x) edges.push_back({i, j, x});
    return GainGraph(n, g, edges);
}

GainGraph delta_prime(int n, const FiniteGroup& g) {
    if (g.order() < 2) throw ArgumentOutOfRange("delta_prime needs a nontrivial group");
    GainGraph base = delta(n, g);
    std::vector<GainGraph::Edge> edges = base.edges();
    int nonid = g.identity() == 0 ? 1 : 0;
    for (int i = 1; i <= n; ++i) edges.push_back({i, i, nonid});
    return GainGraph(n, g, edges);
}

int cycle_label(const GainGraph& g, const std::vector<std::pair<int, bool>>& walk) {
    if (walk.empty()) throw NotAClosedWalk("empty walk");
    const FiniteGroup& G = g.group();
    auto src = [&](const std::pair<int, bool>& s) {
        const auto& e = g.edge(s.first);
        return s.second ? e.u : e.v;
    };
    auto dst = [&](const std::pair<int, bool>& s) {
        const auto& e = g.edge(s.first);
        return s.second ? e.v : e.u;
    };
    Mask used = 0;
    int acc = G.identity();
    for (size_t i = 0; i < walk.size(); ++i) {
        auto [id, fwd] = walk[i];
        if (id < 1 || id > g.edge_count()) throw ArgumentOutOfRange("edge id out of range");
        if (contains(used, id)) throw NotAClosedWalk("edge repeated in walk");
        used |= point_bit(id);
        if (dst(walk[i]) != src(walk[(i + 1) % walk.size()]))
            throw NotAClosedWalk("steps do not chain at position " + std::to_string(i));
        int lab = g.edge(id).label;
        acc = G.mul(acc, fwd ? lab : G.inv(lab));
    }
    return acc;
}

bool is_balanced(const GainGraph& g, const std::vector<std::pair<int, bool>>& walk) {
    return cycle_label(g, walk) == g.group().identity();
}

namespace {

struct Components {
    int count = 0;
    std::vector<int> comp_of_edge;    // by edge id, -1 outside mask
    std::vector<int> vertices;        // per component
    std::vector<int> edges;           // per component
    std::vector<bool> balanced;       // per component (no cycle counts as balanced)
};

/// Union-find decomposition of an edge subset plus per-component balance via
/// potential propagation (a loop or any inconsistent non-tree edge makes the
/// component unbalanced).
Components analyze(const GainGraph& g, Mask x) {
    const FiniteGroup& G = g.group();
    const int n = g.vertices();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        return parent[a] == a ? a : parent[a] = find(parent[a]);
    };
    std::vector<int> pot(n + 1, -1);  // group potential per vertex, per component
    std::vector<bool> root_unbalanced(n + 1, false);
    std::vector<int> edge_cnt(n + 1, 0);

    // process edges in id order, keeping potentials consistent: pot(v) = pot(u)·label
    for (int e : points_of(x)) {
        const auto& ed = g.edge(e);
        int ru = find(ed.u), rv = find(ed.v);
        if (pot[ed.u] < 0) pot[ed.u] = G.identity();
        if (ru == rv) {
            // v is already in u's tree (loops included), so its potential is set
            if (pot[ed.v] != G.mul(pot[ed.u], ed.label)) root_unbalanced[ru] = true;
            edge_cnt[ru]++;
        } else {
            // re-root the smaller side so potentials stay consistent: shift all
            // potentials of rv's tree; with tiny graphs a full rescan is fine
            int want = G.mul(pot[ed.u], ed.label);
            if (pot[ed.v] < 0) pot[ed.v] = G.identity();
            int shift = G.mul(want, G.inv(pot[ed.v]));
            for (int w = 1; w <= n; ++w)
                if (pot[w] >= 0 && find(w) == rv) pot[w] = G.mul(shift, pot[w]);
            root_unbalanced[ru] = root_unbalanced[ru] || root_unbalanced[rv];
            edge_cnt[ru] += edge_cnt[rv] + 1;
            parent[rv] = ru;
        }
    }

    Components c;
    c.comp_of_edge.assign(g.edge_count() + 1, -1);
    std::vector<int> comp_id(n + 1, -1);
    std::vector<int> vert_cnt(n + 1, 0);
    for (int e : points_of(x)) {
        const auto& ed = g.edge(e);
        int r = find(ed.u);
        if (comp_id[r] < 0) {
            comp_id[r] = c.count++;
            c.vertices.push_back(0);
            c.edges.push_back(edge_cnt[r]);
            c.balanced.push_back(!root_unbalanced[r]);
        }
        c.comp_of_edge[e] = comp_id[r];
    }
    for (int w = 1; w <= n; ++w)
        if (pot[w] >= 0 && comp_id[find(w)] >= 0) ++c.vertices[comp_id[find(w)]];
    return c;
}

}  // namespace

bool frame_independent(const GainGraph& g, Mask x) {
    Components c = analyze(g, x);
    for (int i = 0; i < c.count; ++i) {
        if (c.edges[i] == c.vertices[i] - 1) continue;                  // tree
        if (c.edges[i] == c.vertices[i] && !c.balanced[i]) continue;    // unbalanced unicycle
        return false;
    }
    return true;
}

bool lift_independent(const GainGraph& g, Mask x) {
    Components c = analyze(g, x);
    int cyclic = 0;
    for (int i = 0; i < c.count; ++i) {
        if (c.edges[i] == c.vertices[i] - 1) continue;
        if (c.edges[i] == c.vertices[i] && !c.balanced[i]) {
            ++cyclic;
            continue;
        }
        return false;
    }
    return cyclic <= 1;
}

namespace {

std::vector<std::string> edge_labels(const GainGraph& g) {
    std::vector<std::string> out;
    for (int e = 1; e <= g.edge_count(); ++e) out.push_back(g.edge_text(e));
    return out;
}

}  // namespace

SimplicialComplex frame_matroid(const GainGraph& g) {
    if (g.edge_count() > static_cast<int>(SimplicialComplex::kMaxGround))
        throw TooLarge("too many edges to materialize the frame matroid");
    return SimplicialComplex::from_oracle(edge_labels(g),
                                          [&g](Mask x) { return frame_independent(g, x); });
}

SimplicialComplex lift_matroid(const GainGraph& g) {
    if (g.edge_count() > static_cast<int>(SimplicialComplex::kMaxGround))
        throw TooLarge("too many edges to materialize the lift matroid");
    return SimplicialComplex::from_oracle(edge_labels(g),
                                          [&g](Mask x) { return lift_independent(g, x); });
}

std::string to_string(CircuitKind k) {
    switch (k) {
        case CircuitKind::BalancedCycle: return "balanced-cycle";
        case CircuitKind::TightHandcuff: return "tight-handcuff";
        case CircuitKind::LooseHandcuff: return "loose-handcuff";
        case CircuitKind::DisjointUnbalancedPair: return "disjoint-unbalanced-pair";
        case CircuitKind::UnbalancedTheta: return "unbalanced-theta";
    }
    return "?";
}

std::vector<Mask> simple_cycles(const GainGraph& g) {
    // a nonempty edge subset is an edge-simple cycle iff it is connected and
    // every touched vertex has degree exactly 2 (a loop contributes 2)
    std::vector<Mask> out;
    const int m = g.edge_count();
    for (Mask x = 1; x <= full_mask(m); ++x) {
        std::vector<int> deg(g.vertices() + 1, 0);
        for (int e : points_of(x)) {
            deg[g.edge(e).u]++;
            deg[g.edge(e).v]++;
        }
        bool ok = true;
        for (int w = 1; w <= g.vertices() && ok; ++w) ok = deg[w] == 0 || deg[w] == 2;
        if (!ok) continue;
        Components c = analyze(g, x);
        if (c.count == 1) out.push_back(x);
    }
    return out;
}

bool cycle_mask_balanced(const GainGraph& g, Mask cycle) {
    Components c = analyze(g, cycle);
    if (c.count != 1) throw NotAClosedWalk("edge mask is not a single cycle");
    return c.balanced[0];
}

CircuitKind classify_circuit(const GainGraph& g, Mask x, MatroidKind kind) {
    auto indep = [&](Mask y) {
        return kind == MatroidKind::Frame ? frame_independent(g, y) : lift_independent(g, y);
    };
    if (indep(x)) throw NotACircuit("edge set is independent");
    for (Mask m = x; m; m &= m - 1)
        if (!indep(x & ~(m & ~(m - 1)))) throw NotACircuit("edge set is not minimally dependent");

    Components c = analyze(g, x);
    // frame circuits are connected, so two components only occur for lifts
    if (c.count == 2) return CircuitKind::DisjointUnbalancedPair;
    // connected: single cycle <=> #edges = #vertices
    if (c.edges[0] == c.vertices[0]) return CircuitKind::BalancedCycle;

    // #edges = #vertices + 1: theta or handcuff; bridges separate the loose
    // handcuff, a degree-4 vertex separates the tight one
    std::vector<int> deg(g.vertices() + 1, 0);
    for (int e : points_of(x)) {
        deg[g.edge(e).u]++;
        deg[g.edge(e).v]++;
    }
    bool has_bridge = false;
    for (int e : points_of(x)) {
        const auto& ed = g.edge(e);
        if (ed.u == ed.v) continue;  // a loop is never a bridge
        Components c2 = analyze(g, x & ~point_bit(e));
        if (c2.count > 1) has_bridge = true;
    }
    if (has_bridge) return CircuitKind::LooseHandcuff;
    int maxdeg = *std::max_element(deg.begin(), deg.end());
    if (maxdeg >= 4) return CircuitKind::TightHandcuff;
    return CircuitKind::UnbalancedTheta;
}

bool frame_flat(const GainGraph& g, Mask x) {
    Components cx = analyze(g, x);
    // unbalanced span: which unbalanced component of x (if any) covers a vertex;
    // unlike the lift order, unbalance acts per component here
    std::vector<int> span(g.vertices() + 1, -1);
    for (int e : points_of(x)) {
        int i = cx.comp_of_edge[e];
        if (cx.balanced[i]) continue;
        span[g.edge(e).u] = i;
        span[g.edge(e).v] = i;
    }
    // an outside edge inside one unbalanced span, or bridging two, is in the closure
    for (int e = 1; e <= g.edge_count(); ++e) {
        if (x & point_bit(e)) continue;
        const auto& ed = g.edge(e);
        int su = span[ed.u], sv = span[ed.v];
        if (su >= 0 && sv >= 0) return false;
    }
    // so is an edge closing a balanced cycle with a path of x
    for (Mask c : simple_cycles(g))
        if (cycle_mask_balanced(g, c) && popcount(c & ~x) == 1) return false;
    return true;
}

bool lift_flat(const GainGraph& g, Mask x) {
    auto cycles = simple_cycles(g);
    Components cx = analyze(g, x);
    bool x_unbalanced = false;
    for (int i = 0; i < cx.count; ++i) x_unbalanced = x_unbalanced || !cx.balanced[i];
    for (Mask c : cycles) {
        if (cycle_mask_balanced(g, c)) {
            if (popcount(c & ~x) == 1) return false;
        } else if (x_unbalanced) {
            if (popcount(c & ~x) == 1) return false;
        }
    }
    return true;
}

namespace {

/// Exact tiny rational (values stay minuscule for n <= 8).
struct Frac {
    long long num = 0, den = 1;
    void add(long long n2, long long d2) {
        num = num * d2 + n2 * den;
        den *= d2;
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) num /= g, den /= g;
    }
};

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// term = n! / (c · (n-k)!) · n^(n-k-1) with the power possibly negative.
void add_term(Frac& f, int n, int k, long long c) {
    long long num = factorial(n) / factorial(n - k);
    int e = n - k - 1;
    if (e >= 0)
        f.add(num * ipow(n, e), c);
    else
        f.add(num, c * ipow(n, -e));
}

long long finish(Frac f, int n, int gorder) {
    // multiply by |G|^(n-1) (|G|-1) and demand integrality
    long long mul = ipow(gorder, n - 1) * (gorder - 1);
    long long num = f.num * mul;
    if (num % f.den != 0) throw ArgumentOutOfRange("facet formula is not integral here");
    return num / f.den;
}

}  // namespace

long long lift_facets_formula(int n, int gorder) {
    if (n < 2 || gorder < 2) throw ArgumentOutOfRange("formula needs n >= 2, |G| >= 2");
    Frac f;
    add_term(f, n, 2, 1);  // leading term n!/(n-2)! · n^(n-3)
    for (int k = 3; k <= n; ++k) add_term(f, n, k, 2);
    return finish(f, n, gorder);
}

long long lift_facets_formula_corrected(int n, int gorder) {
    if (n < 2 || gorder < 2) throw ArgumentOutOfRange("formula needs n >= 2, |G| >= 2");
    Frac f;
    for (int k = 2; k <= n; ++k) add_term(f, n, k, 2);
    return finish(f, n, gorder);
}

FiniteGroup group_from_matroid(const SimplicialComplex& h) {
    const int m = h.ground_size();
    auto dependent3 = [&](int a, int b, int c) {
        return !h.contains(point_bit(a) | point_bit(b) | point_bit(c));
    };

    // W: vertices sitting in some dependent 3-subset
    std::vector<int> W;
    for (int w = 1; w <= m; ++w) {
        bool in = false;
        for (int v = 1; v <= m && !in; ++v)
            for (int y = v + 1; y <= m && !in; ++y)
                if (v != w && y != w) in = dependent3(w, v, y);
        if (in) W.push_back(w);
    }

    // parallel classes: w joins the class of a when at least two distinct v
    // complete {w,a} to a dependent triple
    std::vector<std::vector<int>> classes;
    std::vector<bool> assigned(m + 1, false);
    for (int a : W) {
        if (assigned[a]) continue;
        std::vector<int> cls{a};
        assigned[a] = true;
        for (int w : W) {
            if (assigned[w]) continue;
            int witnesses = 0;
            for (int v : W)
                if (v != a && v != w && dependent3(w, a, v)) ++witnesses;
            if (witnesses >= 2) {
                cls.push_back(w);
                assigned[w] = true;
            }
        }
        classes.push_back(cls);
    }
    if (classes.size() != 3)
        throw NotAFrameOfExpectedShape("expected 3 parallel classes, found " +
                                       std::to_string(classes.size()));
    const size_t gsize = classes[0].size();
    for (const auto& cls : classes)
        if (cls.size() != gsize || gsize < 4)
            throw NotAFrameOfExpectedShape("parallel classes must share a size >= 4");

    // orient the classes: x ∈ X, y ∈ Y, w ∈ Z with xyw dependent exists
    // (a balanced triangle); the naming of the three classes is symmetric
    const auto& X = classes[0];  // plays 1->2
    const auto& Y = classes[1];  // plays 2->3
    const auto& Z = classes[2];  // plays 1->3
    {
        bool found = false;
        for (int x : X)
            for (int y : Y)
                for (int z : Z)
                    if (dependent3(x, y, z)) found = true;
        if (!found) throw NotAFrameOfExpectedShape("no balanced triangle across the classes");
    }
    const int mm = static_cast<int>(gsize);
    // unique z completing a cross pair to a dependent triple
    auto complete = [&](int x, int y) {
        int found = -1;
        for (size_t k = 0; k < Z.size(); ++k)
            if (dependent3(x, y, Z[k])) {
                if (found >= 0)
                    throw NotAFrameOfExpectedShape("non-unique triangle completion");
                found = static_cast<int>(k);
            }
        if (found < 0) throw NotAFrameOfExpectedShape("missing triangle completion");
        return found;
    };

    // w_i := completion of (x_i, y_1) — stands for g_i h_1
    std::vector<int> w(mm);
    for (int i = 0; i < mm; ++i) w[i] = complete(X[i], Y[0]);
    std::vector<int> w_inv(mm, -1);
    for (int i = 0; i < mm; ++i) {
        if (w_inv[w[i]] != -1) throw NotAFrameOfExpectedShape("triangle completions collide");
        w_inv[w[i]] = i;
    }
    // delta: completion of (x_1, y_i) equals w_{delta(i)} — g_1 h_i = g_{delta(i)} h_1
    std::vector<int> delta_perm(mm), delta_inv(mm, -1);
    for (int i = 0; i < mm; ++i) {
        int k = w_inv[complete(X[0], Y[i])];
        if (k < 0) throw NotAFrameOfExpectedShape("delta leaves the w-range");
        delta_perm[i] = k;
    }
    for (int i = 0; i < mm; ++i) {
        if (delta_inv[delta_perm[i]] != -1) throw NotAFrameOfExpectedShape("delta not injective");
        delta_inv[delta_perm[i]] = i;
    }
    // epsilon(i,j): completion of (x_i, y_{delta^{-1}(j)}) — the product table
    // of the operation g_i ∘ g_j = g_i g_1^{-1} g_j
    std::vector<std::vector<int>> table(mm, std::vector<int>(mm));
    for (int i = 0; i < mm; ++i)
        for (int j = 0; j < mm; ++j) {
            int k = w_inv[complete(X[i], Y[delta_inv[j]])];
            if (k < 0) throw NotAFrameOfExpectedShape("epsilon leaves the w-range");
            table[i][j] = k;
        }
    return FiniteGroup::from_table(std::move(table));
}

}  // namespace spckit
