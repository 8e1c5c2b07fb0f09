#include "spckit/spc.hpp"

#include <algorithm>
#include <array>

#include "spckit/errors.hpp"

namespace spckit {

namespace {

void require_same_context(const Spc& a, const Spc& b) {
    if (a.ground_size() != b.ground_size())
        throw MismatchedGroundSet("SPCs over different grounds");
    if (a.group() != b.group()) throw MismatchedContext("SPCs over different groups");
}

}  // namespace

Spc::Spc(FiniteGroup group, PartialPartition partition, std::vector<int> raw)
    : group_(std::move(group)), partition_(std::move(partition)), cs_(std::move(raw)) {
    const int n = partition_.ground_size();
    if (static_cast<int>(cs_.size()) != n)
        throw DomainMismatch("cross-section length must equal the ground size");
    for (int p = 1; p <= n; ++p) {
        bool in_dom = contains(partition_.domain(), p);
        if (in_dom && (cs_[p - 1] < 0 || cs_[p - 1] >= group_.order()))
            throw DomainMismatch("cross-section missing or out of range at point " + std::to_string(p));
        if (!in_dom && cs_[p - 1] != -1)
            throw DomainMismatch("cross-section defined off the domain at point " + std::to_string(p));
    }
    // canonical representative per block: left-translate so the block minimum maps to e
    for (Mask blk : partition_.blocks()) {
        int m = min_point(blk);
        int shift = group_.inv(cs_[m - 1]);
        if (shift == group_.identity()) continue;
        for (int p : points_of(blk)) cs_[p - 1] = group_.mul(shift, cs_[p - 1]);
    }
}

Spc Spc::empty(int n, const FiniteGroup& g) {
    return Spc(g, PartialPartition(n), std::vector<int>(n, -1));
}

std::string Spc::to_text() const {
    if (partition_.size() == 0) return "(∅)";
    std::string s = "(" + partition_.to_text() + "; ";
    bool first = true;
    for (int p : points_of(domain())) {
        if (!first) s += ',';
        first = false;
        s += std::to_string(p) + "↦" + group_.label(cs(p));
    }
    return s + ")";
}

bool dowling_leq(const Spc& a, const Spc& b) {
    require_same_context(a, b);
    // 1) domain(b) ⊆ domain(a)
    if (b.domain() & ~a.domain()) return false;
    // 2) every block of b is a union of blocks of a
    for (Mask tb : b.partition().blocks()) {
        Mask covered = 0;
        for (Mask pb : a.partition().blocks()) {
            Mask inter = pb & tb;
            if (inter == 0) continue;
            if (inter != pb) return false;  // a-block straddles the b-block boundary
            covered |= pb;
        }
        if (covered != tb) return false;
    }
    // 3) on each a-block inside domain(b), cross-sections agree up to left translation:
    //    f(x) h(x)^{-1} constant on the block
    const FiniteGroup& G = a.group();
    for (Mask pb : a.partition().blocks()) {
        if (pb & ~b.domain()) continue;
        auto pts = points_of(pb);
        int ratio0 = G.mul(a.cs(pts[0]), G.inv(b.cs(pts[0])));
        for (size_t k = 1; k < pts.size(); ++k)
            if (G.mul(a.cs(pts[k]), G.inv(b.cs(pts[k]))) != ratio0) return false;
    }
    return true;
}

bool rhodes_leq(const Spc& a, const Spc& b) {
    require_same_context(a, b);
    // 1) domain(a) ⊆ domain(b)
    if (a.domain() & ~b.domain()) return false;
    // 2) every block of a inside one block of b
    for (Mask pb : a.partition().blocks()) {
        int host = b.partition().block_of(min_point(pb));
        if (host < 0 || (pb & ~b.partition().blocks()[host])) return false;
    }
    // 3) restriction of b's cross-section to each a-block is a left translate of a's
    const FiniteGroup& G = a.group();
    for (Mask pb : a.partition().blocks()) {
        auto pts = points_of(pb);
        int ratio0 = G.mul(a.cs(pts[0]), G.inv(b.cs(pts[0])));
        for (size_t k = 1; k < pts.size(); ++k)
            if (G.mul(a.cs(pts[k]), G.inv(b.cs(pts[k]))) != ratio0) return false;
    }
    return true;
}

Spc rhodes_meet(const Spc& a, const Spc& b) {
    require_same_context(a, b);
    const FiniteGroup& G = a.group();
    const int n = a.ground_size();
    Mask common = a.domain() & b.domain();

    // group points by (a-block, b-block, ratio f(x) h(x)^{-1})
    std::vector<Mask> blocks;
    std::vector<std::array<int, 3>> keys;
    std::vector<int> raw(n, -1);
    for (int p : points_of(common)) {
        std::array<int, 3> key{a.partition().block_of(p), b.partition().block_of(p),
                               G.mul(a.cs(p), G.inv(b.cs(p)))};
        bool placed = false;
        for (size_t i = 0; i < keys.size(); ++i)
            if (keys[i] == key) {
                blocks[i] |= point_bit(p);
                placed = true;
                break;
            }
        if (!placed) {
            keys.push_back(key);
            blocks.push_back(point_bit(p));
        }
        raw[p - 1] = a.cs(p);
    }
    return Spc(G, PartialPartition(n, std::move(blocks)), std::move(raw));
}

NecklaceGraph necklace_graph(const Spc& a, const Spc& b) {
    require_same_context(a, b);
    NecklaceGraph g;
    g.n = a.ground_size();
    g.vertices = a.domain() | b.domain();
    const FiniteGroup& G = a.group();
    auto add_block_edges = [&](const Spc& s, int color) {
        for (Mask blk : s.partition().blocks()) {
            auto pts = points_of(blk);
            for (size_t i = 0; i < pts.size(); ++i)
                for (size_t j = i + 1; j < pts.size(); ++j)
                    g.edges.push_back({pts[i], pts[j], color,
                                       G.mul(G.inv(s.cs(pts[i])), s.cs(pts[j]))});
        }
    };
    add_block_edges(a, 1);
    add_block_edges(b, 2);
    return g;
}

namespace {

/// Assign a potential per vertex so that every edge a->b demands
/// pot(b) = pot(a)·label. Returns potentials (by point, -1 elsewhere) or
/// nullopt when some cycle carries a nontrivial label. Within one color the
/// labels are differences of a single function, so any inconsistency exhibits
/// a necklace (alternating cycle) with nontrivial label.
std::optional<std::vector<int>> necklace_potentials(const NecklaceGraph& g, const FiniteGroup& G) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n + 1);  // (neighbor, label)
    for (const auto& e : g.edges) {
        adj[e.a].push_back({e.b, e.label});
        adj[e.b].push_back({e.a, G.inv(e.label)});
    }
    std::vector<int> pot(g.n + 1, -1);
    for (int root : points_of(g.vertices)) {
        if (pot[root] >= 0) continue;
        pot[root] = G.identity();
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, lab] : adj[u]) {
                int want = G.mul(pot[u], lab);
                if (pot[v] < 0) {
                    pot[v] = want;
                    stack.push_back(v);
                } else if (pot[v] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return pot;
}

}  // namespace

bool has_common_upper_bound(const Spc& a, const Spc& b) {
    NecklaceGraph g = necklace_graph(a, b);
    return necklace_potentials(g, a.group()).has_value();
}

std::optional<Spc> rhodes_join(const Spc& a, const Spc& b) {
    NecklaceGraph g = necklace_graph(a, b);
    const FiniteGroup& G = a.group();
    auto pot = necklace_potentials(g, G);
    if (!pot) return std::nullopt;

    // blocks = connected components of the necklace graph
    const int n = a.ground_size();
    std::vector<int> comp(n + 1, -1);
    std::vector<std::vector<int>> adj(n + 1);
    for (const auto& e : g.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<Mask> blocks;
    for (int root : points_of(g.vertices)) {
        if (comp[root] >= 0) continue;
        int id = static_cast<int>(blocks.size());
        blocks.push_back(0);
        std::vector<int> stack{root};
        comp[root] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            blocks[id] |= point_bit(u);
            for (int v : adj[u])
                if (comp[v] < 0) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
    }
    // the potential of each component, shifted so the component minimum maps
    // to e, is exactly the joined cross-section; Spc's constructor re-shifts,
    // so the raw potentials are enough
    std::vector<int> raw(n, -1);
    for (int p : points_of(g.vertices)) raw[p - 1] = (*pot)[p];
    return Spc(G, PartialPartition(n, std::move(blocks)), std::move(raw));
}

std::vector<Spc> enumerate_spc(int n, const FiniteGroup& g, std::uint64_t bound) {
    std::uint64_t weight = 1;
    for (int i = 0; i < n; ++i) {
        weight *= static_cast<std::uint64_t>(g.order());
        if (weight > bound)
            throw BoundsExceeded("SPC enumeration bound exceeded: |G|^n = " +
                                 std::to_string(weight) + " > " + std::to_string(bound));
    }
    std::vector<Spc> out;
    for (const PartialPartition& pp : enumerate_partial_partitions(n)) {
        // one canonical cross-section per block: min -> e, the rest free
        std::vector<std::vector<int>> free_pts;
        for (Mask blk : pp.blocks()) {
            auto pts = points_of(blk);
            free_pts.push_back({pts.begin() + 1, pts.end()});
        }
        std::vector<int> raw(n, -1);
        for (Mask blk : pp.blocks()) raw[min_point(blk) - 1] = g.identity();
        std::vector<int> flat;
        for (const auto& v : free_pts) flat.insert(flat.end(), v.begin(), v.end());
        std::vector<int> choice(flat.size(), 0);
        while (true) {
            for (size_t i = 0; i < flat.size(); ++i) raw[flat[i] - 1] = choice[i];
            out.emplace_back(g, pp, raw);
            size_t i = 0;
            while (i < choice.size() && choice[i] == g.order() - 1) choice[i++] = 0;
            if (i == choice.size()) break;
            ++choice[i];
        }
    }
    return out;
}

std::vector<Spc> join_irreducibles_rhodes(int n, const FiniteGroup& g) {
    std::vector<Spc> out;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> raw(n, -1);
        raw[i - 1] = g.identity();
        out.emplace_back(g, PartialPartition::one_block(n, point_bit(i)), raw);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int x = 0; x < g.order(); ++x) {
                std::vector<int> raw(n, -1);
                raw[i - 1] = g.identity();
                raw[j - 1] = x;
                out.emplace_back(g, PartialPartition::one_block(n, point_bit(i) | point_bit(j)), raw);
            }
    return out;
}

std::vector<Spc> atoms_dowling(int n, const FiniteGroup& g) {
    std::vector<Spc> out;
    for (int i = 1; i <= n; ++i) {
        Mask dom = full_mask(n) & ~point_bit(i);
        std::vector<int> raw(n, g.identity());
        raw[i - 1] = -1;
        out.emplace_back(g, PartialPartition::singletons(n, dom), raw);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int x = 0; x < g.order(); ++x) {
                Mask pair = point_bit(i) | point_bit(j);
                std::vector<Mask> blocks{pair};
                for (int p : points_of(full_mask(n) & ~pair)) blocks.push_back(point_bit(p));
                std::vector<int> raw(n, g.identity());
                raw[j - 1] = x;
                out.emplace_back(g, PartialPartition(n, std::move(blocks)), raw);
            }
    return out;
}

}  // namespace spckit
