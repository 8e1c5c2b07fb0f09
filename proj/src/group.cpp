#include "spckit/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "spckit/errors.hpp"

namespace spckit {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels) {
    const int m = static_cast<int>(table.size());
    if (m == 0) throw BadTable("empty Cayley table");
    if (m > kMaxOrder)
        throw OrderTooLarge("group order " + std::to_string(m) + " exceeds bound " +
                            std::to_string(kMaxOrder));
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != m) throw BadTable("Cayley table is not square");
        for (int x : row)
            if (x < 0 || x >= m) throw BadTable("table entry out of range");
    }

    FiniteGroup g;
    g.order_ = m;
    g.table_.resize(m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) g.table_[a * m + b] = table[a][b];

    // identity: two-sided
    int e = -1;
    for (int c = 0; c < m; ++c) {
        bool ok = true;
        for (int x = 0; x < m && ok; ++x)
            ok = g.table_[c * m + x] == x && g.table_[x * m + c] == x;
        if (ok) { e = c; break; }
    }
    if (e < 0) throw NoIdentity("no two-sided identity in table");
    g.identity_ = e;

    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw NotAssociative("associativity fails at (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) + ")");

    g.inverse_.assign(m, -1);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b)
            if (g.mul(a, b) == e && g.mul(b, a) == e) { g.inverse_[a] = b; break; }
        if (g.inverse_[a] < 0)
            throw NoInverse("element " + std::to_string(a) + " has no inverse");
    }

    if (labels.empty()) {
        labels.resize(m);
        int k = 0;
        for (int a = 0; a < m; ++a) labels[a] = a == e ? "e" : "g" + std::to_string(++k);
    }
    if (static_cast<int>(labels.size()) != m) throw BadTable("label count does not match order");
    g.labels_ = std::move(labels);
    return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table({{0}}, {"e"}); }

FiniteGroup FiniteGroup::cyclic(int m) {
    if (m < 1 || m > kMaxOrder) throw OrderTooLarge("cyclic order out of range");
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a) labels[a] = a == 0 ? "e" : (a == 1 ? "g" : "g" + std::to_string(a));
    if (m == 1) labels = {"e"};
    return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::klein4() {
    // indices: e=0, a=1, b=2, c=ab=3; xor multiplication
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return from_table(std::move(t), {"e", "a", "b", "c"});
}

namespace {

std::vector<std::vector<int>> permutations_lex(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> all;
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return all;
}

std::string cycle_notation(const std::vector<int>& p) {
    const int k = static_cast<int>(p.size());
    std::string s;
    std::vector<bool> seen(k, false);
    for (int i = 0; i < k; ++i) {
        if (seen[i] || p[i] == i) continue;
        s += '(';
        int j = i;
        do {
            seen[j] = true;
            s += std::to_string(j + 1);
            j = p[j];
        } while (j != i);
        s += ')';
    }
    return s.empty() ? "e" : s;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int k) {
    if (k < 1 || k > 3) throw OrderTooLarge("symmetric(k) supported for k <= 3");
    auto perms = permutations_lex(k);  // identity first
    const int m = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<int> comp(k);  // (a*b)(x) = a(b(x))
            for (int x = 0; x < k; ++x) comp[x] = perms[a][perms[b][x]];
            t[a][b] = index_of(comp);
        }
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a) labels[a] = cycle_notation(perms[a]);
    return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int m = a.order() * b.order();
    if (m > kMaxOrder) throw OrderTooLarge("direct product order exceeds bound");
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1) {
            labels[idx(x1, y1)] = "(" + a.label(x1) + "," + b.label(y1) + ")";
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
        }
    return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::from_spec(std::string_view spec) {
    if (spec == "1" || spec == "trivial") return trivial();
    if (spec == "V4" || spec == "Z2xZ2") return klein4();
    if (spec == "S3") return symmetric(3);
    if (spec.size() >= 2 && spec[0] == 'Z') {
        int m = 0;
        for (char c : spec.substr(1)) {
            if (c < '0' || c > '9') { m = -1; break; }
            m = m * 10 + (c - '0');
        }
        if (m >= 1 && m <= kMaxOrder) return cyclic(m);
    }
    throw BadGroupSpec("unknown group spec '" + std::string(spec) + "'");
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != identity_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::optional<int> FiniteGroup::element_by_label(std::string_view s) const {
    for (int a = 0; a < order_; ++a)
        if (labels_[a] == s) return a;
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        int v = 0;
        for (char c : s) v = v * 10 + (c - '0');
        if (v < order_) return v;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                                  int max_order) {
    if (a.order() > max_order || b.order() > max_order)
        throw OrderTooLarge("isomorphism search bounded to order " + std::to_string(max_order));
    if (a.order() != b.order()) return std::nullopt;
    const int m = a.order();

    std::vector<int> ord_a(m), ord_b(m);
    for (int x = 0; x < m; ++x) ord_a[x] = a.element_order(x), ord_b[x] = b.element_order(x);
    {
        auto sa = ord_a, sb = ord_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    std::vector<int> map(m, -1), used(m, 0);
    map[a.identity()] = b.identity();
    used[b.identity()] = 1;

    // assign images element by element, checking every product already determined
    auto consistent = [&](int x, int y) {
        for (int u = 0; u < m; ++u) {
            if (map[u] < 0) continue;
            int p1 = a.mul(x, u), p2 = a.mul(u, x);
            if (map[p1] >= 0 && map[p1] != b.mul(y, map[u])) return false;
            if (map[p2] >= 0 && map[p2] != b.mul(map[u], y)) return false;
        }
        return true;
    };
    std::vector<int> order_of_assign;
    for (int x = 0; x < m; ++x)
        if (x != a.identity()) order_of_assign.push_back(x);

    std::vector<int> stack_pos;
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == order_of_assign.size()) {
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y)
                    if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
            return true;
        }
        int x = order_of_assign[i];
        for (int y = 0; y < m; ++y) {
            if (used[y] || ord_b[y] != ord_a[x] || !consistent(x, y)) continue;
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

}  // namespace spckit
