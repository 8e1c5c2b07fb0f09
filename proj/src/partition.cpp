#include "spckit/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "spckit/errors.hpp"

namespace spckit {

namespace {
constexpr int kMaxGround = 24;      // masks are 32-bit; keep headroom
constexpr int kMaxEnumerate = 5;    // Bell(6) = 203 partial partitions
}

PartialPartition::PartialPartition(int n) : n_(n) {
    if (n < 0 || n > kMaxGround) throw ArgumentOutOfRange("ground size out of range");
}

PartialPartition::PartialPartition(int n, std::vector<Mask> block_masks) : n_(n), blocks_(std::move(block_masks)) {
    if (n < 0 || n > kMaxGround) throw ArgumentOutOfRange("ground size out of range");
    canonicalize_and_check();
}

PartialPartition::PartialPartition(int n, const std::vector<std::vector<int>>& blocks) : n_(n) {
    if (n < 0 || n > kMaxGround) throw ArgumentOutOfRange("ground size out of range");
    for (const auto& blk : blocks) {
        Mask m = 0;
        for (int p : blk) {
            if (p < 1 || p > n) throw ArgumentOutOfRange("point " + std::to_string(p) + " outside 1.." + std::to_string(n));
            m |= point_bit(p);
        }
        if (static_cast<int>(blk.size()) != popcount(m))
            throw ArgumentOutOfRange("repeated point inside a block");
        blocks_.push_back(m);
    }
    canonicalize_and_check();
}

void PartialPartition::canonicalize_and_check() {
    domain_ = 0;
    for (Mask b : blocks_) {
        if (b == 0) throw ArgumentOutOfRange("empty block");
        if (b & ~full_mask(n_)) throw ArgumentOutOfRange("block outside ground set");
        if (b & domain_) throw ArgumentOutOfRange("blocks overlap");
        domain_ |= b;
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](Mask x, Mask y) { return min_point(x) < min_point(y); });
}

PartialPartition PartialPartition::singletons(int n, Mask domain) {
    std::vector<Mask> blocks;
    for (Mask m = domain; m; m &= m - 1) blocks.push_back(m & ~(m - 1));
    return PartialPartition(n, std::move(blocks));
}

PartialPartition PartialPartition::one_block(int n, Mask block) {
    if (block == 0) return PartialPartition(n);
    return PartialPartition(n, std::vector<Mask>{block});
}

int PartialPartition::block_of(int p) const {
    if (p < 1 || p > n_) throw ArgumentOutOfRange("point out of range");
    for (int i = 0; i < size(); ++i)
        if (contains(blocks_[i], p)) return i;
    return -1;
}

std::string PartialPartition::to_text() const {
    if (blocks_.empty()) return "∅";
    std::string s = "{";
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += '|';
        auto pts = points_of(blocks_[i]);
        for (size_t j = 0; j < pts.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(pts[j]);
        }
    }
    return s + "}";
}

PartialPartition PartialPartition::from_text(int n, std::string_view text) {
    if (text == "∅" || text == "{}" || text.empty()) return PartialPartition(n);
    if (text.front() != '{' || text.back() != '}')
        throw ArgumentOutOfRange("partition text must be braced: " + std::string(text));
    std::vector<std::vector<int>> blocks(1);
    int cur = -1;
    for (char c : text.substr(1, text.size() - 2)) {
        if (c >= '0' && c <= '9') {
            cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
        } else if (c == ',' || c == '|') {
            if (cur < 0) throw ArgumentOutOfRange("malformed partition text");
            blocks.back().push_back(cur);
            cur = -1;
            if (c == '|') blocks.emplace_back();
        } else if (c != ' ') {
            throw ArgumentOutOfRange("unexpected character in partition text");
        }
    }
    if (cur < 0) throw ArgumentOutOfRange("malformed partition text");
    blocks.back().push_back(cur);
    return PartialPartition(n, blocks);
}

bool refines(const PartialPartition& a, const PartialPartition& b) {
    if (a.ground_size() != b.ground_size())
        throw MismatchedGroundSet("partitions over different grounds");
    if (a.domain() & ~b.domain()) return false;
    for (Mask blk : a.blocks()) {
        int host = b.block_of(min_point(blk));
        if (host < 0 || (blk & ~b.blocks()[host])) return false;
    }
    return true;
}

PartialPartition meet_blocks(const PartialPartition& a, const PartialPartition& b) {
    if (a.ground_size() != b.ground_size())
        throw MismatchedGroundSet("partitions over different grounds");
    std::vector<Mask> blocks;
    for (Mask x : a.blocks())
        for (Mask y : b.blocks())
            if (Mask m = x & y) blocks.push_back(m);
    return PartialPartition(a.ground_size(), std::move(blocks));
}

PartialPartition join_blocks(const PartialPartition& a, const PartialPartition& b) {
    if (a.ground_size() != b.ground_size())
        throw MismatchedGroundSet("partitions over different grounds");
    const int n = a.ground_size();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite_block = [&](Mask blk) {
        int root = find(min_point(blk));
        for (int p : points_of(blk)) parent[find(p)] = root;
    };
    for (Mask blk : a.blocks()) unite_block(blk);
    for (Mask blk : b.blocks()) unite_block(blk);

    Mask dom = a.domain() | b.domain();
    std::vector<Mask> comp(n + 1, 0);
    for (int p : points_of(dom)) comp[find(p)] |= point_bit(p);
    std::vector<Mask> blocks;
    for (Mask m : comp)
        if (m) blocks.push_back(m);
    return PartialPartition(n, std::move(blocks));
}

namespace {

// Set partitions of the points listed in `pts` via restricted growth strings.
void set_partitions_of(const std::vector<int>& pts, int n, std::vector<PartialPartition>& out) {
    const int k = static_cast<int>(pts.size());
    if (k == 0) {
        out.emplace_back(n);
        return;
    }
    std::vector<int> rgs(k, 0);
    while (true) {
        int nb = 1 + *std::max_element(rgs.begin(), rgs.end());
        std::vector<Mask> blocks(nb, 0);
        for (int i = 0; i < k; ++i) blocks[rgs[i]] |= point_bit(pts[i]);
        out.emplace_back(n, std::move(blocks));
        // next restricted growth string
        int i = k - 1;
        while (i > 0) {
            int cap = 1 + *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] < cap) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
}

}  // namespace

std::vector<PartialPartition> enumerate_partial_partitions(int n) {
    if (n < 0 || n > kMaxEnumerate)
        throw ArgumentOutOfRange("partial partition enumeration bounded to n <= " +
                                 std::to_string(kMaxEnumerate));
    std::vector<PartialPartition> out;
    for (Mask dom = 0; dom <= full_mask(n); ++dom) {
        set_partitions_of(points_of(dom), n, out);
        if (n == 0) break;
    }
    return out;
}

std::vector<PartialPartition> enumerate_set_partitions(int n) {
    if (n < 0 || n > kMaxEnumerate)
        throw ArgumentOutOfRange("set partition enumeration bounded to n <= " +
                                 std::to_string(kMaxEnumerate));
    std::vector<PartialPartition> out;
    set_partitions_of(points_of(full_mask(n)), n, out);
    return out;
}

}  // namespace spckit
