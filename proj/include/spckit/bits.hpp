#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace spckit {

/// Point sets over a ground {1,...,n} are stored as bitmasks: point p <-> bit (p-1).
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

/// Lowest point (1-based) of a nonempty mask.
inline int min_point(Mask m) { return std::countr_zero(m) + 1; }

inline Mask point_bit(int p) { return Mask{1} << (p - 1); }

inline bool contains(Mask m, int p) { return (m >> (p - 1)) & 1u; }

inline Mask full_mask(int n) { return n == 0 ? 0u : (Mask{0xFFFFFFFFu} >> (32 - n)); }

/// Points of a mask in increasing order, 1-based.
inline std::vector<int> points_of(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

}  // namespace spckit
