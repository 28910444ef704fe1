#ifndef ORACLE_CATALAN_BRUTE_HPP
#define ORACLE_CATALAN_BRUTE_HPP

// Counts by enumeration. p-ary trees with n internal nodes are in bijection
// with words of n letters "up p-1" and (p-1)n letters "down" whose prefix
// height never drops below zero; we enumerate those words directly.

#include <cstdint>

namespace oracle {

namespace detail {

inline std::uint64_t walks(long ups_left, long downs_left, long height, long p) {
    if (ups_left == 0 && downs_left == 0) return 1;
    std::uint64_t total = 0;
    if (ups_left > 0) total += walks(ups_left - 1, downs_left, height + (p - 1), p);
    if (downs_left > 0 && height > 0) total += walks(ups_left, downs_left - 1, height - 1, p);
    return total;
}

}  // namespace detail

/// Number of p-ary trees with n internal nodes.
inline std::uint64_t count_p_ary_trees(long p, long n) { return detail::walks(n, (p - 1) * n, 0, p); }

}  // namespace oracle

#endif
