// Internal mask-level helpers shared by the counting and enumeration
// translation units. Graphs appear as one neighborhood mask per vertex.
#ifndef LIGHTSOUT_MASK_OPS_HPP
#define LIGHTSOUT_MASK_OPS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lightsout::detail {

inline bool mask_even(const std::vector<std::uint64_t>& adj) {
    for (auto m : adj)
        if (std::popcount(m) & 1) return false;
    return true;
}

/// det(A + I) over GF(2) by in-place elimination on row masks.
inline bool mask_det_closed(std::vector<std::uint64_t> rows) {
    const std::size_t n = rows.size();
    for (std::size_t v = 0; v < n; ++v) rows[v] ^= std::uint64_t{1} << v;
    for (std::size_t c = 0; c < n; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        std::size_t piv = c;
        while (piv < n && !(rows[piv] & bit)) ++piv;
        if (piv == n) return false;
        std::swap(rows[piv], rows[c]);
        for (std::size_t r = c + 1; r < n; ++r)
            if (rows[r] & bit) rows[r] ^= rows[c];
    }
    return true;
}

inline bool mask_extremal(const std::vector<std::uint64_t>& adj) {
    return mask_even(adj) && mask_det_closed(adj);
}

/// Walks every matching exactly once (vertices decided in increasing
/// order). f(edge_count, covered_mask) is called at each complete leaf.
template <class F>
void for_each_matching(const std::vector<std::uint64_t>& adj, std::uint64_t todo,
                       std::size_t k, std::uint64_t covered, F&& f) {
    if (todo == 0) {
        f(k, covered);
        return;
    }
    const int v = std::countr_zero(todo);
    const std::uint64_t vbit = std::uint64_t{1} << v;
    for_each_matching(adj, todo & ~vbit, k, covered, f);  // v unmatched
    std::uint64_t nbrs = adj[static_cast<std::size_t>(v)] & todo & ~vbit;
    while (nbrs) {
        const std::uint64_t ubit = nbrs & (~nbrs + 1);
        for_each_matching(adj, todo & ~vbit & ~ubit, k + 1, covered | vbit | ubit, f);
        nbrs &= nbrs - 1;
    }
}

template <class F>
void for_each_matching(const std::vector<std::uint64_t>& adj, F&& f) {
    const std::uint64_t all =
        adj.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << adj.size()) - 1;
    for_each_matching(adj, all, 0, 0, f);
}

}  // namespace lightsout::detail

#endif
