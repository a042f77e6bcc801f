#include "lightsout/matchings.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "lightsout/gf2.hpp"
#include "lightsout/lightsout.hpp"
#include "mask_ops.hpp"

namespace lightsout {

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) adj[v] = g.neighborhood(v);
    return adj;
}

std::uint64_t full_mask(std::size_t n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// m(G[todo]) with memoization on the undecided-vertex mask. Deleting
// vertices never changes the adjacency table, so the mask is a complete
// state key.
MatchCount count_rec(const std::vector<std::uint64_t>& adj, std::uint64_t todo,
                     std::unordered_map<std::uint64_t, MatchCount>& memo) {
    if (todo == 0) return 1;
    auto it = memo.find(todo);
    if (it != memo.end()) return it->second;
    const int v = std::countr_zero(todo);
    const std::uint64_t vbit = std::uint64_t{1} << v;
    MatchCount total = count_rec(adj, todo & ~vbit, memo);
    std::uint64_t nbrs = adj[static_cast<std::size_t>(v)] & todo & ~vbit;
    while (nbrs) {
        const std::uint64_t ubit = nbrs & (~nbrs + 1);
        total += count_rec(adj, todo & ~vbit & ~ubit, memo);
        nbrs &= nbrs - 1;
    }
    memo.emplace(todo, total);
    return total;
}

struct MaskKHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::size_t>& p) const {
        return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ull + p.second);
    }
};

// Size-k matchings on G[todo] covering cover_mask & todo.
MatchCount count_size_cover_rec(
    const std::vector<std::uint64_t>& adj, std::uint64_t todo, std::size_t k,
    std::uint64_t cover_mask,
    std::unordered_map<std::pair<std::uint64_t, std::size_t>, MatchCount, MaskKHash>& memo) {
    if (2 * k > static_cast<std::size_t>(std::popcount(todo))) return 0;
    if (k == 0) return (cover_mask & todo) ? 0 : 1;
    // a required vertex with no remaining incident edge kills the branch
    std::uint64_t required = cover_mask & todo;
    while (required) {
        const int r = std::countr_zero(required);
        if (!(adj[static_cast<std::size_t>(r)] & todo & ~(std::uint64_t{1} << r))) return 0;
        required &= required - 1;
    }
    auto key = std::make_pair(todo, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int v = std::countr_zero(todo);
    const std::uint64_t vbit = std::uint64_t{1} << v;
    MatchCount total = 0;
    if (!(cover_mask & vbit))
        total += count_size_cover_rec(adj, todo & ~vbit, k, cover_mask, memo);
    std::uint64_t nbrs = adj[static_cast<std::size_t>(v)] & todo & ~vbit;
    while (nbrs) {
        const std::uint64_t ubit = nbrs & (~nbrs + 1);
        total += count_size_cover_rec(adj, todo & ~vbit & ~ubit, k - 1, cover_mask, memo);
        nbrs &= nbrs - 1;
    }
    memo.emplace(key, total);
    return total;
}

MatchCount perfect_rec(const std::vector<std::uint64_t>& adj, std::uint64_t todo,
                       std::unordered_map<std::uint64_t, MatchCount>& memo) {
    if (todo == 0) return 1;
    auto it = memo.find(todo);
    if (it != memo.end()) return it->second;
    const int v = std::countr_zero(todo);
    const std::uint64_t vbit = std::uint64_t{1} << v;
    MatchCount total = 0;
    std::uint64_t nbrs = adj[static_cast<std::size_t>(v)] & todo & ~vbit;
    while (nbrs) {
        const std::uint64_t ubit = nbrs & (~nbrs + 1);
        total += perfect_rec(adj, todo & ~vbit & ~ubit, memo);
        nbrs &= nbrs - 1;
    }
    memo.emplace(todo, total);
    return total;
}

}  // namespace

MatchCount count_matchings(const Graph& g) {
    auto adj = adjacency_masks(g);
    std::unordered_map<std::uint64_t, MatchCount> memo;
    return count_rec(adj, full_mask(g.order()), memo);
}

MatchCount count_matchings_covering(const Graph& g, std::size_t v) {
    if (v >= g.order()) throw std::out_of_range("count_matchings_covering: vertex out of range");
    auto adj = adjacency_masks(g);
    std::unordered_map<std::uint64_t, MatchCount> memo;
    const std::uint64_t all = full_mask(g.order());
    return count_rec(adj, all, memo) - count_rec(adj, all & ~(std::uint64_t{1} << v), memo);
}

MatchCount count_matchings_size_covering(const Graph& g, std::size_t k,
                                         const std::vector<std::size_t>& s) {
    auto adj = adjacency_masks(g);
    std::uint64_t cover = 0;
    for (auto v : s) {
        if (v >= g.order()) throw std::out_of_range("count_matchings_size_covering: vertex out of range");
        cover |= std::uint64_t{1} << v;
    }
    std::unordered_map<std::pair<std::uint64_t, std::size_t>, MatchCount, MaskKHash> memo;
    return count_size_cover_rec(adj, full_mask(g.order()), k, cover, memo);
}

MatchCount count_perfect_matchings(const Graph& g, const std::vector<std::size_t>& u) {
    Graph sub = induced_subgraph(g, u);
    if (sub.order() & 1) return 0;
    auto adj = adjacency_masks(sub);
    std::unordered_map<std::uint64_t, MatchCount> memo;
    return perfect_rec(adj, full_mask(sub.order()), memo);
}

bool matching_parity(const Graph& g) {
    return gf2::det2(closed_neighborhood_matrix(g));
}

OddSetReport verify_odd_set_theorem(const Graph& g) {
    OddSetReport report;
    if (!is_even(g)) return report;
    report.hypothesis_even = true;

    const std::size_t n = g.order();
    if (n > 20) throw std::invalid_argument("verify_odd_set_theorem: order > 20 is impractical");
    const std::size_t kmax = n / 2;
    const std::size_t nmasks = std::size_t{1} << n;

    // One pass over all matchings builds parity-by-coverage tables; a
    // superset zeta transform then yields m_k(G,S) mod 2 for every S.
    std::vector<std::vector<std::uint8_t>> par(kmax + 1, std::vector<std::uint8_t>(nmasks, 0));
    auto adj = adjacency_masks(g);
    detail::for_each_matching(adj, [&](std::size_t k, std::uint64_t covered) {
        par[k][covered] ^= 1;
    });
    for (std::size_t k = 0; k <= kmax; ++k)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t m = 0; m < nmasks; ++m)
                if (!(m & (std::size_t{1} << b))) par[k][m] ^= par[k][m | (std::size_t{1} << b)];

    for (std::size_t s = 0; s < nmasks; ++s) {
        if (!(std::popcount(s) & 1)) continue;
        for (std::size_t k = 0; k <= kmax; ++k) {
            ++report.checked;
            if (par[k][s]) {
                OddSetViolation v;
                v.k = k;
                for (std::size_t b = 0; b < n; ++b)
                    if (s & (std::size_t{1} << b)) v.odd_set.push_back(b);
                report.violations.push_back(std::move(v));
            }
        }
    }
    return report;
}

}  // namespace lightsout
