#ifndef LIGHTSOUT_LIGHTSOUT_HPP
#define LIGHTSOUT_LIGHTSOUT_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "lightsout/gf2.hpp"
#include "lightsout/graph.hpp"

namespace lightsout {

/// A set of pressed vertices, as a bit vector of length n.
using PressSet = gf2::BitVector;

/// All solutions of M_G x = p: particular + span(kernel_basis).
/// The solution count is 2^|kernel_basis|.
struct SolutionSet {
    PressSet particular;
    std::vector<gf2::BitVector> kernel_basis;
};

/// Certificate for the extremality decision. A graph is extremal iff it
/// is even and M_G = A + I is invertible; when even but singular, the
/// witness is a proper hitting set.
struct ExtremalityReport {
    bool even = false;
    bool det_parity = false;
    std::optional<bool> matching_parity;  // filled on request; equals det_parity
    bool extremal = false;
    std::optional<PressSet> witness;
};

/// Refusal raised when a coset walk would exceed the kernel threshold.
struct KernelThresholdExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// M_G = A_G + I over GF(2).
gf2::BitMatrix closed_neighborhood_matrix(const Graph& g);

/// True iff |N[v] ∩ s| is odd for every vertex, i.e. M_G s = 1.
bool is_hitting_set(const Graph& g, const PressSet& s);

/// Press sets turning configuration p all-off; absent iff p is not
/// orthogonal to ker(M_G).
std::optional<SolutionSet> solve(const Graph& g, const gf2::BitVector& p);

/// The all-on configuration is always solvable.
SolutionSet solve_all_on(const Graph& g);

ExtremalityReport is_extremal(const Graph& g, bool with_matching_parity = false);

/// Minimum-cardinality press set for p, lexicographically smallest among
/// the minimum-weight coset members. Walks all 2^(kernel dim) solutions;
/// refuses above the threshold. Absent when p is unsolvable.
std::optional<PressSet> minimal_solution(const Graph& g, const gf2::BitVector& p,
                                         std::size_t kernel_threshold = 20);

}  // namespace lightsout

#endif
