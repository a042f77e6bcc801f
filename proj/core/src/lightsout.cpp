#include "lightsout/lightsout.hpp"

#include <bit>

#include "lightsout/matchings.hpp"

namespace lightsout {

gf2::BitMatrix closed_neighborhood_matrix(const Graph& g) {
    const std::size_t n = g.order();
    gf2::BitMatrix m(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        m.set(v, v, true);
        for (std::size_t u = 0; u < n; ++u)
            if (g.adjacent(v, u)) m.set(v, u, true);
    }
    return m;
}

bool is_hitting_set(const Graph& g, const PressSet& s) {
    if (s.size() != g.order()) throw std::invalid_argument("is_hitting_set: size mismatch");
    return closed_neighborhood_matrix(g).mul(s) == gf2::BitVector::ones(g.order());
}

std::optional<SolutionSet> solve(const Graph& g, const gf2::BitVector& p) {
    if (p.size() != g.order()) throw std::invalid_argument("solve: dimension mismatch");
    auto sol = gf2::solve(closed_neighborhood_matrix(g), p);
    if (!sol) return std::nullopt;
    return SolutionSet{std::move(sol->particular), std::move(sol->kernel_basis)};
}

SolutionSet solve_all_on(const Graph& g) {
    auto sol = solve(g, gf2::BitVector::ones(g.order()));
    // the diagonal of a symmetric matrix over GF(2) lies in its image
    return *sol;
}

ExtremalityReport is_extremal(const Graph& g, bool with_matching_parity) {
    ExtremalityReport report;
    report.even = is_even(g);
    report.det_parity = gf2::det2(closed_neighborhood_matrix(g));
    report.extremal = report.even && report.det_parity;
    if (with_matching_parity)
        report.matching_parity = (count_matchings(g) & 1) != 0;
    if (report.even && !report.det_parity) {
        // even + singular: the all-on coset has >= 2 members and contains
        // V, so some member is a proper hitting set
        SolutionSet sol = solve_all_on(g);
        PressSet all = gf2::BitVector::ones(g.order());
        PressSet candidate = sol.particular;
        for (std::size_t i = 0; candidate == all; ++i)
            candidate.xor_with(sol.kernel_basis.at(i));
        report.witness = candidate;
    }
    return report;
}

std::optional<PressSet> minimal_solution(const Graph& g, const gf2::BitVector& p,
                                         std::size_t kernel_threshold) {
    auto sol = solve(g, p);
    if (!sol) return std::nullopt;
    const std::size_t dim = sol->kernel_basis.size();
    if (dim > kernel_threshold)
        throw KernelThresholdExceeded("minimal_solution: kernel dimension " +
                                      std::to_string(dim) + " exceeds threshold " +
                                      std::to_string(kernel_threshold));
    PressSet best = sol->particular;
    // Gray-code walk over the coset
    PressSet current = sol->particular;
    std::uint64_t code = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << dim); ++i) {
        std::uint64_t next = i ^ (i >> 1);
        current.xor_with(sol->kernel_basis[static_cast<std::size_t>(
            std::countr_zero(code ^ next))]);
        code = next;
        if (current.count() < best.count() ||
            (current.count() == best.count() && current.lex_less(best)))
            best = current;
    }
    return best;
}

}  // namespace lightsout
