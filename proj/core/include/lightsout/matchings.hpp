#ifndef LIGHTSOUT_MATCHINGS_HPP
#define LIGHTSOUT_MATCHINGS_HPP

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lightsout/graph.hpp"

namespace lightsout {

/// Exact matching counts can exceed 64 bits well below n = 64.
using MatchCount = boost::multiprecision::cpp_int;

/// Total number of matchings of g, including the empty matching.
MatchCount count_matchings(const Graph& g);

/// Number of matchings covering v: m(G) - m(G - v).
MatchCount count_matchings_covering(const Graph& g, std::size_t v);

/// Number of matchings with exactly k edges whose endpoint set contains s.
MatchCount count_matchings_size_covering(const Graph& g, std::size_t k,
                                         const std::vector<std::size_t>& s);

/// Perfect matchings of the subgraph induced on u (0 when |u| is odd).
MatchCount count_perfect_matchings(const Graph& g, const std::vector<std::size_t>& u);

/// Parity of m(G), computed as det(A+I) over GF(2).
bool matching_parity(const Graph& g);

struct OddSetViolation {
    std::vector<std::size_t> odd_set;
    std::size_t k;
};

/// Even graphs have an even number of size-k matchings covering any
/// odd-cardinality vertex set. Checks every odd S and every k <= n/2.
struct OddSetReport {
    bool hypothesis_even = false;  // false: graph not even, nothing checked
    std::size_t checked = 0;       // (S, k) pairs examined
    std::vector<OddSetViolation> violations;
    bool passed() const { return hypothesis_even && violations.empty(); }
};

OddSetReport verify_odd_set_theorem(const Graph& g);

}  // namespace lightsout

#endif
