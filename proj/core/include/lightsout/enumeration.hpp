#ifndef LIGHTSOUT_ENUMERATION_HPP
#define LIGHTSOUT_ENUMERATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lightsout/graph.hpp"
#include "lightsout/matchings.hpp"

namespace lightsout::enumeration {

inline constexpr std::size_t kAllGraphsCap = 7;
inline constexpr std::size_t kEvenGraphsCap = 9;

/// 2^C(n,2) labeled graphs on n vertices.
std::uint64_t graph_count(std::size_t n);

/// The idx-th labeled graph in lexicographic edge-bit order
/// ((0,1),(0,2),...,(0,n-1),(1,2),...).
Graph graph_from_index(std::size_t n, std::uint64_t idx);

/// 2^C(n-1,2) even graphs on n >= 1 vertices.
std::uint64_t even_graph_count(std::size_t n);

/// The idx-th even graph: take the idx-th graph H on n-1 vertices and
/// join vertex n-1 to every odd-degree vertex of H.
Graph even_graph_from_index(std::size_t n, std::uint64_t idx);

/// Streams every labeled graph on n vertices, each exactly once.
template <class F>
void for_each_graph(std::size_t n, F&& f, std::size_t cap = kAllGraphsCap) {
    if (n > cap) throw std::invalid_argument("for_each_graph: n exceeds cap");
    const std::uint64_t total = graph_count(n);
    for (std::uint64_t i = 0; i < total; ++i) f(graph_from_index(n, i));
}

template <class F>
void for_each_even_graph(std::size_t n, F&& f, std::size_t cap = kEvenGraphsCap) {
    if (n > cap) throw std::invalid_argument("for_each_even_graph: n exceeds cap");
    const std::uint64_t total = even_graph_count(n);
    for (std::uint64_t i = 0; i < total; ++i) f(even_graph_from_index(n, i));
}

/// Brute-force count of labeled extremal graphs on n vertices, scanning
/// the even graphs only.
MatchCount count_extremal_brute(std::size_t n, std::size_t cap = kEvenGraphsCap);

struct Violation {
    std::string graph6;
    std::string detail;
};

struct VerificationReport {
    std::string theorem;
    std::uint64_t checked = 0;
    std::vector<Violation> violations;
    double seconds = 0.0;
    bool passed() const { return violations.empty(); }
    std::string to_json() const;
};

struct VerifyOptions {
    std::size_t max_n = 0;          // 0: per-suite default
    std::uint64_t seed = 12345;     // randomized suites
    std::uint64_t budget = 10'000'000;
    std::size_t trials = 1000;
};

/// Runs one verification suite. Known ids: thm-2-1, thm-3-2, thm-4-1,
/// thm-4-2, thm-5-4, cor-5-5, ops.
VerificationReport verify_theorem(const std::string& id, const VerifyOptions& opts = {});

/// All suite ids, in a stable order.
std::vector<std::string> theorem_ids();

}  // namespace lightsout::enumeration

#endif
