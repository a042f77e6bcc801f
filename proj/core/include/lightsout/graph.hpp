#ifndef LIGHTSOUT_GRAPH_HPP
#define LIGHTSOUT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lightsout {

/// Simple undirected labeled graph on vertices 0..n-1.
/// Adjacency is a symmetric irreflexive bit relation, one 64-bit
/// neighborhood mask per vertex (n <= 64 is all this project needs).
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    static Graph from_edge_list(std::size_t n,
                                const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t order() const { return n_; }
    std::size_t edge_count() const;

    bool adjacent(std::size_t u, std::size_t v) const {
        return (adj_[u] >> v) & 1u;
    }
    std::uint64_t neighborhood(std::size_t v) const { return adj_[v]; }
    std::uint64_t closed_neighborhood(std::size_t v) const {
        return adj_[v] | (std::uint64_t{1} << v);
    }
    std::size_t degree(std::size_t v) const;

    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);
    void toggle_edge(std::size_t u, std::size_t v);

    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_pair(std::size_t u, std::size_t v) const;

    std::size_t n_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// True iff every vertex has even degree. The empty graph is even.
bool is_even(const Graph& g);

/// Induced subgraph on `keep`, vertices relabeled to 0..|keep|-1
/// preserving the original order.
Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& keep);

/// Connected components as sorted vertex lists.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

/// Vertices whose removal increases the number of connected components.
std::vector<std::size_t> cut_vertices(const Graph& g);

/// Outcome of the bounded search for a simple cycle of length 0 mod 3.
struct CycleWitness {
    enum class Verdict { Found, NotFound, BudgetExceeded };
    Verdict verdict = Verdict::NotFound;
    std::vector<std::size_t> cycle;  // populated when Found
    std::uint64_t budget_used = 0;   // DFS extensions consumed
};

/// Exhaustive backtracking DFS over simple paths, canonical start =
/// smallest vertex on the cycle. Each path extension costs one unit of
/// budget; BudgetExceeded is a verdict, not an error.
CycleWitness find_cycle_div3(const Graph& g, std::uint64_t budget = 10'000'000);

// graph6 serialization (standard ASCII encoding, n < 63).
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// JSON edge-list format {"n": int, "edges": [[u,v],...]}.
Graph parse_json_graph(const std::string& text);
std::string to_json_graph(const Graph& g);

}  // namespace lightsout

#endif
