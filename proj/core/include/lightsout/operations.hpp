#ifndef LIGHTSOUT_OPERATIONS_HPP
#define LIGHTSOUT_OPERATIONS_HPP

#include <cstddef>
#include <vector>

#include "lightsout/graph.hpp"

namespace lightsout::ops {

/// Ordered cycle v_0..v_{k-1} (v_k = v_0) for the sun cycle operation.
/// Order matters: the construction works on consecutive pairs.
struct SunSpec {
    std::vector<std::size_t> cycle;  // distinct vertices, k >= 3
};

/// Identify x in g1 with y in g2. g1's vertices come first (the merged
/// vertex keeps index x), then g2's remaining vertices in order.
Graph one_join(const Graph& g1, std::size_t x, const Graph& g2, std::size_t y);

/// One piece per connected component C of g - v: the subgraph induced on
/// C + {v}. Pieces cover all edges and pairwise intersect exactly in v.
std::vector<Graph> split_at_cut_vertex(const Graph& g, std::size_t v);

/// Replace edge (u,v) by the path u-a-b-c-v; a, b, c get indices
/// n, n+1, n+2. Extremality is preserved in both directions.
Graph triple_subdivide(const Graph& g, std::size_t u, std::size_t v);

/// Disjoint union (g1 first) plus all cross edges between x1 and x2;
/// both sets must have even size (0 allowed).
Graph even_completion(const Graph& g1, const std::vector<std::size_t>& x1,
                      const Graph& g2, const std::vector<std::size_t>& x2);

/// Toggle each cycle edge (v_i, v_{i+1}) and attach a new vertex w_i
/// (index n+i) adjacent to exactly v_i and v_{i+1}.
Graph sun_cycle(const Graph& g, const SunSpec& spec);

}  // namespace lightsout::ops

#endif
