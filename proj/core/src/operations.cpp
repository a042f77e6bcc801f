#include "lightsout/operations.hpp"

#include <algorithm>
#include <stdexcept>

namespace lightsout::ops {

Graph one_join(const Graph& g1, std::size_t x, const Graph& g2, std::size_t y) {
    if (x >= g1.order()) throw std::out_of_range("one_join: x out of range");
    if (y >= g2.order()) throw std::out_of_range("one_join: y out of range");
    const std::size_t n1 = g1.order();
    Graph g(n1 + g2.order() - 1);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    // vertex j of g2 maps to x if j == y, otherwise to n1 + its rank
    // among g2's non-y vertices
    auto map2 = [&](std::size_t j) { return j == y ? x : n1 + j - (j > y ? 1 : 0); };
    for (auto [u, v] : g2.edges()) g.add_edge(map2(u), map2(v));
    return g;
}

std::vector<Graph> split_at_cut_vertex(const Graph& g, std::size_t v) {
    auto cuts = cut_vertices(g);
    if (std::find(cuts.begin(), cuts.end(), v) == cuts.end())
        throw std::invalid_argument("split_at_cut_vertex: not a cut vertex");
    std::vector<std::size_t> others;
    for (std::size_t u = 0; u < g.order(); ++u)
        if (u != v) others.push_back(u);
    Graph without = induced_subgraph(g, others);
    std::vector<Graph> pieces;
    for (const auto& comp : connected_components(without)) {
        std::vector<std::size_t> keep;
        for (auto i : comp) keep.push_back(others[i]);
        keep.push_back(v);
        std::sort(keep.begin(), keep.end());
        pieces.push_back(induced_subgraph(g, keep));
    }
    return pieces;
}

Graph triple_subdivide(const Graph& g, std::size_t u, std::size_t v) {
    if (u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw std::invalid_argument("triple_subdivide: (u,v) is not an edge");
    const std::size_t n = g.order();
    Graph out(n + 3);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    out.remove_edge(u, v);
    out.add_edge(u, n);
    out.add_edge(n, n + 1);
    out.add_edge(n + 1, n + 2);
    out.add_edge(n + 2, v);
    return out;
}

Graph even_completion(const Graph& g1, const std::vector<std::size_t>& x1,
                      const Graph& g2, const std::vector<std::size_t>& x2) {
    if (x1.size() % 2 || x2.size() % 2)
        throw std::invalid_argument("even_completion: designated sets must have even size");
    auto distinct = [](std::vector<std::size_t> s) {
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    };
    if (!distinct(x1) || !distinct(x2))
        throw std::invalid_argument("even_completion: repeated vertex in designated set");
    const std::size_t n1 = g1.order();
    Graph g(n1 + g2.order());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
    for (auto a : x1) {
        if (a >= n1) throw std::out_of_range("even_completion: x1 vertex out of range");
        for (auto b : x2) {
            if (b >= g2.order()) throw std::out_of_range("even_completion: x2 vertex out of range");
            g.add_edge(a, n1 + b);
        }
    }
    return g;
}

Graph sun_cycle(const Graph& g, const SunSpec& spec) {
    const std::size_t k = spec.cycle.size();
    if (k < 3) throw std::invalid_argument("sun_cycle: cycle must have length at least 3");
    for (std::size_t i = 0; i < k; ++i) {
        if (spec.cycle[i] >= g.order()) throw std::out_of_range("sun_cycle: vertex out of range");
        for (std::size_t j = i + 1; j < k; ++j)
            if (spec.cycle[i] == spec.cycle[j])
                throw std::invalid_argument("sun_cycle: repeated vertex in cycle");
    }
    const std::size_t n = g.order();
    Graph out(n + k);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t a = spec.cycle[i];
        const std::size_t b = spec.cycle[(i + 1) % k];
        out.toggle_edge(a, b);
        out.add_edge(n + i, a);
        out.add_edge(n + i, b);
    }
    return out;
}

}  // namespace lightsout::ops
