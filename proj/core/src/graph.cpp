#include "lightsout/graph.hpp"

#include <bit>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lightsout {

Graph::Graph(std::size_t n) : n_(n), adj_(n, 0) {
    if (n > 64) throw std::invalid_argument("Graph: order > 64 not supported");
}

void Graph::check_pair(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
}

Graph Graph::from_edge_list(std::size_t n,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);  // duplicates collapse
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
}

std::size_t Graph::degree(std::size_t v) const {
    return static_cast<std::size_t>(std::popcount(adj_[v]));
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    check_pair(u, v);
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
    check_pair(u, v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
}

void Graph::toggle_edge(std::size_t u, std::size_t v) {
    check_pair(u, v);
    adj_[u] ^= std::uint64_t{1} << v;
    adj_[v] ^= std::uint64_t{1} << u;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

bool is_even(const Graph& g) {
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(v) & 1) return false;
    return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& keep) {
    Graph sub(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) sub.add_edge(i, j);
    }
    return sub;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
    std::size_t n = g.order();
    std::vector<std::vector<std::size_t>> comps;
    std::uint64_t seen = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if ((seen >> s) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << s;
        for (;;) {  // fixpoint expansion of the component mask
            std::uint64_t grown = comp;
            for (std::size_t v = 0; v < n; ++v)
                if ((comp >> v) & 1u) grown |= g.neighborhood(v);
            if (grown == comp) break;
            comp = grown;
        }
        seen |= comp;
        std::vector<std::size_t> verts;
        for (std::size_t v = 0; v < n; ++v)
            if ((comp >> v) & 1u) verts.push_back(v);
        comps.push_back(std::move(verts));
    }
    return comps;
}

std::vector<std::size_t> cut_vertices(const Graph& g) {
    std::size_t n = g.order();
    std::size_t base = connected_components(g).size();
    std::vector<std::size_t> cuts;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> keep;
        for (std::size_t u = 0; u < n; ++u)
            if (u != v) keep.push_back(u);
        std::size_t without = connected_components(induced_subgraph(g, keep)).size();
        if (without > base) cuts.push_back(v);
    }
    return cuts;
}

namespace {

struct CycleSearch {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t used = 0;
    std::vector<std::size_t> path;
    std::uint64_t on_path = 0;
    std::size_t start = 0;
    bool exhausted_ok = true;

    explicit CycleSearch(const Graph& graph, std::uint64_t b) : g(graph), budget(b) {}

    // Returns true when a 0 mod 3 cycle was found (path holds it).
    bool dfs(std::size_t v) {
        for (std::size_t u = start; u < g.order(); ++u) {
            if (!g.adjacent(v, u)) continue;
            if (u == start && path.size() >= 3 && path.size() % 3 == 0) return true;
            if ((on_path >> u) & 1u) continue;
            if (u == start) continue;
            if (used++ >= budget) { exhausted_ok = false; return false; }
            path.push_back(u);
            on_path |= std::uint64_t{1} << u;
            if (dfs(u)) return true;
            if (!exhausted_ok) return false;
            on_path &= ~(std::uint64_t{1} << u);
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

CycleWitness find_cycle_div3(const Graph& g, std::uint64_t budget) {
    if (budget == 0) throw std::invalid_argument("find_cycle_div3: budget must be positive");
    CycleSearch search(g, budget);
    CycleWitness w;
    for (std::size_t s = 0; s < g.order(); ++s) {
        search.start = s;
        search.path = {s};
        search.on_path = std::uint64_t{1} << s;
        if (search.dfs(s)) {
            w.verdict = CycleWitness::Verdict::Found;
            w.cycle = search.path;
            w.budget_used = search.used;
            return w;
        }
        if (!search.exhausted_ok) {
            w.verdict = CycleWitness::Verdict::BudgetExceeded;
            w.budget_used = search.used;
            return w;
        }
    }
    w.verdict = CycleWitness::Verdict::NotFound;
    w.budget_used = search.used;
    return w;
}

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    if (s[0] == '~') throw std::invalid_argument("graph6: orders >= 63 not supported");
    int n = s[0] - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("graph6: bad order byte");
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() != 1 + nbytes) throw std::invalid_argument("graph6: truncated or oversized payload");

    Graph g(static_cast<std::size_t>(n));
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            char c = s[1 + bit / 6];
            if (c < 63 || c > 126) throw std::invalid_argument("graph6: malformed character");
            int payload = c - 63;
            if ((payload >> (5 - bit % 6)) & 1)
                g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        }
    }
    // remaining pad bits must be zero for a canonical encoding
    for (; bit % 6 != 0; ++bit) {
        int payload = s[1 + bit / 6] - 63;
        if ((payload >> (5 - bit % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    std::size_t n = g.order();
    if (n >= 63) throw std::invalid_argument("graph6: orders >= 63 not supported");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, filled = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph parse_json_graph(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    return Graph::from_edge_list(n, edges);
}

std::string to_json_graph(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

}  // namespace lightsout
