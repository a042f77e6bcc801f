// Command-line front end: solvers, extremality certificates, counting,
// sampling, graph operations, and the theorem verification suites.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lightsout/bijection.hpp"
#include "lightsout/enumeration.hpp"
#include "lightsout/gf2.hpp"
#include "lightsout/graph.hpp"
#include "lightsout/lightsout.hpp"
#include "lightsout/matchings.hpp"
#include "lightsout/operations.hpp"

namespace {

using json = nlohmann::json;
using namespace lightsout;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefused = 2;
constexpr int kExitNegative = 3;  // not extremal / unsolvable

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Graph parse_graph(const std::string& text, const std::string& format) {
    std::string body = text;
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
    try {
        if (format == "json" || (format == "auto" && !body.empty() && body.front() == '{'))
            return parse_json_graph(body);
        return parse_graph6(body);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad graph input: ") + e.what());
    }
}

Graph load_graph(const std::string& path, const std::string& format) {
    return parse_graph(read_input(path), format);
}

std::vector<std::size_t> parse_vertex_list(const std::string& csv) {
    std::vector<std::size_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoul(tok));
    return out;
}

std::string vertices_of(const PressSet& s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s.get(i)) continue;
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

int cmd_solve(const Graph& g, const std::string& config, bool as_json,
              std::size_t kernel_threshold) {
    gf2::BitVector p;
    if (config == "all-on") p = gf2::BitVector::ones(g.order());
    else {
        p = gf2::BitVector::from_string(config);
        if (p.size() != g.order())
            throw InputError("configuration length does not match graph order");
    }
    auto sol = solve(g, p);
    json j;
    j["solvable"] = sol.has_value();
    if (sol) {
        j["particular"] = sol->particular.to_string();
        j["kernel_dim"] = sol->kernel_basis.size();
        if (sol->kernel_basis.size() <= kernel_threshold) {
            auto min = minimal_solution(g, p, kernel_threshold);
            j["minimal"] = min->to_string();
            j["minimal_weight"] = min->count();
        }
    }
    if (as_json) {
        std::cout << j.dump() << "\n";
    } else if (!sol) {
        std::cout << "unsolvable\n";
    } else {
        std::cout << "solvable: 2^" << sol->kernel_basis.size()
                  << " solutions\nparticular: " << vertices_of(sol->particular)
                  << "\nkernel dimension: " << sol->kernel_basis.size() << "\n";
        if (j.contains("minimal"))
            std::cout << "minimal: " << vertices_of(PressSet::from_string(j["minimal"])) << " (weight "
                      << j["minimal_weight"] << ")\n";
        else
            std::cout << "minimal: skipped (kernel dimension above threshold)\n";
    }
    return sol ? kExitOk : kExitNegative;
}

json report_to_json(const ExtremalityReport& r) {
    json j;
    j["even"] = r.even;
    j["det_parity"] = r.det_parity ? 1 : 0;
    if (r.matching_parity) j["matching_parity"] = *r.matching_parity ? 1 : 0;
    j["extremal"] = r.extremal;
    if (r.witness) j["witness"] = r.witness->to_string();
    return j;
}

int check_one(const Graph& g, bool as_json, bool with_matchings) {
    auto r = is_extremal(g, with_matchings);
    if (as_json) {
        std::cout << report_to_json(r).dump() << "\n";
    } else if (r.extremal) {
        std::cout << "extremal\n";
    } else {
        std::cout << "not extremal";
        if (!r.even) std::cout << " (not even)";
        if (r.witness) std::cout << " witness " << vertices_of(*r.witness);
        std::cout << "\n";
    }
    return r.extremal ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lights Out extremal graph toolkit"};
    app.require_subcommand(1);

    std::string graph_path = "-", graph2_path, format = "auto";
    bool as_json = false;

    auto add_common = [&](CLI::App* cmd, bool needs_graph) {
        if (needs_graph) {
            cmd->add_option("-g,--graph", graph_path, "graph file (graph6 or JSON), '-' for stdin");
            cmd->add_option("--format", format, "input format: auto|graph6|json")
                ->check(CLI::IsMember({"auto", "graph6", "json"}));
        }
        cmd->add_flag("--json", as_json, "machine-readable JSON output");
    };

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve a light configuration");
    std::string config = "all-on";
    std::size_t kernel_threshold = 20;
    add_common(solve_cmd, true);
    solve_cmd->add_option("--config", config, "'all-on' or a 0/1 string per vertex");
    solve_cmd->add_option("--kernel-threshold", kernel_threshold,
                          "max kernel dimension for the minimal-solution walk");

    // check
    auto* check_cmd = app.add_subcommand("check", "certify extremality");
    bool batch = false, with_matchings = false;
    add_common(check_cmd, true);
    check_cmd->add_flag("--batch", batch, "read graph6 lines from stdin, one verdict per line");
    check_cmd->add_flag("--matchings", with_matchings, "also report matching-count parity");

    // count
    auto* count_cmd = app.add_subcommand("count", "count labeled extremal graphs");
    std::size_t count_n = 0;
    bool brute = false;
    count_cmd->add_option("n", count_n, "number of vertices")->required();
    count_cmd->add_flag("--brute", brute, "brute-force over even graphs instead of the formula");
    add_common(count_cmd, false);

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "uniform random labeled extremal graph");
    std::size_t sample_n = 0;
    std::optional<std::uint64_t> seed;
    sample_cmd->add_option("n", sample_n, "number of vertices (>= 2)")->required();
    sample_cmd->add_option("--seed", seed, "RNG seed (entropy-seeded when absent)");
    add_common(sample_cmd, false);

    // op
    auto* op_cmd = app.add_subcommand("op", "apply a graph operation");
    std::string op_name, edge_csv, cycle_csv, x1_csv, x2_csv;
    std::size_t op_x = 0, op_y = 0, op_vertex = 0;
    op_cmd->add_option("name", op_name, "onejoin|split|subdivide3|complete|sun")
        ->required()
        ->check(CLI::IsMember({"onejoin", "split", "subdivide3", "complete", "sun"}));
    add_common(op_cmd, true);
    op_cmd->add_option("-G,--graph2", graph2_path, "second graph (onejoin, complete)");
    op_cmd->add_option("--x", op_x, "vertex of the first graph (onejoin)");
    op_cmd->add_option("--y", op_y, "vertex of the second graph (onejoin)");
    op_cmd->add_option("--vertex", op_vertex, "cut vertex (split)");
    op_cmd->add_option("--edge", edge_csv, "edge 'u,v' (subdivide3)");
    op_cmd->add_option("--cycle", cycle_csv, "cycle 'v0,v1,...' (sun)");
    op_cmd->add_option("--x1", x1_csv, "even-size vertex set of graph 1 (complete)");
    op_cmd->add_option("--x2", x2_csv, "even-size vertex set of graph 2 (complete)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a theorem verification suite");
    std::string suite_id;
    enumeration::VerifyOptions vopts;
    verify_cmd->add_option("id", suite_id, "thm-2-1|thm-3-2|thm-4-1|thm-4-2|thm-5-4|cor-5-5|ops")
        ->required();
    verify_cmd->add_option("--max-n", vopts.max_n, "override the suite's size cap");
    verify_cmd->add_option("--seed", vopts.seed, "seed for randomized suites");
    verify_cmd->add_option("--budget", vopts.budget, "cycle-search extension budget");
    verify_cmd->add_option("--trials", vopts.trials, "randomized trial count");

    // matchings
    auto* match_cmd = app.add_subcommand("matchings", "exact matching counts");
    std::optional<std::size_t> cover_v;
    std::optional<std::size_t> size_k;
    std::string set_csv, perfect_csv;
    add_common(match_cmd, true);
    match_cmd->add_option("--cover", cover_v, "count matchings covering this vertex");
    match_cmd->add_option("--size", size_k, "count matchings with exactly k edges");
    match_cmd->add_option("--set", set_csv, "required covered set 'a,b,c' (with --size)");
    match_cmd->add_option("--perfect", perfect_csv,
                          "perfect matchings of the subgraph induced on 'a,b,c'");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed())
            return cmd_solve(load_graph(graph_path, format), config, as_json, kernel_threshold);

        if (check_cmd->parsed()) {
            if (batch) {
                int worst = kExitOk;
                std::string line;
                while (std::getline(std::cin, line)) {
                    if (line.empty()) continue;
                    int rc = check_one(parse_graph(line, "graph6"), as_json, with_matchings);
                    if (rc != kExitOk) worst = rc;
                }
                return worst;
            }
            return check_one(load_graph(graph_path, format), as_json, with_matchings);
        }

        if (count_cmd->parsed()) {
            MatchCount c = brute ? enumeration::count_extremal_brute(count_n)
                                 : bijection::count_extremal(count_n);
            if (as_json) std::cout << json{{"n", count_n}, {"count", c.str()}}.dump() << "\n";
            else std::cout << c << "\n";
            return kExitOk;
        }

        if (sample_cmd->parsed()) {
            std::mt19937_64 rng(seed ? *seed : std::random_device{}());
            Graph g = bijection::sample_extremal(sample_n, rng);
            if (as_json) std::cout << json{{"graph6", to_graph6(g)}}.dump() << "\n";
            else std::cout << to_graph6(g) << "\n";
            return kExitOk;
        }

        if (op_cmd->parsed()) {
            std::vector<Graph> results;
            Graph g = load_graph(graph_path, format);
            if (op_name == "onejoin")
                results.push_back(ops::one_join(g, op_x, load_graph(graph2_path, format), op_y));
            else if (op_name == "split")
                results = ops::split_at_cut_vertex(g, op_vertex);
            else if (op_name == "subdivide3") {
                auto e = parse_vertex_list(edge_csv);
                if (e.size() != 2) throw InputError("--edge expects 'u,v'");
                results.push_back(ops::triple_subdivide(g, e[0], e[1]));
            } else if (op_name == "complete")
                results.push_back(ops::even_completion(g, parse_vertex_list(x1_csv),
                                                       load_graph(graph2_path, format),
                                                       parse_vertex_list(x2_csv)));
            else if (op_name == "sun")
                results.push_back(ops::sun_cycle(g, {parse_vertex_list(cycle_csv)}));
            for (const auto& r : results) {
                if (as_json) std::cout << to_json_graph(r) << "\n";
                else std::cout << to_graph6(r) << "\n";
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            auto rep = enumeration::verify_theorem(suite_id, vopts);
            std::cout << rep.to_json() << "\n";
            return rep.passed() ? kExitOk : kExitNegative;
        }

        if (match_cmd->parsed()) {
            Graph g = load_graph(graph_path, format);
            MatchCount c;
            if (cover_v) c = count_matchings_covering(g, *cover_v);
            else if (size_k) c = count_matchings_size_covering(g, *size_k, parse_vertex_list(set_csv));
            else if (!perfect_csv.empty()) c = count_perfect_matchings(g, parse_vertex_list(perfect_csv));
            else c = count_matchings(g);
            if (as_json) std::cout << json{{"count", c.str()}}.dump() << "\n";
            else std::cout << c << "\n";
            return kExitOk;
        }
    } catch (const KernelThresholdExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
