#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mimpaths/branch_decomposition.hpp"
#include "mimpaths/graph.hpp"
#include "mimpaths/hitm.hpp"
#include "mimpaths/idp.hpp"
#include "mimpaths/lip.hpp"
#include "mimpaths/oracle.hpp"

using namespace mimpaths;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDecomposition = 3;
constexpr int kExitBudget = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph;
    std::string decomp;
    std::string pairs;
    std::string pattern;
    std::string strategy = "linear-order";
    std::string order;
    std::string output;
    std::string graph_out;
    bool witness = false;
    bool stats = false;
    int max_pattern_edges = 6;
    int max_exhaustive = 8;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Without -d, fall back to the identity caterpillar.
BranchDecomposition load_decomposition(const Options& opt, const Graph& g) {
    if (!opt.decomp.empty()) {
        auto d = read_decomposition_file(opt.decomp, g.vertex_count());
        d.validate_for(g);
        return d;
    }
    if (g.vertex_count() < 2) return {};
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    return linear_order_decomposition(g, order);
}

void print_vertices(std::ostream& out, const char* tag, const std::vector<int>& vs) {
    out << tag;
    for (int v : vs) out << ' ' << v + 1;
    out << '\n';
}

void print_table_stats(const std::vector<std::size_t>& entries, int width, double secs) {
    std::size_t total = 0, largest = 0;
    for (auto e : entries) {
        total += e;
        largest = std::max(largest, e);
    }
    std::cerr << "width " << width << "\nentries total " << total << " max " << largest << "\nentries per node";
    for (auto e : entries) std::cerr << ' ' << e;
    std::cerr << "\ntime " << secs << "\n";
}

int cmd_lip(const Options& opt) {
    Graph g = read_graph_file(opt.graph);
    auto d = load_decomposition(opt, g);
    auto t0 = Clock::now();
    auto r = lip_solve(g, d, opt.witness);
    std::cout << "lip " << r.length << '\n';
    if (opt.witness) print_vertices(std::cout, "path", r.path);
    if (opt.stats) print_table_stats(r.entries_per_node, r.width, seconds_since(t0));
    return 0;
}

int cmd_idp(const Options& opt) {
    Graph g = read_graph_file(opt.graph);
    if (opt.pairs.empty()) throw InputError("--pairs is required");
    auto pairs = read_pairs_file(opt.pairs, g.vertex_count());
    auto d = load_decomposition(opt, g);
    auto t0 = Clock::now();
    auto r = idp_solve(g, d, pairs, opt.witness);
    std::cout << "idp " << (r.solvable ? "yes" : "no") << '\n';
    if (opt.witness)
        for (const auto& p : r.paths) print_vertices(std::cout, "path", p);
    if (opt.stats) print_table_stats(r.entries_per_node, r.width, seconds_since(t0));
    return 0;
}

int cmd_hitm(const Options& opt) {
    Graph g = read_graph_file(opt.graph);
    if (opt.pattern.empty()) throw InputError("--pattern is required");
    Graph h = read_graph_file(opt.pattern);
    if (h.edge_count() > opt.max_pattern_edges)
        throw InputError("pattern has " + std::to_string(h.edge_count()) + " edges, limit is " +
                         std::to_string(opt.max_pattern_edges) + " (see --max-pattern-edges)");
    auto d = load_decomposition(opt, g);
    auto t0 = Clock::now();
    auto r = hitm_solve(g, d, h, opt.witness, opt.max_pattern_edges);
    std::cout << "hitm " << (r.found ? "yes" : "no") << '\n';
    if (opt.witness && r.found) print_vertices(std::cout, "vertices", r.witness);
    if (opt.stats)
        std::cerr << "assignments " << r.assignments << "\nidp calls " << r.idp_calls << "\ntime " << seconds_since(t0) << "\n";
    return 0;
}

std::vector<Interval> read_intervals_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<Interval> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == 'c' || first[0] == '#') continue;
        std::istringstream all(line);
        Interval iv;
        std::string extra;
        if (!(all >> iv.left >> iv.right) || (all >> extra))
            throw ParseError("intervals line " + std::to_string(lineno) + ": expected two endpoints");
        if (!(iv.left < iv.right)) throw ParseError("intervals line " + std::to_string(lineno) + ": left must be below right");
        out.push_back(iv);
    }
    return out;
}

std::vector<int> parse_order(const std::string& text, int n) {
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<int> order;
    long long v = 0;
    while (in >> v) {
        if (v < 1 || v > n) throw InputError("order entry " + std::to_string(v) + " out of range");
        order.push_back(static_cast<int>(v - 1));
    }
    if (!in.eof()) throw InputError("order must list vertex ids");
    return order;
}

int cmd_decomp(const Options& opt) {
    Graph g;
    BranchDecomposition d;
    if (opt.strategy == "interval") {
        auto intervals = read_intervals_file(opt.graph);
        if (intervals.size() < 2) throw InputError("need at least two vertices for a decomposition");
        std::tie(g, d) = interval_caterpillar_decomposition(intervals);
    } else {
        g = read_graph_file(opt.graph);
        if (g.vertex_count() < 2) throw InputError("need at least two vertices for a decomposition");
        if (opt.strategy == "linear-order") {
            std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
            std::iota(order.begin(), order.end(), 0);
            if (!opt.order.empty()) order = parse_order(opt.order, g.vertex_count());
            d = linear_order_decomposition(g, order);
        } else {
            if (g.vertex_count() > opt.max_exhaustive)
                throw BudgetExceeded("exhaustive search limited to " + std::to_string(opt.max_exhaustive) + " vertices");
            d = optimal_decomposition_bruteforce(g, opt.max_exhaustive);
        }
    }
    if (!opt.graph_out.empty()) {
        std::ofstream out(opt.graph_out);
        if (!out) throw InputError("cannot write " + opt.graph_out);
        write_graph(out, g);
    }
    if (opt.output.empty()) {
        write_decomposition(std::cout, d);
    } else {
        std::ofstream out(opt.output);
        if (!out) throw InputError("cannot write " + opt.output);
        write_decomposition(out, d);
    }
    if (opt.stats) std::cerr << "width " << mim_width(g, d).width << "\n";
    return 0;
}

int cmd_check_decomp(const Options& opt) {
    Graph g = read_graph_file(opt.graph);
    if (opt.decomp.empty()) throw InputError("-d is required");
    auto d = read_decomposition_file(opt.decomp, g.vertex_count());
    d.validate_for(g);
    auto cert = mim_width(g, d);
    std::cout << "width " << cert.width << '\n';
    for (const auto& e : cert.per_edge) std::cout << "edge " << e.child << ' ' << e.parent << ' ' << e.mim << '\n';
    return 0;
}

int cmd_oracle(const std::string& which, const Options& opt) {
    Graph g = read_graph_file(opt.graph);
    if (which == "lip") {
        std::cout << "lip " << lip_bruteforce(g) << '\n';
    } else if (which == "idp") {
        if (opt.pairs.empty()) throw InputError("--pairs is required");
        auto pairs = read_pairs_file(opt.pairs, g.vertex_count());
        std::cout << "idp " << (idp_bruteforce(g, pairs) ? "yes" : "no") << '\n';
    } else {
        if (opt.pattern.empty()) throw InputError("--pattern is required");
        std::cout << "hitm " << (hitm_bruteforce(g, read_graph_file(opt.pattern)) ? "yes" : "no") << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longest induced path, induced disjoint paths and induced topological minors on branch decompositions"};
    app.require_subcommand(1);
    Options opt;

    auto add_graph = [&](CLI::App* sub) { sub->add_option("-g,--graph", opt.graph, "graph file")->required(); };
    auto add_decomp = [&](CLI::App* sub) {
        sub->add_option("-d,--decomp", opt.decomp, "decomposition file (default: identity caterpillar)");
    };
    auto add_stats = [&](CLI::App* sub) { sub->add_flag("--stats", opt.stats, "print table statistics to stderr"); };

    auto* lip = app.add_subcommand("lip", "longest induced path");
    add_graph(lip);
    add_decomp(lip);
    lip->add_flag("--witness", opt.witness, "print one longest induced path");
    add_stats(lip);

    auto* idp = app.add_subcommand("idp", "induced disjoint paths");
    add_graph(idp);
    add_decomp(idp);
    idp->add_option("--pairs", opt.pairs, "terminal pairs file")->required();
    idp->add_flag("--witness", opt.witness, "print one path per pair");
    add_stats(idp);

    auto* hitm = app.add_subcommand("hitm", "induced topological minor");
    add_graph(hitm);
    add_decomp(hitm);
    hitm->add_option("--pattern", opt.pattern, "pattern graph file")->required();
    hitm->add_option("--max-pattern-edges", opt.max_pattern_edges, "largest accepted pattern edge count")
        ->capture_default_str();
    hitm->add_flag("--witness", opt.witness, "print the vertices of an induced subdivision");
    add_stats(hitm);

    auto* decomp = app.add_subcommand("decomp", "build a branch decomposition");
    decomp->add_option("-g,--graph", opt.graph, "graph file, or intervals file for --strategy interval")->required();
    decomp->add_option("--strategy", opt.strategy, "interval | linear-order | exhaustive")
        ->check(CLI::IsMember({"interval", "linear-order", "exhaustive"}))
        ->capture_default_str();
    decomp->add_option("--order", opt.order, "vertex order for linear-order, 1-based, comma or space separated");
    decomp->add_option("--max-vertices", opt.max_exhaustive, "vertex limit for exhaustive")->capture_default_str();
    decomp->add_option("-o,--output", opt.output, "write the decomposition here instead of stdout");
    decomp->add_option("--write-graph", opt.graph_out, "also write the graph (useful for intervals)");
    add_stats(decomp);

    auto* check = app.add_subcommand("check-decomp", "validate a decomposition and report its mim-width");
    add_graph(check);
    check->add_option("-d,--decomp", opt.decomp, "decomposition file")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force reference solvers");
    oracle->require_subcommand(1);
    std::string oracle_which;
    for (const char* name : {"lip", "idp", "hitm"}) {
        auto* sub = oracle->add_subcommand(name, std::string("brute-force ") + name);
        add_graph(sub);
        if (std::string(name) == "idp") sub->add_option("--pairs", opt.pairs, "terminal pairs file")->required();
        if (std::string(name) == "hitm") sub->add_option("--pattern", opt.pattern, "pattern graph file")->required();
        sub->callback([&oracle_which, name] { oracle_which = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*lip) return cmd_lip(opt);
        if (*idp) return cmd_idp(opt);
        if (*hitm) return cmd_hitm(opt);
        if (*decomp) return cmd_decomp(opt);
        if (*check) return cmd_check_decomp(opt);
        return cmd_oracle(oracle_which, opt);
    } catch (const DecompositionError& e) {
        std::cerr << "decomposition error: " << e.what() << '\n';
        return kExitDecomposition;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    }
}
