#include "mimpaths/idp.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "fragment_dp.hpp"

namespace mimpaths {

void validate_terminals(const TerminalPairs& terms, int vertex_count) {
    std::vector<int> all;
    for (auto [x, y] : terms) {
        if (x < 0 || y < 0 || x >= vertex_count || y >= vertex_count) throw std::invalid_argument("terminal out of range");
        if (x == y) throw std::invalid_argument("terminal pair with equal ends");
        all.push_back(x);
        all.push_back(y);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw std::invalid_argument("terminal used twice");
}

TerminalPairs read_pairs(std::istream& in, int vertex_count) {
    TerminalPairs out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == 'c' || first[0] == '#') continue;
        std::istringstream all(line);
        long long x = 0, y = 0;
        std::string extra;
        if (!(all >> x >> y) || (all >> extra))
            throw ParseError("pairs line " + std::to_string(lineno) + ": expected two vertex ids");
        if (x < 1 || y < 1 || x > vertex_count || y > vertex_count)
            throw ParseError("pairs line " + std::to_string(lineno) + ": vertex out of range");
        out.emplace_back(static_cast<int>(x - 1), static_cast<int>(y - 1));
    }
    try {
        validate_terminals(out, vertex_count);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("pairs: ") + e.what());
    }
    return out;
}

TerminalPairs read_pairs_file(const std::string& path, int vertex_count) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_pairs(in, vertex_count);
}

namespace {

detail::TerminalMap make_terminal_map(const TerminalPairs& terms, int n) {
    detail::TerminalMap m;
    m.pair_of.assign(static_cast<std::size_t>(n), 0);
    m.partner.assign(static_cast<std::size_t>(n), -1);
    int i = 0;
    for (auto [x, y] : terms) {
        ++i;
        m.pair_of[static_cast<std::size_t>(x)] = i;
        m.pair_of[static_cast<std::size_t>(y)] = i;
        m.partner[static_cast<std::size_t>(x)] = y;
        m.partner[static_cast<std::size_t>(y)] = x;
        m.pairs.emplace_back(x, y);
    }
    m.pair_count = i;
    return m;
}

std::vector<int> trace_path(const Graph& g, const VertexSet& used, int from, int to) {
    std::vector<int> path{from};
    int prev = -1;
    while (path.back() != to) {
        int next = -1;
        for (int u : g.neighbors(path.back()))
            if (u != prev && used.contains(u)) {
                next = u;
                break;
            }
        if (next < 0 || static_cast<int>(path.size()) > g.vertex_count()) throw std::logic_error("reconstructed paths are broken");
        prev = path.back();
        path.push_back(next);
    }
    return path;
}

}  // namespace

IdpTable idp_leaf_table(const Graph& g, const BranchDecomposition& d, int t, const TerminalPairs& terms) {
    if (!d.is_leaf(t)) throw std::invalid_argument("node is not a leaf");
    validate_terminals(terms, g.vertex_count());
    auto map = make_terminal_map(terms, g.vertex_count());
    return detail::FragmentDp(g, d, &map).leaf(t);
}

IdpTable idp_join(const Graph& g, const BranchDecomposition& d, int t, const IdpTable& a, const IdpTable& b,
                  const TerminalPairs& terms) {
    const auto& nd = d.node(t);
    bool children = (nd.left == a.node() && nd.right == b.node()) || (nd.left == b.node() && nd.right == a.node());
    if (!children) throw std::invalid_argument("tables do not belong to the children of the node");
    validate_terminals(terms, g.vertex_count());
    auto map = make_terminal_map(terms, g.vertex_count());
    return detail::FragmentDp(g, d, &map).join(t, a, b);
}

bool verify_idp_witness(const Graph& g, const TerminalPairs& terms, const std::vector<std::vector<int>>& paths) {
    if (paths.size() != terms.size()) return false;
    std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto& p = paths[i];
        if (p.size() < 2 || p.front() != terms[i].first || p.back() != terms[i].second) return false;
        if (!is_induced_path(g, p)) return false;
        for (int v : p) {
            if (owner[static_cast<std::size_t>(v)] >= 0) return false;
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    for (const auto& e : g.edges()) {
        int a = owner[static_cast<std::size_t>(e.u)];
        int b = owner[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0 && a != b) return false;
    }
    return true;
}

IdpResult idp_solve(const Graph& g, const BranchDecomposition& d, const TerminalPairs& terms, bool witness) {
    const int n = g.vertex_count();
    validate_terminals(terms, n);
    d.validate_for(g);
    IdpResult result;
    if (terms.empty()) {
        result.solvable = true;
        return result;
    }
    auto map = make_terminal_map(terms, n);
    detail::FragmentDp dp(g, d, &map);
    auto tables = dp.run(witness, &result.entries_per_node);
    for (int t = 0; t < d.node_count(); ++t)
        if (t != d.root()) result.width = std::max(result.width, dp.width_at(t));

    FragmentKey done;
    for (auto [x, y] : terms) done.q.emplace_back(std::min(x, y), std::max(x, y));
    std::sort(done.q.begin(), done.q.end());
    const auto& root = tables[static_cast<std::size_t>(d.root())];
    int entry = root.index_of(done);
    result.solvable = entry >= 0;
    if (witness && result.solvable) {
        auto used = detail::collect_solution(tables, d, d.root(), entry, 0);
        for (auto [x, y] : terms) result.paths.push_back(trace_path(g, used, x, y));
        std::size_t total = 0;
        for (const auto& p : result.paths) total += p.size();
        if (total != used.size() || !verify_idp_witness(g, terms, result.paths))
            throw std::logic_error("reconstructed paths failed verification");
    }
    return result;
}

}  // namespace mimpaths
