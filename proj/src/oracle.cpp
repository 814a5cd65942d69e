#include "mimpaths/oracle.hpp"

#include <algorithm>
#include <string>

#include "mimpaths/subdivision.hpp"

namespace mimpaths {

namespace {

class Deadline {
public:
    explicit Deadline(const OracleBudget& b) : end_(std::chrono::steady_clock::now() + b.timeout) {}
    void tick() {
        if (++calls_ % 4096 == 0 && std::chrono::steady_clock::now() > end_) throw BudgetExceeded("oracle timeout");
    }

private:
    std::chrono::steady_clock::time_point end_;
    long long calls_ = 0;
};

void require_vertices(int n, const OracleBudget& b) {
    if (n > b.max_vertices)
        throw BudgetExceeded("graph has " + std::to_string(n) + " vertices, oracle limit is " + std::to_string(b.max_vertices));
}

// path is induced so far; extend from its last vertex
void extend_path(const Graph& g, std::vector<int>& path, std::vector<int>& blocked, int& best, Deadline& dl) {
    dl.tick();
    best = std::max(best, static_cast<int>(path.size()));
    int last = path.back();
    for (int u : g.neighbors(last)) {
        // u must be unused and adjacent to no path vertex other than `last`
        if (blocked[static_cast<std::size_t>(u)] != 1) continue;
        path.push_back(u);
        for (int w : g.neighbors(u)) ++blocked[static_cast<std::size_t>(w)];
        ++blocked[static_cast<std::size_t>(u)];
        extend_path(g, path, blocked, best, dl);
        --blocked[static_cast<std::size_t>(u)];
        for (int w : g.neighbors(u)) --blocked[static_cast<std::size_t>(w)];
        path.pop_back();
    }
}

}  // namespace

int lip_bruteforce(const Graph& g, const OracleBudget& budget) {
    const int n = g.vertex_count();
    require_vertices(n, budget);
    Deadline dl(budget);
    int best = n > 0 ? 1 : 0;
    // blocked[v] counts path vertices in N[v]
    std::vector<int> blocked(static_cast<std::size_t>(n), 0);
    std::vector<int> path;
    for (int s = 0; s < n; ++s) {
        path = {s};
        ++blocked[static_cast<std::size_t>(s)];
        for (int w : g.neighbors(s)) ++blocked[static_cast<std::size_t>(w)];
        extend_path(g, path, blocked, best, dl);
        --blocked[static_cast<std::size_t>(s)];
        for (int w : g.neighbors(s)) --blocked[static_cast<std::size_t>(w)];
    }
    return best;
}

namespace {

struct IdpSearch {
    const Graph& g;
    const std::vector<std::pair<int, int>>& pairs;
    Deadline& dl;
    std::vector<int> owner;  // path index using the vertex, -1 if free
    std::vector<int> path;

    bool terminal_of_other(int v, int i) const {
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (static_cast<int>(p) != i && (pairs[p].first == v || pairs[p].second == v)) return true;
        return false;
    }

    // v may join path i: free, not another pair's terminal, no neighbor in another path
    // or equal to another terminal, and no neighbor among path i except the current end.
    bool usable(int v, int i) const {
        if (owner[static_cast<std::size_t>(v)] >= 0 || terminal_of_other(v, i)) return false;
        for (int w : g.neighbors(v)) {
            int o = owner[static_cast<std::size_t>(w)];
            if (o >= 0 && o != i) return false;
            if (terminal_of_other(w, i)) return false;
            if (o == i && w != path.back()) return false;
        }
        return true;
    }

    bool route(int i) {
        if (i == static_cast<int>(pairs.size())) return true;
        auto [x, y] = pairs[static_cast<std::size_t>(i)];
        path = {};
        if (!usable_start(x, i)) return false;
        owner[static_cast<std::size_t>(x)] = i;
        path.push_back(x);
        bool ok = walk(i, y);
        owner[static_cast<std::size_t>(x)] = -1;
        path.clear();
        return ok;
    }

    bool usable_start(int x, int i) const {
        for (int w : g.neighbors(x)) {
            int o = owner[static_cast<std::size_t>(w)];
            if (o >= 0 && o != i) return false;
            if (terminal_of_other(w, i)) return false;
        }
        return true;
    }

    bool walk(int i, int y) {
        dl.tick();
        int last = path.back();
        for (int u : g.neighbors(last)) {
            if (!usable(u, i)) continue;
            owner[static_cast<std::size_t>(u)] = i;
            path.push_back(u);
            bool ok;
            if (u == y) {
                auto saved = path;
                ok = route(i + 1);
                path = saved;
            } else {
                ok = walk(i, y);
            }
            path.pop_back();
            owner[static_cast<std::size_t>(u)] = -1;
            if (ok) return true;
        }
        return false;
    }
};

}  // namespace

bool idp_bruteforce(const Graph& g, const std::vector<std::pair<int, int>>& pairs, const OracleBudget& budget) {
    const int n = g.vertex_count();
    require_vertices(n, budget);
    if (static_cast<int>(pairs.size()) > budget.max_pairs) throw BudgetExceeded("too many terminal pairs");
    std::vector<int> seen;
    for (auto [x, y] : pairs) {
        if (x < 0 || y < 0 || x >= n || y >= n) throw std::invalid_argument("terminal out of range");
        seen.push_back(x);
        seen.push_back(y);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw std::invalid_argument("terminals must be distinct");
    Deadline dl(budget);
    IdpSearch s{g, pairs, dl, std::vector<int>(static_cast<std::size_t>(n), -1), {}};
    return s.route(0);
}

bool hitm_bruteforce(const Graph& g, const Graph& h, const OracleBudget& budget) {
    const int n = g.vertex_count();
    require_vertices(n, budget);
    if (n > 24) throw BudgetExceeded("subset enumeration limited to 24 vertices");
    Deadline dl(budget);
    const int hn = h.vertex_count();
    const int excess = h.edge_count() - hn;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        dl.tick();
        int size = std::popcount(mask);
        if (size < hn) continue;
        VertexSet x(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1U) x.insert(v);
        int edges = 0;
        x.for_each([&](int v) { edges += static_cast<int>((g.neighbor_set(v) & x).size()); });
        if (edges / 2 - size != excess) continue;
        if (is_induced_subdivision(g, x, h)) return true;
    }
    return false;
}

std::vector<MinimalVertexCover> mvc_bruteforce(const BipartiteGraph& h, const OracleBudget& budget) {
    auto verts = h.vertices().to_vector();
    const int n = static_cast<int>(verts.size());
    require_vertices(n, budget);
    if (n > 24) throw BudgetExceeded("subset enumeration limited to 24 vertices");
    auto covers = [&](const VertexSet& m) {
        for (const auto& e : h.edges())
            if (!m.contains(e.u) && !m.contains(e.v)) return false;
        return true;
    };
    std::vector<MinimalVertexCover> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet m;
        for (int b = 0; b < n; ++b)
            if (mask >> b & 1U) m.insert(verts[static_cast<std::size_t>(b)]);
        if (!covers(m)) continue;
        bool minimal = true;
        m.for_each([&](int v) {
            if (!minimal) return;
            VertexSet smaller = m;
            smaller.erase(v);
            if (covers(smaller)) minimal = false;
        });
        if (!minimal) continue;
        MinimalVertexCover c;
        c.cover = m;
        c.m_in = m & h.side_a();
        c.m_out = m & h.side_b();
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mimpaths
