#include "mimpaths/hitm.hpp"

#include <stdexcept>
#include <string>

#include "mimpaths/subdivision.hpp"

namespace mimpaths {

namespace {

struct Enumerator {
    const Graph& g;
    const Graph& h;
    const std::function<bool(const BranchAssignment&)>& visit;
    BranchAssignment asg;
    std::vector<char> used;
    std::vector<std::pair<int, int>> arcs;  // (edge index, side)
    bool prune = false;
    bool stop = false;

    // Rejections of hitm_preprocess that are already decided by the choices so far.
    bool branch_fits(int x, int v) const {
        for (int z = 0; z < x; ++z)
            if (g.adjacent(v, asg.branch[static_cast<std::size_t>(z)]) && !h.adjacent(x, z)) return false;
        return true;
    }

    bool neighbor_fits(int arc, int u) const {
        auto [e, side] = arcs[static_cast<std::size_t>(arc)];
        const Edge& edge = h.edges()[static_cast<std::size_t>(e)];
        int x = side == 0 ? edge.u : edge.v;
        int y = edge.other(x);
        int vy = asg.branch[static_cast<std::size_t>(y)];
        if (g.adjacent(asg.branch[static_cast<std::size_t>(x)], vy)) return u == vy;
        if (used[static_cast<std::size_t>(u)]) return false;
        for (int z = 0; z < h.vertex_count(); ++z)
            if (z != x && z != y && g.adjacent(u, asg.branch[static_cast<std::size_t>(z)])) return false;
        for (int prev = 0; prev < arc; ++prev) {
            auto [pe, ps] = arcs[static_cast<std::size_t>(prev)];
            int w = asg.neighbor[static_cast<std::size_t>(pe)][static_cast<std::size_t>(ps)];
            if (used[static_cast<std::size_t>(w)] || pe == e) continue;
            if (w == u || g.adjacent(w, u)) return false;
        }
        return true;
    }

    int arc_owner(int arc) const {
        auto [e, side] = arcs[static_cast<std::size_t>(arc)];
        const Edge& edge = h.edges()[static_cast<std::size_t>(e)];
        return side == 0 ? edge.u : edge.v;
    }

    void neighbors_from(int arc) {
        if (stop) return;
        if (arc == static_cast<int>(arcs.size())) {
            if (!visit(asg)) stop = true;
            return;
        }
        auto [e, side] = arcs[static_cast<std::size_t>(arc)];
        int x = arc_owner(arc);
        int vx = asg.branch[static_cast<std::size_t>(x)];
        for (int u : g.neighbors(vx)) {
            bool clash = false;
            for (int prev = 0; prev < arc && !clash; ++prev) {
                auto [pe, ps] = arcs[static_cast<std::size_t>(prev)];
                if (arc_owner(prev) == x && asg.neighbor[static_cast<std::size_t>(pe)][static_cast<std::size_t>(ps)] == u)
                    clash = true;
            }
            if (clash || (prune && !neighbor_fits(arc, u))) continue;
            asg.neighbor[static_cast<std::size_t>(e)][static_cast<std::size_t>(side)] = u;
            neighbors_from(arc + 1);
            if (stop) return;
        }
    }

    void branch_from(int x) {
        if (stop) return;
        if (x == h.vertex_count()) {
            neighbors_from(0);
            return;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (used[static_cast<std::size_t>(v)] || g.degree(v) < h.degree(x)) continue;
            if (prune && !branch_fits(x, v)) continue;
            used[static_cast<std::size_t>(v)] = 1;
            asg.branch[static_cast<std::size_t>(x)] = v;
            branch_from(x + 1);
            used[static_cast<std::size_t>(v)] = 0;
            if (stop) return;
        }
    }
};

}  // namespace

namespace {

void enumerate(const Graph& g, const Graph& h, bool prune, const std::function<bool(const BranchAssignment&)>& visit) {
    Enumerator en{g, h, visit, {}, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0), {}};
    en.prune = prune;
    en.asg.branch.assign(static_cast<std::size_t>(h.vertex_count()), -1);
    en.asg.neighbor.assign(h.edges().size(), {-1, -1});
    // arcs grouped by owner so that distinctness is checked against earlier choices only
    for (int x = 0; x < h.vertex_count(); ++x)
        for (std::size_t e = 0; e < h.edges().size(); ++e) {
            const Edge& edge = h.edges()[e];
            if (edge.u == x) en.arcs.emplace_back(static_cast<int>(e), 0);
            if (edge.v == x) en.arcs.emplace_back(static_cast<int>(e), 1);
        }
    en.branch_from(0);
}

}  // namespace

void hitm_enumerate_assignments(const Graph& g, const Graph& h, const std::function<bool(const BranchAssignment&)>& visit) {
    enumerate(g, h, false, visit);
}

std::optional<ReducedInstance> hitm_preprocess(const Graph& g, const Graph& h, const BranchAssignment& asg) {
    const int n = g.vertex_count();
    const auto& hedges = h.edges();
    VertexSet x_set(static_cast<std::size_t>(n));
    for (int v : asg.branch) x_set.insert(v);

    // Adjacent branch vertices must realize a pattern edge directly.
    std::vector<char> direct(hedges.size(), 0);
    for (int a = 0; a < h.vertex_count(); ++a)
        for (int b = a + 1; b < h.vertex_count(); ++b) {
            int va = asg.branch[static_cast<std::size_t>(a)];
            int vb = asg.branch[static_cast<std::size_t>(b)];
            if (!g.adjacent(va, vb)) continue;
            if (!h.adjacent(a, b)) return std::nullopt;
        }
    for (std::size_t e = 0; e < hedges.size(); ++e) {
        int vx = asg.branch[static_cast<std::size_t>(hedges[e].u)];
        int vy = asg.branch[static_cast<std::size_t>(hedges[e].v)];
        if (!g.adjacent(vx, vy)) continue;
        if (asg.neighbor[e][0] != vy || asg.neighbor[e][1] != vx) return std::nullopt;
        direct[e] = 1;
    }

    // Every vertex of Y \ X serves one arc, or both arcs of one edge.
    std::vector<int> arc_count(static_cast<std::size_t>(n), 0);
    VertexSet y_set(static_cast<std::size_t>(n));
    std::vector<char> twin(hedges.size(), 0);
    for (std::size_t e = 0; e < hedges.size(); ++e) {
        if (direct[e]) continue;
        for (int side = 0; side < 2; ++side) {
            int w = asg.neighbor[e][static_cast<std::size_t>(side)];
            if (x_set.contains(w)) return std::nullopt;
            ++arc_count[static_cast<std::size_t>(w)];
            y_set.insert(w);
        }
        if (asg.neighbor[e][0] == asg.neighbor[e][1]) twin[e] = 1;
    }
    for (std::size_t e = 0; e < hedges.size(); ++e) {
        if (direct[e]) continue;
        for (int side = 0; side < 2; ++side) {
            int w = asg.neighbor[e][static_cast<std::size_t>(side)];
            if (arc_count[static_cast<std::size_t>(w)] != (twin[e] ? 2 : 1)) return std::nullopt;
        }
    }

    // G[X ∪ Y] may only contain the edges the subdivision uses there.
    auto allowed = [&](int a, int b) {
        for (std::size_t e = 0; e < hedges.size(); ++e) {
            int vx = asg.branch[static_cast<std::size_t>(hedges[e].u)];
            int vy = asg.branch[static_cast<std::size_t>(hedges[e].v)];
            int nx = asg.neighbor[e][0];
            int ny = asg.neighbor[e][1];
            Edge ab(a, b);
            if (ab == Edge(vx, nx) || ab == Edge(vy, ny)) return true;
            if (!direct[e] && !twin[e] && ab == Edge(nx, ny)) return true;
        }
        return false;
    };
    VertexSet xy = x_set | y_set;
    bool clean = true;
    xy.for_each([&](int a) {
        (g.neighbor_set(a) & xy).for_each([&](int b) {
            if (clean && a < b && !allowed(a, b)) clean = false;
        });
    });
    if (!clean) return std::nullopt;

    ReducedInstance out;
    out.fixed = x_set;
    VertexSet removed = x_set;
    x_set.for_each([&](int v) { removed |= g.neighbor_set(v) - y_set; });
    for (std::size_t e = 0; e < hedges.size(); ++e) {
        if (direct[e]) continue;
        int a = asg.neighbor[e][0];
        int b = asg.neighbor[e][1];
        if (twin[e]) {
            out.fixed.insert(a);
            removed.insert(a);
            removed |= g.neighbor_set(a) - x_set;
        } else {
            out.pairs.emplace_back(a, b);
        }
    }
    out.keep = g.all_vertices() - removed;
    for (auto [a, b] : out.pairs)
        if (!out.keep.contains(a) || !out.keep.contains(b)) return std::nullopt;
    return out;
}

HitmResult hitm_solve(const Graph& g, const BranchDecomposition& d, const Graph& h, bool witness, int max_pattern_edges) {
    if (h.edge_count() > max_pattern_edges)
        throw std::invalid_argument("pattern has " + std::to_string(h.edge_count()) + " edges, limit is " +
                                    std::to_string(max_pattern_edges));
    d.validate_for(g);
    HitmResult result;
    enumerate(g, h, true, [&](const BranchAssignment& asg) {
        ++result.assignments;
        auto reduced = hitm_preprocess(g, h, asg);
        if (!reduced) return true;
        VertexSet solution = reduced->fixed;
        if (!reduced->pairs.empty()) {
            std::vector<int> mapping;
            Graph sub = g.induced_subgraph(reduced->keep, &mapping);
            std::vector<int> to_sub(static_cast<std::size_t>(g.vertex_count()), -1);
            for (std::size_t i = 0; i < mapping.size(); ++i) to_sub[static_cast<std::size_t>(mapping[i])] = static_cast<int>(i);
            TerminalPairs pairs;
            for (auto [a, b] : reduced->pairs)
                pairs.emplace_back(to_sub[static_cast<std::size_t>(a)], to_sub[static_cast<std::size_t>(b)]);
            ++result.idp_calls;
            auto sol = idp_solve(sub, d.restricted_to(reduced->keep), pairs, witness);
            if (!sol.solvable) return true;
            for (const auto& p : sol.paths)
                for (int v : p) solution.insert(mapping[static_cast<std::size_t>(v)]);
        }
        result.found = true;
        if (witness) {
            if (!is_induced_subdivision(g, solution, h)) throw std::logic_error("assembled witness is not an induced subdivision");
            result.witness = solution.to_vector();
        }
        return false;
    });
    if (h.vertex_count() == 0) result.found = true;
    return result;
}

}  // namespace mimpaths
