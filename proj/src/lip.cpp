#include "mimpaths/lip.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fragment_dp.hpp"

namespace mimpaths {

IndexStatus lip_validate_index(const std::vector<Edge>& s, const std::vector<std::pair<int, int>>& q, int i, int j,
                               const VertexSet& inside) {
    if (j < 0 || j > 2) return IndexStatus::reject;
    if (s.empty()) {
        if (!q.empty()) return IndexStatus::reject;
        if (j == 0) return i == 0 ? IndexStatus::special_case_3 : IndexStatus::reject;
        if (j == 2) return IndexStatus::special_case_1;
        return IndexStatus::reject;
    }
    std::vector<Edge> contracted = s;
    for (auto [a, b] : q) contracted.emplace_back(a, b);
    if (!is_path_forest(contracted)) return IndexStatus::reject;

    std::map<int, int> degree;
    for (const auto& e : contracted) {
        ++degree[e.u];
        ++degree[e.v];
    }
    std::vector<int> ends;
    for (auto [v, deg] : degree)
        if (deg == 1 && inside.contains(v)) ends.push_back(v);
    if (j == 2 && ends.empty()) return IndexStatus::reject;
    if (static_cast<int>(ends.size()) != j) return IndexStatus::reject;
    if (j == 2) {
        std::map<int, int> parent;
        auto find = [&](int x) {
            if (!parent.count(x)) parent[x] = x;
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& e : contracted) parent[find(e.u)] = find(e.v);
        if (find(ends[0]) == find(ends[1])) {
            int roots = 0;
            for (auto [v, deg] : degree) {
                (void)deg;
                if (find(v) == v) ++roots;
            }
            return roots == 1 ? IndexStatus::special_case_2 : IndexStatus::reject;
        }
    }
    return IndexStatus::valid;
}

LipTable lip_leaf_table(const Graph& g, const BranchDecomposition& d, int t) {
    if (!d.is_leaf(t)) throw std::invalid_argument("node is not a leaf");
    return detail::FragmentDp(g, d).leaf(t);
}

LipTable lip_join(const Graph& g, const BranchDecomposition& d, int t, const LipTable& a, const LipTable& b) {
    const auto& nd = d.node(t);
    bool children = (nd.left == a.node() && nd.right == b.node()) || (nd.left == b.node() && nd.right == a.node());
    if (!children) throw std::invalid_argument("tables do not belong to the children of the node");
    return detail::FragmentDp(g, d).join(t, a, b);
}

namespace {

std::vector<int> order_path(const Graph& g, const VertexSet& vertices) {
    auto verts = vertices.to_vector();
    if (verts.empty()) return {};
    int start = verts.front();
    for (int v : verts)
        if ((g.neighbor_set(v) & vertices).size() <= 1) {
            start = v;
            break;
        }
    std::vector<int> path{start};
    VertexSet seen;
    seen.insert(start);
    while (true) {
        int next = -1;
        for (int u : g.neighbors(path.back()))
            if (vertices.contains(u) && !seen.contains(u) && (next < 0 || u < next)) next = u;
        if (next < 0) break;
        path.push_back(next);
        seen.insert(next);
    }
    return path;
}

}  // namespace

LipResult lip_solve(const Graph& g, const BranchDecomposition& d, bool witness) {
    LipResult result;
    const int n = g.vertex_count();
    d.validate_for(g);
    if (n <= 1) {
        result.length = n;
        if (witness && n == 1) result.path = {0};
        return result;
    }
    detail::FragmentDp dp(g, d);
    auto tables = dp.run(witness, &result.entries_per_node);
    for (int t = 0; t < d.node_count(); ++t)
        if (t != d.root()) result.width = std::max(result.width, dp.width_at(t));

    FragmentKey done;
    done.j = 2;
    const auto& root = tables[static_cast<std::size_t>(d.root())];
    int entry = root.index_of(done);
    int best = 1;
    if (entry >= 0) best = std::max(best, root.entries()[static_cast<std::size_t>(entry)].sizes.rbegin()->first);
    result.length = best;
    if (witness) {
        if (entry >= 0 && best >= 2) {
            auto used = detail::collect_solution(tables, d, d.root(), entry, best);
            result.path = order_path(g, used);
        } else {
            result.path = {0};
        }
        if (static_cast<int>(result.path.size()) != best || !is_induced_path(g, result.path))
            throw std::logic_error("reconstructed path failed verification");
    }
    return result;
}

}  // namespace mimpaths
