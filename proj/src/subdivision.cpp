#include "mimpaths/subdivision.hpp"

#include <algorithm>
#include <set>

namespace mimpaths {

namespace {

struct Matcher {
    const Graph& g;
    const Graph& h;
    std::vector<int> image;     // h vertex -> g vertex
    std::vector<int> preimage;  // g vertex -> h vertex or -1

    // Follows the g-edge (from, next) through degree-two vertices to the next branch vertex.
    // Returns the h vertex reached.
    int trace(int from, int next, std::vector<char>& visited) const {
        int prev = from;
        int cur = next;
        while (preimage[static_cast<std::size_t>(cur)] < 0) {
            visited[static_cast<std::size_t>(cur)] = 1;
            const auto& nb = g.neighbors(cur);
            int step = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = step;
        }
        return preimage[static_cast<std::size_t>(cur)];
    }

    bool check() const {
        const int n = g.vertex_count();
        std::vector<char> visited(static_cast<std::size_t>(n), 0);
        std::multiset<std::pair<int, int>> found;
        for (int x = 0; x < h.vertex_count(); ++x) {
            int v = image[static_cast<std::size_t>(x)];
            for (int u : g.neighbors(v)) {
                int y = trace(v, u, visited);
                if (y == x) return false;
                if (x < y) found.insert({x, y});
            }
        }
        for (int v = 0; v < n; ++v)
            if (preimage[static_cast<std::size_t>(v)] < 0 && !visited[static_cast<std::size_t>(v)]) return false;
        std::multiset<std::pair<int, int>> wanted;
        for (const auto& e : h.edges()) wanted.insert({e.u, e.v});
        // every edge of h traced twice (once from each end) only counted from the smaller end
        return found == wanted;
    }

    bool assign(int x) {
        if (x == h.vertex_count()) return check();
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (preimage[static_cast<std::size_t>(v)] >= 0 || g.degree(v) != h.degree(x)) continue;
            image[static_cast<std::size_t>(x)] = v;
            preimage[static_cast<std::size_t>(v)] = x;
            if (assign(x + 1)) return true;
            preimage[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

}  // namespace

bool is_subdivision_of(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    if (n < h.vertex_count()) return false;
    if (g.edge_count() - n != h.edge_count() - h.vertex_count()) return false;
    int branch_only = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) ++branch_only;
    int h_non_two = 0;
    for (int x = 0; x < h.vertex_count(); ++x)
        if (h.degree(x) != 2) ++h_non_two;
    if (branch_only != h_non_two) return false;
    Matcher m{g, h, std::vector<int>(static_cast<std::size_t>(h.vertex_count()), -1),
              std::vector<int>(static_cast<std::size_t>(n), -1)};
    return m.assign(0);
}

bool is_induced_subdivision(const Graph& g, const VertexSet& x, const Graph& h) {
    return is_subdivision_of(g.induced_subgraph(x), h);
}

}  // namespace mimpaths
