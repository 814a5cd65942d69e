#include "mimpaths/minimal_vertex_covers.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mimpaths {

namespace {

MinimalVertexCover split_cover(const BipartiteGraph& h, VertexSet cover) {
    MinimalVertexCover m;
    m.m_in = cover & h.side_a();
    m.m_out = cover & h.side_b();
    m.cover = std::move(cover);
    return m;
}

}  // namespace

std::vector<MinimalVertexCover> enumerate_minimal_vertex_covers(const BipartiteGraph& h, int w) {
    if (w < 0) throw std::invalid_argument("negative width");
    if (h.empty_edges()) return {split_cover(h, VertexSet{})};

    std::vector<int> a_active;
    h.side_a().for_each([&](int v) {
        if (!h.neighbors(v).empty()) a_active.push_back(v);
    });
    std::vector<VertexSet> a_neighbors;
    for (int v : a_active) {
        VertexSet nb;
        for (int u : h.neighbors(v)) nb.insert(u);
        a_neighbors.push_back(std::move(nb));
    }

    std::vector<VertexSet> found;
    std::vector<int> chosen;
    auto emit = [&](const VertexSet& n_r) {
        VertexSet cover = n_r;
        for (std::size_t i = 0; i < a_active.size(); ++i)
            if (!a_neighbors[i].is_subset_of(n_r)) cover.insert(a_active[i]);
        found.push_back(std::move(cover));
    };
    // Depth-first over subsets R of the active A-vertices in increasing index order.
    auto recurse = [&](auto&& self, std::size_t start, const VertexSet& n_r) -> void {
        emit(n_r);
        if (static_cast<int>(chosen.size()) == w) return;
        for (std::size_t i = start; i < a_active.size(); ++i) {
            chosen.push_back(a_active[i]);
            self(self, i + 1, n_r | a_neighbors[i]);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0, VertexSet{});

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<MinimalVertexCover> out;
    out.reserve(found.size());
    for (auto& c : found) {
        assert(is_minimal_vertex_cover(h, c));
        out.push_back(split_cover(h, std::move(c)));
    }
    return out;
}

bool is_minimal_vertex_cover(const BipartiteGraph& h, const VertexSet& m) {
    if (!m.is_subset_of(h.vertices())) return false;
    for (const auto& e : h.edges())
        if (!m.contains(e.u) && !m.contains(e.v)) return false;
    bool minimal = true;
    m.for_each([&](int v) {
        if (!minimal) return;
        bool needed = false;
        for (int u : h.neighbors(v))
            if (!m.contains(u)) needed = true;
        if (!needed) minimal = false;
    });
    return minimal;
}

}  // namespace mimpaths
