#include "mimpaths/fragments.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mimpaths {

PathFragment::PathFragment(std::vector<Edge> edge_list) : edges(std::move(edge_list)) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& e : edges) {
        vertices.insert(e.u);
        vertices.insert(e.v);
    }
}

int PathFragment::degree(int v) const {
    int d = 0;
    for (const auto& e : edges)
        if (e.touches(v)) ++d;
    return d;
}

int fragment_size_cap(int w) { return 4 * w + 3; }

namespace {

struct InducedPath {
    VertexSet vertices;
    VertexSet closed_neighborhood;
    std::vector<Edge> edges;
};

}  // namespace

std::vector<PathFragment> enumerate_fragments(const BipartiteGraph& h, int w) {
    const int cap = fragment_size_cap(w);
    std::vector<InducedPath> paths;
    std::vector<int> current;
    VertexSet used;
    auto extend = [&](auto&& self) -> void {
        if (current.size() >= 2 && current.front() < current.back()) {
            InducedPath p;
            for (std::size_t i = 0; i < current.size(); ++i) {
                p.vertices.insert(current[i]);
                p.closed_neighborhood.insert(current[i]);
                for (int u : h.neighbors(current[i])) p.closed_neighborhood.insert(u);
                if (i > 0) p.edges.emplace_back(current[i - 1], current[i]);
            }
            paths.push_back(std::move(p));
        }
        if (static_cast<int>(current.size()) >= cap) return;
        int last = current.back();
        for (int next : h.neighbors(last)) {
            if (used.contains(next)) continue;
            bool chord = false;
            for (std::size_t i = 0; i + 1 < current.size() && !chord; ++i) chord = h.has_edge(current[i], next);
            if (chord) continue;
            current.push_back(next);
            used.insert(next);
            self(self);
            used.erase(next);
            current.pop_back();
        }
    };
    h.vertices().for_each([&](int v) {
        current = {v};
        used = VertexSet{};
        used.insert(v);
        extend(extend);
    });

    std::vector<PathFragment> out{PathFragment{}};
    std::vector<std::size_t> chosen;
    auto combine = [&](auto&& self, std::size_t start, const VertexSet& blocked, int size) -> void {
        for (std::size_t i = start; i < paths.size(); ++i) {
            const auto& p = paths[i];
            int next_size = size + static_cast<int>(p.vertices.size());
            if (next_size > cap || p.closed_neighborhood.intersects(blocked)) continue;
            chosen.push_back(i);
            std::vector<Edge> edges;
            for (auto c : chosen) edges.insert(edges.end(), paths[c].edges.begin(), paths[c].edges.end());
            out.emplace_back(std::move(edges));
            self(self, i + 1, blocked | p.vertices, next_size);
            chosen.pop_back();
        }
    };
    combine(combine, 0, VertexSet{}, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> fragment_components(const std::vector<Edge>& edges) {
    std::map<int, int> parent;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges) {
        parent.emplace(e.u, e.u);
        parent.emplace(e.v, e.v);
    }
    for (const auto& e : edges) {
        int a = find(e.u);
        int b = find(e.v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, std::vector<int>> groups;
    for (auto& [v, p] : parent) {
        (void)p;
        groups[find(v)].push_back(v);
    }
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) {
        (void)root;
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet degree_one_vertices(const PathFragment& s, const VertexSet& side) {
    std::map<int, int> degree;
    for (const auto& e : s.edges) {
        ++degree[e.u];
        ++degree[e.v];
    }
    VertexSet out;
    for (auto [v, d] : degree)
        if (d == 1 && side.contains(v)) out.insert(v);
    return out;
}

Graph contract_fragment(const PathFragment& s, const Pairing& q, int vertex_count) {
    Graph g(vertex_count);
    for (const auto& e : s.edges) g.add_edge(e.u, e.v);
    VertexSet seen;
    for (auto [a, b] : q.pairs) {
        for (int x : {a, b}) {
            if (seen.contains(x)) throw std::invalid_argument("vertex paired twice");
            seen.insert(x);
            if (s.vertices.contains(x) && s.degree(x) != 1) throw std::invalid_argument("paired vertex is not a fragment endpoint");
        }
        g.add_edge(a, b);
    }
    return g;
}

namespace {

void pair_up(std::vector<int>& rest, int unpaired_left, const std::function<bool(int, int)>& allowed, Pairing& current,
             std::vector<Pairing>& out) {
    if (rest.empty()) {
        if (unpaired_left == 0) {
            Pairing p = current;
            std::sort(p.pairs.begin(), p.pairs.end());
            out.push_back(std::move(p));
        }
        return;
    }
    if (static_cast<int>(rest.size()) < unpaired_left) return;
    int first = rest.front();
    std::vector<int> tail(rest.begin() + 1, rest.end());
    if (unpaired_left > 0) {
        current.unpaired.insert(first);
        pair_up(tail, unpaired_left - 1, allowed, current, out);
        current.unpaired.erase(first);
    }
    for (std::size_t i = 0; i < tail.size(); ++i) {
        int partner = tail[i];
        if (!allowed(first, partner)) continue;
        std::vector<int> remaining;
        for (std::size_t k = 0; k < tail.size(); ++k)
            if (k != i) remaining.push_back(tail[k]);
        current.pairs.emplace_back(first, partner);
        pair_up(remaining, unpaired_left, allowed, current, out);
        current.pairs.pop_back();
    }
}

}  // namespace

std::vector<Pairing> enumerate_pairings(const VertexSet& ground, int unpaired_budget) {
    std::vector<Pairing> out;
    auto members = ground.to_vector();
    if (unpaired_budget < 0 || unpaired_budget > static_cast<int>(members.size()) ||
        (members.size() - static_cast<std::size_t>(unpaired_budget)) % 2 != 0)
        return out;
    Pairing current;
    pair_up(members, unpaired_budget, [](int, int) { return true; }, current, out);
    return out;
}

std::vector<Pairing> enumerate_pairings(const VertexSet& ground, const std::function<bool(int, int)>& allowed) {
    std::vector<Pairing> out;
    auto members = ground.to_vector();
    if (members.size() % 2 != 0) return out;
    Pairing current;
    pair_up(members, 0, allowed, current, out);
    return out;
}

std::vector<ComponentLabeling> enumerate_labelings(const PathFragment& s, int k) {
    if (k < 1) throw std::invalid_argument("labelings need k >= 1");
    const std::size_t comps = fragment_components(s.edges).size();
    std::vector<ComponentLabeling> out;
    ComponentLabeling current(comps, 1);
    while (true) {
        out.push_back(current);
        std::size_t pos = 0;
        while (pos < comps && current[pos] == k) current[pos++] = 1;
        if (pos == comps) break;
        ++current[pos];
    }
    return out;
}

}  // namespace mimpaths
