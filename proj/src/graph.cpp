#include "mimpaths/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace mimpaths {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
    adjacency_sets_.assign(static_cast<std::size_t>(vertex_count), VertexSet(static_cast<std::size_t>(vertex_count)));
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) : Graph(vertex_count) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (adjacent(u, v)) throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    adjacency_sets_[static_cast<std::size_t>(u)].insert(v);
    adjacency_sets_[static_cast<std::size_t>(v)].insert(u);
    edges_.push_back(Edge{u, v});
    edge_list_.emplace_back(u, v);
}

VertexSet Graph::neighbors_in(const VertexSet& x, const VertexSet& within) const {
    VertexSet out(static_cast<std::size_t>(vertex_count()));
    x.for_each([&](int v) { out |= adjacency_sets_[static_cast<std::size_t>(v)]; });
    return out & within;
}

Graph Graph::induced_subgraph(const VertexSet& keep, std::vector<int>* mapping) const {
    std::vector<int> old_of_new = keep.to_vector();
    std::vector<int> new_of_old(static_cast<std::size_t>(vertex_count()), -1);
    for (std::size_t i = 0; i < old_of_new.size(); ++i) new_of_old[static_cast<std::size_t>(old_of_new[i])] = static_cast<int>(i);
    Graph h(static_cast<int>(old_of_new.size()));
    for (const auto& e : edges_) {
        int a = new_of_old[static_cast<std::size_t>(e.u)];
        int b = new_of_old[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) h.add_edge(a, b);
    }
    if (mapping) *mapping = std::move(old_of_new);
    return h;
}

bool Graph::same_edges(const Graph& other) const {
    if (vertex_count() != other.vertex_count()) return false;
    auto a = edges_;
    auto b = other.edges_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

BipartiteGraph::BipartiteGraph(VertexSet side_a, VertexSet side_b, std::vector<Edge> edges)
    : side_a_(std::move(side_a)), side_b_(std::move(side_b)), edges_(std::move(edges)) {
    if (side_a_.intersects(side_b_)) throw std::invalid_argument("bipartite sides overlap");
    std::sort(edges_.begin(), edges_.end());
    int max_id = std::max(side_a_.empty() ? -1 : side_a_.to_vector().back(), side_b_.empty() ? -1 : side_b_.to_vector().back());
    adjacency_.resize(static_cast<std::size_t>(max_id + 1));
    for (const auto& e : edges_) {
        bool ok = (side_a_.contains(e.u) && side_b_.contains(e.v)) || (side_a_.contains(e.v) && side_b_.contains(e.u));
        if (!ok) throw std::invalid_argument("bipartite edge does not cross the sides");
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
}

bool BipartiteGraph::has_edge(int x, int y) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{x, y});
}

const std::vector<int>& BipartiteGraph::neighbors(int v) const {
    static const std::vector<int> none;
    if (v < 0 || static_cast<std::size_t>(v) >= adjacency_.size()) return none;
    return adjacency_[static_cast<std::size_t>(v)];
}

BipartiteGraph BipartiteGraph::without(const VertexSet& removed) const {
    std::vector<Edge> kept;
    for (const auto& e : edges_)
        if (!removed.contains(e.u) && !removed.contains(e.v)) kept.push_back(e);
    return BipartiteGraph(side_a_ - removed, side_b_ - removed, std::move(kept));
}

VertexSet BipartiteGraph::neighborhood(const VertexSet& x) const {
    VertexSet out(std::max(side_a_.capacity(), side_b_.capacity()));
    x.for_each([&](int v) {
        for (int w : neighbors(v)) out.insert(w);
    });
    return out;
}

VertexSet boundary(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) throw std::invalid_argument("boundary: sets overlap");
    VertexSet out(static_cast<std::size_t>(g.vertex_count()));
    a.for_each([&](int v) {
        if (g.neighbor_set(v).intersects(b)) out.insert(v);
    });
    return out;
}

BipartiteGraph crossing_graph(const Graph& g, const VertexSet& a, const VertexSet& b) {
    VertexSet bd_a = boundary(g, a, b);
    VertexSet bd_b = boundary(g, b, a);
    std::vector<Edge> edges;
    bd_a.for_each([&](int v) {
        for (int w : g.neighbors(v))
            if (b.contains(w)) edges.emplace_back(v, w);
    });
    return BipartiteGraph(std::move(bd_a), std::move(bd_b), std::move(edges));
}

namespace {

// Branch and bound over a generic adjacency structure restricted to `alive`.
// A vertex u is either left out, or matched to a neighbor v, in which case
// all neighbors of u and v are removed.
class InducedMatchingSearch {
public:
    explicit InducedMatchingSearch(std::vector<VertexSet> adj) : adj_(std::move(adj)) {}

    int solve(const VertexSet& alive) {
        best_ = 0;
        recurse(alive, 0);
        return best_;
    }

private:
    void recurse(VertexSet alive, int current) {
        // Drop vertices without alive neighbors.
        int pick = -1;
        std::size_t pick_deg = 0;
        std::size_t live_with_edges = 0;
        VertexSet isolated(alive.capacity());
        alive.for_each([&](int v) {
            auto d = (adj_[static_cast<std::size_t>(v)] & alive).size();
            if (d == 0) {
                isolated.insert(v);
            } else {
                ++live_with_edges;
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
        });
        if (current > best_) best_ = current;
        if (pick < 0) return;
        if (current + static_cast<int>(live_with_edges / 2) <= best_) return;
        alive -= isolated;

        const VertexSet& nu = adj_[static_cast<std::size_t>(pick)];
        (nu & alive).for_each([&](int v) {
            VertexSet next = alive;
            next.erase(pick);
            next.erase(v);
            next -= nu;
            next -= adj_[static_cast<std::size_t>(v)];
            recurse(std::move(next), current + 1);
        });
        VertexSet without = alive;
        without.erase(pick);
        recurse(std::move(without), current);
    }

    std::vector<VertexSet> adj_;
    int best_ = 0;
};

}  // namespace

int max_induced_matching_size(const BipartiteGraph& h) {
    if (h.edges().empty()) return 0;
    VertexSet all = h.vertices();
    int max_id = all.to_vector().back();
    std::vector<VertexSet> adj(static_cast<std::size_t>(max_id + 1), VertexSet(static_cast<std::size_t>(max_id + 1)));
    for (const auto& e : h.edges()) {
        adj[static_cast<std::size_t>(e.u)].insert(e.v);
        adj[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    return InducedMatchingSearch(std::move(adj)).solve(all);
}

int max_induced_matching_size(const Graph& g) {
    if (g.edge_count() == 0) return 0;
    std::vector<VertexSet> adj;
    adj.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) adj.push_back(g.neighbor_set(v));
    return InducedMatchingSearch(std::move(adj)).solve(g.all_vertices());
}

bool is_path_forest(const std::vector<Edge>& edges) {
    std::map<int, int> degree;
    std::map<int, int> parent;
    auto find = [&](int x) {
        if (!parent.count(x)) parent[x] = x;
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : edges) {
        if (++degree[e.u] > 2 || ++degree[e.v] > 2) return false;
        int ru = find(e.u);
        int rv = find(e.v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

bool is_induced_disjoint_path_union(const BipartiteGraph& h, const std::vector<Edge>& s_edges) {
    if (s_edges.empty()) return true;
    std::vector<Edge> sorted = s_edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    VertexSet verts;
    for (const auto& e : sorted) {
        if (!h.has_edge(e.u, e.v)) return false;
        verts.insert(e.u);
        verts.insert(e.v);
    }
    for (const auto& e : h.edges())
        if (verts.contains(e.u) && verts.contains(e.v) && !std::binary_search(sorted.begin(), sorted.end(), e)) return false;
    return is_path_forest(sorted);
}

bool is_induced_path(const Graph& g, const std::vector<int>& order) {
    if (order.empty()) return false;
    VertexSet seen(static_cast<std::size_t>(g.vertex_count()));
    for (int v : order) {
        if (v < 0 || v >= g.vertex_count() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (g.adjacent(order[i], order[j]) != (j == i + 1)) return false;
    return true;
}

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    long declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag[0] == 'c') continue;
        if (tag == "p") {
            if (n >= 0) throw ParseError("line " + std::to_string(line_no) + ": duplicate problem line");
            std::string first;
            ss >> first;
            if (first == "edge" || first == "col") ss >> n >> declared_m;
            else {
                std::istringstream num(first);
                if (!(num >> n) || !(ss >> declared_m)) n = -1;
            }
            if (n < 0 || declared_m < 0) throw ParseError("line " + std::to_string(line_no) + ": malformed problem line");
        } else if (tag == "e") {
            if (n < 0) throw ParseError("line " + std::to_string(line_no) + ": edge before problem line");
            long u = 0, v = 0;
            if (!(ss >> u >> v)) throw ParseError("line " + std::to_string(line_no) + ": malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown line type '" + tag + "'");
        }
        std::string extra;
        if (ss >> extra) throw ParseError("line " + std::to_string(line_no) + ": trailing tokens");
    }
    if (n < 0) throw ParseError("missing problem line");
    if (static_cast<long>(edges.size()) != declared_m)
        throw ParseError("edge count mismatch: declared " + std::to_string(declared_m) + ", found " + std::to_string(edges.size()));
    Graph g(n);
    for (auto [u, v] : edges) {
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edge_list()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream ss;
    write_graph(ss, g);
    return ss.str();
}

}  // namespace mimpaths
