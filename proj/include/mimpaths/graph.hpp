#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mimpaths/vertex_set.hpp"

namespace mimpaths {

/// Raised for malformed text input (graph, decomposition, pair and pattern files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected edge stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    int other(int x) const { return x == u ? v : u; }
    bool touches(int x) const { return x == u || x == v; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Edges keep their insertion order so that a parsed file is written back
/// unchanged.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Throws std::invalid_argument on self-loops, parallel edges or ids out of range.
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const { return adjacency_sets_[static_cast<std::size_t>(u)].contains(v); }
    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    const VertexSet& neighbor_set(int v) const { return adjacency_sets_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    /// Edges exactly as inserted (orientation preserved), for writing files back.
    const std::vector<std::pair<int, int>>& edge_list() const { return edge_list_; }

    VertexSet all_vertices() const { return VertexSet::full(static_cast<std::size_t>(vertex_count())); }

    /// N_A[X]: neighbors of vertices in `x` that lie in `within`.
    VertexSet neighbors_in(const VertexSet& x, const VertexSet& within) const;

    /// G[X] with vertices renumbered in increasing id order; `mapping[new] = old`.
    Graph induced_subgraph(const VertexSet& keep, std::vector<int>* mapping = nullptr) const;

    /// Same vertex ids, edges in canonical sorted order.
    bool same_edges(const Graph& other) const;

private:
    std::vector<std::vector<int>> adjacency_;
    std::vector<VertexSet> adjacency_sets_;
    std::vector<Edge> edges_;
    std::vector<std::pair<int, int>> edge_list_;
};

/// Bipartite graph whose vertices are ids of a host graph.
///
/// Sides may contain vertices without incident edges (for example after
/// removing the vertices of a fragment from a crossing graph).
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(VertexSet side_a, VertexSet side_b, std::vector<Edge> edges);

    const VertexSet& side_a() const { return side_a_; }
    const VertexSet& side_b() const { return side_b_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int x, int y) const;
    const std::vector<int>& neighbors(int v) const;
    VertexSet vertices() const { return side_a_ | side_b_; }
    std::size_t vertex_count() const { return side_a_.size() + side_b_.size(); }
    bool empty_edges() const { return edges_.empty(); }

    /// Removes the given vertices from both sides together with their edges.
    BipartiteGraph without(const VertexSet& removed) const;

    /// Neighborhood of a vertex set (over both sides).
    VertexSet neighborhood(const VertexSet& x) const;

private:
    VertexSet side_a_;
    VertexSet side_b_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;  // indexed by host vertex id
};

/// bd_B(A): vertices of `a` with a neighbor in `b`. Throws std::invalid_argument if a and b overlap.
VertexSet boundary(const Graph& g, const VertexSet& a, const VertexSet& b);

/// G_{A,B}: bipartite graph on (bd_B(A), bd_A(B)) with exactly the A-B edges of g.
BipartiteGraph crossing_graph(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Exact maximum induced matching size by branch and bound.
int max_induced_matching_size(const BipartiteGraph& h);

/// Exact maximum induced matching size of an arbitrary graph (used for fragments).
int max_induced_matching_size(const Graph& g);

/// True iff `s_edges` is an induced subgraph of `h` on its endpoints and
/// every component is a path with at least one edge.
bool is_induced_disjoint_path_union(const BipartiteGraph& h, const std::vector<Edge>& s_edges);

/// True iff every component of the edge set is a path (no vertex of degree > 2, no cycle).
bool is_path_forest(const std::vector<Edge>& edges);

/// True iff g[vertices] is a single path (a single vertex counts).
bool is_induced_path(const Graph& g, const std::vector<int>& vertices_in_order);

// Text format: `p <n> <m>` followed by m lines `e <u> <v>` (1-based); lines
// starting with `c` are comments.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

}  // namespace mimpaths
