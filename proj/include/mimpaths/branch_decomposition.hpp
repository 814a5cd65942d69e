#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mimpaths/graph.hpp"
#include "mimpaths/vertex_set.hpp"

namespace mimpaths {

/// Raised when a decomposition is structurally invalid or does not match its graph.
class DecompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rooted branch decomposition: the root and every internal node have exactly
/// two children, leaves are in bijection with the graph vertices.
///
/// Node ids are dense in [0, node_count()). V_t is cached for every node at
/// construction. A default-constructed decomposition is empty and only valid
/// for graphs with at most one vertex.
class BranchDecomposition {
public:
    struct Node {
        int parent = -1;
        int left = -1;
        int right = -1;
        int vertex = -1;  // graph vertex for leaves, -1 otherwise
        bool is_leaf() const { return vertex >= 0; }
    };

    BranchDecomposition() = default;

    /// Builds and validates a rooted decomposition. `nodes[t].parent` is
    /// recomputed from the child links.
    BranchDecomposition(int vertex_count, int root, std::vector<Node> nodes);

    bool empty() const { return nodes_.empty(); }
    int vertex_count() const { return vertex_count_; }
    int root() const { return root_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    const Node& node(int t) const { return nodes_[static_cast<std::size_t>(t)]; }
    bool is_leaf(int t) const { return node(t).is_leaf(); }
    int leaf_of_vertex(int v) const { return leaf_of_vertex_[static_cast<std::size_t>(v)]; }

    /// V_t: graph vertices mapped to leaves below t.
    const VertexSet& vertices_below(int t) const { return below_[static_cast<std::size_t>(t)]; }
    /// V̄_t = V(G) \ V_t.
    VertexSet vertices_outside(int t) const { return VertexSet::full(static_cast<std::size_t>(vertex_count_)) - vertices_below(t); }

    /// Children before parents.
    const std::vector<int>& postorder() const { return postorder_; }

    /// Throws DecompositionError if the decomposition does not fit `g`.
    void validate_for(const Graph& g) const;

    /// Copy with the children of node t exchanged.
    BranchDecomposition with_children_swapped(int t) const;

    /// Decomposition of G[keep] obtained by deleting the leaves of removed
    /// vertices and smoothing unary nodes. Vertices are renumbered as in
    /// Graph::induced_subgraph. Returns an empty decomposition if fewer than
    /// two vertices remain.
    BranchDecomposition restricted_to(const VertexSet& keep) const;

private:
    int vertex_count_ = 0;
    int root_ = -1;
    std::vector<Node> nodes_;
    std::vector<int> leaf_of_vertex_;
    std::vector<VertexSet> below_;
    std::vector<int> postorder_;
};

/// Unrooted subcubic tree with leaf labels, as read from the `u` file form.
struct UnrootedTree {
    std::vector<std::pair<int, int>> edges;  // node id pairs
    std::map<int, int> leaf_vertex;          // leaf node id -> graph vertex (0-based)
};

/// Subdivides the lexicographically smallest tree edge, roots the tree at the
/// new node and smooths degree-2 nodes.
BranchDecomposition root_decomposition(const UnrootedTree& tree, int vertex_count);

struct WidthCertificate {
    struct EdgeValue {
        int child = -1;   // tree edge (child, parent)
        int parent = -1;
        int mim = 0;
    };
    int width = 0;
    std::vector<EdgeValue> per_edge;
};

/// Exact mim value on every tree edge; width is their maximum.
WidthCertificate mim_width(const Graph& g, const BranchDecomposition& d);

struct Interval {
    long long left = 0;
    long long right = 0;
};

/// Interval graph (closed intervals, adjacent iff they intersect) and a
/// caterpillar decomposition over ascending left endpoints (ties by index).
std::pair<Graph, BranchDecomposition> interval_caterpillar_decomposition(const std::vector<Interval>& intervals);

/// Caterpillar whose leaves follow `order` (must be a permutation of V(g)).
BranchDecomposition linear_order_decomposition(const Graph& g, const std::vector<int>& order);

/// Minimum mim-width decomposition by exhaustive search over all vertex
/// bipartition hierarchies. Requires 2 <= n <= max_vertices.
BranchDecomposition optimal_decomposition_bruteforce(const Graph& g, int max_vertices = 8);

// Text format: `root <id>`, `i <id> <child> <child>`, `l <id> <vertex>` (1-based
// vertex). Alternatively `u <id> <neighbor>...` lines plus `l` lines describe
// an unrooted tree that is rooted on reading.
BranchDecomposition read_decomposition(std::istream& in, int vertex_count);
BranchDecomposition read_decomposition_file(const std::string& path, int vertex_count);
void write_decomposition(std::ostream& out, const BranchDecomposition& d);

}  // namespace mimpaths
