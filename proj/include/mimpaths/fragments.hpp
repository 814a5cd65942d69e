#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "mimpaths/graph.hpp"
#include "mimpaths/vertex_set.hpp"

namespace mimpaths {

/// Induced disjoint union of nontrivial paths inside a crossing graph (the S of a table index).
/// Edges are kept sorted so that equal fragments compare equal.
struct PathFragment {
    VertexSet vertices;
    std::vector<Edge> edges;

    PathFragment() = default;
    explicit PathFragment(std::vector<Edge> edge_list);

    bool empty() const { return edges.empty(); }
    std::size_t size() const { return vertices.size(); }
    int degree(int v) const;

    friend bool operator==(const PathFragment& a, const PathFragment& b) { return a.edges == b.edges; }
    friend bool operator<(const PathFragment& a, const PathFragment& b) { return a.edges < b.edges; }
};

/// 4w + 3: the largest fragment size compatible with an induced matching bound of w.
int fragment_size_cap(int w);

/// Every PathFragment of h with at most fragment_size_cap(w) vertices, the empty one included.
std::vector<PathFragment> enumerate_fragments(const BipartiteGraph& h, int w);

/// Components of an edge set as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> fragment_components(const std::vector<Edge>& edges);

/// Vertices of s lying in `side` with degree exactly one in s.
VertexSet degree_one_vertices(const PathFragment& s, const VertexSet& side);

struct Pairing {
    std::vector<std::pair<int, int>> pairs;  // each pair ordered, list sorted
    VertexSet unpaired;

    friend bool operator==(const Pairing& a, const Pairing& b) { return a.pairs == b.pairs && a.unpaired == b.unpaired; }
};

/// S ⊙ Q: the fragment with one extra edge per pair. Throws std::invalid_argument if a
/// vertex is paired twice or a paired vertex of S does not have degree one in S.
Graph contract_fragment(const PathFragment& s, const Pairing& q, int vertex_count);

/// All pairings of `ground` leaving exactly `unpaired_budget` vertices unpaired.
std::vector<Pairing> enumerate_pairings(const VertexSet& ground, int unpaired_budget);

/// All perfect pairings of `ground` whose pairs satisfy `allowed`.
std::vector<Pairing> enumerate_pairings(const VertexSet& ground, const std::function<bool(int, int)>& allowed);

/// Label per component, components in fragment_components order; labels in [1..k].
using ComponentLabeling = std::vector<int>;

std::vector<ComponentLabeling> enumerate_labelings(const PathFragment& s, int k);

}  // namespace mimpaths
