#pragma once

#include <vector>

#include "mimpaths/graph.hpp"
#include "mimpaths/vertex_set.hpp"

namespace mimpaths {

/// Minimal vertex cover of a bipartite graph, split by side.
struct MinimalVertexCover {
    VertexSet cover;
    VertexSet m_in;   // cover ∩ side A
    VertexSet m_out;  // cover ∩ side B

    friend bool operator==(const MinimalVertexCover& x, const MinimalVertexCover& y) { return x.cover == y.cover; }
    friend bool operator<(const MinimalVertexCover& x, const MinimalVertexCover& y) { return x.cover < y.cover; }
};

/// All minimal vertex covers of h, built as {N(R) ∪ X_R : R ⊆ A, |R| ≤ w} where
/// X_R are the vertices of A with a neighbor in B \ N(R). Complete whenever
/// w is at least the maximum induced matching size of h. Sorted, deduplicated.
/// An edgeless graph yields the single cover ∅.
std::vector<MinimalVertexCover> enumerate_minimal_vertex_covers(const BipartiteGraph& h, int w);

/// True iff m covers every edge and each vertex of m has an edge not covered by m \ {v}.
bool is_minimal_vertex_cover(const BipartiteGraph& h, const VertexSet& m);

}  // namespace mimpaths
