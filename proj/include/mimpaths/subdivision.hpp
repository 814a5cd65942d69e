#pragma once

#include <vector>

#include "mimpaths/graph.hpp"
#include "mimpaths/vertex_set.hpp"

namespace mimpaths {

/// True iff g is isomorphic to a subdivision of h.
bool is_subdivision_of(const Graph& g, const Graph& h);

/// True iff g[x] is isomorphic to a subdivision of h.
bool is_induced_subdivision(const Graph& g, const VertexSet& x, const Graph& h);

}  // namespace mimpaths
