#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "mimpaths/branch_decomposition.hpp"
#include "mimpaths/graph.hpp"
#include "mimpaths/idp.hpp"
#include "mimpaths/vertex_set.hpp"

namespace mimpaths {

/// Branch vertex v_x per pattern vertex x, and for every pattern edge e = {x, y}
/// (x < y, in h.edges() order) the neighbors v_{x,y} = neighbor[e][0] of v_x and
/// v_{y,x} = neighbor[e][1] of v_y.
struct BranchAssignment {
    std::vector<int> branch;
    std::vector<std::array<int, 2>> neighbor;
};

/// Calls `visit` for every assignment with injective branch map, deg_G(v_x) >= deg_H(x)
/// and distinct neighbor vertices per branch vertex. Stops early when `visit` returns false.
void hitm_enumerate_assignments(const Graph& g, const Graph& h, const std::function<bool(const BranchAssignment&)>& visit);

/// Outcome of preprocessing one assignment: the vertices left for the paths, the
/// pairs still to connect and the vertices already fixed in the solution.
struct ReducedInstance {
    VertexSet keep;
    TerminalPairs pairs;
    VertexSet fixed;
};

/// Returns nothing when the assignment cannot extend to an induced subdivision.
std::optional<ReducedInstance> hitm_preprocess(const Graph& g, const Graph& h, const BranchAssignment& asg);

struct HitmResult {
    bool found = false;
    std::vector<int> witness;  // vertex set inducing a subdivision of h
    long long assignments = 0;
    long long idp_calls = 0;
};

/// Throws std::invalid_argument if h has more than `max_pattern_edges` edges.
HitmResult hitm_solve(const Graph& g, const BranchDecomposition& d, const Graph& h, bool witness = false,
                      int max_pattern_edges = 6);

}  // namespace mimpaths
