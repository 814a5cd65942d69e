#pragma once

#include <chrono>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mimpaths/graph.hpp"
#include "mimpaths/minimal_vertex_covers.hpp"

namespace mimpaths {

// Brute-force solvers written directly from the problem definitions. They
// share nothing with the decomposition-based solvers beyond Graph.

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleBudget {
    int max_vertices = 14;
    int max_pairs = 4;
    std::chrono::milliseconds timeout{60000};
};

/// Number of vertices of a longest induced path.
int lip_bruteforce(const Graph& g, const OracleBudget& budget = {});

/// Whether the pairs can be joined by vertex-disjoint, pairwise non-adjacent induced paths.
bool idp_bruteforce(const Graph& g, const std::vector<std::pair<int, int>>& pairs, const OracleBudget& budget = {});

/// Whether some induced subgraph of g is a subdivision of h.
bool hitm_bruteforce(const Graph& g, const Graph& h, const OracleBudget& budget = {});

/// All minimal vertex covers, sorted.
std::vector<MinimalVertexCover> mvc_bruteforce(const BipartiteGraph& h, const OracleBudget& budget = {});

}  // namespace mimpaths
