#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mimpaths/branch_decomposition.hpp"
#include "mimpaths/fragment_table.hpp"
#include "mimpaths/graph.hpp"

namespace mimpaths {

/// LIP table: keys (S, M, Q, j), each with its achievable sizes i.
using LipTable = FragmentTable;

enum class IndexStatus { valid, reject, special_case_1, special_case_2, special_case_3 };

/// Validity of an index (S, Q, i, j) at a node with vertex set `inside`: S ⊙ Q must be a
/// union of paths whose degree-one vertices inside number j, up to the three special cases.
IndexStatus lip_validate_index(const std::vector<Edge>& s, const std::vector<std::pair<int, int>>& q, int i, int j,
                               const VertexSet& inside);

LipTable lip_leaf_table(const Graph& g, const BranchDecomposition& d, int t);
LipTable lip_join(const Graph& g, const BranchDecomposition& d, int t, const LipTable& a, const LipTable& b);

struct LipResult {
    int length = 0;
    std::vector<int> path;                   // filled when a witness was requested
    std::vector<std::size_t> entries_per_node;
    int width = 0;
};

/// Number of vertices of a longest induced path. With `witness`, also returns
/// one such path, checked to be induced and of the reported size.
LipResult lip_solve(const Graph& g, const BranchDecomposition& d, bool witness = false);

}  // namespace mimpaths
