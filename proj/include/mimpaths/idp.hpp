#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mimpaths/branch_decomposition.hpp"
#include "mimpaths/fragment_table.hpp"
#include "mimpaths/graph.hpp"

namespace mimpaths {

/// Terminal pairs (x_i, y_i), i = 1..k, stored 0-based.
using TerminalPairs = std::vector<std::pair<int, int>>;

/// IDP table: keys (S, M, labels, Q); every entry has size 0.
using IdpTable = FragmentTable;

/// Throws std::invalid_argument unless all 2k terminals are distinct vertices of an n-vertex graph.
void validate_terminals(const TerminalPairs& terms, int vertex_count);

// Text format: one `<x> <y>` line per pair (1-based); blank lines and lines
// starting with `c` or `#` are skipped. Throws ParseError.
TerminalPairs read_pairs(std::istream& in, int vertex_count);
TerminalPairs read_pairs_file(const std::string& path, int vertex_count);

IdpTable idp_leaf_table(const Graph& g, const BranchDecomposition& d, int t, const TerminalPairs& terms);
IdpTable idp_join(const Graph& g, const BranchDecomposition& d, int t, const IdpTable& a, const IdpTable& b,
                  const TerminalPairs& terms);

struct IdpResult {
    bool solvable = false;
    std::vector<std::vector<int>> paths;  // per pair, from x_i to y_i, when a witness was requested
    std::vector<std::size_t> entries_per_node;
    int width = 0;
};

/// With `witness`, the returned paths are checked to be induced, vertex-disjoint
/// and pairwise non-adjacent.
IdpResult idp_solve(const Graph& g, const BranchDecomposition& d, const TerminalPairs& terms, bool witness = false);

/// True iff the paths join their pairs and form an induced disjoint union of paths in g.
bool verify_idp_witness(const Graph& g, const TerminalPairs& terms, const std::vector<std::vector<int>>& paths);

}  // namespace mimpaths
