#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "mimpaths/branch_decomposition.hpp"
#include "mimpaths/fragment_table.hpp"
#include "mimpaths/graph.hpp"
#include "mimpaths/minimal_vertex_covers.hpp"

namespace mimpaths::detail {

/// Terminal lookup for the IDP program: pair index (1-based) and partner per vertex.
struct TerminalMap {
    std::vector<int> pair_of;
    std::vector<int> partner;
    std::vector<std::pair<int, int>> pairs;
    int pair_count = 0;
};

/// Leaf and join operations shared by the LIP and IDP programs.
///
/// Without terminals the engine runs the LIP program (keys carry j, sizes are
/// tracked); with terminals it runs the IDP program (keys carry labels, every
/// entry has size 0).
class FragmentDp {
public:
    FragmentDp(const Graph& g, const BranchDecomposition& d, const TerminalMap* terminals = nullptr);

    FragmentTable leaf(int t);
    FragmentTable join(int t, const FragmentTable& a, const FragmentTable& b);

    /// Runs the program bottom-up. Child tables are released unless `keep_all`.
    std::vector<FragmentTable> run(bool keep_all, std::vector<std::size_t>* entries_per_node = nullptr);

    int width_at(int t);

private:
    struct NodeInfo {
        bool ready = false;
        VertexSet inside;
        VertexSet outside;
        BipartiteGraph crossing;
        int width = 0;
        int cap = 0;
        std::unordered_map<VertexSet, std::vector<MinimalVertexCover>> covers;
    };

    struct Prepared;
    struct Scratch;

    NodeInfo& info(int t);
    const std::vector<MinimalVertexCover>& covers_without(NodeInfo& nt, const VertexSet& fragment_vertices);
    bool combine(const NodeInfo& nt, const VertexSet& va, const VertexSet& vb, const Prepared& pa, const Prepared& pb,
                 Scratch& sc, FragmentKey& out) const;
    int label_of_terminal(int v) const;

    const Graph& g_;
    const BranchDecomposition& d_;
    const TerminalMap* terminals_;
    bool track_size_;
    std::vector<NodeInfo> nodes_;
};

/// Vertices inside V_t used by the partial solution behind (entry, size) at node t.
VertexSet collect_solution(const std::vector<FragmentTable>& tables, const BranchDecomposition& d, int t, int entry,
                           int size);

}  // namespace mimpaths::detail
