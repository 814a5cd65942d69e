#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mimpaths/graph.hpp"
#include "mimpaths/vertex_set.hpp"

namespace mimpaths {

/// Table index shared by the LIP and IDP programs.
///
/// LIP uses (s, m, q, j) and stores the achievable sizes i per key; IDP uses
/// (s, m, labels, q) with j = 0 and the single size 0.
struct FragmentKey {
    std::vector<Edge> s;                     // fragment S, sorted
    VertexSet m;                             // minimal vertex cover of the crossing graph minus V(S)
    std::vector<std::pair<int, int>> q;      // pairing, each pair ordered, sorted
    std::vector<int> labels;                 // label per component of S (IDP only)
    int j = 0;                               // unpaired endpoint count (LIP only)

    friend bool operator==(const FragmentKey&, const FragmentKey&) = default;
};

struct FragmentKeyHash {
    std::size_t operator()(const FragmentKey& k) const;
};

/// Child entries an entry was derived from; node ids identify the child tables.
struct BackPointer {
    int left_node = -1;
    int left_entry = -1;
    int left_size = 0;
    int right_node = -1;
    int right_entry = -1;
    int right_size = 0;
};

struct TableEntry {
    FragmentKey key;
    std::map<int, BackPointer> sizes;  // achievable sizes i, each with one derivation
};

/// Sparse table of 1-entries for one decomposition node.
class FragmentTable {
public:
    FragmentTable() = default;
    explicit FragmentTable(int node) : node_(node) {}

    int node() const { return node_; }
    const std::vector<TableEntry>& entries() const { return entries_; }
    /// Number of 1-entries, counting every (key, size) combination.
    std::size_t one_entries() const;

    /// Records a 1-entry; the first derivation of a (key, size) is kept.
    void add(const FragmentKey& key, int size, const BackPointer& from = {});
    const TableEntry* find(const FragmentKey& key) const;
    int index_of(const FragmentKey& key) const;

private:
    int node_ = -1;
    std::vector<TableEntry> entries_;
    std::unordered_map<FragmentKey, int, FragmentKeyHash> index_;
};

}  // namespace mimpaths
