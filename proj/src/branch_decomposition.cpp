#include "mimpaths/branch_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace mimpaths {

BranchDecomposition::BranchDecomposition(int vertex_count, int root, std::vector<Node> nodes)
    : vertex_count_(vertex_count), root_(root), nodes_(std::move(nodes)) {
    if (vertex_count_ < 2) throw DecompositionError("a graph with fewer than two vertices has no branch decomposition");
    const int count = node_count();
    if (root_ < 0 || root_ >= count) throw DecompositionError("root id out of range");
    for (auto& nd : nodes_) nd.parent = -1;
    leaf_of_vertex_.assign(static_cast<std::size_t>(vertex_count_), -1);
    for (int t = 0; t < count; ++t) {
        Node& nd = nodes_[static_cast<std::size_t>(t)];
        if (nd.is_leaf()) {
            if (nd.left >= 0 || nd.right >= 0) throw DecompositionError("leaf node " + std::to_string(t) + " has children");
            if (nd.vertex >= vertex_count_) throw DecompositionError("leaf vertex out of range");
            if (leaf_of_vertex_[static_cast<std::size_t>(nd.vertex)] >= 0)
                throw DecompositionError("vertex " + std::to_string(nd.vertex + 1) + " mapped to two leaves");
            leaf_of_vertex_[static_cast<std::size_t>(nd.vertex)] = t;
            continue;
        }
        if (nd.left < 0 || nd.right < 0 || nd.left >= count || nd.right >= count || nd.left == nd.right)
            throw DecompositionError("internal node " + std::to_string(t) + " must have exactly two children");
        for (int c : {nd.left, nd.right}) {
            Node& child = nodes_[static_cast<std::size_t>(c)];
            if (child.parent >= 0 || c == root_) throw DecompositionError("node " + std::to_string(c) + " has two parents");
            child.parent = t;
        }
    }
    for (int v = 0; v < vertex_count_; ++v)
        if (leaf_of_vertex_[static_cast<std::size_t>(v)] < 0)
            throw DecompositionError("vertex " + std::to_string(v + 1) + " has no leaf");
    if (nodes_[static_cast<std::size_t>(root_)].is_leaf()) throw DecompositionError("root must have two children");

    // Iterative postorder from the root; unreachable nodes mean a forest or a cycle.
    below_.assign(static_cast<std::size_t>(count), VertexSet(static_cast<std::size_t>(vertex_count_)));
    std::vector<std::pair<int, bool>> stack{{root_, false}};
    while (!stack.empty()) {
        auto [t, expanded] = stack.back();
        stack.pop_back();
        const Node& nd = nodes_[static_cast<std::size_t>(t)];
        if (nd.is_leaf()) {
            below_[static_cast<std::size_t>(t)].insert(nd.vertex);
            postorder_.push_back(t);
        } else if (expanded) {
            below_[static_cast<std::size_t>(t)] = below_[static_cast<std::size_t>(nd.left)] | below_[static_cast<std::size_t>(nd.right)];
            postorder_.push_back(t);
        } else {
            stack.push_back({t, true});
            stack.push_back({nd.right, false});
            stack.push_back({nd.left, false});
        }
        if (postorder_.size() > static_cast<std::size_t>(count)) throw DecompositionError("decomposition is not a tree");
    }
    if (postorder_.size() != static_cast<std::size_t>(count)) throw DecompositionError("decomposition is not connected");
}

void BranchDecomposition::validate_for(const Graph& g) const {
    if (g.vertex_count() <= 1) {
        if (!empty()) throw DecompositionError("a graph with fewer than two vertices has no branch decomposition");
        return;
    }
    if (empty()) throw DecompositionError("missing decomposition");
    if (vertex_count_ != g.vertex_count())
        throw DecompositionError("decomposition has " + std::to_string(vertex_count_) + " leaves, graph has " +
                                 std::to_string(g.vertex_count()) + " vertices");
}

BranchDecomposition BranchDecomposition::with_children_swapped(int t) const {
    std::vector<Node> nodes = nodes_;
    std::swap(nodes[static_cast<std::size_t>(t)].left, nodes[static_cast<std::size_t>(t)].right);
    return BranchDecomposition(vertex_count_, root_, std::move(nodes));
}

BranchDecomposition BranchDecomposition::restricted_to(const VertexSet& keep) const {
    std::vector<int> new_of_old(static_cast<std::size_t>(vertex_count_), -1);
    int kept = 0;
    for (int v = 0; v < vertex_count_; ++v)
        if (keep.contains(v)) new_of_old[static_cast<std::size_t>(v)] = kept++;
    if (kept < 2) return {};

    // Rebuild bottom-up: each old node maps to a new node, or -1 if its subtree is emptied.
    std::vector<Node> nodes;
    std::vector<int> image(static_cast<std::size_t>(node_count()), -1);
    for (int t : postorder_) {
        const Node& nd = node(t);
        if (nd.is_leaf()) {
            int nv = new_of_old[static_cast<std::size_t>(nd.vertex)];
            if (nv >= 0) {
                Node leaf;
                leaf.vertex = nv;
                image[static_cast<std::size_t>(t)] = static_cast<int>(nodes.size());
                nodes.push_back(leaf);
            }
            continue;
        }
        int l = image[static_cast<std::size_t>(nd.left)];
        int r = image[static_cast<std::size_t>(nd.right)];
        if (l >= 0 && r >= 0) {
            Node inner;
            inner.left = l;
            inner.right = r;
            image[static_cast<std::size_t>(t)] = static_cast<int>(nodes.size());
            nodes.push_back(inner);
        } else {
            image[static_cast<std::size_t>(t)] = l >= 0 ? l : r;
        }
    }
    return BranchDecomposition(kept, image[static_cast<std::size_t>(root_)], std::move(nodes));
}

BranchDecomposition root_decomposition(const UnrootedTree& tree, int vertex_count) {
    if (vertex_count < 2) throw DecompositionError("a graph with fewer than two vertices has no branch decomposition");
    std::map<int, std::vector<int>> adj;
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : tree.edges) {
        if (a == b) throw DecompositionError("tree self-loop at node " + std::to_string(a));
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (const auto& [id, vertex] : tree.leaf_vertex) {
        (void)vertex;
        adj[id];
    }
    if (seen.size() + 1 != adj.size()) throw DecompositionError("decomposition is not a tree");
    std::vector<int> vertex_seen(static_cast<std::size_t>(vertex_count), 0);
    for (auto& [id, nbrs] : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        if (nbrs.size() > 3) throw DecompositionError("node " + std::to_string(id) + " has degree " + std::to_string(nbrs.size()));
        bool is_leaf = tree.leaf_vertex.count(id) > 0;
        if (nbrs.size() == 1 && !is_leaf) throw DecompositionError("tree leaf " + std::to_string(id) + " has no vertex");
        if (is_leaf && nbrs.size() != 1) throw DecompositionError("labelled node " + std::to_string(id) + " is not a tree leaf");
    }
    for (const auto& [id, vertex] : tree.leaf_vertex) {
        (void)id;
        if (vertex < 0 || vertex >= vertex_count) throw DecompositionError("leaf vertex out of range");
        if (vertex_seen[static_cast<std::size_t>(vertex)]++) throw DecompositionError("vertex " + std::to_string(vertex + 1) + " mapped to two leaves");
    }
    if (static_cast<int>(tree.leaf_vertex.size()) != vertex_count)
        throw DecompositionError("decomposition has " + std::to_string(tree.leaf_vertex.size()) + " leaves, graph has " +
                                 std::to_string(vertex_count) + " vertices");

    auto root_edge = *seen.begin();
    std::vector<BranchDecomposition::Node> nodes;
    std::set<int> visited;
    // Returns the new id of the subtree hanging at `t` away from `from`, smoothing unary nodes.
    std::function<int(int, int)> build = [&](int t, int from) -> int {
        if (!visited.insert(t).second) throw DecompositionError("decomposition is not a tree");
        auto leaf = tree.leaf_vertex.find(t);
        if (leaf != tree.leaf_vertex.end()) {
            BranchDecomposition::Node nd;
            nd.vertex = leaf->second;
            nodes.push_back(nd);
            return static_cast<int>(nodes.size()) - 1;
        }
        std::vector<int> kids;
        for (int c : adj[t])
            if (c != from) kids.push_back(build(c, t));
        if (kids.size() == 1) return kids[0];
        BranchDecomposition::Node nd;
        nd.left = kids[0];
        nd.right = kids[1];
        nodes.push_back(nd);
        return static_cast<int>(nodes.size()) - 1;
    };
    BranchDecomposition::Node root;
    root.left = build(root_edge.first, root_edge.second);
    root.right = build(root_edge.second, root_edge.first);
    nodes.push_back(root);
    if (visited.size() != adj.size()) throw DecompositionError("decomposition is not connected");
    int root_id = static_cast<int>(nodes.size()) - 1;
    return BranchDecomposition(vertex_count, root_id, std::move(nodes));
}

WidthCertificate mim_width(const Graph& g, const BranchDecomposition& d) {
    d.validate_for(g);
    WidthCertificate cert;
    for (int t : d.postorder()) {
        if (t == d.root()) continue;
        int m = max_induced_matching_size(crossing_graph(g, d.vertices_below(t), d.vertices_outside(t)));
        cert.per_edge.push_back({t, d.node(t).parent, m});
        cert.width = std::max(cert.width, m);
    }
    return cert;
}

namespace {

BranchDecomposition caterpillar(int n, const std::vector<int>& order) {
    std::vector<BranchDecomposition::Node> nodes;
    for (int v : order) {
        BranchDecomposition::Node leaf;
        leaf.vertex = v;
        nodes.push_back(leaf);
    }
    int spine = 0;
    for (int i = 1; i < n; ++i) {
        BranchDecomposition::Node inner;
        inner.left = spine;
        inner.right = i;
        nodes.push_back(inner);
        spine = static_cast<int>(nodes.size()) - 1;
    }
    return BranchDecomposition(n, spine, std::move(nodes));
}

}  // namespace

BranchDecomposition linear_order_decomposition(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (n < 2) throw DecompositionError("a graph with fewer than two vertices has no branch decomposition");
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    if (sorted != identity) throw std::invalid_argument("order is not a permutation of the vertices");
    return caterpillar(n, order);
}

std::pair<Graph, BranchDecomposition> interval_caterpillar_decomposition(const std::vector<Interval>& intervals) {
    const int n = static_cast<int>(intervals.size());
    for (const auto& iv : intervals)
        if (!(iv.left < iv.right)) throw std::invalid_argument("interval with left >= right");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& a = intervals[static_cast<std::size_t>(i)];
            const auto& b = intervals[static_cast<std::size_t>(j)];
            if (std::max(a.left, b.left) <= std::min(a.right, b.right)) g.add_edge(i, j);
        }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return intervals[static_cast<std::size_t>(a)].left < intervals[static_cast<std::size_t>(b)].left;
    });
    if (n < 2) return {std::move(g), BranchDecomposition{}};
    return {std::move(g), caterpillar(n, order)};
}

BranchDecomposition optimal_decomposition_bruteforce(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n < 2) throw DecompositionError("a graph with fewer than two vertices has no branch decomposition");
    if (n > max_vertices || n > 20)
        throw std::invalid_argument("exhaustive search limited to " + std::to_string(std::min(max_vertices, 20)) + " vertices");
    const std::uint32_t full = (1U << n) - 1;
    auto to_set = [&](std::uint32_t mask) {
        VertexSet s(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1U) s.insert(v);
        return s;
    };
    std::vector<int> cut(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::uint32_t comp = full & ~mask;
        if (comp < mask) {
            cut[mask] = cut[comp];
            continue;
        }
        cut[mask] = max_induced_matching_size(crossing_graph(g, to_set(mask), to_set(comp)));
    }
    // best[A]: least possible maximum cut value over tree edges strictly inside a subtree with leaf set A.
    constexpr int kUnset = -1;
    std::vector<int> best(std::size_t{1} << n, kUnset);
    std::vector<std::uint32_t> split(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> masks(full);
    std::iota(masks.begin(), masks.end(), 1U);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    for (std::uint32_t a : masks) {
        if (std::popcount(a) == 1) {
            best[a] = 0;
            continue;
        }
        std::uint32_t low = a & (~a + 1);
        std::uint32_t rest = a & ~low;
        // Sub-masks of `a` containing its lowest vertex, excluding `a` itself.
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            std::uint32_t b = sub | low;
            if (b != a) {
                std::uint32_t c = a & ~b;
                int value = std::max({best[b], best[c], cut[b], cut[c]});
                if (a == full) value = std::max({best[b], best[c], cut[b]});
                if (best[a] == kUnset || value < best[a]) {
                    best[a] = value;
                    split[a] = b;
                }
            }
            if (sub == 0) break;
        }
    }
    std::vector<BranchDecomposition::Node> nodes;
    std::function<int(std::uint32_t)> emit = [&](std::uint32_t a) -> int {
        BranchDecomposition::Node nd;
        if (std::popcount(a) == 1) {
            nd.vertex = std::countr_zero(a);
        } else {
            nd.left = emit(split[a]);
            nd.right = emit(a & ~split[a]);
        }
        nodes.push_back(nd);
        return static_cast<int>(nodes.size()) - 1;
    };
    int root = emit(full);
    return BranchDecomposition(n, root, std::move(nodes));
}

BranchDecomposition read_decomposition(std::istream& in, int vertex_count) {
    std::string line;
    int line_no = 0;
    int root = -1;
    bool unrooted = false;
    bool rooted_lines = false;
    std::map<int, std::pair<int, int>> internal;
    std::map<int, int> leaves;
    UnrootedTree tree;
    std::set<int> declared;
    auto fail = [&](const std::string& msg) { throw ParseError("decomposition line " + std::to_string(line_no) + ": " + msg); };
    auto read_id = [&](std::istringstream& ss) {
        long id = -1;
        if (!(ss >> id) || id < 0 || id > 100000000) fail("expected a non-negative node id");
        return static_cast<int>(id);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag[0] == 'c') continue;
        if (tag == "root") {
            if (root >= 0) fail("duplicate root line");
            root = read_id(ss);
            rooted_lines = true;
        } else if (tag == "i") {
            int id = read_id(ss);
            int a = read_id(ss);
            int b = read_id(ss);
            if (!declared.insert(id).second) fail("node " + std::to_string(id) + " declared twice");
            internal[id] = {a, b};
            rooted_lines = true;
        } else if (tag == "l") {
            int id = read_id(ss);
            long v = 0;
            if (!(ss >> v)) fail("expected a vertex id");
            if (v < 1 || v > vertex_count) throw DecompositionError("leaf vertex " + std::to_string(v) + " out of range");
            if (!declared.insert(id).second) fail("node " + std::to_string(id) + " declared twice");
            leaves[id] = static_cast<int>(v - 1);
        } else if (tag == "u") {
            int id = read_id(ss);
            unrooted = true;
            long nb = 0;
            while (ss >> nb) {
                if (nb < 0) fail("negative node id");
                tree.edges.emplace_back(id, static_cast<int>(nb));
            }
            if (!ss.eof()) fail("malformed neighbor list");
            continue;
        } else {
            fail("unknown line type '" + tag + "'");
        }
        std::string extra;
        if (ss >> extra) fail("trailing tokens");
    }
    if (unrooted && rooted_lines) throw ParseError("decomposition mixes rooted and unrooted forms");
    if (unrooted) {
        tree.leaf_vertex = leaves;
        return root_decomposition(tree, vertex_count);
    }
    if (root < 0) throw ParseError("decomposition has no root line");
    if (vertex_count < 2) throw DecompositionError("a graph with fewer than two vertices has no branch decomposition");

    std::map<int, int> dense;
    for (int id : declared) dense.emplace(id, static_cast<int>(dense.size()));
    auto lookup = [&](int id) {
        auto it = dense.find(id);
        if (it == dense.end()) throw DecompositionError("undeclared node " + std::to_string(id));
        return it->second;
    };
    std::vector<BranchDecomposition::Node> nodes(dense.size());
    for (auto [id, kids] : internal) {
        auto& nd = nodes[static_cast<std::size_t>(lookup(id))];
        nd.left = lookup(kids.first);
        nd.right = lookup(kids.second);
    }
    for (auto [id, v] : leaves) nodes[static_cast<std::size_t>(lookup(id))].vertex = v;
    if (static_cast<int>(leaves.size()) != vertex_count)
        throw DecompositionError("decomposition has " + std::to_string(leaves.size()) + " leaves, graph has " +
                                 std::to_string(vertex_count) + " vertices");
    return BranchDecomposition(vertex_count, lookup(root), std::move(nodes));
}

BranchDecomposition read_decomposition_file(const std::string& path, int vertex_count) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_decomposition(in, vertex_count);
}

void write_decomposition(std::ostream& out, const BranchDecomposition& d) {
    out << "root " << d.root() << '\n';
    for (int t = 0; t < d.node_count(); ++t) {
        const auto& nd = d.node(t);
        if (nd.is_leaf()) out << "l " << t << ' ' << nd.vertex + 1 << '\n';
        else out << "i " << t << ' ' << nd.left << ' ' << nd.right << '\n';
    }
}

}  // namespace mimpaths
