#include <doctest.h>

#include <functional>
#include <random>
#include <sstream>

#include "mimpaths/branch_decomposition.hpp"
#include "test_util.hpp"

using namespace mimpaths;
using namespace testing_util;

namespace {

using Node = BranchDecomposition::Node;

// Every rooted decomposition of `vertices`, built as node lists; used to
// re-derive optimal widths without the subset recursion of the library.
void all_trees(const std::vector<int>& vertices, std::vector<std::vector<Node>>& out_nodes, std::vector<int>& out_roots) {
    std::function<std::vector<std::pair<std::vector<Node>, int>>(const std::vector<int>&)> rec =
        [&](const std::vector<int>& vs) {
            std::vector<std::pair<std::vector<Node>, int>> result;
            if (vs.size() == 1) {
                Node leaf;
                leaf.vertex = vs[0];
                result.push_back({{leaf}, 0});
                return result;
            }
            // splits containing vs[0] on the left, both sides nonempty
            const int k = static_cast<int>(vs.size()) - 1;
            for (unsigned mask = 0; mask < (1U << k); ++mask) {
                std::vector<int> left{vs[0]}, right;
                for (int i = 0; i < k; ++i) (mask >> i & 1U ? left : right).push_back(vs[static_cast<std::size_t>(i + 1)]);
                if (right.empty()) continue;
                for (const auto& [ln, lr] : rec(left))
                    for (const auto& [rn, rr] : rec(right)) {
                        std::vector<Node> nodes = ln;
                        int offset = static_cast<int>(nodes.size());
                        for (Node nd : rn) {
                            if (!nd.is_leaf()) {
                                nd.left += offset;
                                nd.right += offset;
                            }
                            nodes.push_back(nd);
                        }
                        Node top;
                        top.left = lr;
                        top.right = rr + offset;
                        nodes.push_back(top);
                        result.push_back({nodes, static_cast<int>(nodes.size()) - 1});
                    }
            }
            return result;
        };
    for (auto& [nodes, root] : rec(vertices)) {
        for (auto& nd : nodes) nd.parent = -1;
        out_nodes.push_back(nodes);
        out_roots.push_back(root);
    }
}

int min_width_by_enumeration(const Graph& g) {
    std::vector<std::vector<Node>> nodes;
    std::vector<int> roots;
    all_trees(identity_order(g.vertex_count()), nodes, roots);
    int best = 1 << 30;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        best = std::min(best, mim_width(g, BranchDecomposition(g.vertex_count(), roots[i], nodes[i])).width);
    return best;
}

void check_structure(const BranchDecomposition& d) {
    for (int t = 0; t < d.node_count(); ++t) {
        if (d.is_leaf(t)) {
            CHECK(d.vertices_below(t).size() == 1);
            continue;
        }
        const auto& a = d.vertices_below(d.node(t).left);
        const auto& b = d.vertices_below(d.node(t).right);
        CHECK_FALSE(a.intersects(b));
        CHECK((a | b) == d.vertices_below(t));
    }
    CHECK(d.vertices_below(d.root()).size() == static_cast<std::size_t>(d.vertex_count()));
}

BranchDecomposition parse(const std::string& text, int n) {
    std::istringstream in(text);
    return read_decomposition(in, n);
}

}  // namespace

TEST_CASE("rooting an unrooted tree") {
    SUBCASE("two leaves joined by an edge") {
        auto d = parse("u 0 1\nl 0 1\nl 1 2\n", 2);
        CHECK(d.node_count() == 3);
        const auto& root = d.node(d.root());
        CHECK(d.is_leaf(root.left));
        CHECK(d.is_leaf(root.right));
    }
    SUBCASE("single vertex has no decomposition") {
        UnrootedTree tree;
        tree.leaf_vertex[0] = 0;
        CHECK_THROWS_AS(root_decomposition(tree, 1), DecompositionError);
    }
    SUBCASE("four leaf caterpillar") {
        UnrootedTree tree;
        tree.edges = {{4, 0}, {4, 1}, {4, 5}, {5, 2}, {5, 3}};
        for (int i = 0; i < 4; ++i) tree.leaf_vertex[i] = i;
        auto d = root_decomposition(tree, 4);
        int internal = 0;
        for (int t = 0; t < d.node_count(); ++t)
            if (!d.is_leaf(t)) ++internal;
        CHECK(internal == 3);
        bool both_leaves = d.is_leaf(d.node(d.root()).left) && d.is_leaf(d.node(d.root()).right);
        CHECK_FALSE(both_leaves);
        check_structure(d);
    }
    SUBCASE("degree-four node is rejected") {
        UnrootedTree tree;
        tree.edges = {{4, 0}, {4, 1}, {4, 2}, {4, 3}};
        for (int i = 0; i < 4; ++i) tree.leaf_vertex[i] = i;
        CHECK_THROWS_AS(root_decomposition(tree, 4), DecompositionError);
    }
}

TEST_CASE("mim width of simple families") {
    std::mt19937 rng(3);
    for (int n = 2; n <= 7; ++n) {
        auto order = random_order(rng, n);
        CHECK(mim_width(Graph(n), linear_order_decomposition(Graph(n), order)).width == 0);
        Graph k = complete_graph(n);
        CHECK(mim_width(k, linear_order_decomposition(k, order)).width == 1);
    }
}

TEST_CASE("width certificate lists every tree edge") {
    Graph c6 = cycle_graph(6);
    auto d = linear_order_decomposition(c6, identity_order(6));
    auto cert = mim_width(c6, d);
    CHECK(cert.per_edge.size() == static_cast<std::size_t>(d.node_count() - 1));
    int mx = 0;
    for (const auto& e : cert.per_edge) {
        mx = std::max(mx, e.mim);
        CHECK(d.node(e.child).parent == e.parent);
    }
    CHECK(cert.width == mx);
}

TEST_CASE("interval caterpillar") {
    auto [g1, d1] = interval_caterpillar_decomposition({{1, 2}, {3, 4}});
    CHECK(g1.edge_count() == 0);
    CHECK(mim_width(g1, d1).width == 0);

    auto [g2, d2] = interval_caterpillar_decomposition({{1, 3}, {2, 4}, {5, 6}});
    CHECK(g2.edge_count() == 1);
    CHECK(g2.adjacent(0, 1));
    CHECK(mim_width(g2, d2).width == 1);

    std::vector<Interval> nested;
    for (int i = 0; i < 6; ++i) nested.push_back({i, 20 - i});
    auto [g3, d3] = interval_caterpillar_decomposition(nested);
    CHECK(g3.same_edges(complete_graph(6)));
    CHECK(mim_width(g3, d3).width == 1);

    CHECK_THROWS_AS(interval_caterpillar_decomposition({{2, 2}, {1, 3}}), std::invalid_argument);
}

TEST_CASE("optimal decomposition") {
    CHECK(mim_width(path_graph(4), optimal_decomposition_bruteforce(path_graph(4))).width == 1);
    // every 2|3 cut of C5 carries an induced matching of size 2
    CHECK(mim_width(cycle_graph(5), optimal_decomposition_bruteforce(cycle_graph(5))).width == 2);
    CHECK(min_width_by_enumeration(cycle_graph(5)) == 2);

    Graph crown = complete_bipartite(3, 3);
    Graph k33m(6);
    for (const auto& e : crown.edges())
        if (e.v != e.u + 3) k33m.add_edge(e.u, e.v);
    int w = mim_width(k33m, optimal_decomposition_bruteforce(k33m)).width;
    CHECK(w == min_width_by_enumeration(k33m));
    CHECK(w == 2);  // recorded regression value

    CHECK_THROWS_AS(optimal_decomposition_bruteforce(path_graph(9)), std::invalid_argument);
    CHECK_THROWS_AS(optimal_decomposition_bruteforce(Graph(1)), DecompositionError);
}

TEST_CASE("optimal decomposition matches full enumeration") {
    std::mt19937 rng(5);
    for (int it = 0; it < 25; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = random_graph(rng, n, 0.5);
        auto d = optimal_decomposition_bruteforce(g);
        check_structure(d);
        CHECK(mim_width(g, d).width == min_width_by_enumeration(g));
    }
}

TEST_CASE("linear order decomposition") {
    Graph p3 = path_graph(3);
    auto d = linear_order_decomposition(p3, {0, 1, 2});
    CHECK(mim_width(p3, d).width == 1);
    check_structure(d);
    CHECK_THROWS_AS(linear_order_decomposition(p3, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(linear_order_decomposition(p3, {0, 1}), std::invalid_argument);

    Graph p8 = path_graph(8);
    auto fwd = mim_width(p8, linear_order_decomposition(p8, identity_order(8))).width;
    std::vector<int> rev = identity_order(8);
    std::reverse(rev.begin(), rev.end());
    auto back = mim_width(p8, linear_order_decomposition(p8, rev)).width;
    CHECK(fwd == back);
}

TEST_CASE("width is invariant under swapping children") {
    std::mt19937 rng(9);
    for (int it = 0; it < 20; ++it) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = random_graph(rng, n, 0.4);
        auto d = linear_order_decomposition(g, random_order(rng, n));
        int w = mim_width(g, d).width;
        for (int t = 0; t < d.node_count(); ++t)
            if (!d.is_leaf(t)) CHECK(mim_width(g, d.with_children_swapped(t)).width == w);
    }
}

TEST_CASE("restriction keeps a valid decomposition") {
    std::mt19937 rng(13);
    for (int it = 0; it < 30; ++it) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = random_graph(rng, n, 0.4);
        auto d = linear_order_decomposition(g, random_order(rng, n));
        VertexSet keep;
        for (int v = 0; v < n; ++v)
            if (rng() % 3) keep.insert(v);
        Graph sub = g.induced_subgraph(keep);
        auto r = d.restricted_to(keep);
        if (keep.size() < 2) {
            CHECK(r.empty());
            continue;
        }
        CHECK_NOTHROW(r.validate_for(sub));
        check_structure(r);
        CHECK(mim_width(sub, r).width <= mim_width(g, d).width);
    }
}

TEST_CASE("decomposition text round trip") {
    Graph c5 = cycle_graph(5);
    auto d = optimal_decomposition_bruteforce(c5);
    std::ostringstream out;
    write_decomposition(out, d);
    auto back = parse(out.str(), 5);
    std::ostringstream again;
    write_decomposition(again, back);
    CHECK(again.str() == out.str());

    auto sparse = parse("c node ids need not be dense\nroot 10\ni 10 7 8\nl 7 2\nl 8 1\n", 2);
    CHECK(sparse.node_count() == 3);
}

TEST_CASE("decomposition input errors") {
    CHECK_THROWS_AS(parse("root 0\ni 0 1 2\nl 1 1\nl 2 2\n", 3), DecompositionError);        // leaf count
    CHECK_THROWS_AS(parse("root 0\ni 0 1 2\nl 1 1\nl 2 1\n", 2), DecompositionError);        // vertex twice
    CHECK_THROWS_AS(parse("root 0\ni 0 1 5\nl 1 1\nl 2 2\n", 2), DecompositionError);        // unknown child
    CHECK_THROWS_AS(parse("u 9 0 1 2 3\nl 0 1\nl 1 2\nl 2 3\nl 3 4\n", 4), DecompositionError);  // degree four
    CHECK_THROWS_AS(parse("root 0\nx 0\n", 2), ParseError);
    CHECK_THROWS_AS(parse("root 0\ni 0 1 2\nl 1 1\nl 2 2\nu 1 2\n", 2), ParseError);
    CHECK_THROWS_AS(parse("i 0 1 2\nl 1 1\nl 2 2\n", 2), ParseError);
    auto d = parse("root 0\ni 0 1 2\nl 1 1\nl 2 2\n", 2);
    CHECK_THROWS_AS(d.validate_for(path_graph(3)), DecompositionError);
}
