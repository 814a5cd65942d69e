#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "mimpaths/lip.hpp"
#include "test_util.hpp"

using namespace mimpaths;
using namespace testing_util;

namespace {

// Longest induced path by checking every vertex subset.
int subset_longest_induced_path(const Graph& g) {
    const int n = g.vertex_count();
    int best = n > 0 ? 1 : 0;
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
        int size = std::popcount(mask);
        if (size <= best) continue;
        int edges = 0, ones = 0;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (!(mask >> v & 1U)) continue;
            int deg = 0;
            for (int u : g.neighbors(v))
                if (mask >> u & 1U) ++deg;
            if (deg == 0 || deg > 2) ok = false;
            if (deg == 1) ++ones;
            edges += deg;
        }
        if (!ok || edges / 2 != size - 1 || ones != 2) continue;
        // connected, otherwise a path plus cycles passes the counts
        unsigned seen = mask & (~mask + 1U);
        for (int round = 0; round < n; ++round)
            for (int v = 0; v < n; ++v)
                if (seen >> v & 1U)
                    for (int u : g.neighbors(v))
                        if (mask >> u & 1U) seen |= 1U << u;
        if (seen == mask) best = size;
    }
    return best;
}

std::string key_text(const FragmentKey& k) {
    std::ostringstream out;
    for (const auto& e : k.s) out << e.u << '-' << e.v << ' ';
    out << "| ";
    for (int v : k.m.to_vector()) out << v << ' ';
    out << "| ";
    for (auto [a, b] : k.q) out << a << '~' << b << ' ';
    out << "| " << k.j;
    return out.str();
}

std::set<std::string> entry_set(const LipTable& t) {
    std::set<std::string> out;
    for (const auto& e : t.entries())
        for (const auto& [i, bp] : e.sizes) {
            (void)bp;
            out.insert(key_text(e.key) + " | " + std::to_string(i));
        }
    return out;
}

std::vector<LipTable> all_tables(const Graph& g, const BranchDecomposition& d) {
    std::vector<LipTable> tables(static_cast<std::size_t>(d.node_count()));
    for (int t : d.postorder()) {
        const auto& nd = d.node(t);
        tables[static_cast<std::size_t>(t)] =
            nd.is_leaf() ? lip_leaf_table(g, d, t)
                         : lip_join(g, d, t, tables[static_cast<std::size_t>(nd.left)], tables[static_cast<std::size_t>(nd.right)]);
    }
    return tables;
}

}  // namespace

TEST_CASE("leaf tables") {
    SUBCASE("vertex with two neighbors across the cut") {
        Graph p3 = path_graph(3);
        auto d = linear_order_decomposition(p3, {1, 0, 2});
        auto table = lip_leaf_table(p3, d, d.leaf_of_vertex(1));
        int one = 0, two = 0, none = 0;
        for (const auto& e : table.entries()) {
            CHECK(e.key.q.empty());
            CHECK(e.sizes.size() == 1);
            if (e.key.s.size() == 1) {
                ++one;
                CHECK(e.key.j == 1);
                CHECK(e.sizes.begin()->first == 2);
                CHECK(e.key.m.empty());
            } else if (e.key.s.size() == 2) {
                ++two;
                CHECK(e.key.j == 0);
                CHECK(e.sizes.begin()->first == 3);
                CHECK(e.key.m.empty());
            } else {
                ++none;
                CHECK(e.sizes.begin()->first == 0);
                bool cover_ok = e.key.m == VertexSet(3, {1}) || e.key.m == VertexSet(3, {0, 2});
                CHECK(cover_ok);
            }
        }
        CHECK(one == 2);
        CHECK(two == 1);
        CHECK(none == 2);
    }
    SUBCASE("isolated vertex") {
        Graph g(3, {{1, 2}});
        auto d = linear_order_decomposition(g, {0, 1, 2});
        auto table = lip_leaf_table(g, d, d.leaf_of_vertex(0));
        REQUIRE(table.entries().size() == 1);
        const auto& e = table.entries()[0];
        CHECK(e.key.s.empty());
        CHECK(e.key.m.empty());
        CHECK(e.key.j == 0);
        CHECK(e.sizes.count(0) == 1);
    }
    SUBCASE("single edge graph") {
        Graph k2 = path_graph(2);
        auto d = linear_order_decomposition(k2, {0, 1});
        FragmentKey key;
        key.s = {Edge(0, 1)};
        key.j = 1;
        auto table = lip_leaf_table(k2, d, d.leaf_of_vertex(0));
        const auto* e = table.find(key);
        REQUIRE(e != nullptr);
        CHECK(e->sizes.count(2) == 1);
    }
}

TEST_CASE("index validation") {
    VertexSet inside(4, {0, 1});
    CHECK(lip_validate_index({}, {}, 0, 0, inside) == IndexStatus::special_case_3);
    CHECK(lip_validate_index({}, {}, 2, 0, inside) == IndexStatus::reject);
    CHECK(lip_validate_index({}, {}, 3, 2, inside) == IndexStatus::special_case_1);
    CHECK(lip_validate_index({}, {}, 1, 1, inside) == IndexStatus::reject);
    // a1=0, a2=1 inside, b1=2, b2=3 outside; S = a1-b1, a2-b1, paired a1~a2 closes a cycle
    CHECK(lip_validate_index({Edge(0, 2), Edge(1, 2)}, {{0, 1}}, 3, 0, inside) == IndexStatus::reject);
    CHECK(lip_validate_index({Edge(0, 2)}, {}, 2, 1, inside) == IndexStatus::valid);
    CHECK(lip_validate_index({Edge(0, 2)}, {}, 2, 0, inside) == IndexStatus::reject);
    CHECK(lip_validate_index({Edge(0, 2), Edge(1, 2)}, {}, 3, 2, inside) == IndexStatus::special_case_2);
    CHECK(lip_validate_index({Edge(0, 2), Edge(1, 3)}, {}, 4, 2, inside) == IndexStatus::valid);
    CHECK(lip_validate_index({Edge(0, 2), Edge(1, 3)}, {{0, 1}}, 4, 0, inside) == IndexStatus::valid);
}

TEST_CASE("root tables") {
    auto done = [](int j) {
        FragmentKey k;
        k.j = j;
        return k;
    };
    SUBCASE("P3") {
        Graph p3 = path_graph(3);
        auto d = linear_order_decomposition(p3, {0, 1, 2});
        auto tables = all_tables(p3, d);
        const auto* e = tables[static_cast<std::size_t>(d.root())].find(done(2));
        REQUIRE(e != nullptr);
        CHECK(e->sizes.count(3) == 1);
    }
    SUBCASE("K3") {
        Graph k3 = complete_graph(3);
        auto d = linear_order_decomposition(k3, {0, 1, 2});
        auto tables = all_tables(k3, d);
        const auto* e = tables[static_cast<std::size_t>(d.root())].find(done(2));
        REQUIRE(e != nullptr);
        CHECK(e->sizes.rbegin()->first == subset_longest_induced_path(k3));
        CHECK(e->sizes.rbegin()->first == 2);
    }
    SUBCASE("two disjoint edges") {
        Graph g(4, {{0, 1}, {2, 3}});
        auto d = linear_order_decomposition(g, {0, 2, 1, 3});
        auto tables = all_tables(g, d);
        const auto* e = tables[static_cast<std::size_t>(d.root())].find(done(2));
        REQUIRE(e != nullptr);
        CHECK(e->sizes.count(2) == 1);
        CHECK(e->sizes.rbegin()->first == 2);
        CHECK(subset_longest_induced_path(g) == 2);
    }
}

TEST_CASE("every root entry has empty fragment, cover and pairing") {
    std::mt19937 rng(31);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = random_graph(rng, n, 0.4);
        auto d = linear_order_decomposition(g, random_order(rng, n));
        auto tables = all_tables(g, d);
        for (const auto& e : tables[static_cast<std::size_t>(d.root())].entries()) {
            CHECK(e.key.s.empty());
            CHECK(e.key.m.empty());
            CHECK(e.key.q.empty());
        }
    }
}

TEST_CASE("join does not depend on child order") {
    std::mt19937 rng(37);
    for (int it = 0; it < 30; ++it) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = random_graph(rng, n, 0.45);
        auto d = linear_order_decomposition(g, random_order(rng, n));
        auto tables = all_tables(g, d);
        for (int t = 0; t < d.node_count(); ++t) {
            if (d.is_leaf(t)) continue;
            const auto& a = tables[static_cast<std::size_t>(d.node(t).left)];
            const auto& b = tables[static_cast<std::size_t>(d.node(t).right)];
            CHECK(entry_set(lip_join(g, d, t, a, b)) == entry_set(lip_join(g, d, t, b, a)));
        }
    }
}

TEST_CASE("solver examples") {
    Graph c5 = cycle_graph(5);
    CHECK(lip_solve(c5, linear_order_decomposition(c5, identity_order(5))).length == 4);
    CHECK(subset_longest_induced_path(c5) == 4);
    Graph k4 = complete_graph(4);
    CHECK(lip_solve(k4, optimal_decomposition_bruteforce(k4)).length == 2);
    for (int n = 2; n <= 9; ++n) {
        Graph p = path_graph(n);
        CHECK(lip_solve(p, linear_order_decomposition(p, identity_order(n))).length == n);
    }
    CHECK(lip_solve(Graph(0), BranchDecomposition()).length == 0);
    CHECK(lip_solve(Graph(1), BranchDecomposition(), true).path == std::vector<int>{0});
    Graph edgeless(5);
    CHECK(lip_solve(edgeless, linear_order_decomposition(edgeless, identity_order(5))).length == 1);
    CHECK_THROWS_AS(lip_solve(path_graph(3), linear_order_decomposition(path_graph(4), identity_order(4))), DecompositionError);
}

TEST_CASE("solver agrees with subset search under both decomposition kinds") {
    std::mt19937 rng(41);
    for (int it = 0; it < 120; ++it) {
        int n = 2 + static_cast<int>(rng() % 9);
        double p = 0.2 * (1 + static_cast<int>(rng() % 3));
        Graph g = random_graph(rng, n, p);
        int expected = subset_longest_induced_path(g);
        auto lin = lip_solve(g, linear_order_decomposition(g, random_order(rng, n)), true);
        CHECK(lin.length == expected);
        CHECK(static_cast<int>(lin.path.size()) == expected);
        CHECK(is_induced_path(g, lin.path));
        if (n <= 7) CHECK(lip_solve(g, optimal_decomposition_bruteforce(g), true).length == expected);
    }
}

TEST_CASE("answers stay the same with and without witness") {
    Graph g = grid_graph(3, 3);
    auto d = linear_order_decomposition(g, identity_order(9));
    auto plain = lip_solve(g, d, false);
    auto with = lip_solve(g, d, true);
    CHECK(plain.length == with.length);
    CHECK(plain.entries_per_node == with.entries_per_node);
    CHECK(with.length == subset_longest_induced_path(g));
}
