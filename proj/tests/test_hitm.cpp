#include <doctest.h>

#include <functional>
#include <random>

#include "mimpaths/hitm.hpp"
#include "mimpaths/subdivision.hpp"
#include "test_util.hpp"

using namespace mimpaths;
using namespace testing_util;

namespace {

// h with edge e replaced by a path with extra[e] inner vertices.
Graph subdivide(const Graph& h, const std::vector<int>& extra) {
    int n = h.vertex_count();
    for (int x : extra) n += x;
    Graph s(n);
    int next = h.vertex_count();
    for (std::size_t e = 0; e < h.edges().size(); ++e) {
        int prev = h.edges()[e].u;
        for (int k = 0; k < extra[e]; ++k) {
            s.add_edge(prev, next);
            prev = next++;
        }
        s.add_edge(prev, h.edges()[e].v);
    }
    return s;
}

// Backtracking search for an induced copy of `small` in g.
bool has_induced_copy(const Graph& g, const Graph& small) {
    const int k = small.vertex_count();
    std::vector<int> image(static_cast<std::size_t>(k), -1);
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    std::function<bool(int)> place = [&](int i) {
        if (i == k) return true;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            bool fits = true;
            for (int j = 0; j < i && fits; ++j)
                if (small.adjacent(i, j) != g.adjacent(v, image[static_cast<std::size_t>(j)])) fits = false;
            if (!fits) continue;
            used[static_cast<std::size_t>(v)] = 1;
            image[static_cast<std::size_t>(i)] = v;
            if (place(i + 1)) return true;
            used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    return place(0);
}

bool subdivision_search(const Graph& g, const Graph& h) {
    const int budget = g.vertex_count() - h.vertex_count();
    if (budget < 0) return false;
    std::vector<int> extra(h.edges().size(), 0);
    std::function<bool(std::size_t, int)> rec = [&](std::size_t e, int left) {
        if (e == extra.size()) return has_induced_copy(g, subdivide(h, extra));
        for (int x = 0; x <= left; ++x) {
            extra[e] = x;
            if (rec(e + 1, left - x)) return true;
        }
        return false;
    };
    return rec(0, budget);
}

long long count_assignments(const Graph& g, const Graph& h) {
    long long c = 0;
    hitm_enumerate_assignments(g, h, [&](const BranchAssignment&) {
        ++c;
        return true;
    });
    return c;
}

}  // namespace

TEST_CASE("subdivision recognition") {
    CHECK(is_subdivision_of(path_graph(4), pattern_p3()));
    CHECK(is_subdivision_of(cycle_graph(5), pattern_k3()));
    CHECK(is_subdivision_of(cycle_graph(5), pattern_c4()));
    CHECK_FALSE(is_subdivision_of(cycle_graph(3), pattern_c4()));
    CHECK_FALSE(is_subdivision_of(complete_graph(4), pattern_c4()));
    CHECK_FALSE(is_subdivision_of(path_graph(4), pattern_claw()));
    CHECK(is_subdivision_of(subdivide(pattern_paw(), {0, 2, 1, 3}), pattern_paw()));
    CHECK_FALSE(is_subdivision_of(subdivide(pattern_paw(), {0, 2, 1, 3}), pattern_c4()));
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_subdivision_of(two_triangles, pattern_k3()));
    CHECK(is_induced_subdivision(cycle_graph(6), VertexSet::full(6), pattern_k3()));
}

TEST_CASE("assignment enumeration") {
    CHECK(count_assignments(pattern_k2(), pattern_k2()) == 2);
    hitm_enumerate_assignments(pattern_k2(), pattern_k2(), [](const BranchAssignment& a) {
        CHECK(a.neighbor[0][0] == a.branch[1]);
        CHECK(a.neighbor[0][1] == a.branch[0]);
        return true;
    });
    CHECK(count_assignments(path_graph(3), pattern_k3()) == 0);
    Graph single(1);
    CHECK(count_assignments(cycle_graph(5), single) == 5);
    hitm_enumerate_assignments(complete_graph(5), pattern_claw(), [](const BranchAssignment& a) {
        std::vector<int> ys{a.neighbor[0][0], a.neighbor[1][0], a.neighbor[2][0]};
        std::sort(ys.begin(), ys.end());
        CHECK(std::adjacent_find(ys.begin(), ys.end()) == ys.end());
        return true;
    });
}

TEST_CASE("preprocessing") {
    SUBCASE("edge realized directly") {
        BranchAssignment a{{0, 1}, {{1, 0}}};
        auto r = hitm_preprocess(path_graph(2), pattern_k2(), a);
        REQUIRE(r.has_value());
        CHECK(r->pairs.empty());
    }
    SUBCASE("shared neighbor is dropped with its neighborhood") {
        // v_x = 0, v_y = 2, w = 1, extra neighbor 3 of w
        Graph g(4, {{0, 1}, {1, 2}, {1, 3}});
        BranchAssignment a{{0, 2}, {{1, 1}}};
        auto r = hitm_preprocess(g, pattern_k2(), a);
        REQUIRE(r.has_value());
        CHECK(r->pairs.empty());
        CHECK(r->fixed == VertexSet(4, {0, 1, 2}));
        CHECK_FALSE(r->keep.contains(3));
    }
    SUBCASE("stray edge inside the branch neighborhood") {
        // P3 pattern x0-x1-x2 on branch vertices 0, 3, 6 with neighbors; 1 ~ 4 is extra
        Graph g(8, {{0, 1}, {3, 2}, {3, 4}, {6, 5}, {1, 2}, {4, 5}, {1, 4}, {0, 7}});
        BranchAssignment a{{0, 3, 6}, {{1, 2}, {4, 5}}};
        CHECK_FALSE(hitm_preprocess(g, pattern_p3(), a).has_value());
    }
    SUBCASE("non-adjacent pattern pair realized by a graph edge") {
        Graph g = complete_graph(3);
        BranchAssignment a{{0, 1, 2}, {{1, 0}, {2, 1}}};
        CHECK_FALSE(hitm_preprocess(g, pattern_p3(), a).has_value());
    }
}

TEST_CASE("solver examples") {
    Graph c6 = cycle_graph(6);
    CHECK(hitm_solve(c6, linear_order_decomposition(c6, identity_order(6)), pattern_k3()).found);
    for (int n = 2; n <= 8; ++n) {
        Graph p = path_graph(n);
        CHECK_FALSE(hitm_solve(p, linear_order_decomposition(p, identity_order(n)), pattern_claw()).found);
    }
    Graph c5 = cycle_graph(5);
    CHECK(hitm_solve(c5, linear_order_decomposition(c5, identity_order(5)), pattern_c4()).found);
    CHECK(subdivision_search(c5, pattern_c4()));
    Graph k4 = complete_graph(4);
    CHECK_FALSE(hitm_solve(k4, linear_order_decomposition(k4, identity_order(4)), pattern_c4()).found);
    CHECK_FALSE(subdivision_search(k4, pattern_c4()));

    Graph big(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}});
    CHECK_THROWS_AS(hitm_solve(k4, linear_order_decomposition(k4, identity_order(4)), big), std::invalid_argument);
    CHECK_NOTHROW(hitm_solve(k4, linear_order_decomposition(k4, identity_order(4)), big, false, 7));
}

TEST_CASE("solver agrees with explicit subdivision search and witnesses verify") {
    std::mt19937 rng(59);
    for (int it = 0; it < 40; ++it) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = random_graph(rng, n, 0.2 * (1 + static_cast<int>(rng() % 3)));
        auto d = linear_order_decomposition(g, random_order(rng, n));
        for (const auto& [name, h] : standard_patterns()) {
            CAPTURE(name);
            bool expected = subdivision_search(g, h);
            auto r = hitm_solve(g, d, h, true);
            CHECK(r.found == expected);
            if (r.found) CHECK(is_induced_subdivision(g, VertexSet::from_range(static_cast<std::size_t>(n), r.witness), h));
        }
    }
}

TEST_CASE("removing a pattern edge rarely loses a yes answer") {
    std::mt19937 rng(61);
    int violations = 0, comparisons = 0;
    for (int it = 0; it < 30; ++it) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = random_graph(rng, n, 0.4);
        auto d = linear_order_decomposition(g, random_order(rng, n));
        if (!hitm_solve(g, d, pattern_c4()).found) continue;
        ++comparisons;
        if (!hitm_solve(g, d, pattern_p3()).found) ++violations;
    }
    // C4 minus an edge is P4, itself a subdivision of P3
    CHECK(violations == 0);
    MESSAGE("C4 yes instances compared: " << comparisons);
}
