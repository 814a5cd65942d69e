#include "fragment_dp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "mimpaths/fragments.hpp"
#include "mimpaths/lip.hpp"

namespace mimpaths::detail {

namespace {

// Union-find over vertex ids with per-vertex degree, reset by touched list.
struct Dsu {
    std::vector<int> parent;
    std::vector<int> degree;
    std::vector<int> touched;

    explicit Dsu(int n) : parent(static_cast<std::size_t>(n), -1), degree(static_cast<std::size_t>(n), 0) {}

    void reset() {
        for (int v : touched) {
            parent[static_cast<std::size_t>(v)] = -1;
            degree[static_cast<std::size_t>(v)] = 0;
        }
        touched.clear();
    }
    void touch(int v) {
        if (parent[static_cast<std::size_t>(v)] < 0) {
            parent[static_cast<std::size_t>(v)] = v;
            touched.push_back(v);
        }
    }
    bool has(int v) const { return parent[static_cast<std::size_t>(v)] >= 0; }
    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            auto& p = parent[static_cast<std::size_t>(v)];
            p = parent[static_cast<std::size_t>(p)];
            v = p;
        }
        return v;
    }
    // Adds an edge; false if it closes a cycle or raises a degree above two.
    bool add_path_edge(int x, int y) {
        touch(x);
        touch(y);
        if (++degree[static_cast<std::size_t>(x)] > 2 || ++degree[static_cast<std::size_t>(y)] > 2) return false;
        int a = find(x);
        int b = find(y);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
    void unite(int x, int y) {
        touch(x);
        touch(y);
        int a = find(x);
        int b = find(y);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
};

std::vector<Edge> merge_edges(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::vector<Edge> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct EdgeListHash {
    std::size_t operator()(const std::vector<Edge>& edges) const {
        std::size_t h = edges.size();
        for (const auto& e : edges) h ^= static_cast<std::size_t>(e.u) * 1000003U + static_cast<std::size_t>(e.v) + 0x9e3779b9U + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

struct FragmentDp::Prepared {
    int index = -1;
    const TableEntry* entry = nullptr;
    VertexSet vs;         // V(S)
    VertexSet min;        // M ∩ own side
    VertexSet mout_sib;   // M ∩ sibling side
    std::vector<Edge> r;     // S edges between the two children
    std::vector<Edge> rest;  // S edges leaving V_t
    std::vector<std::pair<int, int>> vertex_labels;
};

struct FragmentDp::Scratch {
    Dsu h;
    Dsu k;
    std::vector<int> deg_s;
    std::vector<int> label;
    std::vector<int> ground_first;
    std::vector<int> ground_count;

    explicit Scratch(int n)
        : h(n), k(n), deg_s(static_cast<std::size_t>(n), 0), label(static_cast<std::size_t>(n), 0),
          ground_first(static_cast<std::size_t>(n), -1), ground_count(static_cast<std::size_t>(n), 0) {}
};

FragmentDp::FragmentDp(const Graph& g, const BranchDecomposition& d, const TerminalMap* terminals)
    : g_(g), d_(d), terminals_(terminals), track_size_(terminals == nullptr), nodes_(static_cast<std::size_t>(d.node_count())) {}

FragmentDp::NodeInfo& FragmentDp::info(int t) {
    NodeInfo& nt = nodes_[static_cast<std::size_t>(t)];
    if (!nt.ready) {
        nt.inside = d_.vertices_below(t);
        nt.outside = d_.vertices_outside(t);
        nt.crossing = crossing_graph(g_, nt.inside, nt.outside);
        nt.width = max_induced_matching_size(nt.crossing);
        nt.cap = fragment_size_cap(nt.width);
        nt.ready = true;
    }
    return nt;
}

int FragmentDp::width_at(int t) { return info(t).width; }

const std::vector<MinimalVertexCover>& FragmentDp::covers_without(NodeInfo& nt, const VertexSet& fragment_vertices) {
    auto it = nt.covers.find(fragment_vertices);
    if (it != nt.covers.end()) return it->second;
    auto covers = enumerate_minimal_vertex_covers(nt.crossing.without(fragment_vertices), nt.width);
    return nt.covers.emplace(fragment_vertices, std::move(covers)).first->second;
}

int FragmentDp::label_of_terminal(int v) const {
    return terminals_ ? terminals_->pair_of[static_cast<std::size_t>(v)] : 0;
}

FragmentTable FragmentDp::leaf(int t) {
    NodeInfo& nt = info(t);
    const int v = d_.node(t).vertex;
    FragmentTable table(t);
    std::vector<int> nbrs = g_.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end());
    const int own = label_of_terminal(v);

    auto add = [&](std::vector<Edge> s, int j, int size, const std::vector<int>& labels) {
        PathFragment frag(std::move(s));
        for (const auto& cover : covers_without(nt, frag.vertices)) {
            FragmentKey key;
            key.s = frag.edges;
            key.m = cover.cover;
            key.labels = labels;
            key.j = j;
            table.add(key, track_size_ ? size : 0);
        }
    };

    // Single crossing edge: v is an endpoint of its path.
    for (int u : nbrs) {
        if (!track_size_) {
            if (own == 0) continue;
            int other = label_of_terminal(u);
            if (other != 0 && terminals_->partner[static_cast<std::size_t>(v)] != u) continue;
            add({Edge{v, u}}, 0, 0, {own});
        } else {
            add({Edge{v, u}}, 1, 2, {});
        }
    }
    // Two crossing edges with v in the middle.
    for (std::size_t x = 0; x < nbrs.size(); ++x)
        for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
            int w1 = nbrs[x];
            int w2 = nbrs[y];
            if (track_size_) {
                add({Edge{v, w1}, Edge{v, w2}}, 0, 3, {});
                continue;
            }
            if (own != 0) continue;
            int l1 = label_of_terminal(w1);
            int l2 = label_of_terminal(w2);
            if (l1 == 0 && l2 == 0) {
                for (int i = 1; i <= terminals_->pair_count; ++i) add({Edge{v, w1}, Edge{v, w2}}, 0, 0, {i});
            } else if (l1 == 0 || l2 == 0 || l1 == l2) {
                add({Edge{v, w1}, Edge{v, w2}}, 0, 0, {std::max(l1, l2)});
            }
        }
    // No crossing edge used: v is not part of the partial solution.
    if (own == 0) add({}, 0, 0, {});
    return table;
}

bool FragmentDp::combine(const NodeInfo& nt, const VertexSet& va, const VertexSet& vb, const Prepared& pa,
                         const Prepared& pb, Scratch& sc, FragmentKey& out) const {
    // Covers: intermediate vertices on either side must stay non-adjacent.
    if (!pa.mout_sib.is_subset_of(pb.min) || !pb.mout_sib.is_subset_of(pa.min)) return false;
    if (!g_.neighbors_in(pb.vs - pa.vs, va).is_subset_of(pa.min)) return false;
    if (!g_.neighbors_in(pa.vs - pb.vs, vb).is_subset_of(pb.min)) return false;

    std::vector<Edge> s = merge_edges(pa.rest, pb.rest);
    VertexSet vs;
    for (const auto& e : s) {
        vs.insert(e.u);
        vs.insert(e.v);
    }
    if (static_cast<int>(vs.size()) > nt.cap) return false;

    sc.h.reset();
    sc.k.reset();
    struct Cleanup {
        Scratch& sc;
        std::vector<int> verts;
        ~Cleanup() {
            for (int v : verts) {
                sc.deg_s[static_cast<std::size_t>(v)] = 0;
                sc.label[static_cast<std::size_t>(v)] = 0;
                sc.ground_first[static_cast<std::size_t>(v)] = -1;
                sc.ground_count[static_cast<std::size_t>(v)] = 0;
            }
        }
    } cleanup{sc, {}};

    for (const auto& e : s) {
        ++sc.deg_s[static_cast<std::size_t>(e.u)];
        ++sc.deg_s[static_cast<std::size_t>(e.v)];
        cleanup.verts.push_back(e.u);
        cleanup.verts.push_back(e.v);
    }
    // S must be induced in the crossing graph of t.
    bool induced = true;
    (vs & nt.inside).for_each([&](int u) {
        if (induced && static_cast<int>((g_.neighbor_set(u) & vs & nt.outside).size()) != sc.deg_s[static_cast<std::size_t>(u)])
            induced = false;
    });
    if (!induced) return false;

    // The combined partial solution, with child-internal subpaths contracted, must be a path forest.
    for (const auto* edges : {&pa.r, &pa.rest, &pb.rest})
        for (const auto& e : *edges)
            if (!sc.h.add_path_edge(e.u, e.v)) return false;
    for (const auto* pairs : {&pa.entry->key.q, &pb.entry->key.q})
        for (auto [x, y] : *pairs)
            if (!sc.h.add_path_edge(x, y)) return false;
    cleanup.verts.insert(cleanup.verts.end(), sc.h.touched.begin(), sc.h.touched.end());

    if (!track_size_) {
        auto put = [&](int v, int l) {
            int root = sc.h.find(v);
            int& cur = sc.label[static_cast<std::size_t>(root)];
            if (cur == 0) cur = l;
            return cur == l;
        };
        for (const auto* labels : {&pa.vertex_labels, &pb.vertex_labels})
            for (auto [v, l] : *labels)
                if (!put(v, l)) return false;
        for (int v : sc.h.touched) {
            int l = label_of_terminal(v);
            if (l != 0 && !put(v, l)) return false;
        }
    }

    // Inside skeleton: R plus both pairings; its components give the new pairing.
    for (int v : sc.h.touched)
        if (nt.inside.contains(v)) sc.k.touch(v);
    for (const auto& e : pa.r) sc.k.unite(e.u, e.v);
    for (const auto* pairs : {&pa.entry->key.q, &pb.entry->key.q})
        for (auto [x, y] : *pairs) sc.k.unite(x, y);

    std::vector<std::pair<int, int>> q;
    for (int v : sc.k.touched) {
        bool in_d = vs.contains(v) && sc.deg_s[static_cast<std::size_t>(v)] == 1;
        bool ground = track_size_ ? in_d : (in_d != (label_of_terminal(v) != 0));
        if (!ground) continue;
        int root = sc.k.find(v);
        int& count = sc.ground_count[static_cast<std::size_t>(root)];
        int& first = sc.ground_first[static_cast<std::size_t>(root)];
        if (++count == 1) first = v;
        else if (count == 2) q.emplace_back(std::min(first, v), std::max(first, v));
        else return false;
    }
    for (int v : sc.k.touched) {
        if (sc.k.find(v) != v) continue;
        if (sc.ground_count[static_cast<std::size_t>(v)] == 1 && !track_size_) return false;
    }
    std::sort(q.begin(), q.end());

    out.s = std::move(s);
    out.q = std::move(q);
    out.labels.clear();
    out.j = 0;
    if (track_size_) {
        out.j = pa.entry->key.j + pb.entry->key.j;
        if (out.j > 2) return false;
        return lip_validate_index(out.s, out.q, 0, out.j, nt.inside) != IndexStatus::reject;
    }

    for (const auto& comp : fragment_components(out.s)) out.labels.push_back(sc.label[static_cast<std::size_t>(sc.h.find(comp.front()))]);
    // A terminal outside V_t ends its path on the single crossing edge it uses.
    bool ok = true;
    (vs & nt.outside).for_each([&](int v) {
        if (label_of_terminal(v) != 0 && sc.deg_s[static_cast<std::size_t>(v)] != 1) ok = false;
    });
    if (!ok) return false;
    if (std::find(out.labels.begin(), out.labels.end(), 0) != out.labels.end()) return false;
    for (auto [p, r] : out.q) {
        int i = label_of_terminal(p);
        if (i != 0 && terminals_->partner[static_cast<std::size_t>(p)] == r &&
            std::find(out.labels.begin(), out.labels.end(), i) != out.labels.end())
            return false;
    }
    // A pair joined inside the processed part is a whole path: no other component may carry its label.
    for (int i = 1; i <= terminals_->pair_count; ++i) {
        auto [x, y] = terminals_->pairs[static_cast<std::size_t>(i - 1)];
        if (!sc.h.has(x) || !sc.h.has(y) || sc.h.find(x) != sc.h.find(y)) continue;
        int root = sc.h.find(x);
        for (int u : sc.h.touched)
            if (sc.h.find(u) == u && u != root && sc.label[static_cast<std::size_t>(u)] == i) return false;
    }
    return true;
}

FragmentTable FragmentDp::join(int t, const FragmentTable& ta, const FragmentTable& tb) {
    NodeInfo& nt = info(t);
    const VertexSet& va = d_.vertices_below(ta.node());
    const VertexSet& vb = d_.vertices_below(tb.node());

    auto prepare = [&](const FragmentTable& table, const VertexSet& own, const VertexSet& sib) {
        std::vector<Prepared> out;
        out.reserve(table.entries().size());
        for (std::size_t idx = 0; idx < table.entries().size(); ++idx) {
            const auto& e = table.entries()[idx];
            Prepared p;
            p.index = static_cast<int>(idx);
            p.entry = &e;
            for (const auto& edge : e.key.s) {
                p.vs.insert(edge.u);
                p.vs.insert(edge.v);
                if (nt.inside.contains(edge.u) && nt.inside.contains(edge.v)) p.r.push_back(edge);
                else p.rest.push_back(edge);
            }
            p.min = e.key.m & own;
            p.mout_sib = e.key.m & sib;
            if (!track_size_) {
                auto comps = fragment_components(e.key.s);
                for (std::size_t c = 0; c < comps.size(); ++c)
                    for (int v : comps[c]) p.vertex_labels.emplace_back(v, e.key.labels[c]);
            }
            out.push_back(std::move(p));
        }
        return out;
    };
    auto pa_list = prepare(ta, va, vb);
    auto pb_list = prepare(tb, vb, va);

    std::unordered_map<std::vector<Edge>, std::vector<std::size_t>, EdgeListHash> buckets;
    for (std::size_t i = 0; i < pb_list.size(); ++i) buckets[pb_list[i].r].push_back(i);

    Scratch sc(g_.vertex_count());
    std::unordered_map<FragmentKey, std::map<int, BackPointer>, FragmentKeyHash> groups;
    FragmentKey combined;
    for (const auto& pa : pa_list) {
        auto it = buckets.find(pa.r);
        if (it == buckets.end()) continue;
        for (std::size_t bi : it->second) {
            const auto& pb = pb_list[bi];
            if (!combine(nt, va, vb, pa, pb, sc, combined)) continue;
            combined.m = pa.min | pb.min;
            auto& sizes = groups[combined];
            const int shared = static_cast<int>((pa.vs & pb.vs).size());
            for (const auto& [ia, bpa] : pa.entry->sizes) {
                (void)bpa;
                for (const auto& [ib, bpb] : pb.entry->sizes) {
                    (void)bpb;
                    int i = track_size_ ? ia + ib - shared : 0;
                    if (i > g_.vertex_count()) continue;
                    if (track_size_ && combined.s.empty() && combined.j == 0 && i != 0) continue;
                    sizes.emplace(i, BackPointer{ta.node(), pa.index, ia, tb.node(), pb.index, ib});
                }
            }
        }
    }

    // Choose the cover at t among those avoiding everything the children avoid.
    std::vector<const decltype(groups)::value_type*> ordered;
    ordered.reserve(groups.size());
    for (const auto& g : groups) ordered.push_back(&g);
    std::sort(ordered.begin(), ordered.end(), [](const auto* x, const auto* y) {
        const FragmentKey& a = x->first;
        const FragmentKey& b = y->first;
        if (a.s != b.s) return a.s < b.s;
        if (a.q != b.q) return a.q < b.q;
        if (a.labels != b.labels) return a.labels < b.labels;
        if (a.j != b.j) return a.j < b.j;
        return a.m < b.m;
    });
    FragmentTable table(t);
    for (const auto* group : ordered) {
        const FragmentKey& gk = group->first;
        VertexSet vs;
        for (const auto& e : gk.s) {
            vs.insert(e.u);
            vs.insert(e.v);
        }
        FragmentKey key = gk;
        for (const auto& cover : covers_without(nt, vs)) {
            if (!cover.m_in.is_subset_of(gk.m)) continue;
            key.m = cover.cover;
            for (const auto& [i, bp] : group->second) table.add(key, i, bp);
        }
    }
    return table;
}

std::vector<FragmentTable> FragmentDp::run(bool keep_all, std::vector<std::size_t>* entries_per_node) {
    std::vector<FragmentTable> tables(static_cast<std::size_t>(d_.node_count()));
    if (entries_per_node) entries_per_node->assign(static_cast<std::size_t>(d_.node_count()), 0);
    for (int t : d_.postorder()) {
        const auto& nd = d_.node(t);
        auto& slot = tables[static_cast<std::size_t>(t)];
        if (nd.is_leaf()) {
            slot = leaf(t);
        } else {
            slot = join(t, tables[static_cast<std::size_t>(nd.left)], tables[static_cast<std::size_t>(nd.right)]);
            if (!keep_all) {
                tables[static_cast<std::size_t>(nd.left)] = FragmentTable(nd.left);
                tables[static_cast<std::size_t>(nd.right)] = FragmentTable(nd.right);
            }
        }
        if (entries_per_node) (*entries_per_node)[static_cast<std::size_t>(t)] = slot.one_entries();
    }
    return tables;
}

VertexSet collect_solution(const std::vector<FragmentTable>& tables, const BranchDecomposition& d, int t, int entry,
                           int size) {
    VertexSet out(static_cast<std::size_t>(d.vertex_count()));
    std::vector<std::tuple<int, int, int>> stack{{t, entry, size}};
    while (!stack.empty()) {
        auto [node, idx, sz] = stack.back();
        stack.pop_back();
        const auto& e = tables[static_cast<std::size_t>(node)].entries()[static_cast<std::size_t>(idx)];
        if (d.is_leaf(node)) {
            if (!e.key.s.empty()) out.insert(d.node(node).vertex);
            continue;
        }
        auto it = e.sizes.find(sz);
        if (it == e.sizes.end()) throw std::logic_error("missing back-pointer");
        const BackPointer& bp = it->second;
        stack.emplace_back(bp.left_node, bp.left_entry, bp.left_size);
        stack.emplace_back(bp.right_node, bp.right_entry, bp.right_size);
    }
    return out;
}

}  // namespace mimpaths::detail
