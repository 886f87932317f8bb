#include "dmt/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "dmt/induce.hpp"
#include "dmt/invert.hpp"
#include "dmt/json_io.hpp"
#include "dmt/realize.hpp"

namespace dmt {

MultiGraph to_multigraph(const SmallGraph& sg) {
    MultiGraph g;
    for (int i = 0; i < sg.n; ++i) g.add_vertex("v" + std::to_string(i));
    int e = 0;
    for (auto [u, v] : sg.edges)
        g.add_edge("e" + std::to_string(e++), "v" + std::to_string(u),
                   "v" + std::to_string(v));
    return g;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList canonical_edges(const EdgeList& edges, const std::vector<int>& perm) {
    EdgeList out;
    out.reserve(edges.size());
    for (auto [u, v] : edges) out.push_back(std::pair<int, int>(std::minmax(perm[u], perm[v])));
    std::sort(out.begin(), out.end());
    return out;
}

EdgeList canonical_form(int n, const EdgeList& edges) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    EdgeList best = canonical_edges(edges, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        EdgeList cand = canonical_edges(edges, perm);
        if (cand < best) best = cand;
    }
    return best;
}

bool edges_connected(int n, const EdgeList& edges) {
    if (n == 0) return false;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    for (auto [u, v] : edges) parent[find(u)] = find(v);
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

}  // namespace

std::vector<SmallGraph> enumerate_multigraphs(const EnumerationBudget& budget) {
    std::vector<SmallGraph> out;
    for (int n = 1; n <= budget.max_vertices; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});

        std::set<EdgeList> seen;
        std::vector<int> mult(pairs.size(), 0);
        std::function<void(size_t, int)> rec = [&](size_t idx, int budget_left) {
            if (idx == pairs.size()) {
                EdgeList edges;
                for (size_t p = 0; p < pairs.size(); ++p)
                    for (int k = 0; k < mult[p]; ++k) edges.push_back(pairs[p]);
                if (!edges_connected(n, edges)) return;
                EdgeList canon = canonical_form(n, edges);
                if (seen.insert(canon).second) out.push_back({n, canon});
                return;
            }
            for (int k = 0; k <= budget_left; ++k) {
                mult[idx] = k;
                rec(idx + 1, budget_left - k);
            }
            mult[idx] = 0;
        };
        rec(0, budget.max_edges);
    }
    return out;
}

std::vector<Dmf> enumerate_critical_dmfs(const MultiGraph& g) {
    int nv = g.n_vertices(), ne = g.n_edges();

    // vertex permutations that are graph automorphisms (multiplicity preserving)
    std::map<std::pair<int, int>, int> mult;
    for (int e = 0; e < ne; ++e) {
        auto [u, v] = g.endpoint_indices(e);
        ++mult[std::pair<int, int>(std::minmax(u, v))];
    }
    std::vector<std::vector<int>> autos;
    std::vector<int> perm(nv);
    for (int i = 0; i < nv; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (const auto& [p, m] : mult) {
            std::pair<int, int> img = std::minmax(perm[p.first], perm[p.second]);
            auto it = mult.find(img);
            if (it == mult.end() || it->second != m) { ok = false; break; }
        }
        if (ok) autos.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // parallel classes in a fixed order
    std::vector<std::pair<int, int>> class_keys;
    std::map<std::pair<int, int>, std::vector<int>> classes;
    for (int e = 0; e < ne; ++e) {
        auto [u, v] = g.endpoint_indices(e);
        std::pair<int, int> key = std::minmax(u, v);
        if (!classes.count(key)) class_keys.push_back(key);
        classes[key].push_back(e);
    }
    std::sort(class_keys.begin(), class_keys.end());

    // canonical key of a value assignment under one automorphism:
    // vertex ranks by image index, then per class (in image order) the
    // sorted edge ranks
    auto key_under = [&](const std::vector<int>& vrank, const std::vector<int>& erank,
                         const std::vector<int>& a) {
        std::vector<int> key;
        key.reserve(nv + ne + classes.size());
        std::vector<int> vimg(nv);
        for (int i = 0; i < nv; ++i) vimg[a[i]] = vrank[i];
        for (int i = 0; i < nv; ++i) key.push_back(vimg[i]);
        for (const auto& ck : class_keys) {
            // preimage class of ck under a
            std::vector<int> vals;
            for (const auto& [p, es] : classes) {
                std::pair<int, int> img = std::minmax(a[p.first], a[p.second]);
                if (img == ck)
                    for (int e : es) vals.push_back(erank[e]);
            }
            std::sort(vals.begin(), vals.end());
            key.insert(key.end(), vals.begin(), vals.end());
        }
        return key;
    };

    std::set<std::vector<int>> seen;
    std::vector<Dmf> out;

    std::vector<int> vorder(nv), eorder(ne);
    for (int i = 0; i < nv; ++i) vorder[i] = i;
    do {
        std::vector<int> vrank(nv);
        for (int i = 0; i < nv; ++i) vrank[vorder[i]] = i;
        for (int i = 0; i < ne; ++i) eorder[i] = i;
        do {
            std::vector<int> erank(ne);
            for (int i = 0; i < ne; ++i) erank[eorder[i]] = i;

            std::vector<int> best = key_under(vrank, erank, autos[0]);
            for (size_t a = 1; a < autos.size(); ++a) {
                auto k = key_under(vrank, erank, autos[a]);
                if (k < best) best = k;
            }
            if (!seen.insert(best).second) continue;

            Dmf f;
            for (int i = 0; i < nv; ++i)
                f.set(CellRef::vertex(g.vertex_name(i)), Rat(vrank[i]));
            for (int e = 0; e < ne; ++e)
                f.set(CellRef::edge(g.edge_name(e)), Rat(nv + erank[e]));
            out.push_back(std::move(f));
        } while (std::next_permutation(eorder.begin(), eorder.end()));
    } while (std::next_permutation(vorder.begin(), vorder.end()));
    return out;
}

namespace {

// Shape grammar: 0 = leaf, 1 = cycle node over child, 2 = binary (L, R).
struct Shape {
    int kind;
    int a = -1, b = -1;  // indices into the pool
};

struct ShapePool {
    std::vector<Shape> pool;
    // shapes_by_size[k] = pool indices of shapes with exactly k nodes
    std::map<int, std::vector<int>> by_size;

    void build(int max_nodes) {
        by_size[1] = {add({0})};
        for (int n = 2; n <= max_nodes; ++n) {
            std::vector<int> found;
            // cycle root over a non-leaf shape of size n-1
            for (int idx : by_size[n - 1])
                if (pool[idx].kind != 0) found.push_back(add({1, idx}));
            // binary root over ordered pairs of sizes (k, n-1-k)
            for (int k = 1; k <= n - 2; ++k)
                for (int ia : by_size[k])
                    for (int ib : by_size[n - 1 - k]) found.push_back(add({2, ia, ib}));
            by_size[n] = std::move(found);
        }
    }

    int add(Shape s) {
        pool.push_back(s);
        return static_cast<int>(pool.size()) - 1;
    }

    void materialize(int idx, Gmt& t, int parent, Chir chir, int& next_id) const {
        const Shape& s = pool[idx];
        std::string id = "n" + std::to_string(next_id++);
        int node = parent < 0 ? t.add_root(id, chir) : t.add_child(parent, id, chir);
        if (s.kind == 1) {
            materialize(s.a, t, node, chir, next_id);
        } else if (s.kind == 2) {
            materialize(s.a, t, node, Chir::L, next_id);
            materialize(s.b, t, node, Chir::R, next_id);
        }
    }
};

}  // namespace

std::vector<Gmt> enumerate_gmt_shapes(int max_nodes) {
    ShapePool pool;
    pool.build(max_nodes);
    std::vector<Gmt> out;
    for (int n = 1; n <= max_nodes; ++n)
        for (int idx : pool.by_size[n]) {
            Gmt t;
            int next_id = 0;
            pool.materialize(idx, t, -1, Chir::L, next_id);
            out.push_back(std::move(t));
        }
    return out;
}

std::vector<Order> enumerate_morse_orders(const Gmt& t) {
    // seqs(n): all label-ascending node sequences of the subtree at n.
    // A sequence starts with the same-chirality block's head and ends at n.
    std::function<std::vector<std::vector<int>>(int)> seqs = [&](int n) {
        std::vector<std::vector<int>> out;
        if (t.is_leaf(n)) {
            out.push_back({n});
            return out;
        }
        if (t.is_cycle_node(n)) {
            for (auto s : seqs(t.children(n)[0])) {
                s.push_back(n);
                out.push_back(std::move(s));
            }
            return out;
        }
        int same = t.children(n)[0], other = t.children(n)[1];
        if (t.chirality(same) != t.chirality(n)) std::swap(same, other);
        auto sa = seqs(same);
        auto sb = seqs(other);
        for (const auto& a : sa)
            for (const auto& b : sb) {
                // interleave keeping relative orders, head(a) first
                size_t la = a.size(), lb = b.size();
                std::vector<bool> pick(la - 1 + lb, false);  // true = from b
                std::fill(pick.end() - lb, pick.end(), true);
                std::sort(pick.begin(), pick.end());
                do {
                    std::vector<int> s{a[0]};
                    size_t ia = 1, ib = 0;
                    for (bool fromb : pick) s.push_back(fromb ? b[ib++] : a[ia++]);
                    s.push_back(n);
                    out.push_back(std::move(s));
                } while (std::next_permutation(pick.begin(), pick.end()));
            }
        return out;
    };

    std::vector<Order> orders;
    for (const auto& s : seqs(t.root())) {
        Order o;
        for (size_t i = 0; i < s.size(); ++i) o[t.id(s[i])] = static_cast<int>(i);
        orders.push_back(std::move(o));
    }
    return orders;
}

std::vector<std::pair<Gmt, Labeling>> enumerate_gml_trees(const EnumerationBudget& budget) {
    std::vector<std::pair<Gmt, Labeling>> out;
    for (const Gmt& t : enumerate_gmt_shapes(budget.max_tree_nodes))
        for (const Order& o : enumerate_morse_orders(t))
            out.push_back({t, order_to_label(t, o)});
    return out;
}

bool merge_equivalent_orders(const Gmt& t, const Order& a, const Order& b) {
    // per subtree: the maximum node and the minimum node must coincide
    for (int n : t.preorder()) {
        int max_a = -1, max_b = -1, min_a = -1, min_b = -1;
        std::function<void(int)> walk = [&](int x) {
            if (max_a < 0 || a.at(t.id(x)) > a.at(t.id(max_a))) max_a = x;
            if (min_a < 0 || a.at(t.id(x)) < a.at(t.id(min_a))) min_a = x;
            if (max_b < 0 || b.at(t.id(x)) > b.at(t.id(max_b))) max_b = x;
            if (min_b < 0 || b.at(t.id(x)) < b.at(t.id(min_b))) min_b = x;
            for (int c : t.children(x)) walk(c);
        };
        walk(n);
        if (max_a != max_b || min_a != min_b) return false;
    }
    return true;
}

bool cm_equivalent_direct(const MultiGraph& g1, const Dmf& f1, const MultiGraph& g2,
                          const Dmf& f2) {
    if (critical_cells(g1, f1).size() != all_cells(g1).size() ||
        critical_cells(g2, f2).size() != all_cells(g2).size())
        throw std::invalid_argument("cm_equivalent_direct needs critical dMfs");

    // values must agree dimension-wise
    std::set<Rat> v1, e1, v2, e2;
    for (const auto& v : g1.vertices()) v1.insert(f1.value(CellRef::vertex(v)));
    for (const auto& e : g1.edge_ids()) e1.insert(f1.value(CellRef::edge(e)));
    for (const auto& v : g2.vertices()) v2.insert(f2.value(CellRef::vertex(v)));
    for (const auto& e : g2.edge_ids()) e2.insert(f2.value(CellRef::edge(e)));
    if (v1 != v2 || e1 != e2) return false;

    // replay both filtrations; compare component value-sets at each edge step
    auto vertex_values = [](const MultiGraph& g, const Dmf& f) {
        std::map<Rat, int> out;
        for (int i = 0; i < g.n_vertices(); ++i)
            out[f.value(CellRef::vertex(g.vertex_name(i)))] = i;
        return out;
    };
    auto edge_values = [](const MultiGraph& g, const Dmf& f) {
        std::map<Rat, int> out;
        for (int e = 0; e < g.n_edges(); ++e)
            out[f.value(CellRef::edge(g.edge_name(e)))] = e;
        return out;
    };
    std::map<Rat, int> vv1 = vertex_values(g1, f1), vv2 = vertex_values(g2, f2);
    std::map<Rat, int> ee1 = edge_values(g1, f1), ee2 = edge_values(g2, f2);

    ComponentIndex u1, u2;
    u1.parent.resize(g1.n_vertices());
    u2.parent.resize(g2.n_vertices());
    for (int i = 0; i < g1.n_vertices(); ++i) u1.parent[i] = i;
    for (int i = 0; i < g2.n_vertices(); ++i) u2.parent[i] = i;

    auto comp_values = [&](const MultiGraph& g, const Dmf& f, ComponentIndex& uf,
                           int root) {
        std::set<Rat> out;
        for (int i = 0; i < g.n_vertices(); ++i)
            if (uf.find(i) == uf.find(root))
                out.insert(f.value(CellRef::vertex(g.vertex_name(i))));
        return out;
    };

    for (const auto& [val, e_idx1] : ee1) {
        int e_idx2 = ee2.at(val);
        auto [a1, b1] = g1.endpoint_indices(e_idx1);
        auto [a2, b2] = g2.endpoint_indices(e_idx2);
        bool close1 = u1.find(a1) == u1.find(b1);
        bool close2 = u2.find(a2) == u2.find(b2);
        if (close1 != close2) return false;
        if (close1) {
            if (comp_values(g1, f1, u1, a1) != comp_values(g2, f2, u2, a2)) return false;
        } else {
            std::set<std::set<Rat>> merged1{comp_values(g1, f1, u1, a1),
                                            comp_values(g1, f1, u1, b1)};
            std::set<std::set<Rat>> merged2{comp_values(g2, f2, u2, a2),
                                            comp_values(g2, f2, u2, b2)};
            if (merged1 != merged2) return false;
            u1.unite(a1, b1);
            u2.unite(a2, b2);
        }
    }
    return true;
}

bool nonplanar_by_kuratowski(int n, const std::vector<std::pair<int, int>>& edges) {
    if (edges.size() <= 8) return false;  // K3,3 subdivisions need 9 edges
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;

    // K5 subdivisions: 5 branch vertices, missing connections routed through
    // distinct spare vertices (at most n-5 of them, each a path of length 2,
    // or one path of length 3 using both spares)
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    if (n >= 5) {
        std::vector<bool> sel(n, false);
        std::fill(sel.end() - 5, sel.end(), true);
        std::sort(sel.begin(), sel.end());
        do {
            std::vector<int> s, spare;
            for (int i = 0; i < n; ++i) (sel[i] ? s : spare).push_back(i);
            std::vector<std::pair<int, int>> missing;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    if (!adj[s[i]][s[j]]) missing.push_back({s[i], s[j]});
            if (missing.empty()) return true;
            if (missing.size() == 1) {
                auto [a, b] = missing[0];
                for (int x : spare)
                    if (adj[a][x] && adj[x][b]) return true;
                if (spare.size() == 2) {
                    int x = spare[0], y = spare[1];
                    if ((adj[a][x] && adj[x][y] && adj[y][b]) ||
                        (adj[a][y] && adj[y][x] && adj[x][b]))
                        return true;
                }
            }
            if (missing.size() == 2 && spare.size() == 2) {
                auto [a, b] = missing[0];
                auto [c, d] = missing[1];
                int x = spare[0], y = spare[1];
                if (adj[a][x] && adj[x][b] && adj[c][y] && adj[y][d]) return true;
                if (adj[a][y] && adj[y][b] && adj[c][x] && adj[x][d]) return true;
            }
        } while (std::next_permutation(sel.begin(), sel.end()));
    }

    // K3,3 subdivisions: parts A, B of size 3, at most one missing connection
    // routed through a spare
    if (n >= 6) {
        std::vector<bool> sel(n, false);
        std::fill(sel.end() - 6, sel.end(), true);
        std::sort(sel.begin(), sel.end());
        do {
            std::vector<int> six, spare;
            for (int i = 0; i < n; ++i) (sel[i] ? six : spare).push_back(i);
            // split six into A (containing six[0]) and B
            std::vector<bool> inA(6, false);
            inA[0] = true;
            for (int i = 1; i < 5; ++i)
                for (int j = i + 1; j < 6; ++j) {
                    std::vector<int> A{six[0], six[i], six[j]}, B;
                    for (int k = 1; k < 6; ++k)
                        if (k != i && k != j) B.push_back(six[k]);
                    std::vector<std::pair<int, int>> missing;
                    for (int a : A)
                        for (int b : B)
                            if (!adj[a][b]) missing.push_back({a, b});
                    if (missing.empty()) return true;
                    if (missing.size() == 1) {
                        auto [a, b] = missing[0];
                        for (int x : spare)
                            if (adj[a][x] && adj[x][b]) return true;
                    }
                }
        } while (std::next_permutation(sel.begin(), sel.end()));
    }
    return false;
}

SuiteReport roundtrip_suite(const EnumerationBudget& budget) {
    SuiteReport rep;
    std::mt19937 rng(budget.seed);

    auto fail = [&](const std::string& what, const std::string& instance_json) {
        rep.counterexamples.push_back("{\"property\":\"" + what +
                                      "\",\"instance\":" + instance_json + "}");
    };

    // graph side: theorem part 1, closing-edge count, subtree-component lemma
    for (const SmallGraph& sg : enumerate_multigraphs(budget)) {
        ++rep.graphs;
        MultiGraph g = to_multigraph(sg);
        for (const Dmf& f : enumerate_critical_dmfs(g)) {
            ++rep.dmfs;
            std::string instance = graph_doc_to_string(g, f);
            InducedTree m = induce_merge_tree(g, f);
            PhiResult p = phi(m.tree, m.labeling);
            InducedTree m2 = induce_merge_tree(p.graph, p.dmf);
            if (!iso_gml(m2.tree, m2.labeling, m.tree, m.labeling))
                fail("theorem part 1: M(Phi(M(X,f))) iso M(X,f)", instance);
            auto [b0, b1] = betti(g);
            if (static_cast<int>(closing_edges(g, f).size()) != b1)
                fail("closing edge count equals b1", instance);
            for (const CellRef& s : critical_cells(g, f))
                if (!subtree_component_check(g, f, s)) {
                    fail("subtree-component lemma at cell " + s.id, instance);
                    break;
                }
        }
    }

    // tree side: theorem part 2, iMl/iMo inverses, sc-order validity,
    // merge equivalence of Morse-order pairs, realization round-trips
    for (const Gmt& t : enumerate_gmt_shapes(budget.max_tree_nodes)) {
        ++rep.shapes;
        std::string shape_json = tree_doc_to_string(t, nullptr);
        if (!validate_gmt(t).ok()) {
            fail("enumerated shape is a valid gMT", shape_json);
            continue;
        }
        Order sc = sc_order(t);
        if (!is_morse_order(t, sc)) fail("sc_order is a Morse order", shape_json);

        std::vector<Order> orders = enumerate_morse_orders(t);
        rep.orders += static_cast<long>(orders.size());
        for (const Order& o : orders) {
            if (!is_morse_order(t, o)) {
                fail("enumerated order is a Morse order", shape_json);
                continue;
            }
            Labeling l = order_to_label(t, o);
            if (label_to_order(t, l) != o)
                fail("label_to_order(order_to_label(o)) == o", shape_json);
            PhiResult p = phi(t, l);
            InducedTree m = induce_merge_tree(p.graph, p.dmf);
            if (!iso_gml(m.tree, m.labeling, t, l))
                fail("theorem part 2: M(Phi(T,l)) iso (T,l)",
                     tree_doc_to_string(t, &l));
        }

        // Morse-order pairs; all when small, seeded sample otherwise
        const size_t pair_cap = 4000;
        size_t total_pairs = orders.size() * orders.size();
        if (total_pairs <= pair_cap) {
            for (const Order& a : orders)
                for (const Order& b : orders) {
                    ++rep.order_pairs;
                    if (!merge_equivalent_orders(t, a, b))
                        fail("Morse orders on one tree are merge equivalent", shape_json);
                }
        } else {
            std::uniform_int_distribution<size_t> pick(0, orders.size() - 1);
            for (size_t i = 0; i < pair_cap; ++i) {
                ++rep.order_pairs;
                if (!merge_equivalent_orders(t, orders[pick(rng)], orders[pick(rng)]))
                    fail("Morse orders on one tree are merge equivalent", shape_json);
            }
        }

        if (check_realizable(t, RealizeMode::Simple).realizable()) {
            ++rep.realized;
            PhiResult r = realize_simple(t);
            InducedTree m = induce_merge_tree(r.graph, r.dmf);
            Labeling sc_labels = order_to_label(t, sc);
            if (!iso_gml(m.tree, m.labeling, t, sc_labels))
                fail("realize_simple round-trips under induce", shape_json);
            if (check_realizable(t, RealizeMode::Planar).realizable()) {
                PhiResult rp = realize_planar(t);
                if (!planarity_oracle(rp.graph))
                    fail("realize_planar output is planar", shape_json);
                InducedTree mp = induce_merge_tree(rp.graph, rp.dmf);
                if (!iso_gml(mp.tree, mp.labeling, t, sc_labels))
                    fail("realize_planar round-trips under induce", shape_json);
            }
        }
    }
    return rep;
}

}  // namespace dmt
