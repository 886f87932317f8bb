#include "dmt/cancel.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace dmt {

std::string cancel_case_name(CancelCase c) {
    switch (c) {
        case CancelCase::Case2a: return "2a";
        case CancelCase::Case2b: return "2b";
        case CancelCase::Case2cSkip: return "2c-i";
        case CancelCase::Case2cRewire: return "2c-ii";
        case CancelCase::Case2cFlow: return "2c-iii";
    }
    return "?";
}

namespace {

// Cells indexed 0..nv-1 (vertices), nv..nv+ne-1 (edges); permutations of
// this index set represent self-bijections of the cell set.
using Perm = std::vector<int>;

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

Perm compose(const Perm& f, const Perm& g) {  // (f o g)(x) = f(g(x))
    Perm out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
    return out;
}

// All automorphisms of one sublevel component, extended by the identity to
// the full cell set. Component given by vertex and edge indices of g.
void component_automorphisms(const MultiGraph& g, const std::vector<int>& verts,
                             const std::vector<int>& edges, std::vector<Perm>& out) {
    int nv = g.n_vertices();
    int ncells = nv + g.n_edges();
    size_t k = verts.size();

    // parallel classes within the component
    std::map<std::pair<int, int>, std::vector<int>> classes;
    for (int e : edges) {
        auto [u, v] = g.endpoint_indices(e);
        classes[std::pair<int, int>(std::minmax(u, v))].push_back(e);
    }

    std::vector<size_t> perm_idx(k);
    for (size_t i = 0; i < k; ++i) perm_idx[i] = i;
    do {
        // vertex map: verts[i] -> verts[perm_idx[i]]
        std::map<int, int> vmap;
        for (size_t i = 0; i < k; ++i) vmap[verts[i]] = verts[perm_idx[i]];
        bool ok = true;
        for (const auto& [pair, es] : classes) {
            std::pair<int, int> img = std::minmax(vmap[pair.first], vmap[pair.second]);
            auto it = classes.find(img);
            if (it == classes.end() || it->second.size() != es.size()) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        // enumerate edge bijections class by class
        std::vector<const std::vector<int>*> srcs;
        std::vector<const std::vector<int>*> dsts;
        for (const auto& [pair, es] : classes) {
            std::pair<int, int> img = std::minmax(vmap[pair.first], vmap[pair.second]);
            srcs.push_back(&es);
            dsts.push_back(&classes.at(img));
        }
        std::vector<std::vector<size_t>> choice(srcs.size());
        std::function<void(size_t, Perm&)> assign = [&](size_t ci, Perm& perm) {
            if (ci == srcs.size()) {
                out.push_back(perm);
                return;
            }
            const auto& src = *srcs[ci];
            const auto& dst = *dsts[ci];
            std::vector<size_t> idx(dst.size());
            for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            do {
                for (size_t i = 0; i < src.size(); ++i) perm[nv + src[i]] = nv + dst[idx[i]];
                assign(ci + 1, perm);
            } while (std::next_permutation(idx.begin(), idx.end()));
        };
        Perm perm = identity_perm(ncells);
        for (size_t i = 0; i < k; ++i) perm[verts[i]] = verts[perm_idx[i]];
        assign(0, perm);
    } while (std::next_permutation(perm_idx.begin(), perm_idx.end()));
}

struct CellIndex {
    const MultiGraph& g;
    int nv;
    int index(const CellRef& c) const {
        return c.is_edge ? nv + g.edge_checked(c.id) : g.vertex_checked(c.id);
    }
    CellRef cell(int i) const {
        return i < nv ? CellRef::vertex(g.vertex_name(i))
                      : CellRef::edge(g.edge_name(i - nv));
    }
};

std::vector<Perm> symmetry_generators(const MultiGraph& g, const Dmf& f,
                                      const CancelOptions& opts) {
    int ncells = g.n_vertices() + g.n_edges();
    std::set<Rat> critical_values;
    for (const CellRef& c : critical_cells(g, f)) critical_values.insert(f.value(c));

    std::set<Perm> seen;
    std::vector<Perm> gens;
    for (const Rat& cv : critical_values) {
        SublevelComplex sl = sublevel(g, f, cv, /*strict=*/false);
        for (const auto& comp : components(sl)) {
            if (static_cast<int>(comp.size()) > opts.max_component_cells) continue;
            std::vector<int> verts, edges;
            for (const CellRef& c : comp) {
                if (c.is_edge) edges.push_back(g.edge_checked(c.id));
                else verts.push_back(g.vertex_checked(c.id));
            }
            std::vector<Perm> autos;
            component_automorphisms(g, verts, edges, autos);
            for (Perm& p : autos) {
                if (p == identity_perm(ncells)) continue;
                if (seen.insert(p).second) gens.push_back(std::move(p));
            }
        }
    }
    return gens;
}

Dmf relabel_dmf(const MultiGraph& g, const Dmf& f, const CellIndex& ci, const Perm& u) {
    // f o u^-1: the cell u(x) takes x's old value
    Dmf out;
    int ncells = g.n_vertices() + g.n_edges();
    for (int x = 0; x < ncells; ++x)
        out.set(ci.cell(u[x]), f.value(ci.cell(x)));
    return out;
}

}  // namespace

std::optional<CellBijection> find_symmetry_equivalence(
    const MultiGraph& g, const Dmf& f, const std::string& c_cell,
    const std::string& p_cell,
    const std::vector<std::pair<std::string, std::string>>& preserve,
    const CancelOptions& opts) {
    CellIndex ci{g, g.n_vertices()};
    int ncells = g.n_vertices() + g.n_edges();
    int c_idx = ci.index(CellRef::vertex(c_cell));
    int p_idx = ci.index(CellRef::edge(p_cell));

    std::vector<std::pair<int, int>> pres;
    for (const auto& [v, e] : preserve)
        pres.push_back({ci.index(CellRef::vertex(v)), ci.index(CellRef::edge(e))});

    InducedTree reference = induce_merge_tree(g, f);

    auto incident_idx = [&](int v_i, int e_i) {
        return g.incident(g.vertex_name(v_i), g.edge_name(e_i - g.n_vertices()));
    };

    auto candidate_ok = [&](const Perm& u) -> bool {
        if (!incident_idx(u[c_idx], u[p_idx])) return false;
        for (auto [v, e] : pres)
            if (!incident_idx(u[v], u[e])) return false;
        Dmf f2 = relabel_dmf(g, f, ci, u);
        if (!validate_dmf(g, f2).ok()) return false;
        InducedTree t2 = induce_merge_tree(g, f2);
        return iso_gml(t2.tree, t2.labeling, reference.tree, reference.labeling);
    };

    auto to_bijection = [&](const Perm& u) {
        CellBijection b;
        for (int x = 0; x < ncells; ++x) b[ci.cell(x)] = ci.cell(u[x]);
        return b;
    };

    Perm id = identity_perm(ncells);
    if (candidate_ok(id)) return to_bijection(id);

    std::vector<Perm> gens = symmetry_generators(g, f, opts);
    std::set<Perm> visited{id};
    std::deque<std::pair<Perm, int>> queue{{id, 0}};
    while (!queue.empty()) {
        auto [u, depth] = queue.front();
        queue.pop_front();
        if (depth >= opts.max_depth) continue;
        for (const Perm& h : gens) {
            Perm w = compose(h, u);
            if (!visited.insert(w).second) continue;
            if (candidate_ok(w)) return to_bijection(w);
            if (static_cast<int>(visited.size()) < opts.max_group_elements)
                queue.push_back({std::move(w), depth + 1});
        }
    }
    return std::nullopt;
}

std::vector<CellRef> gradient_flow_path(const MultiGraph& g, const Matching& m,
                                        const std::string& source_vertex,
                                        const std::string& target_edge) {
    if (m.vertex_matched(source_vertex))
        throw std::invalid_argument("flow line source must be critical");
    if (m.edge_matched(target_edge))
        throw std::invalid_argument("flow line target must be critical");

    std::map<std::string, std::string> partner_of_edge;  // edge -> matched vertex
    for (const auto& [v, e] : m.pairs) partner_of_edge[e] = v;

    std::vector<std::vector<CellRef>> found;
    std::vector<CellRef> path{CellRef::vertex(source_vertex)};
    std::set<std::string> used_vertices{source_vertex};
    std::function<void(const std::string&)> dfs = [&](const std::string& at) {
        for (const auto& eid : g.edge_ids()) {
            if (!g.incident(at, eid)) continue;
            if (eid == target_edge) {
                auto complete = path;
                complete.push_back(CellRef::edge(eid));
                found.push_back(complete);
                continue;
            }
            auto it = partner_of_edge.find(eid);
            if (it == partner_of_edge.end()) continue;
            auto [a, b] = g.endpoints(eid);
            const std::string& other = a == at ? b : a;
            // step only along the pair (other, e)
            if (it->second != other) continue;
            if (used_vertices.count(other)) continue;
            path.push_back(CellRef::edge(eid));
            path.push_back(CellRef::vertex(other));
            used_vertices.insert(other);
            dfs(other);
            used_vertices.erase(other);
            path.pop_back();
            path.pop_back();
        }
    };
    dfs(source_vertex);

    if (found.empty())
        throw std::logic_error("no gradient flow line from " + source_vertex + " to " +
                               target_edge + "; algorithm invariant violated");
    if (found.size() > 1)
        throw std::logic_error("gradient flow line from " + source_vertex + " to " +
                               target_edge + " is not unique; invariant violated");
    return found[0];
}

CancelOutcome cancel(const MultiGraph& g, const Dmf& f, CancelPolicy policy) {
    CancelOptions opts;
    opts.policy = policy;
    return cancel(g, f, opts);
}

CancelOutcome cancel(const MultiGraph& g, const Dmf& f, const CancelOptions& opts) {
    ValidationReport rep = validate_dmf(g, f);
    if (!rep.ok()) throw std::invalid_argument("cancel requires a valid dMf");
    if (!connected(g)) throw std::invalid_argument("cancel requires a connected graph");
    if (critical_cells(g, f).size() != all_cells(g).size())
        throw std::invalid_argument("cancel requires a critical dMf (no matched cells)");

    InducedTree it = induce_merge_tree(g, f);
    const Gmt& tree = it.tree;

    CancelOutcome out;
    out.graph = g;
    out.dmf = f;
    std::map<std::string, CellRef> cell_of_node = it.cell_of_node;

    std::set<std::string> matched_cells;  // both vertices and edges, by id
    auto matched_node = [&](int node) {
        return matched_cells.count(cell_of_node.at(tree.id(node)).id) > 0;
    };
    auto add_pair = [&](const std::string& v, const std::string& e) {
        out.matching.pairs.push_back({v, e});
        matched_cells.insert(v);
        matched_cells.insert(e);
    };

    // leaves in descending label order
    std::vector<int> leaves;
    for (int n : tree.preorder())
        if (tree.is_leaf(n)) leaves.push_back(n);
    std::sort(leaves.begin(), leaves.end(), [&](int a, int b) {
        return it.labeling.at(tree.id(b)) < it.labeling.at(tree.id(a));
    });

    for (int leaf : leaves) {
        if (matched_node(leaf)) continue;
        int p = tree.parent(leaf);
        while (p != -1 && (tree.is_cycle_node(p) || matched_node(p)))
            p = tree.parent(p);
        if (p == -1) continue;  // stays critical; no case applies

        std::string vc = cell_of_node.at(tree.id(leaf)).id;
        std::string pe = cell_of_node.at(tree.id(p)).id;

        if (out.graph.incident(vc, pe)) {
            add_pair(vc, pe);
            out.trace.push_back({tree.id(leaf), tree.id(p), CancelCase::Case2a});
            continue;
        }

        auto u = find_symmetry_equivalence(out.graph, out.dmf, vc, pe,
                                           out.matching.pairs, opts);
        if (u) {
            out.dmf = [&] {
                Dmf f2;
                for (const auto& [cell, image] : *u) f2.set(image, out.dmf.value(cell));
                return f2;
            }();
            for (auto& [mv, me] : out.matching.pairs) {
                mv = u->at(CellRef::vertex(mv)).id;
                me = u->at(CellRef::edge(me)).id;
            }
            matched_cells.clear();
            for (const auto& [mv, me] : out.matching.pairs) {
                matched_cells.insert(mv);
                matched_cells.insert(me);
            }
            for (auto& [node, cell] : cell_of_node) cell = u->at(cell);
            vc = cell_of_node.at(tree.id(leaf)).id;
            pe = cell_of_node.at(tree.id(p)).id;
            add_pair(vc, pe);
            out.trace.push_back({tree.id(leaf), tree.id(p), CancelCase::Case2b});
            continue;
        }

        switch (opts.policy) {
            case CancelPolicy::Skip:
                out.trace.push_back({tree.id(leaf), tree.id(p), CancelCase::Case2cSkip});
                break;
            case CancelPolicy::Rewire: {
                // re-attach the endpoint on vc's side of the merge to vc
                auto [a, b] = out.graph.endpoints(pe);
                ComponentIndex uf = components_below(out.graph, out.dmf,
                                                     out.dmf.value(CellRef::edge(pe)),
                                                     /*strict=*/true);
                int vci = out.graph.vertex_checked(vc);
                int ai = out.graph.vertex_checked(a);
                const std::string& near = uf.find(vci) == uf.find(ai) ? a : b;
                out.graph.reattach_edge(pe, near, vc);
                add_pair(vc, pe);
                out.trace.push_back({tree.id(leaf), tree.id(p), CancelCase::Case2cRewire});
                break;
            }
            case CancelPolicy::FlowLine: {
                auto path = gradient_flow_path(out.graph, out.matching, vc, pe);
                // drop the pairs along the path, then shift every vertex up
                std::set<std::string> path_edges;
                for (const auto& c : path)
                    if (c.is_edge) path_edges.insert(c.id);
                auto& pairs = out.matching.pairs;
                pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                                           [&](const auto& pr) {
                                               return path_edges.count(pr.second) > 0;
                                           }),
                            pairs.end());
                for (size_t i = 0; i + 1 < path.size(); i += 2)
                    pairs.push_back({path[i].id, path[i + 1].id});
                matched_cells.clear();
                for (const auto& [mv, me] : pairs) {
                    matched_cells.insert(mv);
                    matched_cells.insert(me);
                }
                out.trace.push_back({tree.id(leaf), tree.id(p), CancelCase::Case2cFlow});
                break;
            }
        }
    }

    for (const CellRef& c : all_cells(out.graph))
        if (!matched_cells.count(c.id)) out.critical.push_back(c);
    std::sort(out.critical.begin(), out.critical.end());
    return out;
}

}  // namespace dmt
