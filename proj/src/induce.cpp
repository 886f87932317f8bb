#include "dmt/induce.hpp"

#include <algorithm>
#include <functional>

namespace dmt {

namespace {

// Indexed snapshot of (g, f) for the recursion.
struct Ctx {
    const MultiGraph& g;
    const Dmf& f;
    std::vector<Rat> vval;             // by vertex index
    std::vector<Rat> eval;             // by edge index
    std::vector<bool> vcrit, ecrit;
};

// Connected component of `seed` in the subcomplex {cells : f < bound},
// restricted to the cell set `alive`. Vertices returned as indices.
std::vector<int> component_vertices(const Ctx& c, const std::vector<bool>& valive,
                                    const std::vector<bool>& ealive, int seed) {
    std::vector<int> stack{seed}, out;
    std::vector<bool> seen(c.g.n_vertices(), false);
    seen[seed] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int e = 0; e < c.g.n_edges(); ++e) {
            if (!ealive[e]) continue;
            auto [a, b] = c.g.endpoint_indices(e);
            int other = -1;
            if (a == v) other = b;
            else if (b == v) other = a;
            if (other >= 0 && valive[other] && !seen[other]) {
                seen[other] = true;
                stack.push_back(other);
            }
        }
    }
    return out;
}

struct Builder {
    const Ctx& c;
    Gmt tree;
    Labeling labeling;
    std::map<std::string, CellRef> cell_of_node;

    // Builds the subtree for the component (valive, ealive) containing the
    // maximal critical cell; returns the new node's index in `tree`.
    // `parent` < 0 creates the root.
    int build(std::vector<bool> valive, std::vector<bool> ealive, int parent, Chir chir) {
        // maximal critical cell of the component
        int best_e = -1, best_v = -1;
        for (int e = 0; e < c.g.n_edges(); ++e)
            if (ealive[e] && c.ecrit[e] && (best_e < 0 || c.eval[best_e] < c.eval[e]))
                best_e = e;
        for (int v = 0; v < c.g.n_vertices(); ++v)
            if (valive[v] && c.vcrit[v] && (best_v < 0 || c.vval[best_v] < c.vval[v]))
                best_v = v;

        if (best_e < 0) {
            // no critical edge: the component contributes a single leaf
            if (best_v < 0)
                throw std::logic_error("component without critical cells");
            const std::string& id = c.g.vertex_name(best_v);
            int node = parent < 0 ? tree.add_root(id, chir)
                                  : tree.add_child(parent, id, chir);
            labeling[id] = c.vval[best_v];
            cell_of_node[id] = CellRef::vertex(id);
            return node;
        }

        const Rat& level = c.eval[best_e];
        const std::string& id = c.g.edge_name(best_e);
        int node = parent < 0 ? tree.add_root(id, chir) : tree.add_child(parent, id, chir);
        labeling[id] = level;
        cell_of_node[id] = CellRef::edge(id);

        // strict sublevel below the edge, within this component
        std::vector<bool> vsub = valive, esub = ealive;
        for (int v = 0; v < c.g.n_vertices(); ++v)
            if (vsub[v] && !(c.vval[v] < level)) vsub[v] = false;
        for (int e = 0; e < c.g.n_edges(); ++e)
            if (esub[e] && !(c.eval[e] < level)) esub[e] = false;

        auto [u, w] = c.g.endpoint_indices(best_e);
        std::vector<int> cu = component_vertices(c, vsub, esub, u);
        bool closing = std::find(cu.begin(), cu.end(), w) != cu.end();

        auto restrict_to = [&](const std::vector<int>& verts) {
            std::vector<bool> va(c.g.n_vertices(), false), ea(c.g.n_edges(), false);
            for (int v : verts) va[v] = true;
            for (int e = 0; e < c.g.n_edges(); ++e)
                if (esub[e]) {
                    auto [a, b] = c.g.endpoint_indices(e);
                    if (va[a] && va[b]) ea[e] = true;
                }
            return std::make_pair(va, ea);
        };

        if (closing) {
            auto [va, ea] = restrict_to(cu);
            build(std::move(va), std::move(ea), node, chir);
        } else {
            std::vector<int> cw = component_vertices(c, vsub, esub, w);
            Rat min_u = c.vval[cu[0]], min_w = c.vval[cw[0]];
            for (int v : cu) min_u = std::min(min_u, c.vval[v]);
            for (int v : cw) min_w = std::min(min_w, c.vval[v]);
            // the component holding the smaller minimum inherits the chirality
            Chir chir_u = min_u < min_w ? chir : flip(chir);
            Chir chir_w = flip(chir_u);
            auto [vau, eau] = restrict_to(cu);
            auto [vaw, eaw] = restrict_to(cw);
            build(std::move(vau), std::move(eau), node, chir_u);
            build(std::move(vaw), std::move(eaw), node, chir_w);
        }
        return node;
    }
};

}  // namespace

InducedTree induce_merge_tree(const MultiGraph& g, const Dmf& f) {
    ValidationReport rep = validate_dmf(g, f);
    if (!rep.ok()) {
        std::string msg = "invalid dMf";
        if (!rep.malformed.empty()) msg += ": " + rep.malformed[0];
        else msg += ": " + rep.violations[0];
        throw std::invalid_argument(msg);
    }
    if (g.n_vertices() == 0)
        throw std::invalid_argument("induce requires a non-empty graph");
    if (!connected(g))
        throw std::invalid_argument(
            "induce requires connected input; map over components externally");

    Ctx c{g, f, {}, {}, {}, {}};
    c.vval.resize(g.n_vertices());
    c.eval.resize(g.n_edges());
    c.vcrit.resize(g.n_vertices());
    c.ecrit.resize(g.n_edges());
    std::map<Rat, int> value_count;
    for (int v = 0; v < g.n_vertices(); ++v) {
        c.vval[v] = f.value(CellRef::vertex(g.vertex_name(v)));
        ++value_count[c.vval[v]];
    }
    for (int e = 0; e < g.n_edges(); ++e) {
        c.eval[e] = f.value(CellRef::edge(g.edge_name(e)));
        ++value_count[c.eval[e]];
    }
    for (int v = 0; v < g.n_vertices(); ++v) c.vcrit[v] = value_count[c.vval[v]] == 1;
    for (int e = 0; e < g.n_edges(); ++e) c.ecrit[e] = value_count[c.eval[e]] == 1;

    Builder b{c, {}, {}, {}};
    b.build(std::vector<bool>(g.n_vertices(), true),
            std::vector<bool>(g.n_edges(), true), -1, Chir::L);

    InducedTree out;
    out.tree = std::move(b.tree);
    out.labeling = std::move(b.labeling);
    out.cell_of_node = std::move(b.cell_of_node);
    for (const auto& [node, cell] : out.cell_of_node) out.node_of_cell[cell] = node;
    return out;
}

bool subtree_component_check(const MultiGraph& g, const Dmf& f, const CellRef& s) {
    if (!f.is_critical(s))
        throw std::invalid_argument("subtree_component_check needs a critical cell");
    InducedTree whole = induce_merge_tree(g, f);
    int node = whole.tree.checked(whole.node_of_cell.at(s));

    Gmt sub = subtree(whole.tree, node);
    Labeling sub_labels;
    for (int n : sub.preorder()) sub_labels[sub.id(n)] = whole.labeling.at(sub.id(n));

    // component of s in the sublevel complex at level f(s)
    SublevelComplex sl = sublevel(g, f, f.value(s), /*strict=*/false);
    std::vector<CellRef> comp = component_of(sl, s);
    MultiGraph restricted;
    for (const auto& c : comp)
        if (!c.is_edge) restricted.add_vertex(c.id);
    for (const auto& c : comp)
        if (c.is_edge) {
            auto [u, v] = g.endpoints(c.id);
            restricted.add_edge(c.id, u, v);
        }
    InducedTree comp_tree = induce_merge_tree(restricted, f.restricted_to(restricted));

    if (whole.tree.chirality(node) == Chir::L)
        return iso_gml(sub, sub_labels, comp_tree.tree, comp_tree.labeling);
    return iso_gml(flip_all(sub), sub_labels, comp_tree.tree, comp_tree.labeling);
}

}  // namespace dmt
