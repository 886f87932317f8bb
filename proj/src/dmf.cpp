#include "dmt/dmf.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dmt {

std::vector<CellRef> all_cells(const MultiGraph& g) {
    std::vector<CellRef> out;
    for (const auto& v : g.vertices()) out.push_back(CellRef::vertex(v));
    for (const auto& e : g.edge_ids()) out.push_back(CellRef::edge(e));
    return out;
}

ValidationReport validate_dmf(const MultiGraph& g, const Dmf& f) {
    ValidationReport rep;
    for (const CellRef& c : all_cells(g))
        if (!f.has(c))
            rep.malformed.push_back("missing value for cell " + c.id);
    for (const auto& [c, v] : f.values())
        if (!g.has_cell(c))
            rep.malformed.push_back("value assigned to unknown cell " + c.id);
    if (!rep.malformed.empty()) return rep;

    // weakly increasing
    for (const auto& eid : g.edge_ids()) {
        auto [u, v] = g.endpoints(eid);
        const Rat& fe = f.value(CellRef::edge(eid));
        if (f.value(CellRef::vertex(u)) > fe)
            rep.violations.push_back("f(" + u + ") > f(" + eid + "): not weakly increasing");
        if (f.value(CellRef::vertex(v)) > fe)
            rep.violations.push_back("f(" + v + ") > f(" + eid + "): not weakly increasing");
    }

    // at most 2-1, and equal values only on incident vertex/edge pairs
    std::map<Rat, std::vector<CellRef>> by_value;
    for (const CellRef& c : all_cells(g)) by_value[f.value(c)].push_back(c);
    for (const auto& [v, cells] : by_value) {
        if (cells.size() > 2) {
            std::string who;
            for (const auto& c : cells) who += (who.empty() ? "" : ", ") + c.id;
            rep.violations.push_back("value " + v.str() + " has " +
                                     std::to_string(cells.size()) + " preimages: " + who);
            continue;
        }
        if (cells.size() == 2) {
            const CellRef& a = cells[0];
            const CellRef& b = cells[1];
            if (a.is_edge == b.is_edge) {
                rep.violations.push_back("value " + v.str() + " shared by two " +
                                         (a.is_edge ? "edges" : "vertices") + ": " +
                                         a.id + ", " + b.id);
            } else {
                const std::string& vid = a.is_edge ? b.id : a.id;
                const std::string& eid = a.is_edge ? a.id : b.id;
                if (!g.incident(vid, eid))
                    rep.violations.push_back("value " + v.str() + " shared by non-incident pair " +
                                             vid + ", " + eid);
            }
        }
    }
    return rep;
}

SublevelComplex sublevel(const MultiGraph& g, const Dmf& f, const Rat& a, bool strict) {
    SublevelComplex sub;
    sub.parent = &g;
    sub.threshold = a;
    sub.strict = strict;
    auto below = [&](const Rat& v) { return strict ? v < a : v <= a; };
    for (const auto& vid : g.vertices())
        if (below(f.value(CellRef::vertex(vid)))) sub.cells.add_vertex(vid);
    for (const auto& eid : g.edge_ids())
        if (below(f.value(CellRef::edge(eid)))) {
            auto [u, v] = g.endpoints(eid);
            sub.cells.add_edge(eid, u, v);
        }
    sub.restriction = f.restricted_to(sub.cells);
    return sub;
}

std::vector<std::vector<CellRef>> components(const SublevelComplex& sub) {
    const MultiGraph& g = sub.cells;
    ComponentIndex uf;
    uf.parent.resize(g.n_vertices());
    for (int i = 0; i < g.n_vertices(); ++i) uf.parent[i] = i;
    for (int e = 0; e < g.n_edges(); ++e) {
        auto [u, v] = g.endpoint_indices(e);
        uf.unite(u, v);
    }
    std::map<int, std::vector<CellRef>> groups;
    for (int i = 0; i < g.n_vertices(); ++i)
        groups[uf.find(i)].push_back(CellRef::vertex(g.vertex_name(i)));
    for (int e = 0; e < g.n_edges(); ++e)
        groups[uf.find(g.endpoint_indices(e).first)].push_back(
            CellRef::edge(g.edge_name(e)));
    std::vector<std::vector<CellRef>> out;
    for (auto& [root, cells] : groups) {
        std::sort(cells.begin(), cells.end());
        out.push_back(std::move(cells));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CellRef> component_of(const SublevelComplex& sub, const CellRef& s) {
    if (!sub.cells.has_cell(s))
        throw std::invalid_argument("cell " + s.id + " not in sublevel complex");
    for (auto& comp : components(sub))
        if (std::find(comp.begin(), comp.end(), s) != comp.end()) return comp;
    throw std::logic_error("unreachable");
}

std::pair<int, int> betti(const MultiGraph& g) {
    ComponentIndex uf;
    uf.parent.resize(g.n_vertices());
    for (int i = 0; i < g.n_vertices(); ++i) uf.parent[i] = i;
    for (int e = 0; e < g.n_edges(); ++e) {
        auto [u, v] = g.endpoint_indices(e);
        uf.unite(u, v);
    }
    std::set<int> roots;
    for (int i = 0; i < g.n_vertices(); ++i) roots.insert(uf.find(i));
    int b0 = static_cast<int>(roots.size());
    int b1 = g.n_edges() - g.n_vertices() + b0;
    return {b0, b1};
}

ComponentIndex components_below(const MultiGraph& g, const Dmf& f, const Rat& a,
                                bool strict) {
    ComponentIndex uf;
    uf.parent.resize(g.n_vertices());
    for (int i = 0; i < g.n_vertices(); ++i) uf.parent[i] = i;
    for (int e = 0; e < g.n_edges(); ++e) {
        const Rat& fe = f.value(CellRef::edge(g.edge_name(e)));
        if (strict ? fe < a : fe <= a) {
            auto [u, v] = g.endpoint_indices(e);
            uf.unite(u, v);
        }
    }
    return uf;
}

bool connected(const MultiGraph& g) {
    return g.n_vertices() == 0 || betti(g).first == 1;
}

std::vector<CellRef> critical_cells(const MultiGraph& g, const Dmf& f) {
    std::map<Rat, std::vector<CellRef>> by_value;
    for (const CellRef& c : all_cells(g)) by_value[f.value(c)].push_back(c);
    std::vector<CellRef> out;
    for (const auto& [v, cells] : by_value)
        if (cells.size() == 1) out.push_back(cells[0]);
    return out;
}

bool is_closing_edge(const MultiGraph& g, const Dmf& f, const std::string& edge_id) {
    CellRef e = CellRef::edge(edge_id);
    if (!f.is_critical(e))
        throw std::invalid_argument("closing is defined for critical edges; " +
                                    edge_id + " is matched");
    ComponentIndex uf = components_below(g, f, f.value(e), /*strict=*/true);
    auto [u, v] = g.endpoint_indices(g.edge_checked(edge_id));
    return uf.find(u) == uf.find(v);
}

std::vector<std::string> closing_edges(const MultiGraph& g, const Dmf& f) {
    std::vector<std::pair<Rat, std::string>> crit;
    for (const auto& eid : g.edge_ids()) {
        CellRef e = CellRef::edge(eid);
        if (f.is_critical(e)) crit.push_back({f.value(e), eid});
    }
    std::sort(crit.begin(), crit.end());
    std::vector<std::string> out;
    for (const auto& [val, eid] : crit)
        if (is_closing_edge(g, f, eid)) out.push_back(eid);
    return out;
}

std::pair<MultiGraph, Dmf> induced_spanning_tree(const MultiGraph& g, const Dmf& f) {
    std::set<std::string> closing;
    for (const auto& eid : closing_edges(g, f)) closing.insert(eid);
    MultiGraph tree;
    for (const auto& vid : g.vertices()) tree.add_vertex(vid);
    for (const auto& eid : g.edge_ids())
        if (!closing.count(eid)) {
            auto [u, v] = g.endpoints(eid);
            tree.add_edge(eid, u, v);
        }
    return {tree, f.restricted_to(tree)};
}

Dmf make_index_ordered_dmf(const MultiGraph& g,
                           const std::vector<std::string>& vertex_order,
                           const std::vector<std::string>& edge_order) {
    if (static_cast<int>(vertex_order.size()) != g.n_vertices())
        throw std::invalid_argument("vertex_order is not a permutation of the vertex set");
    if (static_cast<int>(edge_order.size()) != g.n_edges())
        throw std::invalid_argument("edge_order is not a permutation of the edge set");
    std::set<std::string> seen;
    Dmf f;
    long long next = 0;
    for (const auto& vid : vertex_order) {
        g.vertex_checked(vid);
        if (!seen.insert(vid).second)
            throw std::invalid_argument("duplicate vertex in order: " + vid);
        f.set(CellRef::vertex(vid), Rat(next++));
    }
    seen.clear();
    for (const auto& eid : edge_order) {
        g.edge_checked(eid);
        if (!seen.insert(eid).second)
            throw std::invalid_argument("duplicate edge in order: " + eid);
        f.set(CellRef::edge(eid), Rat(next++));
    }
    return f;
}

}  // namespace dmt
