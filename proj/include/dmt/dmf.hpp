#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmt/multigraph.hpp"
#include "dmt/rational.hpp"

namespace dmt {

/// Discrete Morse function: weakly increasing, at most 2-to-1, equal values
/// only on incident vertex/edge pairs.
class Dmf {
public:
    void set(const CellRef& cell, const Rat& value) { values_[cell] = value; }

    bool has(const CellRef& cell) const { return values_.count(cell) > 0; }

    const Rat& value(const CellRef& cell) const {
        auto it = values_.find(cell);
        if (it == values_.end())
            throw std::invalid_argument("no value for cell " + cell.id);
        return it->second;
    }

    const std::map<CellRef, Rat>& values() const { return values_; }

    /// True when `cell` is the unique preimage of its value.
    bool is_critical(const CellRef& cell) const {
        const Rat& v = value(cell);
        int count = 0;
        for (const auto& [c, val] : values_)
            if (val == v) ++count;
        return count == 1;
    }

    Dmf restricted_to(const MultiGraph& sub) const {
        Dmf out;
        for (const auto& [c, v] : values_)
            if (sub.has_cell(c)) out.set(c, v);
        return out;
    }

private:
    std::map<CellRef, Rat> values_;
};

struct ValidationReport {
    std::vector<std::string> malformed;   // missing values, unknown cells
    std::vector<std::string> violations;  // dMf axiom violations
    bool ok() const { return malformed.empty() && violations.empty(); }
};

ValidationReport validate_dmf(const MultiGraph& g, const Dmf& f);

/// Sublevel subcomplex X_a (or the strict variant X_{a-eps}).
struct SublevelComplex {
    const MultiGraph* parent = nullptr;
    Rat threshold;
    bool strict = false;
    MultiGraph cells;  // induced sub-multigraph
    Dmf restriction;
};

SublevelComplex sublevel(const MultiGraph& g, const Dmf& f, const Rat& a, bool strict);

/// Connected components of a sub-multigraph, cells grouped per component.
/// Deterministic: components ordered by their smallest cell, cells sorted.
std::vector<std::vector<CellRef>> components(const SublevelComplex& sub);
std::vector<CellRef> component_of(const SublevelComplex& sub, const CellRef& s);

std::pair<int, int> betti(const MultiGraph& g);

bool is_closing_edge(const MultiGraph& g, const Dmf& f, const std::string& edge_id);

/// Closing edges ordered by value ascending.
std::vector<std::string> closing_edges(const MultiGraph& g, const Dmf& f);

std::pair<MultiGraph, Dmf> induced_spanning_tree(const MultiGraph& g, const Dmf& f);

/// Vertices get 0..|V|-1 along vertex_order, edges |V|..|V|+|E|-1 along
/// edge_order; the result is a critical dMf.
Dmf make_index_ordered_dmf(const MultiGraph& g,
                           const std::vector<std::string>& vertex_order,
                           const std::vector<std::string>& edge_order);

// Shared internals -----------------------------------------------------------

/// Union-find over the cells of g restricted to a value bound. Used by the
/// filtration replays in several modules.
struct ComponentIndex {
    std::vector<int> parent;  // over vertex indices of g
    int find(int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Components of {cells of g : f < a} (strict) or f <= a.
ComponentIndex components_below(const MultiGraph& g, const Dmf& f, const Rat& a,
                                bool strict);

bool connected(const MultiGraph& g);

std::vector<CellRef> all_cells(const MultiGraph& g);

std::vector<CellRef> critical_cells(const MultiGraph& g, const Dmf& f);

}  // namespace dmt
