#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmt/dmf.hpp"
#include "dmt/induce.hpp"
#include "dmt/multigraph.hpp"

namespace dmt {

/// Discrete gradient vector field on a graph: (vertex, edge) pairs, each cell
/// in at most one pair, matched edges forming a forest.
struct Matching {
    std::vector<std::pair<std::string, std::string>> pairs;

    bool vertex_matched(const std::string& v) const {
        for (const auto& [pv, pe] : pairs)
            if (pv == v) return true;
        return false;
    }
    bool edge_matched(const std::string& e) const {
        for (const auto& [pv, pe] : pairs)
            if (pe == e) return true;
        return false;
    }
};

enum class CancelPolicy { Skip, Rewire, FlowLine };

enum class CancelCase { Case2a, Case2b, Case2cSkip, Case2cRewire, Case2cFlow };

std::string cancel_case_name(CancelCase c);  // "2a", "2b", "2c-i", "2c-ii", "2c-iii"

struct TraceEntry {
    std::string leaf;
    std::string ancestor;
    CancelCase kind;
};

struct CancelOutcome {
    Matching matching;
    MultiGraph graph;  // unchanged except under Rewire
    Dmf dmf;           // values permuted by symmetry equivalences under 2b
    std::vector<TraceEntry> trace;
    std::vector<CellRef> critical;  // unmatched cells, sorted
};

struct CancelOptions {
    CancelPolicy policy = CancelPolicy::Skip;
    // symmetry-equivalence search caps
    int max_component_cells = 12;
    int max_group_elements = 20000;
    int max_depth = 4;
};

/// Merge-tree guided cancellation: sweep the leaves of M(g,f) in descending
/// label order, matching each with its youngest ancestor that is neither a
/// cycle node nor matched (case 2a), after a symmetry equivalence when one
/// makes the cells incident (2b), or per policy when neither applies (2c).
CancelOutcome cancel(const MultiGraph& g, const Dmf& f, CancelPolicy policy);
CancelOutcome cancel(const MultiGraph& g, const Dmf& f, const CancelOptions& opts);

/// A cell bijection (by id, vertices to vertices and edges to edges).
using CellBijection = std::map<CellRef, CellRef>;

/// Searches the sublevel automorphism group (generated by component
/// automorphisms of critical-level sublevel complexes, extended by the
/// identity) for an element u with u(c_cell) incident to u(p_cell) such that
/// f o u^-1 is a valid dMf inducing the identical labeled merge tree and all
/// pairs in `preserve` stay incident under u. Bounded brute force; nullopt on
/// exhaustion.
std::optional<CellBijection> find_symmetry_equivalence(
    const MultiGraph& g, const Dmf& f, const std::string& c_cell,
    const std::string& p_cell,
    const std::vector<std::pair<std::string, std::string>>& preserve = {},
    const CancelOptions& opts = {});

/// The unique gradient flow line source, e1, v1, e2, ..., target with each
/// (v_i, e_i) matched. Throws if the path is missing or ambiguous, which
/// signals a violated algorithm invariant.
std::vector<CellRef> gradient_flow_path(const MultiGraph& g, const Matching& m,
                                        const std::string& source_vertex,
                                        const std::string& target_edge);

}  // namespace dmt
