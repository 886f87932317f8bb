#pragma once

#include <map>
#include <string>

#include "dmt/dmf.hpp"
#include "dmt/mergetree.hpp"
#include "dmt/multigraph.hpp"

namespace dmt {

/// The induced generalized Morse labeled merge tree M(X,f) together with the
/// critical-cell <-> node correspondence. Node ids equal the ids of the
/// critical cells they correspond to.
struct InducedTree {
    Gmt tree;
    Labeling labeling;
    std::map<std::string, CellRef> cell_of_node;
    std::map<CellRef, std::string> node_of_cell;
};

/// Descending induction over critical edges: the maximal critical edge
/// becomes the root (chirality L); a closing edge gets one child labeled by
/// the maximal critical value of the component it closes; a merge edge gets
/// two children labeled by the per-component critical maxima, the component
/// with the smaller minimum inheriting the parent chirality.
/// Requires a connected graph and a valid dMf (matched cells permitted).
InducedTree induce_merge_tree(const MultiGraph& g, const Dmf& f);

/// Subtree-component lemma, run as stated: the rooted subtree at M(s) equals
/// the induced tree of the sublevel component of s, up to a global chirality
/// flip when M(s) has chirality R.
bool subtree_component_check(const MultiGraph& g, const Dmf& f, const CellRef& s);

}  // namespace dmt
