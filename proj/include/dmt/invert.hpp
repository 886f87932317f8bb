#pragma once

#include <map>
#include <string>

#include "dmt/dmf.hpp"
#include "dmt/mergetree.hpp"
#include "dmt/multigraph.hpp"

namespace dmt {

/// Result of the inverse construction: a graph whose cells are all critical,
/// valued by the corresponding node labels. Cell ids equal node ids.
struct PhiResult {
    MultiGraph graph;
    Dmf dmf;
    std::map<std::string, CellRef> cell_of_node;
};

/// Path construction for a Morse labeled merge tree without cycle nodes:
/// in-order traversal emitting the L-child block, the node's edge, then the
/// R-child block. Vertices are the leaves, edges the inner nodes.
PhiResult phi_path(const Gmt& t_bar, const Labeling& l);

/// Full inverse construction: phi_path of the underlying tree, plus one
/// parallel edge per cycle node c, duplicating the endpoints of the edge of
/// c's oldest two-child descendant, valued lambda(c).
PhiResult phi(const Gmt& t, const Labeling& l);

}  // namespace dmt
