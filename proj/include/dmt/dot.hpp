#pragma once

#include <string>

#include "dmt/dmf.hpp"
#include "dmt/mergetree.hpp"
#include "dmt/multigraph.hpp"

namespace dmt {

/// Graphviz rendering of a graph with dMf values as labels.
std::string graph_to_dot(const MultiGraph& g, const Dmf& f);

/// Graphviz rendering of a (possibly labeled) gMT: cycle nodes drawn as
/// doublecircles, chirality as child order (L first).
std::string tree_to_dot(const Gmt& t, const Labeling* labeling);

}  // namespace dmt
