#pragma once

#include <string>
#include <vector>

#include "dmt/cancel.hpp"
#include "dmt/dmf.hpp"
#include "dmt/mergetree.hpp"
#include "dmt/multigraph.hpp"

namespace dmt {

struct EnumerationBudget {
    int max_vertices = 4;
    int max_edges = 6;
    int max_tree_nodes = 9;
    unsigned seed = 0;
};

/// Loop-free multigraph on vertices 0..n-1, for enumeration internals.
struct SmallGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

MultiGraph to_multigraph(const SmallGraph& sg);  // ids v0.., e0..

/// Connected multigraphs (no loops) within the budget, exactly once up to
/// isomorphism (canonical-form dedup over vertex permutations).
std::vector<SmallGraph> enumerate_multigraphs(const EnumerationBudget& budget);

/// Index-ordered critical dMfs on g from all (vertex order, edge order)
/// pairs, deduped by graph automorphism.
std::vector<Dmf> enumerate_critical_dmfs(const MultiGraph& g);

/// All gMT shapes with at most max_nodes nodes. Chirality is part of the
/// shape, so distinct results are pairwise non-isomorphic.
std::vector<Gmt> enumerate_gmt_shapes(int max_nodes);

/// All Morse orders on t, generated recursively from the interleaving
/// structure (every subtree's minimum heads its same-chirality block).
std::vector<Order> enumerate_morse_orders(const Gmt& t);

/// Valid gMl trees with labels 0..n-1: the shapes within the budget, each
/// carrying every Morse order as a labeling.
std::vector<std::pair<Gmt, Labeling>> enumerate_gml_trees(const EnumerationBudget& budget);

/// Merge equivalence of two Morse orders on one tree, checked against the
/// definition (subtree maxima and minima located at the same nodes).
bool merge_equivalent_orders(const Gmt& t, const Order& a, const Order& b);

/// Direct filtration-replay test for cm-equivalence of critical dMfs: the
/// value-forced bijection must preserve the merge/close pattern and the
/// component correspondence at every level. Cross-checks the theorem-level
/// route (isomorphism of induced trees).
bool cm_equivalent_direct(const MultiGraph& g1, const Dmf& f1, const MultiGraph& g2,
                          const Dmf& f2);

/// Exhaustive Kuratowski-subdivision search; exact for n <= 7.
bool nonplanar_by_kuratowski(int n, const std::vector<std::pair<int, int>>& edges);

struct SuiteReport {
    long graphs = 0;
    long dmfs = 0;
    long shapes = 0;
    long orders = 0;
    long order_pairs = 0;
    long realized = 0;
    std::vector<std::string> counterexamples;  // serialized JSON instances
    bool ok() const { return counterexamples.empty(); }
};

/// The round-trip acceptance engine: theorem parts 1 and 2 on every
/// enumerated instance, iMl/iMo inverses, merge equivalence of Morse-order
/// pairs, sc-order validity, closing-edge/b1 count, the subtree-component
/// lemma, and realization round-trips.
SuiteReport roundtrip_suite(const EnumerationBudget& budget);

}  // namespace dmt
