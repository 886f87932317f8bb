#include <doctest.h>

#include "dmt/harness.hpp"
#include "dmt/induce.hpp"
#include "fixtures.hpp"

using namespace dmt;

TEST_CASE("induce base cases") {
    SUBCASE("single vertex") {
        MultiGraph g;
        g.add_vertex("v");
        Dmf f;
        f.set(CellRef::vertex("v"), Rat(0));
        InducedTree it = induce_merge_tree(g, f);
        CHECK(it.tree.n_nodes() == 1);
        CHECK(it.labeling.at("v") == Rat(0));
        CHECK(it.cell_of_node.at("v") == CellRef::vertex("v"));
    }
    SUBCASE("single matched pair yields a single root") {
        MultiGraph g;
        g.add_vertex("a");
        g.add_vertex("b");
        g.add_edge("e", "a", "b");
        Dmf f;
        f.set(CellRef::vertex("a"), Rat(0));
        f.set(CellRef::vertex("b"), Rat(1));
        f.set(CellRef::edge("e"), Rat(1));  // matched with b
        InducedTree it = induce_merge_tree(g, f);
        CHECK(it.tree.n_nodes() == 1);
        CHECK(it.labeling.at("a") == Rat(0));
    }
    SUBCASE("matched pair under a parallel closing edge") {
        // the construction is literal for matched cells: the cycle node here
        // sits directly over a single leaf, which the gMT validator flags
        // (the leaf/vertex correspondence only covers critical cells)
        MultiGraph g;
        g.add_vertex("u");
        g.add_vertex("w");
        g.add_edge("e", "u", "w");
        g.add_edge("s", "u", "w");
        Dmf f;
        f.set(CellRef::vertex("u"), Rat(0));
        f.set(CellRef::vertex("w"), Rat(1));
        f.set(CellRef::edge("e"), Rat(1));  // matched with w
        f.set(CellRef::edge("s"), Rat(2));
        REQUIRE(validate_dmf(g, f).ok());
        InducedTree it = induce_merge_tree(g, f);
        CHECK(it.tree.n_nodes() == 2);
        CHECK(it.tree.is_cycle_node(it.tree.root()));
        CHECK(it.labeling.at("s") == Rat(2));
        CHECK(it.labeling.at("u") == Rat(0));
        CHECK(!validate_gmt(it.tree).ok());
    }
    SUBCASE("disconnected input is rejected") {
        MultiGraph g;
        g.add_vertex("a");
        g.add_vertex("b");
        Dmf f;
        f.set(CellRef::vertex("a"), Rat(0));
        f.set(CellRef::vertex("b"), Rat(1));
        CHECK_THROWS_WITH_AS(induce_merge_tree(g, f),
                             doctest::Contains("connected"), std::invalid_argument);
    }
}

TEST_CASE("induce on the triangle") {
    auto gd = fixtures::triangle();
    InducedTree it = induce_merge_tree(gd.g, gd.f);
    auto [expected, l] = fixtures::triangle_tree();
    CHECK(iso_gml(it.tree, it.labeling, expected, l));
    CHECK(validate_gmt(it.tree).ok());
    CHECK(is_morse_labeling(it.tree, it.labeling));
    // correspondence: vertices <-> leaves, closing edge e5 <-> cycle node
    CHECK(it.node_of_cell.at(CellRef::edge("e5")) == "e5");
    CHECK(it.tree.is_cycle_node(it.tree.checked("e5")));
    CHECK(it.tree.is_leaf(it.tree.checked("v0")));
}

TEST_CASE("induce reproduces the example-1 figure tree") {
    auto gd = fixtures::cancel_example_1();
    InducedTree it = induce_merge_tree(gd.g, gd.f);
    auto [expected, l] = fixtures::cancel_example_1_tree();
    CHECK(it.tree.n_nodes() == 20);
    CHECK(iso_gml(it.tree, it.labeling, expected, l));
    // cycle nodes are exactly the closing edges 15, 17, 19
    std::vector<std::string> cyc;
    for (int n : cycle_nodes(it.tree)) cyc.push_back(it.tree.id(n));
    std::sort(cyc.begin(), cyc.end());
    CHECK(cyc == std::vector<std::string>{"e15", "e17", "e19"});
}

TEST_CASE("induce reproduces the example-3 figure tree") {
    auto gd = fixtures::cancel_example_3();
    InducedTree it = induce_merge_tree(gd.g, gd.f);
    auto [expected, l] = fixtures::cancel_example_3_tree();
    CHECK(it.tree.n_nodes() == 15);
    CHECK(iso_gml(it.tree, it.labeling, expected, l));
    CHECK(closing_edges(gd.g, gd.f) == std::vector<std::string>{"e12", "e14"});
}

TEST_CASE("structural counts of the induced tree") {
    for (const SmallGraph& sg : enumerate_multigraphs({3, 4, 1, 0})) {
        MultiGraph g = to_multigraph(sg);
        std::vector<std::string> vs = g.vertices(), es = g.edge_ids();
        Dmf f = make_index_ordered_dmf(g, vs, es);
        InducedTree it = induce_merge_tree(g, f);
        int leaves = 0, two_child = 0, cycles = 0;
        for (int n : it.tree.preorder()) {
            if (it.tree.is_leaf(n)) ++leaves;
            else if (it.tree.is_cycle_node(n)) ++cycles;
            else ++two_child;
        }
        auto [b0, b1] = betti(g);
        CHECK(leaves == g.n_vertices());
        CHECK(cycles == b1);
        CHECK(two_child == static_cast<int>(g.n_edges()) - b1);
        CHECK(validate_gmt(it.tree).ok());
        CHECK(is_morse_labeling(it.tree, it.labeling));
    }
}

TEST_CASE("cm-equivalent inputs induce isomorphic trees") {
    auto left = fixtures::cm_example_left();
    auto right = fixtures::cm_example_right();
    InducedTree a = induce_merge_tree(left.g, left.f);
    InducedTree b = induce_merge_tree(right.g, right.f);
    CHECK(iso_gml(a.tree, a.labeling, b.tree, b.labeling));
    // the shared shape: 8 -> 7 -> 5 -> {0, 1}
    CHECK(a.tree.n_nodes() == 5);
    CHECK(cycle_nodes(a.tree).size() == 2);
    CHECK(a.labeling.at(a.tree.id(a.tree.root())) == Rat(8));
}

TEST_CASE("spanning tree commutes with the underlying tree") {
    auto gd = fixtures::cancel_example_1();
    auto [bar_g, bar_f] = induced_spanning_tree(gd.g, gd.f);
    InducedTree whole = induce_merge_tree(gd.g, gd.f);
    InducedTree bar = induce_merge_tree(bar_g, bar_f);
    auto [expected, expected_l] = underlying_tree(whole.tree, whole.labeling);
    CHECK(iso_gml(bar.tree, bar.labeling, expected, expected_l));
}

TEST_CASE("subtree-component lemma") {
    SUBCASE("max critical edge gives the whole tree") {
        auto gd = fixtures::cancel_example_1();
        CHECK(subtree_component_check(gd.g, gd.f, CellRef::edge("e19")));
    }
    SUBCASE("all critical cells, including chirality-R nodes") {
        auto gd = fixtures::triangle();
        for (const CellRef& s : critical_cells(gd.g, gd.f))
            CHECK(subtree_component_check(gd.g, gd.f, s));
        auto gd3 = fixtures::cancel_example_3();
        for (const CellRef& s : critical_cells(gd3.g, gd3.f))
            CHECK(subtree_component_check(gd3.g, gd3.f, s));
    }
    SUBCASE("brute force over small instances") {
        for (const SmallGraph& sg : enumerate_multigraphs({3, 3, 1, 0})) {
            MultiGraph g = to_multigraph(sg);
            for (const Dmf& f : enumerate_critical_dmfs(g))
                for (const CellRef& s : critical_cells(g, f))
                    CHECK(subtree_component_check(g, f, s));
        }
    }
}
