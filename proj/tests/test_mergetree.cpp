#include <doctest.h>

#include <algorithm>

#include "dmt/harness.hpp"
#include "dmt/mergetree.hpp"
#include "fixtures.hpp"

using namespace dmt;

TEST_CASE("validate_gmt") {
    SUBCASE("single root is fine") {
        Gmt t;
        t.add_root("r", Chir::L);
        CHECK(validate_gmt(t).ok());
    }
    SUBCASE("root chirality must be L") {
        Gmt t;
        t.add_root("r", Chir::R);
        CHECK(!validate_gmt(t).ok());
    }
    SUBCASE("only child must share chirality") {
        Gmt t;
        t.add_root("r", Chir::L);
        t.add_child("r", "c", Chir::R);
        t.add_child("c", "a", Chir::R);
        t.add_child("c", "b", Chir::L);
        GmtValidation rep = validate_gmt(t);
        CHECK(!rep.ok());
    }
    SUBCASE("leaves need siblings") {
        Gmt t;
        t.add_root("r", Chir::L);
        t.add_child("r", "c", Chir::L);
        CHECK(!validate_gmt(t).ok());
    }
    SUBCASE("the sc-order example tree") {
        auto [t, l] = fixtures::sc_example_tree();
        CHECK(t.n_nodes() == 33);
        CHECK(validate_gmt(t).ok());
        CHECK(cycle_nodes(t).size() == 8);
        CHECK(leaf_count(t, t.root()) == 13);
    }
}

TEST_CASE("morse order axioms") {
    SUBCASE("single node") {
        Gmt t;
        t.add_root("r", Chir::L);
        CHECK(is_morse_order(t, {{"r", 0}}));
    }
    SUBCASE("min-rank leaf must share root chirality") {
        Gmt t;
        t.add_root("r", Chir::L);
        t.add_child("r", "a", Chir::L);
        t.add_child("r", "b", Chir::R);
        CHECK(is_morse_order(t, {{"r", 2}, {"a", 0}, {"b", 1}}));
        CHECK(!is_morse_order(t, {{"r", 2}, {"a", 1}, {"b", 0}}));
        CHECK(!is_morse_order(t, {{"r", 0}, {"a", 1}, {"b", 2}}));  // max not at root
    }
    SUBCASE("sc example labels are a Morse labeling") {
        auto [t, l] = fixtures::sc_example_tree();
        CHECK(is_morse_labeling(t, l));
    }
    SUBCASE("the remark's two formulations agree with the definition") {
        for (const Gmt& t : enumerate_gmt_shapes(7)) {
            for (const Order& o : enumerate_morse_orders(t)) {
                CHECK(is_morse_order(t, o));
                CHECK(morse_axiom2_min_in_same_chirality_child(t, o));
                CHECK(morse_axiom2_path_to_min_same_chirality(t, o));
            }
        }
        // and on a non-Morse order all three reject
        auto [t, l] = fixtures::triangle_tree();
        Order bad{{"5", 5}, {"4", 4}, {"3", 3}, {"2", 2}, {"0", 1}, {"1", 0}};
        CHECK(!is_morse_order(t, bad));
        CHECK(!morse_axiom2_min_in_same_chirality_child(t, bad));
        CHECK(!morse_axiom2_path_to_min_same_chirality(t, bad));
    }
}

TEST_CASE("order/label bijection") {
    auto [t, l] = fixtures::sc_example_tree();
    Order o = label_to_order(t, l);
    SUBCASE("sc example: ranks equal labels") {
        for (const auto& [id, r] : o) CHECK(Rat(r) == l.at(id));
    }
    SUBCASE("round trips") {
        CHECK(label_to_order(t, order_to_label(t, o)) == o);
        for (const Gmt& shape : enumerate_gmt_shapes(6))
            for (const Order& ord : enumerate_morse_orders(shape))
                CHECK(label_to_order(shape, order_to_label(shape, ord)) == ord);
    }
    SUBCASE("doubling labels preserves the order") {
        Labeling doubled;
        for (const auto& [id, v] : l) doubled[id] = Rat(v.num() * 2, v.den());
        CHECK(label_to_order(t, doubled) == o);
        CHECK(order_equivalent(t, l, t, doubled));
        CHECK(!iso_gml(t, l, t, doubled));
    }
}

TEST_CASE("path words") {
    auto [t, l] = fixtures::sc_example_tree();
    SUBCASE("root word is L") {
        CHECK(path_word(t, t.root()).str() == "L");
    }
    SUBCASE("only child of a cycle root extends the parent letter") {
        Gmt c;
        c.add_root("r", Chir::L);
        c.add_child("r", "m", Chir::L);
        c.add_child("m", "a", Chir::L);
        c.add_child("m", "b", Chir::R);
        CHECK(path_word(c, c.checked("m")).str() == "LL");
    }
    SUBCASE("the sc-minimal leaf has an all-L word of length depth+1") {
        int leaf0 = t.checked("0");
        PathWord w = path_word(t, leaf0);
        CHECK(w.str() == std::string(w.letters.size(), 'L'));
        int depth = 0;
        for (int x = leaf0; t.parent(x) != -1; x = t.parent(x)) ++depth;
        CHECK(static_cast<int>(w.letters.size()) == depth + 1);
    }
    SUBCASE("first letter is always L, last letter is the node's chirality") {
        for (int n : t.preorder()) {
            PathWord w = path_word(t, n);
            CHECK(w.letters.front() == Chir::L);
            CHECK(w.letters.back() == t.chirality(n));
        }
    }
}

TEST_CASE("sublevel-connected order") {
    SUBCASE("root is the maximum") {
        auto [t, l] = fixtures::triangle_tree();
        for (int n : t.preorder())
            if (n != t.root()) CHECK(sc_compare(t, n, t.root()) == ScCmp::Less);
    }
    SUBCASE("sc example reproduces the drawn labels") {
        auto [t, l] = fixtures::sc_example_tree();
        Order sc = sc_order(t);
        for (const auto& [id, r] : sc) CHECK(Rat(r) == l.at(id));
    }
    SUBCASE("sc_order is a Morse order and matches sc_compare") {
        for (const Gmt& t : enumerate_gmt_shapes(8)) {
            Order sc = sc_order(t);
            CHECK(is_morse_order(t, sc));
            // comparator agrees with the sort, and equality only at a == b
            for (int a : t.preorder())
                for (int b : t.preorder()) {
                    ScCmp c = sc_compare(t, a, b);
                    if (a == b) {
                        CHECK(c == ScCmp::Equal);
                    } else {
                        CHECK(c != ScCmp::Equal);
                        CHECK((c == ScCmp::Less) ==
                              (sc.at(t.id(a)) < sc.at(t.id(b))));
                        // antisymmetry
                        ScCmp rc = sc_compare(t, b, a);
                        CHECK((c == ScCmp::Less) == (rc == ScCmp::Greater));
                    }
                }
        }
    }
}

TEST_CASE("subtree statistics") {
    auto [t, l] = fixtures::sc_example_tree();
    SUBCASE("leaves and cycles") {
        CHECK(leaf_count(t, t.checked("7")) == 4);
        CHECK(cycle_count_below(t, t.checked("8")) == 1);
        CHECK(cycle_count_below(t, t.root()) == 8);
        CHECK(leaf_count(t, t.checked("17")) == 1);
        CHECK(cycle_count_below(t, t.checked("17")) == 0);
    }
    SUBCASE("subtree keeps chirality") {
        Gmt sub = subtree(t, t.checked("24"));
        CHECK(sub.chirality(sub.root()) == Chir::R);
        CHECK(sub.n_nodes() == 10);
    }
    SUBCASE("oldest two-child descendant") {
        CHECK(t.id(oldest_two_child_descendant(t, t.checked("8"))) == "7");
        CHECK(t.id(oldest_two_child_descendant(t, t.checked("9"))) == "7");
        CHECK(t.id(oldest_two_child_descendant(t, t.checked("28"))) == "27");
        CHECK_THROWS(oldest_two_child_descendant(t, t.checked("7")));
    }
}

TEST_CASE("underlying tree") {
    SUBCASE("no cycle nodes: unchanged") {
        auto [t, l] = fixtures::triangle_tree();
        auto [u, lu] = underlying_tree(subtree(t, t.checked("4")), l);
        CHECK(u.n_nodes() == 5);
    }
    SUBCASE("triangle tree splices its root chain") {
        auto [t, l] = fixtures::triangle_tree();
        auto [u, lu] = underlying_tree(t, l);
        CHECK(u.n_nodes() == 5);
        CHECK(u.id(u.root()) == "4");
        CHECK(cycle_nodes(u).empty());
    }
    SUBCASE("sc example keeps 25 nodes with the drawn labels") {
        auto [t, l] = fixtures::sc_example_tree();
        auto [u, lu] = underlying_tree(t, l);
        CHECK(u.n_nodes() == 25);
        CHECK(cycle_nodes(u).empty());
        CHECK(leaf_count(u, u.root()) == leaf_count(t, t.root()));
        std::vector<long long> kept;
        for (const auto& [id, v] : lu) kept.push_back(v.num());
        std::sort(kept.begin(), kept.end());
        CHECK(kept == std::vector<long long>{0, 1, 2, 3, 4, 5, 6, 7, 10, 12, 13,
                                             15, 16, 17, 18, 19, 21, 22, 25, 26,
                                             27, 29, 30, 31, 32});
        CHECK(validate_gmt(u).ok());
        CHECK(is_morse_labeling(u, lu));
    }
}

TEST_CASE("tree equivalences") {
    auto [t, l] = fixtures::sc_example_tree();
    SUBCASE("identity is an equivalence for all three") {
        CHECK(iso_gml(t, l, t, l));
        CHECK(order_equivalent(t, l, t, l));
        CHECK(merge_equivalent(t, t));
    }
    SUBCASE("chirality differences break isomorphism") {
        auto [t2, l2] = fixtures::sc_example_tree();
        CHECK(!merge_equivalent(t, flip_all(subtree(t2, t2.root()))));
    }
    SUBCASE("iso implies order equivalence implies merge equivalence") {
        for (const Gmt& a : enumerate_gmt_shapes(6)) {
            auto orders = enumerate_morse_orders(a);
            Labeling la = order_to_label(a, orders[0]);
            CHECK(iso_gml(a, la, a, la));
            CHECK(order_equivalent(a, la, a, la));
            CHECK(merge_equivalent(a, a));
        }
    }
    SUBCASE("different shapes are never merge equivalent") {
        auto shapes = enumerate_gmt_shapes(7);
        for (size_t i = 0; i < shapes.size(); ++i)
            for (size_t j = i + 1; j < shapes.size(); ++j)
                CHECK(!merge_equivalent(shapes[i], shapes[j]));
    }
}
