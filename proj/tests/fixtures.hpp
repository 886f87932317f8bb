#pragma once

#include <string>
#include <vector>

#include "dmt/dmf.hpp"
#include "dmt/mergetree.hpp"
#include "dmt/multigraph.hpp"

// Worked examples used across the test and acceptance suites. Vertices are
// named v<value>, edges e<value>; tree nodes are named by their label.

namespace fixtures {

using dmt::CellRef;
using dmt::Chir;
using dmt::Dmf;
using dmt::Gmt;
using dmt::Labeling;
using dmt::MultiGraph;
using dmt::Rat;

struct GraphDmf {
    MultiGraph g;
    Dmf f;
};

inline void add_v(GraphDmf& gd, long long value) {
    std::string id = "v" + std::to_string(value);
    gd.g.add_vertex(id);
    gd.f.set(CellRef::vertex(id), Rat(value));
}

inline void add_e(GraphDmf& gd, long long value, long long u, long long v) {
    std::string id = "e" + std::to_string(value);
    gd.g.add_edge(id, "v" + std::to_string(u), "v" + std::to_string(v));
    gd.f.set(CellRef::edge(id), Rat(value));
}

/// Cancellation example 1: 9 vertices, 11 edges, b1 = 3.
inline GraphDmf cancel_example_1() {
    GraphDmf gd;
    for (int v = 0; v <= 8; ++v) add_v(gd, v);
    add_e(gd, 9, 6, 8);
    add_e(gd, 10, 2, 0);
    add_e(gd, 11, 6, 7);
    add_e(gd, 12, 6, 5);
    add_e(gd, 13, 5, 4);
    add_e(gd, 14, 3, 4);
    add_e(gd, 15, 5, 3);
    add_e(gd, 16, 4, 1);
    add_e(gd, 17, 3, 1);
    add_e(gd, 18, 1, 2);
    add_e(gd, 19, 1, 0);
    return gd;
}

/// The induced tree of cancel_example_1 as drawn: cycle nodes 19, 17, 15.
inline std::pair<Gmt, Labeling> cancel_example_1_tree() {
    Gmt t;
    Labeling l;
    auto node = [&](const char* id, long long label) {
        l[id] = Rat(label);
        return id;
    };
    t.add_root(node("19", 19), Chir::L);
    t.add_child("19", node("18", 18), Chir::L);
    t.add_child("18", node("10", 10), Chir::L);
    t.add_child("18", node("17", 17), Chir::R);
    t.add_child("10", node("0", 0), Chir::L);
    t.add_child("10", node("2", 2), Chir::R);
    t.add_child("17", node("16", 16), Chir::R);
    t.add_child("16", node("15", 15), Chir::L);
    t.add_child("16", node("1", 1), Chir::R);
    t.add_child("15", node("14", 14), Chir::L);
    t.add_child("14", node("3", 3), Chir::L);
    t.add_child("14", node("13", 13), Chir::R);
    t.add_child("13", node("12", 12), Chir::L);
    t.add_child("13", node("4", 4), Chir::R);
    t.add_child("12", node("5", 5), Chir::L);
    t.add_child("12", node("11", 11), Chir::R);
    t.add_child("11", node("7", 7), Chir::L);
    t.add_child("11", node("9", 9), Chir::R);
    t.add_child("9", node("8", 8), Chir::L);
    t.add_child("9", node("6", 6), Chir::R);
    return {std::move(t), std::move(l)};
}

/// Cancellation example 2: 6 vertices, 5 edges (a tree; no closing edges).
inline GraphDmf cancel_example_2() {
    GraphDmf gd;
    for (int v = 0; v <= 5; ++v) add_v(gd, v);
    add_e(gd, 6, 2, 4);
    add_e(gd, 7, 2, 0);
    add_e(gd, 8, 5, 3);
    add_e(gd, 9, 1, 3);
    add_e(gd, 10, 2, 3);
    return gd;
}

/// Cancellation example 3: 7 vertices, 8 edges, b1 = 2 (closing 12, 14).
inline GraphDmf cancel_example_3() {
    GraphDmf gd;
    for (int v = 0; v <= 6; ++v) add_v(gd, v);
    add_e(gd, 7, 6, 4);
    add_e(gd, 8, 2, 5);
    add_e(gd, 9, 4, 3);
    add_e(gd, 10, 3, 2);
    add_e(gd, 11, 1, 2);
    add_e(gd, 12, 1, 3);
    add_e(gd, 13, 2, 0);
    add_e(gd, 14, 1, 0);
    return gd;
}

/// The induced tree of cancel_example_3 as drawn: cycle nodes 14 and 12.
inline std::pair<Gmt, Labeling> cancel_example_3_tree() {
    Gmt t;
    Labeling l;
    struct Row {
        const char* id;
        const char* parent;
        Chir chir;
    };
    const Row rows[] = {
        {"14", "", Chir::L},
        {"13", "14", Chir::L},
        {"0", "13", Chir::L},  {"12", "13", Chir::R},
        {"11", "12", Chir::R},
        {"10", "11", Chir::L}, {"1", "11", Chir::R},
        {"8", "10", Chir::L},  {"9", "10", Chir::R},
        {"2", "8", Chir::L},   {"5", "8", Chir::R},
        {"7", "9", Chir::L},   {"3", "9", Chir::R},
        {"4", "7", Chir::L},   {"6", "7", Chir::R},
    };
    for (const Row& r : rows) {
        if (std::string(r.parent).empty())
            t.add_root(r.id, r.chir);
        else
            t.add_child(r.parent, r.id, r.chir);
        l[r.id] = Rat(std::stoll(r.id));
    }
    return {std::move(t), std::move(l)};
}

/// The component-merge equivalence example, left graph. Matched pairs
/// (v2,e2), (v3,e3), (v4,e4), (v6,e6); e7 and e8 are parallel.
inline GraphDmf cm_example_left() {
    GraphDmf gd;
    for (long long v : {0, 1, 2, 3, 4, 6}) add_v(gd, v);
    add_e(gd, 2, 2, 0);
    add_e(gd, 3, 3, 2);
    add_e(gd, 4, 4, 1);
    add_e(gd, 5, 2, 4);
    add_e(gd, 6, 6, 4);
    add_e(gd, 7, 3, 6);
    add_e(gd, 8, 3, 6);
    return gd;
}

/// The component-merge equivalence example, right graph (simple).
inline GraphDmf cm_example_right() {
    GraphDmf gd;
    for (long long v : {0, 1, 2, 3, 4, 6}) add_v(gd, v);
    add_e(gd, 2, 2, 0);
    add_e(gd, 3, 3, 1);
    add_e(gd, 4, 2, 4);
    add_e(gd, 5, 0, 3);
    add_e(gd, 6, 4, 6);
    add_e(gd, 7, 4, 1);
    add_e(gd, 8, 6, 1);
    return gd;
}

/// Triangle with all cells critical; induced tree 5 -> 4 -> {3 -> {0,1}, 2}.
inline GraphDmf triangle() {
    GraphDmf gd;
    for (int v = 0; v <= 2; ++v) add_v(gd, v);
    add_e(gd, 3, 0, 1);
    add_e(gd, 4, 1, 2);
    add_e(gd, 5, 0, 2);
    return gd;
}

inline std::pair<Gmt, Labeling> triangle_tree() {
    Gmt t;
    Labeling l;
    t.add_root("5", Chir::L);
    t.add_child("5", "4", Chir::L);
    t.add_child("4", "3", Chir::L);
    t.add_child("4", "2", Chir::R);
    t.add_child("3", "0", Chir::L);
    t.add_child("3", "1", Chir::R);
    for (const char* id : {"0", "1", "2", "3", "4", "5"})
        l[id] = Rat(std::stoll(id));
    return {std::move(t), std::move(l)};
}

/// The 33-node sublevel-connected order example (8 cycle nodes, 13 leaves).
/// Node names equal the drawn sc labels 0..32.
inline std::pair<Gmt, Labeling> sc_example_tree() {
    Gmt t;
    Labeling l;
    struct Row {
        const char* id;
        const char* parent;  // empty for root
        Chir chir;
    };
    const Row rows[] = {
        {"32", "", Chir::L},
        {"28", "32", Chir::L},  {"31", "32", Chir::R},
        {"27", "28", Chir::L},
        {"14", "27", Chir::L},  {"26", "27", Chir::R},
        {"13", "14", Chir::L},
        {"11", "13", Chir::L},  {"12", "13", Chir::R},
        {"10", "11", Chir::L},
        {"0", "10", Chir::L},   {"9", "10", Chir::R},
        {"8", "9", Chir::R},
        {"7", "8", Chir::R},
        {"6", "7", Chir::L},    {"3", "7", Chir::R},
        {"4", "6", Chir::L},    {"5", "6", Chir::R},
        {"2", "3", Chir::L},    {"1", "3", Chir::R},
        {"25", "26", Chir::L},  {"24", "26", Chir::R},
        {"23", "24", Chir::R},
        {"22", "23", Chir::R},
        {"21", "22", Chir::L},  {"20", "22", Chir::R},
        {"19", "20", Chir::R},
        {"18", "19", Chir::L},  {"15", "19", Chir::R},
        {"16", "18", Chir::L},  {"17", "18", Chir::R},
        {"30", "31", Chir::L},  {"29", "31", Chir::R},
    };
    for (const Row& r : rows) {
        if (std::string(r.parent).empty())
            t.add_root(r.id, r.chir);
        else
            t.add_child(r.parent, r.id, r.chir);
        l[r.id] = Rat(std::stoll(r.id));
    }
    return {std::move(t), std::move(l)};
}

/// Expected path layout of the underlying tree of the sc example:
/// vertex values then edge values, interleaved v e v e ... v.
inline std::vector<long long> sc_example_path_vertices() {
    return {0, 4, 5, 2, 1, 12, 25, 21, 16, 17, 15, 30, 29};
}
inline std::vector<long long> sc_example_path_edges() {
    return {10, 6, 7, 3, 13, 27, 26, 22, 18, 19, 32, 31};
}

}  // namespace fixtures
