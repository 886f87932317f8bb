#include "dmt/realize.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace dmt {

RealizabilityReport check_realizable(const Gmt& t, RealizeMode mode) {
    GmtValidation v = validate_gmt(t);
    if (!v.ok()) throw std::invalid_argument("check_realizable needs a valid gMT");
    RealizabilityReport rep;
    rep.mode = mode;
    for (int c : cycle_nodes(t)) {
        int cu = t.children(c)[0];
        long long leaves = leaf_count(t, cu);
        long long cycles = cycle_count_below(t, cu);
        long long bound = mode == RealizeMode::Simple
                              ? (leaves - 2) * (leaves - 1) / 2
                              : 2 * leaves - 5;
        if (!(cycles < bound))
            rep.violations.push_back({t.id(c), cycles, leaves, bound});
    }
    return rep;
}

namespace {

std::string describe(const RealizabilityReport& rep) {
    std::string s = "not realizable as a ";
    s += rep.mode == RealizeMode::Simple ? "simple" : "planar";
    s += " graph:";
    for (const auto& v : rep.violations)
        s += " cycle node " + v.cycle_node + " has |C|=" + std::to_string(v.cycles) +
             ", leaves=" + std::to_string(v.leaves) +
             ", bound=" + std::to_string(v.bound) + ";";
    return s;
}

}  // namespace

NotRealizable::NotRealizable(RealizabilityReport rep)
    : std::runtime_error(describe(rep)), report(std::move(rep)) {}

bool planar_boyer(int n, const std::vector<std::pair<int, int>>& edges) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                        boost::property<boost::vertex_index_t, int>>;
    Graph g(n);
    for (auto [u, v] : edges) boost::add_edge(u, v, g);
    return boost::boyer_myrvold_planarity_test(g);
}

bool planarity_oracle(const MultiGraph& g) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.n_edges(); ++e) {
        auto [u, v] = g.endpoint_indices(e);
        std::pair<int, int> key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("planarity_oracle requires a simple graph; " +
                                        g.edge_name(e) + " is parallel");
        edges.push_back(key);
    }
    return planar_boyer(g.n_vertices(), edges);
}

namespace {

PhiResult realize(const Gmt& t, const Order& order, RealizeMode mode) {
    RealizabilityReport rep = check_realizable(t, mode);
    if (!rep.realizable()) throw NotRealizable(rep);
    if (!is_morse_order(t, order))
        throw std::invalid_argument("realize needs a valid Morse order");

    Labeling l = order_to_label(t, order);
    auto [t_bar, l_bar] = underlying_tree(t, l);
    PhiResult out = phi_path(t_bar, l_bar);

    // cycle nodes in ascending label order
    std::vector<int> cycles = cycle_nodes(t);
    std::sort(cycles.begin(), cycles.end(), [&](int a, int b) {
        return l.at(t.id(a)) < l.at(t.id(b));
    });

    for (int c : cycles) {
        int cu = t.children(c)[0];
        // vertices of the component corresponding to T(c_u) = its leaves
        std::vector<std::string> verts;
        std::function<void(int)> leaves = [&](int n) {
            if (t.is_leaf(n)) verts.push_back(t.id(n));
            for (int ch : t.children(n)) leaves(ch);
        };
        leaves(cu);

        std::sort(verts.begin(), verts.end(), [&](const std::string& a, const std::string& b) {
            return l.at(a) < l.at(b);
        });

        // lexicographically minimal non-adjacent pair (f(v) < f(u))
        bool placed = false;
        for (size_t i = 0; i < verts.size() && !placed; ++i) {
            for (size_t j = i + 1; j < verts.size() && !placed; ++j) {
                if (out.graph.adjacent(verts[i], verts[j])) continue;
                if (mode == RealizeMode::Planar) {
                    MultiGraph probe = out.graph;
                    probe.add_edge(t.id(c), verts[i], verts[j]);
                    if (!planarity_oracle(probe)) continue;
                }
                out.graph.add_edge(t.id(c), verts[i], verts[j]);
                out.dmf.set(CellRef::edge(t.id(c)), l.at(t.id(c)));
                out.cell_of_node[t.id(c)] = CellRef::edge(t.id(c));
                placed = true;
            }
        }
        if (!placed)
            throw std::logic_error(
                "no insertion candidate for cycle node " + t.id(c) +
                " despite the realizability bound; this contradicts the "
                "characterization theorem and indicates a bug");
    }
    return out;
}

}  // namespace

PhiResult realize_simple(const Gmt& t) { return realize(t, sc_order(t), RealizeMode::Simple); }
PhiResult realize_simple(const Gmt& t, const Order& order) {
    return realize(t, order, RealizeMode::Simple);
}
PhiResult realize_planar(const Gmt& t) { return realize(t, sc_order(t), RealizeMode::Planar); }
PhiResult realize_planar(const Gmt& t, const Order& order) {
    return realize(t, order, RealizeMode::Planar);
}

}  // namespace dmt
