#include "dmt/invert.hpp"

#include <functional>

namespace dmt {

namespace {

void require_valid_gml(const Gmt& t, const Labeling& l) {
    GmtValidation v = validate_gmt(t);
    if (!v.ok()) {
        std::string msg = "invalid gMT";
        if (!v.malformed.empty()) msg += ": " + v.malformed[0];
        else msg += ": " + v.violations[0];
        throw std::invalid_argument(msg);
    }
    if (!is_morse_labeling(t, l))
        throw std::invalid_argument("labeling is not a Morse labeling");
}

}  // namespace

PhiResult phi_path(const Gmt& t_bar, const Labeling& l) {
    require_valid_gml(t_bar, l);
    if (!cycle_nodes(t_bar).empty())
        throw std::invalid_argument("phi_path requires a tree without cycle nodes");

    PhiResult out;
    // layout: sequence of node indices, leaves and inner nodes alternating
    std::vector<int> seq;
    std::function<void(int)> emit = [&](int n) {
        if (t_bar.is_leaf(n)) {
            seq.push_back(n);
            return;
        }
        const auto& ch = t_bar.children(n);
        emit(ch[0]);  // L child block
        seq.push_back(n);
        emit(ch[1]);
    };
    emit(t_bar.root());

    for (size_t i = 0; i < seq.size(); i += 2) {
        const std::string& id = t_bar.id(seq[i]);
        out.graph.add_vertex(id);
        out.dmf.set(CellRef::vertex(id), l.at(id));
        out.cell_of_node[id] = CellRef::vertex(id);
    }
    for (size_t i = 1; i < seq.size(); i += 2) {
        const std::string& id = t_bar.id(seq[i]);
        out.graph.add_edge(id, t_bar.id(seq[i - 1]), t_bar.id(seq[i + 1]));
        out.dmf.set(CellRef::edge(id), l.at(id));
        out.cell_of_node[id] = CellRef::edge(id);
    }
    return out;
}

PhiResult phi(const Gmt& t, const Labeling& l) {
    require_valid_gml(t, l);
    auto [t_bar, l_bar] = underlying_tree(t, l);
    PhiResult out = phi_path(t_bar, l_bar);
    for (int c : cycle_nodes(t)) {
        int d = oldest_two_child_descendant(t, c);
        const CellRef& cell = out.cell_of_node.at(t.id(d));
        auto [u, v] = out.graph.endpoints(cell.id);
        const std::string& id = t.id(c);
        out.graph.add_edge(id, u, v);
        out.dmf.set(CellRef::edge(id), l.at(id));
        out.cell_of_node[id] = CellRef::edge(id);
    }
    return out;
}

}  // namespace dmt
