#include "dmt/dot.hpp"

#include <algorithm>
#include <sstream>

namespace dmt {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string graph_to_dot(const MultiGraph& g, const Dmf& f) {
    std::ostringstream os;
    os << "graph dmf {\n";
    std::vector<std::string> vids = g.vertices();
    std::sort(vids.begin(), vids.end());
    for (const auto& v : vids)
        os << "  " << quote(v) << " [label="
           << quote(v + " : " + f.value(CellRef::vertex(v)).str()) << "];\n";
    std::vector<std::string> eids = g.edge_ids();
    std::sort(eids.begin(), eids.end());
    for (const auto& e : eids) {
        auto [u, v] = g.endpoints(e);
        os << "  " << quote(u) << " -- " << quote(v) << " [label="
           << quote(f.value(CellRef::edge(e)).str()) << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string tree_to_dot(const Gmt& t, const Labeling* labeling) {
    std::ostringstream os;
    os << "digraph gmt {\n  ordering=out;\n";
    for (int n : t.preorder()) {
        std::string label = t.id(n);
        if (labeling && labeling->count(t.id(n)))
            label += " : " + labeling->at(t.id(n)).str();
        label += std::string(" (") + chir_char(t.chirality(n)) + ")";
        os << "  " << quote(t.id(n)) << " [label=" << quote(label)
           << (t.is_cycle_node(n) ? ", shape=doublecircle" : ", shape=circle") << "];\n";
    }
    for (int n : t.preorder())
        for (int c : t.children(n))
            os << "  " << quote(t.id(n)) << " -> " << quote(t.id(c)) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace dmt
