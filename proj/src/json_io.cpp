#include "dmt/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

namespace dmt {

namespace {

using nlohmann::json;

json value_to_json(const Rat& r) {
    if (r.is_integer()) return json(r.num());
    return json(r.str());
}

Rat value_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        auto r = Rat::parse(j.get<std::string>());
        if (!r) throw MalformedInput("bad rational value at " + where);
        return *r;
    }
    throw MalformedInput("value at " + where + " must be an integer or a \"p/q\" string");
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw MalformedInput("not valid JSON");
    return j;
}

}  // namespace

std::string graph_doc_to_string(const MultiGraph& g, const Dmf& f) {
    json doc;
    doc["vertices"] = json::array();
    doc["edges"] = json::array();
    std::vector<std::string> vids = g.vertices();
    std::sort(vids.begin(), vids.end());
    for (const auto& v : vids) {
        json jv;
        jv["id"] = v;
        jv["f"] = value_to_json(f.value(CellRef::vertex(v)));
        doc["vertices"].push_back(jv);
    }
    std::vector<std::string> eids = g.edge_ids();
    std::sort(eids.begin(), eids.end());
    for (const auto& e : eids) {
        auto [u, v] = g.endpoints(e);
        json je;
        je["id"] = e;
        je["u"] = u;
        je["v"] = v;
        je["f"] = value_to_json(f.value(CellRef::edge(e)));
        doc["edges"].push_back(je);
    }
    return doc.dump(2) + "\n";
}

std::pair<MultiGraph, Dmf> graph_doc_from_string(const std::string& text) {
    json doc = parse(text);
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw MalformedInput("graph document needs \"vertices\" and \"edges\"");
    MultiGraph g;
    Dmf f;
    try {
        for (const auto& jv : doc["vertices"]) {
            if (!jv.contains("id") || !jv["id"].is_string())
                throw MalformedInput("vertex without string id");
            std::string id = jv["id"];
            g.add_vertex(id);
            if (jv.contains("f")) f.set(CellRef::vertex(id), value_from_json(jv["f"], id));
        }
        for (const auto& je : doc["edges"]) {
            if (!je.contains("id") || !je["id"].is_string() || !je.contains("u") ||
                !je.contains("v"))
                throw MalformedInput("edge needs id, u, v");
            std::string id = je["id"];
            g.add_edge(id, je["u"].get<std::string>(), je["v"].get<std::string>());
            if (je.contains("f")) f.set(CellRef::edge(id), value_from_json(je["f"], id));
        }
    } catch (const std::invalid_argument& e) {
        throw MalformedInput(e.what());
    }
    return {std::move(g), std::move(f)};
}

std::string tree_doc_to_string(const Gmt& t, const Labeling* labeling) {
    json doc;
    doc["root"] = t.root() >= 0 ? t.id(t.root()) : "";
    doc["nodes"] = json::array();
    std::vector<int> order = t.preorder();
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return t.id(a) < t.id(b); });
    for (int n : order) {
        json jn;
        jn["id"] = t.id(n);
        jn["chirality"] = std::string(1, chir_char(t.chirality(n)));
        if (labeling && labeling->count(t.id(n)))
            jn["label"] = value_to_json(labeling->at(t.id(n)));
        else
            jn["label"] = nullptr;
        jn["children"] = json::array();
        for (int c : t.children(n)) jn["children"].push_back(t.id(c));
        doc["nodes"].push_back(jn);
    }
    return doc.dump(2) + "\n";
}

std::pair<Gmt, Labeling> tree_doc_from_string(const std::string& text) {
    json doc = parse(text);
    if (!doc.is_object() || !doc.contains("root") || !doc.contains("nodes"))
        throw MalformedInput("tree document needs \"root\" and \"nodes\"");

    struct Raw {
        Chir chir;
        std::vector<std::string> children;
        bool labeled = false;
        Rat label;
    };
    std::map<std::string, Raw> raw;
    for (const auto& jn : doc["nodes"]) {
        if (!jn.contains("id") || !jn["id"].is_string())
            throw MalformedInput("node without string id");
        std::string id = jn["id"];
        if (raw.count(id)) throw MalformedInput("duplicate node id " + id);
        Raw r;
        if (!jn.contains("chirality") ||
            (jn["chirality"] != "L" && jn["chirality"] != "R"))
            throw MalformedInput("node " + id + " needs chirality \"L\" or \"R\"");
        r.chir = jn["chirality"] == "L" ? Chir::L : Chir::R;
        if (jn.contains("children"))
            for (const auto& c : jn["children"]) r.children.push_back(c.get<std::string>());
        if (jn.contains("label") && !jn["label"].is_null()) {
            r.labeled = true;
            r.label = value_from_json(jn["label"], id);
        }
        raw[id] = std::move(r);
    }
    std::string root = doc["root"];
    if (!raw.count(root)) throw MalformedInput("root " + root + " is not a node");

    Gmt t;
    Labeling l;
    try {
        std::function<void(const std::string&, int)> build = [&](const std::string& id,
                                                                 int parent) {
            const Raw& r = raw.at(id);
            int node = parent < 0 ? t.add_root(id, r.chir) : t.add_child(parent, id, r.chir);
            if (r.labeled) l[id] = r.label;
            for (const auto& c : r.children) {
                if (!raw.count(c)) throw MalformedInput("unknown child " + c);
                build(c, node);
            }
        };
        build(root, -1);
    } catch (const std::invalid_argument& e) {
        throw MalformedInput(e.what());
    }
    if (t.n_nodes() != static_cast<int>(raw.size()))
        throw MalformedInput("nodes unreachable from the root");
    if (!l.empty() && static_cast<int>(l.size()) != t.n_nodes())
        throw MalformedInput("labels must cover all nodes or none");
    return {std::move(t), std::move(l)};
}

std::string induce_doc_to_string(const InducedTree& it) {
    json doc = parse(tree_doc_to_string(it.tree, &it.labeling));
    json corr;
    for (const auto& [node, cell] : it.cell_of_node) corr[node] = cell.id;
    doc["correspondence"] = corr;
    return doc.dump(2) + "\n";
}

std::string phi_doc_to_string(const PhiResult& p) {
    json doc = parse(graph_doc_to_string(p.graph, p.dmf));
    json corr;
    for (const auto& [node, cell] : p.cell_of_node) corr[node] = cell.id;
    doc["cell_of_node"] = corr;
    return doc.dump(2) + "\n";
}

std::string cancel_doc_to_string(const CancelOutcome& o) {
    json doc = parse(graph_doc_to_string(o.graph, o.dmf));
    doc["pairs"] = json::array();
    auto pairs = o.matching.pairs;
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [v, e] : pairs) doc["pairs"].push_back(json::array({v, e}));
    doc["critical"] = json::array();
    for (const auto& c : o.critical) doc["critical"].push_back(c.id);
    doc["trace"] = json::array();
    for (const auto& tr : o.trace) {
        json jt;
        jt["leaf"] = tr.leaf;
        jt["ancestor"] = tr.ancestor;
        jt["case"] = cancel_case_name(tr.kind);
        doc["trace"].push_back(jt);
    }
    return doc.dump(2) + "\n";
}

DocKind detect_doc_kind(const std::string& text) {
    json doc = parse(text);
    if (doc.is_object() && doc.contains("vertices")) return DocKind::Graph;
    if (doc.is_object() && doc.contains("nodes") && doc.contains("root"))
        return DocKind::Tree;
    throw MalformedInput("document is neither a graph nor a tree");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace dmt
