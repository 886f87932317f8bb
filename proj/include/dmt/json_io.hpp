#pragma once

#include <stdexcept>
#include <string>

#include "dmt/cancel.hpp"
#include "dmt/dmf.hpp"
#include "dmt/induce.hpp"
#include "dmt/invert.hpp"
#include "dmt/mergetree.hpp"
#include "dmt/multigraph.hpp"

namespace dmt {

struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph+dMf document:
// {"vertices":[{"id":str,"f":int|"p/q"}],"edges":[{"id":str,"u":str,"v":str,"f":...}]}
std::string graph_doc_to_string(const MultiGraph& g, const Dmf& f);
std::pair<MultiGraph, Dmf> graph_doc_from_string(const std::string& text);

// Tree document:
// {"root":str,"nodes":[{"id":str,"chirality":"L"|"R","label":int|"p/q"|null,
//   "children":[str,...]}]}
// labeling == nullptr writes null labels (an unlabeled gMT).
std::string tree_doc_to_string(const Gmt& t, const Labeling* labeling);
std::pair<Gmt, Labeling> tree_doc_from_string(const std::string& text);  // labels may be empty

std::string induce_doc_to_string(const InducedTree& it);
std::string phi_doc_to_string(const PhiResult& p);
std::string cancel_doc_to_string(const CancelOutcome& o);

enum class DocKind { Graph, Tree };
DocKind detect_doc_kind(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dmt
