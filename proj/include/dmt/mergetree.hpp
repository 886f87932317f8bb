#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmt/rational.hpp"

namespace dmt {

enum class Chir { L, R };

inline Chir flip(Chir c) { return c == Chir::L ? Chir::R : Chir::L; }
inline char chir_char(Chir c) { return c == Chir::L ? 'L' : 'R'; }

/// Generalized merge tree: rooted chiral binary tree where every leaf has a
/// sibling (root exempt), only children share their parent's chirality, and
/// the root has chirality L. Single-child inner nodes are cycle nodes.
class Gmt {
public:
    int add_node(const std::string& id, Chir chir) {
        if (index_.count(id)) throw std::invalid_argument("duplicate node id: " + id);
        int idx = static_cast<int>(nodes_.size());
        index_[id] = idx;
        nodes_.push_back({id, chir, {}, -1});
        return idx;
    }

    int add_root(const std::string& id, Chir chir = Chir::L) {
        int idx = add_node(id, chir);
        if (root_ != -1) throw std::invalid_argument("root already set");
        root_ = idx;
        return idx;
    }

    int add_child(int parent, const std::string& id, Chir chir) {
        int idx = add_node(id, chir);
        nodes_[idx].parent = parent;
        nodes_[parent].children.push_back(idx);
        order_children(parent);
        return idx;
    }

    int add_child(const std::string& parent_id, const std::string& id, Chir chir) {
        return add_child(checked(parent_id), id, chir);
    }

    int n_nodes() const { return static_cast<int>(nodes_.size()); }
    int root() const { return root_; }
    bool has_node(const std::string& id) const { return index_.count(id) > 0; }
    int checked(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::invalid_argument("unknown node: " + id);
        return it->second;
    }

    const std::string& id(int n) const { return nodes_[n].id; }
    Chir chirality(int n) const { return nodes_[n].chir; }
    int parent(int n) const { return nodes_[n].parent; }
    const std::vector<int>& children(int n) const { return nodes_[n].children; }
    bool is_leaf(int n) const { return nodes_[n].children.empty(); }
    bool is_cycle_node(int n) const { return nodes_[n].children.size() == 1; }

    /// All node indices, preorder from the root (deterministic).
    std::vector<int> preorder() const {
        std::vector<int> out;
        if (root_ < 0) return out;
        std::vector<int> stack{root_};
        while (!stack.empty()) {
            int n = stack.back();
            stack.pop_back();
            out.push_back(n);
            const auto& ch = nodes_[n].children;
            for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
        }
        return out;
    }

private:
    struct Node {
        std::string id;
        Chir chir;
        std::vector<int> children;  // L child listed first
        int parent;
    };

    void order_children(int parent) {
        auto& ch = nodes_[parent].children;
        if (ch.size() == 2 && nodes_[ch[0]].chir == Chir::R &&
            nodes_[ch[1]].chir == Chir::L)
            std::swap(ch[0], ch[1]);
        if (ch.size() > 2)
            throw std::invalid_argument("node " + nodes_[parent].id +
                                        " would have more than two children");
    }

    std::vector<Node> nodes_;
    std::map<std::string, int> index_;
    int root_ = -1;
};

/// Injective real labels on tree nodes (a Morse labeling once the induced
/// order satisfies the Morse-order axioms).
using Labeling = std::map<std::string, Rat>;

/// Bijective ranks 0..n-1 on tree nodes.
using Order = std::map<std::string, int>;

struct GmtValidation {
    std::vector<std::string> malformed;   // structural problems
    std::vector<std::string> violations;  // gMT axiom violations
    bool ok() const { return malformed.empty() && violations.empty(); }
};

GmtValidation validate_gmt(const Gmt& t);

bool is_morse_order(const Gmt& t, const Order& o);
bool is_morse_labeling(const Gmt& t, const Labeling& l);

/// The two equivalent formulations of axiom 2 from the remark after the
/// Morse-order definition; kept separate so tests can cross-check them.
bool morse_axiom2_min_in_same_chirality_child(const Gmt& t, const Order& o);
bool morse_axiom2_path_to_min_same_chirality(const Gmt& t, const Order& o);

Labeling order_to_label(const Gmt& t, const Order& o);
Order label_to_order(const Gmt& t, const Labeling& l);

struct PathWord {
    std::vector<Chir> letters;
    std::string str() const {
        std::string s;
        for (Chir c : letters) s += chir_char(c);
        return s;
    }
};

PathWord path_word(const Gmt& t, int node);

enum class ScCmp { Less, Greater, Equal };
ScCmp sc_compare(const Gmt& t, int a, int b);

/// The sublevel-connected Morse order; always a Morse order.
Order sc_order(const Gmt& t);

std::vector<int> cycle_nodes(const Gmt& t);

/// Subtree re-rooted at v; node chiralities retained verbatim.
Gmt subtree(const Gmt& t, int v);

int leaf_count(const Gmt& t, int v);
int cycle_count_below(const Gmt& t, int v);  // |C(T(v))|, v included if cycle node

/// The first two-child node down a cycle node's only-child chain (the
/// maximally labeled two-child descendant). Throws if the chain ends at a
/// leaf, which cannot happen in a valid gMT.
int oldest_two_child_descendant(const Gmt& t, int cycle_node);

/// Splice out cycle nodes, connecting parents directly to children. Returns
/// the tree and the restricted labeling.
std::pair<Gmt, Labeling> underlying_tree(const Gmt& t, const Labeling& l);
Gmt underlying_tree(const Gmt& t);

/// Structure-, chirality- and exact-label-preserving isomorphism.
bool iso_gml(const Gmt& t1, const Labeling& l1, const Gmt& t2, const Labeling& l2);

/// Isomorphism after replacing labels by their ranks.
bool order_equivalent(const Gmt& t1, const Labeling& l1, const Gmt& t2,
                      const Labeling& l2);

/// Isomorphism of the unlabeled generalized merge trees.
bool merge_equivalent(const Gmt& t1, const Gmt& t2);

/// Flip every node's chirality (used by the subtree-component lemma, which
/// relates chirality-R subtrees to component trees up to a global flip).
Gmt flip_all(const Gmt& t);

}  // namespace dmt
