#include "dmt/mergetree.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dmt {

GmtValidation validate_gmt(const Gmt& t) {
    GmtValidation rep;
    if (t.root() < 0) {
        rep.malformed.push_back("tree has no root");
        return rep;
    }
    // reachability and parent consistency
    std::vector<bool> seen(t.n_nodes(), false);
    for (int n : t.preorder()) {
        if (seen[n]) {
            rep.malformed.push_back("node " + t.id(n) + " reached twice");
            return rep;
        }
        seen[n] = true;
        for (int c : t.children(n))
            if (t.parent(c) != n)
                rep.malformed.push_back("parent link of " + t.id(c) + " is inconsistent");
    }
    for (int n = 0; n < t.n_nodes(); ++n)
        if (!seen[n]) rep.malformed.push_back("orphan node " + t.id(n));
    if (!rep.malformed.empty()) return rep;

    if (t.chirality(t.root()) != Chir::L)
        rep.violations.push_back("root must have chirality L");
    for (int n = 0; n < t.n_nodes(); ++n) {
        const auto& ch = t.children(n);
        if (ch.size() > 2)
            rep.violations.push_back("node " + t.id(n) + " has more than two children");
        if (ch.size() == 1) {
            if (t.is_leaf(ch[0]) )
                rep.violations.push_back("leaf " + t.id(ch[0]) + " has no sibling");
            if (t.chirality(ch[0]) != t.chirality(n))
                rep.violations.push_back("only child " + t.id(ch[0]) +
                                         " must share its parent's chirality");
        }
        if (ch.size() == 2 && t.chirality(ch[0]) == t.chirality(ch[1]))
            rep.violations.push_back("children of " + t.id(n) +
                                     " must have opposite chiralities");
    }
    return rep;
}

namespace {

// For each node: (max rank, node of min rank) over its subtree.
void subtree_extrema(const Gmt& t, const std::vector<int>& rank,
                     std::vector<int>& max_rank, std::vector<int>& min_node) {
    max_rank.assign(t.n_nodes(), -1);
    min_node.assign(t.n_nodes(), -1);
    auto order = t.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int n = *it;
        max_rank[n] = rank[n];
        min_node[n] = n;
        for (int c : t.children(n)) {
            max_rank[n] = std::max(max_rank[n], max_rank[c]);
            if (rank[min_node[c]] < rank[min_node[n]]) min_node[n] = min_node[c];
        }
    }
}

std::vector<int> rank_vector(const Gmt& t, const Order& o) {
    std::vector<int> rank(t.n_nodes());
    std::vector<bool> used(t.n_nodes(), false);
    if (static_cast<int>(o.size()) != t.n_nodes())
        throw std::invalid_argument("order does not cover all nodes");
    for (const auto& [id, r] : o) {
        int n = t.checked(id);
        if (r < 0 || r >= t.n_nodes() || used[r])
            throw std::invalid_argument("order is not a bijection onto 0..n-1");
        used[r] = true;
        rank[n] = r;
    }
    return rank;
}

}  // namespace

bool is_morse_order(const Gmt& t, const Order& o) {
    std::vector<int> rank = rank_vector(t, o);
    std::vector<int> max_rank, min_node;
    subtree_extrema(t, rank, max_rank, min_node);
    for (int n = 0; n < t.n_nodes(); ++n) {
        if (max_rank[n] != rank[n]) return false;                       // axiom 1
        if (t.chirality(min_node[n]) != t.chirality(n)) return false;   // axiom 2
    }
    return true;
}

bool morse_axiom2_min_in_same_chirality_child(const Gmt& t, const Order& o) {
    std::vector<int> rank = rank_vector(t, o);
    std::vector<int> max_rank, min_node;
    subtree_extrema(t, rank, max_rank, min_node);
    for (int n = 0; n < t.n_nodes(); ++n) {
        if (t.is_leaf(n)) continue;
        int same = -1;
        for (int c : t.children(n))
            if (t.chirality(c) == t.chirality(n)) same = c;
        if (same == -1) return false;
        // min of subtree(n) must lie in the same-chirality child's subtree
        std::set<int> in_same;
        std::function<void(int)> collect = [&](int x) {
            in_same.insert(x);
            for (int c : t.children(x)) collect(c);
        };
        collect(same);
        if (!in_same.count(min_node[n])) return false;
    }
    return true;
}

bool morse_axiom2_path_to_min_same_chirality(const Gmt& t, const Order& o) {
    std::vector<int> rank = rank_vector(t, o);
    std::vector<int> max_rank, min_node;
    subtree_extrema(t, rank, max_rank, min_node);
    for (int n = 0; n < t.n_nodes(); ++n) {
        for (int x = min_node[n]; x != t.parent(n); x = t.parent(x))
            if (t.chirality(x) != t.chirality(n)) return false;
    }
    return true;
}

bool is_morse_labeling(const Gmt& t, const Labeling& l) {
    if (static_cast<int>(l.size()) != t.n_nodes()) return false;
    std::set<Rat> seen;
    for (const auto& [id, v] : l) {
        if (!t.has_node(id)) return false;
        if (!seen.insert(v).second) return false;  // injectivity
    }
    return is_morse_order(t, label_to_order(t, l));
}

Labeling order_to_label(const Gmt& t, const Order& o) {
    if (!is_morse_order(t, o))
        throw std::invalid_argument("not a Morse order");
    Labeling l;
    for (const auto& [id, r] : o) l[id] = Rat(r);
    return l;
}

Order label_to_order(const Gmt& t, const Labeling& l) {
    if (static_cast<int>(l.size()) != t.n_nodes())
        throw std::invalid_argument("labeling does not cover all nodes");
    std::vector<std::pair<Rat, std::string>> sorted;
    for (const auto& [id, v] : l) {
        t.checked(id);
        sorted.push_back({v, id});
    }
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].first == sorted[i - 1].first)
            throw std::invalid_argument("labeling is not injective");
    Order o;
    for (size_t i = 0; i < sorted.size(); ++i) o[sorted[i].second] = static_cast<int>(i);
    return o;
}

PathWord path_word(const Gmt& t, int node) {
    std::vector<int> path;
    for (int x = node; x != -1; x = t.parent(x)) path.push_back(x);
    PathWord w;
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        w.letters.push_back(t.chirality(*it));
    return w;
}

ScCmp sc_compare(const Gmt& t, int a, int b) {
    if (a == b) return ScCmp::Equal;  // case c
    PathWord wa = path_word(t, a);
    PathWord wb = path_word(t, b);
    size_t k = 0;
    while (k + 1 < wa.letters.size() && k + 1 < wb.letters.size() &&
           wa.letters[k + 1] == wb.letters[k + 1])
        ++k;
    // wa.letters[i] == wb.letters[i] for all i <= k, maximal such k
    if (k + 1 == wb.letters.size()) return ScCmp::Less;     // case b: b is an ancestor
    if (k + 1 == wa.letters.size()) return ScCmp::Greater;  // symmetric
    Chir common = wa.letters[k];
    if (common == Chir::L)
        return wa.letters[k + 1] == Chir::L ? ScCmp::Less : ScCmp::Greater;  // case a
    return wa.letters[k + 1] == Chir::R ? ScCmp::Less : ScCmp::Greater;
}

Order sc_order(const Gmt& t) {
    // Post-order with the same-chirality child visited first; equivalent to
    // the path-word comparison (property-tested against sc_compare).
    Order o;
    int next = 0;
    std::function<void(int)> visit = [&](int n) {
        auto ch = t.children(n);
        if (ch.size() == 2 && t.chirality(ch[0]) != t.chirality(n))
            std::swap(ch[0], ch[1]);
        for (int c : ch) visit(c);
        o[t.id(n)] = next++;
    };
    if (t.root() >= 0) visit(t.root());
    return o;
}

std::vector<int> cycle_nodes(const Gmt& t) {
    std::vector<int> out;
    for (int n : t.preorder())
        if (t.is_cycle_node(n)) out.push_back(n);
    return out;
}

Gmt subtree(const Gmt& t, int v) {
    Gmt out;
    std::function<void(int, int)> copy = [&](int n, int parent_idx) {
        int idx = parent_idx < 0 ? out.add_root(t.id(n), t.chirality(n))
                                 : out.add_child(parent_idx, t.id(n), t.chirality(n));
        for (int c : t.children(n)) copy(c, idx);
    };
    copy(v, -1);
    return out;
}

int leaf_count(const Gmt& t, int v) {
    if (t.is_leaf(v)) return 1;
    int n = 0;
    for (int c : t.children(v)) n += leaf_count(t, c);
    return n;
}

int cycle_count_below(const Gmt& t, int v) {
    int n = t.is_cycle_node(v) ? 1 : 0;
    for (int c : t.children(v)) n += cycle_count_below(t, c);
    return n;
}

int oldest_two_child_descendant(const Gmt& t, int cycle_node) {
    if (!t.is_cycle_node(cycle_node))
        throw std::invalid_argument(t.id(cycle_node) + " is not a cycle node");
    int x = t.children(cycle_node)[0];
    while (t.is_cycle_node(x)) x = t.children(x)[0];
    if (t.is_leaf(x))
        throw std::invalid_argument("cycle node chain ends at a leaf (malformed gMT)");
    return x;
}

Gmt underlying_tree(const Gmt& t) {
    Gmt out;
    int root = t.root();
    while (t.is_cycle_node(root)) root = t.children(root)[0];
    std::function<void(int, int)> copy = [&](int n, int parent_idx) {
        int idx = parent_idx < 0 ? out.add_root(t.id(n), t.chirality(n))
                                 : out.add_child(parent_idx, t.id(n), t.chirality(n));
        for (int c : t.children(n)) {
            int target = c;
            while (t.is_cycle_node(target)) target = t.children(target)[0];
            copy(target, idx);
        }
    };
    copy(root, -1);
    return out;
}

std::pair<Gmt, Labeling> underlying_tree(const Gmt& t, const Labeling& l) {
    Gmt out = underlying_tree(t);
    Labeling lr;
    for (const auto& [id, v] : l)
        if (out.has_node(id)) lr[id] = v;
    return {out, lr};
}

namespace {

bool iso_rec(const Gmt& t1, int n1, const Gmt& t2, int n2,
             const std::function<bool(int, int)>& node_ok) {
    if (t1.chirality(n1) != t2.chirality(n2)) return false;
    if (!node_ok(n1, n2)) return false;
    const auto& c1 = t1.children(n1);
    const auto& c2 = t2.children(n2);
    if (c1.size() != c2.size()) return false;
    // children are stored L-first, and sibling chiralities differ, so the
    // matching is positional
    for (size_t i = 0; i < c1.size(); ++i)
        if (!iso_rec(t1, c1[i], t2, c2[i], node_ok)) return false;
    return true;
}

}  // namespace

bool iso_gml(const Gmt& t1, const Labeling& l1, const Gmt& t2, const Labeling& l2) {
    if (t1.n_nodes() != t2.n_nodes()) return false;
    if (t1.root() < 0 || t2.root() < 0) return t1.root() == t2.root();
    auto ok = [&](int a, int b) {
        return l1.at(t1.id(a)) == l2.at(t2.id(b));
    };
    return iso_rec(t1, t1.root(), t2, t2.root(), ok);
}

bool order_equivalent(const Gmt& t1, const Labeling& l1, const Gmt& t2,
                      const Labeling& l2) {
    if (t1.n_nodes() != t2.n_nodes()) return false;
    Order o1 = label_to_order(t1, l1);
    Order o2 = label_to_order(t2, l2);
    auto ok = [&](int a, int b) { return o1.at(t1.id(a)) == o2.at(t2.id(b)); };
    if (t1.root() < 0 || t2.root() < 0) return t1.root() == t2.root();
    return iso_rec(t1, t1.root(), t2, t2.root(), ok);
}

bool merge_equivalent(const Gmt& t1, const Gmt& t2) {
    if (t1.n_nodes() != t2.n_nodes()) return false;
    if (t1.root() < 0 || t2.root() < 0) return t1.root() == t2.root();
    auto ok = [](int, int) { return true; };
    return iso_rec(t1, t1.root(), t2, t2.root(), ok);
}

Gmt flip_all(const Gmt& t) {
    Gmt out;
    std::function<void(int, int)> copy = [&](int n, int parent_idx) {
        int idx = parent_idx < 0 ? out.add_root(t.id(n), flip(t.chirality(n)))
                                 : out.add_child(parent_idx, t.id(n), flip(t.chirality(n)));
        for (int c : t.children(n)) copy(c, idx);
    };
    if (t.root() >= 0) copy(t.root(), -1);
    return out;
}

}  // namespace dmt
