#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace dmt {

/// Reference to one cell of a 1-dim regular CW complex: a vertex or an edge.
/// Vertex and edge id namespaces are disjoint.
struct CellRef {
    bool is_edge = false;
    std::string id;

    static CellRef vertex(std::string id) { return {false, std::move(id)}; }
    static CellRef edge(std::string id) { return {true, std::move(id)}; }

    friend bool operator==(const CellRef& a, const CellRef& b) {
        return a.is_edge == b.is_edge && a.id == b.id;
    }
    friend bool operator!=(const CellRef& a, const CellRef& b) { return !(a == b); }
    friend bool operator<(const CellRef& a, const CellRef& b) {
        return std::tie(a.is_edge, a.id) < std::tie(b.is_edge, b.id);
    }
};

/// Finite multigraph: parallel edges allowed, degenerate loops are not.
/// Cell ids are opaque, stable strings; all iteration orders are
/// deterministic (insertion order for cells, sorted where noted).
class MultiGraph {
public:
    void add_vertex(const std::string& id) {
        if (vertex_index_.count(id) || edge_index_.count(id))
            throw std::invalid_argument("duplicate cell id: " + id);
        vertex_index_[id] = static_cast<int>(vertices_.size());
        vertices_.push_back(id);
    }

    void add_edge(const std::string& id, const std::string& u, const std::string& v) {
        if (vertex_index_.count(id) || edge_index_.count(id))
            throw std::invalid_argument("duplicate cell id: " + id);
        if (u == v)
            throw std::invalid_argument("degenerate loop at vertex " + u);
        auto iu = vertex_index_.find(u);
        auto iv = vertex_index_.find(v);
        if (iu == vertex_index_.end() || iv == vertex_index_.end())
            throw std::invalid_argument("edge " + id + " references unknown vertex");
        edge_index_[id] = static_cast<int>(edges_.size());
        edges_.push_back({id, iu->second, iv->second});
    }

    bool has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }
    bool has_edge(const std::string& id) const { return edge_index_.count(id) > 0; }
    bool has_cell(const CellRef& c) const {
        return c.is_edge ? has_edge(c.id) : has_vertex(c.id);
    }

    int n_vertices() const { return static_cast<int>(vertices_.size()); }
    int n_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& vertices() const { return vertices_; }

    std::vector<std::string> edge_ids() const {
        std::vector<std::string> out;
        out.reserve(edges_.size());
        for (const auto& e : edges_) out.push_back(e.id);
        return out;
    }

    std::pair<std::string, std::string> endpoints(const std::string& edge_id) const {
        const Edge& e = edges_.at(edge_checked(edge_id));
        return {vertices_[e.u], vertices_[e.v]};
    }

    bool incident(const std::string& vertex_id, const std::string& edge_id) const {
        auto [u, v] = endpoints(edge_id);
        return u == vertex_id || v == vertex_id;
    }

    bool adjacent(const std::string& u, const std::string& v) const {
        int iu = vertex_checked(u), iv = vertex_checked(v);
        for (const auto& e : edges_)
            if ((e.u == iu && e.v == iv) || (e.u == iv && e.v == iu)) return true;
        return false;
    }

    /// Re-attach one endpoint of an existing edge. Used by the cancellation
    /// Rewire policy; rejects the move if it would create a loop.
    void reattach_edge(const std::string& edge_id, const std::string& old_endpoint,
                       const std::string& new_endpoint) {
        Edge& e = edges_.at(edge_checked(edge_id));
        int io = vertex_checked(old_endpoint);
        int in = vertex_checked(new_endpoint);
        if (e.u == io) {
            if (e.v == in) throw std::invalid_argument("reattach would create a loop");
            e.u = in;
        } else if (e.v == io) {
            if (e.u == in) throw std::invalid_argument("reattach would create a loop");
            e.v = in;
        } else {
            throw std::invalid_argument(old_endpoint + " is not an endpoint of " + edge_id);
        }
    }

    int vertex_checked(const std::string& id) const {
        auto it = vertex_index_.find(id);
        if (it == vertex_index_.end())
            throw std::invalid_argument("unknown vertex: " + id);
        return it->second;
    }
    int edge_checked(const std::string& id) const {
        auto it = edge_index_.find(id);
        if (it == edge_index_.end())
            throw std::invalid_argument("unknown edge: " + id);
        return it->second;
    }

    // Index-based view for algorithm internals.
    std::pair<int, int> endpoint_indices(int edge_idx) const {
        const Edge& e = edges_[edge_idx];
        return {e.u, e.v};
    }
    const std::string& vertex_name(int idx) const { return vertices_[idx]; }
    const std::string& edge_name(int idx) const { return edges_[idx].id; }

private:
    struct Edge {
        std::string id;
        int u, v;
    };

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, int> vertex_index_;
    std::map<std::string, int> edge_index_;
};

}  // namespace dmt
