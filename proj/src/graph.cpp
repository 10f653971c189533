#include "greenfn/graph.hpp"

#include <algorithm>
#include <set>

namespace greenfn {

BoundaryGraph::BoundaryGraph(std::vector<VertexId> vertices, std::vector<Edge> edges,
                             std::vector<VertexId> boundary,
                             std::map<VertexId, Rational> potential)
    : edges_(std::move(edges)), potential_(std::move(potential)) {
    if (vertices.empty()) throw GraphError("graph must have at least one vertex");
    std::set<VertexId> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) throw GraphError("duplicate vertex id");

    std::set<VertexId> bset(boundary.begin(), boundary.end());
    if (bset.size() != boundary.size()) throw GraphError("duplicate boundary vertex");
    for (VertexId b : bset)
        if (!seen.count(b)) throw GraphError("boundary vertex " + std::to_string(b) + " not in vertex list");
    if (bset.size() == seen.size())
        throw GraphError("boundary must be a proper subset of the vertices");

    for (const Edge& e : edges_) {
        if (!seen.count(e.u) || !seen.count(e.v))
            throw GraphError("edge endpoint not in vertex list");
        if (e.u == e.v)
            throw GraphError("self-loop in input graph at vertex " + std::to_string(e.u));
        if (e.w.is_zero())
            throw GraphError("zero-weight edge between " + std::to_string(e.u) + " and " +
                             std::to_string(e.v));
    }
    for (const auto& [v, _] : potential_)
        if (!seen.count(v)) throw GraphError("potential given for unknown vertex " + std::to_string(v));

    // Model order: interior vertices first, boundary vertices at the tail.
    for (VertexId v : vertices)
        if (!bset.count(v)) order_.push_back(v);
    interior_count_ = static_cast<int>(order_.size());
    for (VertexId v : vertices)
        if (bset.count(v)) order_.push_back(v);
    for (std::size_t i = 0; i < order_.size(); ++i) index_[order_[i]] = static_cast<int>(i);

    // Connectivity of the support graph.
    if (!edges_.empty() || order_.size() > 1) {
        std::map<VertexId, std::vector<VertexId>> adj;
        for (const Edge& e : edges_) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::vector<VertexId> stack{order_.front()};
        std::set<VertexId> visited{order_.front()};
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId v : adj[u])
                if (visited.insert(v).second) stack.push_back(v);
        }
        if (visited.size() != order_.size()) throw GraphError("graph is not connected");
    }
}

int BoundaryGraph::index_of(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw GraphError("unknown vertex " + std::to_string(v));
    return it->second;
}

const Rational& BoundaryGraph::potential(VertexId v) const {
    static const Rational zero(0);
    index_of(v);  // validate
    auto it = potential_.find(v);
    return it == potential_.end() ? zero : it->second;
}

Rational BoundaryGraph::pi(VertexId u) const {
    index_of(u);
    Rational sum(0);
    for (const Edge& e : edges_)
        if (e.u == u || e.v == u) sum += e.w;
    return sum;
}

int BoundaryGraph::degree(VertexId u) const {
    index_of(u);
    int d = 0;
    for (const Edge& e : edges_)
        if (e.u == u || e.v == u) ++d;
    return d;
}

std::optional<int> BoundaryGraph::regularity() const {
    int k = degree(order_.front());
    for (VertexId v : order_)
        if (degree(v) != k) return std::nullopt;
    return k;
}

bool BoundaryGraph::has_unit_weights() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.w == Rational(1); });
}

DeformedGraph::DeformedGraph(BoundaryGraph base) : base_(std::move(base)) {}

VertexId DeformedGraph::loop_anchor(int edge_index) const {
    if (!is_loop(edge_index)) throw GraphError("edge index is not a self-loop");
    return base_.vertex_at(edge_index - real_edge_count());
}

std::pair<VertexId, VertexId> DeformedGraph::endpoints(int edge_index) const {
    if (edge_index < 0 || edge_index >= edge_count()) throw GraphError("edge index out of range");
    if (is_loop(edge_index)) {
        VertexId a = loop_anchor(edge_index);
        return {a, a};
    }
    const Edge& e = base_.edges()[edge_index];
    return {e.u, e.v};
}

const Rational& DeformedGraph::weight(int edge_index) const {
    if (is_loop(edge_index)) throw GraphError("self-loops carry no input weight");
    return base_.edges()[edge_index].w;
}

std::string DeformedGraph::edge_label(int edge_index) const {
    if (is_loop(edge_index)) return "loop@" + std::to_string(loop_anchor(edge_index));
    auto [u, v] = endpoints(edge_index);
    return std::to_string(u) + "-" + std::to_string(v);
}

const char* component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::TreeWithOneBoundary: return "tree-with-one-boundary";
        case ComponentKind::PureTree: return "pure-tree";
        case ComponentKind::TreeWithOneSelfLoop: return "tree-with-one-self-loop";
        case ComponentKind::OddUnicyclic: return "odd-unicyclic";
    }
    return "?";
}

namespace {

/// Length of the unique cycle of a connected loop-free multigraph with
/// |edges| == |vertices|, found by stripping leaves.
int unique_cycle_length(const DeformedGraph& g, const std::vector<int>& comp_edges,
                        const std::vector<VertexId>& comp_vertices) {
    std::map<VertexId, int> deg;
    for (VertexId v : comp_vertices) deg[v] = 0;
    std::vector<bool> alive(comp_edges.size(), true);
    for (std::size_t i = 0; i < comp_edges.size(); ++i) {
        auto [u, v] = g.endpoints(comp_edges[i]);
        ++deg[u];
        ++deg[v];
    }
    bool changed = true;
    int remaining = static_cast<int>(comp_edges.size());
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < comp_edges.size(); ++i) {
            if (!alive[i]) continue;
            auto [u, v] = g.endpoints(comp_edges[i]);
            if (deg[u] == 1 || deg[v] == 1) {
                alive[i] = false;
                --deg[u];
                --deg[v];
                --remaining;
                changed = true;
            }
        }
    }
    return remaining;
}

}  // namespace

ComponentKind classify_component(const DeformedGraph& g, std::span<const int> h,
                                 const std::vector<VertexId>& comp_vertices) {
    std::set<VertexId> vset(comp_vertices.begin(), comp_vertices.end());
    std::vector<int> inside;
    int loop_count = 0;
    for (int ei : h) {
        auto [u, v] = g.endpoints(ei);
        if (vset.count(u) && vset.count(v)) {
            inside.push_back(ei);
            if (g.is_loop(ei)) ++loop_count;
        }
    }
    int n = static_cast<int>(vset.size());
    int m = static_cast<int>(inside.size());
    int boundary = 0;
    for (VertexId v : comp_vertices)
        if (g.base().is_boundary(v)) ++boundary;
    if (boundary >= 2)
        throw ClassificationError("component holds " + std::to_string(boundary) +
                                  " boundary vertices");

    if (m == n - 1) {
        // Acyclic and connected: a loop would already be a cycle.
        return boundary == 1 ? ComponentKind::TreeWithOneBoundary : ComponentKind::PureTree;
    }
    if (m != n)
        throw ClassificationError("component has " + std::to_string(m - n + 1) +
                                  " independent cycles");
    if (loop_count >= 2) throw ClassificationError("component has two self-loop cycles");
    if (loop_count == 1) return ComponentKind::TreeWithOneSelfLoop;

    std::vector<int> real(inside.begin(), inside.end());
    int cycle_len = unique_cycle_length(g, real, comp_vertices);
    if (cycle_len % 2 == 0)
        throw ClassificationError("component cycle has even length " + std::to_string(cycle_len));
    return ComponentKind::OddUnicyclic;
}

}  // namespace greenfn
