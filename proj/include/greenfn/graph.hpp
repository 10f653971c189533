#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "greenfn/errors.hpp"
#include "greenfn/rational.hpp"

namespace greenfn {

using VertexId = int;

/// Undirected weighted edge; parallel edges are distinct entries.
struct Edge {
    VertexId u;
    VertexId v;
    Rational w;
};

/// The two weight conventions every factor computation comes in: L routes
/// through trees with one self-loop, Q through odd unicyclic components.
enum class Mode { L, Q };

inline const char* mode_name(Mode m) { return m == Mode::L ? "L" : "Q"; }

/// Finite connected multigraph with a distinguished boundary vertex set,
/// rational edge weights, and a rational potential on vertices.
///
/// Vertices are kept in model order: interior vertices first (in input
/// order), then boundary vertices. Matrix rows/columns and cofactor signs
/// all reference this order.
class BoundaryGraph {
public:
    BoundaryGraph(std::vector<VertexId> vertices, std::vector<Edge> edges,
                  std::vector<VertexId> boundary,
                  std::map<VertexId, Rational> potential);

    int vertex_count() const { return static_cast<int>(order_.size()); }
    int interior_count() const { return interior_count_; }
    int boundary_count() const { return vertex_count() - interior_count_; }

    /// Vertices in model order (interior first).
    const std::vector<VertexId>& vertices() const { return order_; }
    /// Model-order position of a vertex; throws GraphError for unknown ids.
    int index_of(VertexId v) const;
    VertexId vertex_at(int idx) const { return order_.at(idx); }
    bool is_boundary(VertexId v) const { return index_of(v) >= interior_count_; }
    bool is_interior(VertexId v) const { return !is_boundary(v); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Rational& potential(VertexId v) const;

    /// Sum of weights of the edges incident to u, one term per parallel edge.
    Rational pi(VertexId u) const;

    /// Number of edge endpoints at u (parallel edges counted separately).
    int degree(VertexId u) const;
    /// Degree-regularity of the support multigraph; the common degree when so.
    std::optional<int> regularity() const;
    bool has_unit_weights() const;

private:
    std::vector<VertexId> order_;        // interior first, then boundary
    std::map<VertexId, int> index_;      // id -> model-order position
    int interior_count_ = 0;
    std::vector<Edge> edges_;
    std::map<VertexId, Rational> potential_;
};

/// The input graph plus one tagged self-loop per interior vertex. The edge
/// index space is E followed by the loops, in interior model order.
class DeformedGraph {
public:
    explicit DeformedGraph(BoundaryGraph base);

    const BoundaryGraph& base() const { return base_; }
    int real_edge_count() const { return static_cast<int>(base_.edges().size()); }
    int edge_count() const { return real_edge_count() + base_.interior_count(); }
    bool is_loop(int edge_index) const { return edge_index >= real_edge_count(); }
    /// Anchor vertex of a self-loop edge.
    VertexId loop_anchor(int edge_index) const;
    /// Endpoints of a real edge, or (anchor, anchor) for a loop.
    std::pair<VertexId, VertexId> endpoints(int edge_index) const;
    const Rational& weight(int edge_index) const;  // real edges only

    std::string edge_label(int edge_index) const;

private:
    BoundaryGraph base_;
};

/// Same operation under its domain name.
inline DeformedGraph deform(BoundaryGraph g) { return DeformedGraph(std::move(g)); }

enum class ComponentKind {
    TreeWithOneBoundary,
    PureTree,
    TreeWithOneSelfLoop,
    OddUnicyclic,
};

const char* component_kind_name(ComponentKind k);

/// Classifies one connected component of the spanning subgraph (X, h).
/// comp_vertices must be exactly the component's vertex set. Throws
/// ClassificationError for shapes no valid factor can contain: an even
/// cycle, more than one independent cycle, or two or more boundary vertices.
ComponentKind classify_component(const DeformedGraph& g, std::span<const int> h,
                                 const std::vector<VertexId>& comp_vertices);

/// One enumerated spanning subgraph of the deformed graph together with its
/// component decomposition and the derived counts the weight formulas need.
struct Factor {
    std::vector<int> edge_subset;  // indices into E followed by loops
    std::vector<std::pair<std::vector<VertexId>, ComponentKind>> components;
    int omega = 0;          // number of connected components
    int b1_noloop = 0;      // components whose cycle has length >= 3
    std::vector<int> loops;  // loop edge indices present in the subset
    int pair_distance = 0;  // path length between the marked vertices (pair
                            // families), 0 otherwise
};

}  // namespace greenfn
