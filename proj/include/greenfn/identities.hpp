#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greenfn/enumeration.hpp"
#include "greenfn/graph.hpp"

namespace greenfn {

/// One compared equation with both sides rendered.
struct ReportPart {
    std::string label;
    std::string left;
    std::string right;
    bool holds = false;
};

/// Outcome of a named identity check; holds() only when every part does.
struct IdentityReport {
    std::string id;
    std::vector<ReportPart> parts;

    bool holds() const;
};

/// Boundary-rooted spanning-forest counts. The counts are weight-free.
struct ForestCensus {
    long n_boundary = 0;
    std::map<std::pair<VertexId, VertexId>, long> n_pair;
};

/// Number of spanning forests in which every component holds exactly one
/// boundary vertex; with a marked pair, one extra component holds both
/// marked vertices and no boundary vertex. Requires a nonempty boundary.
long count_boundary_forests(const BoundaryGraph& g,
                            std::optional<std::pair<VertexId, VertexId>> pair,
                            std::uint64_t cap = kDefaultEnumerationCap);

/// count_boundary_forests for the boundary family and every interior pair.
ForestCensus forest_census(const BoundaryGraph& g,
                           std::uint64_t cap = kDefaultEnumerationCap);

/// Three-way check: iota1(L) = iota1(Q) = det Theta, and per interior pair
/// iota2(L) = iota2(Q) = (-1)^{l+m} det of the (l, m) minor.
IdentityReport check_iota_determinant_equality(const BoundaryGraph& g,
                                               std::uint64_t cap = kDefaultEnumerationCap);

/// On a regular unit-weight graph with nonempty boundary: the forest census
/// equals the grounded-Laplacian determinant and the signed Q-factor sum,
/// and likewise for every interior pair via minors.
IdentityReport check_forest_determinant(const BoundaryGraph& g,
                                        std::uint64_t cap = kDefaultEnumerationCap);

/// det Theta(V, z) - (-1)^{n_int} det Theta(-V, -z) equals the Q-weighted sum
/// over the factors containing a cycle of length >= 3. Both sides vanish on
/// bipartite graphs.
IdentityReport check_odd_cycle_difference(const BoundaryGraph& g,
                                          std::uint64_t cap = kDefaultEnumerationCap);

/// On a regular unit-weight graph with empty boundary: sum of 4^{omega} over
/// odd-unicyclic factors equals (-1)^{|X|} times the forest sum of
/// (-2 kappa)^{omega} * (product of component orders).
IdentityReport check_unicyclic_forest_identity(const BoundaryGraph& g,
                                               std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace greenfn
