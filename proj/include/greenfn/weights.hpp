#pragma once

#include <vector>

#include "greenfn/graph.hpp"
#include "greenfn/poly.hpp"

namespace greenfn {

/// Per-edge weight polynomials over the deformed edge space E followed by
/// the self-loops. Real edges carry the constant -w(e) (L) or +w(e) (Q);
/// the loop at u carries -z + V(u) + pi(u) (L) or -z + V(u) - pi(u) (Q).
struct EdgeWeightTable {
    Mode mode;
    std::vector<Poly> weight;
};

EdgeWeightTable weight_table(const BoundaryGraph& g, Mode mode);

/// Product of the table entries over the factor's edges; 1 for the empty set.
Poly factor_weight(const Factor& h, const EdgeWeightTable& table);

}  // namespace greenfn
