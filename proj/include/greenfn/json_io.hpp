#pragma once

#include <string>

#include "json.hpp"

#include "greenfn/enumeration.hpp"
#include "greenfn/graph.hpp"
#include "greenfn/identities.hpp"
#include "greenfn/poly.hpp"
#include "greenfn/poly_matrix.hpp"
#include "greenfn/rational_function.hpp"

namespace greenfn {

using Json = nlohmann::json;

/// Graph file format:
/// {
///   "vertices": [ids...],
///   "edges": [{"u": id, "v": id, "w": "p/q"}, ...],
///   "boundary": [ids...],
///   "potential": {"id": "p/q", ...}     // optional, missing entries are 0
/// }
/// Weights and potentials also accept plain JSON integers.
BoundaryGraph graph_from_json(const Json& j);

/// Reads and parses a graph file; wraps every failure in GraphError.
BoundaryGraph load_graph(const std::string& path);

Json to_json(const Rational& r);
Json to_json(const Poly& p);          // coefficient strings, ascending degree
Poly poly_from_json(const Json& j);
Json to_json(const RationalFunction& f);
RationalFunction ratfun_from_json(const Json& j);
Json to_json(const PolyMatrix& m);    // nested arrays of coefficient arrays
Json to_json(const GreensMatrix& g);
GreensMatrix greens_from_json(const Json& j);
Json to_json(const IotaResult& r);
Json to_json(const IdentityReport& r);
Json factor_to_json(const Factor& f, const DeformedGraph& g);

}  // namespace greenfn
