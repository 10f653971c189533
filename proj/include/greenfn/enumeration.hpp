#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "greenfn/graph.hpp"
#include "greenfn/poly_matrix.hpp"
#include "greenfn/weights.hpp"

namespace greenfn {

/// Default ceiling on the number of edge subsets a single enumeration may
/// visit. Exceeding it raises CapExceededError.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Streams every factor of the requested family over the deformed graph.
///
/// Without a marked pair: spanning subgraphs with |X \ dX| edges whose
/// boundary-touching components are trees holding exactly one boundary
/// vertex, and whose remaining components are trees with one self-loop (L)
/// or odd unicyclic graphs, self-loop cycles included (Q).
///
/// With a marked pair (l, m), both interior, l == m allowed: one edge fewer;
/// the component holding l and m must be a loop-free tree avoiding the
/// boundary, boundary components must avoid l and m, and the rest is as
/// above but also avoiding l and m.
void for_each_factor(const DeformedGraph& g, Mode mode,
                     std::optional<std::pair<VertexId, VertexId>> pair,
                     std::uint64_t cap, const std::function<void(const Factor&)>& sink);

std::vector<Factor> enumerate_H(const DeformedGraph& g, Mode mode,
                                std::uint64_t cap = kDefaultEnumerationCap);
std::vector<Factor> enumerate_H_pair(const DeformedGraph& g, Mode mode, VertexId l,
                                     VertexId m, std::uint64_t cap = kDefaultEnumerationCap);

/// A weighted factor sum plus its diagnostics: the factor count, the
/// (omega, |loops|, b1) histogram, and the multiset of contributed summands
/// (the polynomial each factor adds, prefactors included). The number of
/// distinct summands is the family's weight-class count.
struct IotaResult {
    Poly value;
    long factor_count = 0;
    std::map<std::tuple<int, int, int>, long> class_histogram;
    std::map<Poly, long> term_classes;

    int term_class_count() const { return static_cast<int>(term_classes.size()); }
};

/// Denominator sum: plain weights for L, 4^{b1}-scaled weights for Q.
IotaResult iota1(const BoundaryGraph& g, Mode mode,
                 std::uint64_t cap = kDefaultEnumerationCap);

/// Numerator sum for the marked pair: plain weights for L; for Q each term
/// additionally carries 4^{b1} and the parity sign of the tree distance
/// between the marked vertices.
IotaResult iota2(const BoundaryGraph& g, Mode mode, VertexId l, VertexId m,
                 std::uint64_t cap = kDefaultEnumerationCap);

/// Green's function assembled from factor sums: entry (l, m) is
/// iota2(l, m) / iota1, reduced. Agrees with greens_linear_algebra.
GreensMatrix greens_from_factors(const BoundaryGraph& g, Mode mode,
                                 std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace greenfn
