#pragma once

#include <vector>

#include "greenfn/graph.hpp"
#include "greenfn/poly.hpp"
#include "greenfn/rational_function.hpp"

namespace greenfn {

/// Dense rectangular matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Poly& at(int i, int j) { return entries_[idx(i, j)]; }
    const Poly& at(int i, int j) const { return entries_[idx(i, j)]; }

    bool is_symmetric() const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    int rows_, cols_;
    std::vector<Poly> entries_;
};

/// The grounded operator matrix in z: rows and columns run over the interior
/// vertices in model order, diagonal entries are V(u) - z, off-diagonal
/// entries are the summed weights of the connecting edges.
PolyMatrix build_theta(const BoundaryGraph& g);

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. The 0x0 determinant is 1.
Poly det_fraction_free(const PolyMatrix& m);

/// Exact determinant by the permutation-sum formula; the independent
/// reference route for small matrices.
Poly det_leibniz(const PolyMatrix& m);

/// Submatrix with one row and one column removed.
PolyMatrix minor_matrix(const PolyMatrix& m, int drop_row, int drop_col);

using GreensMatrix = std::vector<std::vector<RationalFunction>>;

/// Green's function by cofactors: entry (i, j) is
/// (-1)^{i+j} det(minor(Theta, i, j)) / det(Theta), reduced.
GreensMatrix greens_linear_algebra(const BoundaryGraph& g);

/// Vertex-by-edge incidence matrix B with the diagonal weight matrix D such
/// that the interior block of B D B^T reproduces build_theta exactly.
/// L-form columns carry +1/-1 per oriented edge; Q-form columns carry +1 at
/// both endpoints. Self-loop columns carry a single +1 either way.
struct IncidenceMatrices {
    std::vector<std::vector<int>> b;  // vertex_count x edge_count(deformed)
    std::vector<Poly> d;
    int interior_count = 0;

    /// chi * B * D * B^T * chi^T restricted to interior rows/columns.
    PolyMatrix grounded_product() const;
};

/// reverse_orientation flips every oriented edge of the L-form; the product
/// is invariant under it (and the Q-form ignores it).
IncidenceMatrices build_incidence(const BoundaryGraph& g, Mode mode,
                                  bool reverse_orientation = false);

}  // namespace greenfn
