#include "greenfn/poly_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "greenfn/weights.hpp"

namespace greenfn {

bool PolyMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (!(at(i, j) == at(j, i))) return false;
    return true;
}

PolyMatrix build_theta(const BoundaryGraph& g) {
    int n = g.interior_count();
    PolyMatrix theta(n, n);
    for (int i = 0; i < n; ++i)
        theta.at(i, i) = Poly::linear(g.potential(g.vertex_at(i)), Rational(-1));
    for (const Edge& e : g.edges()) {
        int iu = g.index_of(e.u), iv = g.index_of(e.v);
        if (iu < n && iv < n) {
            theta.at(iu, iv) += Poly(e.w);
            theta.at(iv, iu) += Poly(e.w);
        }
    }
    return theta;
}

Poly det_leibniz(const PolyMatrix& m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    if (n == 0) return Poly(Rational(1));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly det;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Poly term(Rational(inversions % 2 == 0 ? 1 : -1));
        for (int i = 0; i < n && !term.is_zero(); ++i)
            term *= m.at(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Poly det_fraction_free(const PolyMatrix& m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    if (n == 0) return Poly(Rational(1));

    PolyMatrix a = m;
    int sign = 1;
    Poly prev_pivot(Rational(1));
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) { swap_row = i; break; }
            if (swap_row < 0) return Poly();  // whole column zero
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // Bareiss step: every division by the previous pivot is exact.
                a.at(i, j) = poly_div_exact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j),
                                            prev_pivot);
            }
            a.at(i, k) = Poly();
        }
        prev_pivot = a.at(k, k);
    }
    Poly det = a.at(n - 1, n - 1);
    if (sign < 0) det = -det;
#ifndef NDEBUG
    if (n <= 4) assert(det == det_leibniz(m));
#endif
    return det;
}

PolyMatrix minor_matrix(const PolyMatrix& m, int drop_row, int drop_col) {
    if (drop_row < 0 || drop_row >= m.rows() || drop_col < 0 || drop_col >= m.cols())
        throw std::out_of_range("minor index out of range");
    PolyMatrix out(m.rows() - 1, m.cols() - 1);
    for (int i = 0, oi = 0; i < m.rows(); ++i) {
        if (i == drop_row) continue;
        for (int j = 0, oj = 0; j < m.cols(); ++j) {
            if (j == drop_col) continue;
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

GreensMatrix greens_linear_algebra(const BoundaryGraph& g) {
    PolyMatrix theta = build_theta(g);
    int n = theta.rows();
    Poly det = det_fraction_free(theta);
    GreensMatrix out(n, std::vector<RationalFunction>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Poly cof = det_fraction_free(minor_matrix(theta, i, j));
            if ((i + j) % 2 != 0) cof = -cof;
            auto entry = RationalFunction::reduce(cof, det);
            out[i][j] = entry;
            out[j][i] = entry;
        }
    }
    return out;
}

PolyMatrix IncidenceMatrices::grounded_product() const {
    int n = interior_count;
    std::size_t cols = d.size();
    PolyMatrix out(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Poly sum;
            for (std::size_t e = 0; e < cols; ++e) {
                int prod = b[i][e] * b[j][e];
                if (prod == 0) continue;
                sum += Rational(prod) * d[e];
            }
            out.at(i, j) = sum;
            out.at(j, i) = std::move(sum);
        }
    }
    return out;
}

IncidenceMatrices build_incidence(const BoundaryGraph& g, Mode mode,
                                  bool reverse_orientation) {
    DeformedGraph dg{g};
    int n = g.vertex_count();
    int cols = dg.edge_count();
    IncidenceMatrices out;
    out.interior_count = g.interior_count();
    out.b.assign(n, std::vector<int>(cols, 0));

    EdgeWeightTable table = weight_table(g, mode);
    out.d = table.weight;

    for (int e = 0; e < cols; ++e) {
        if (dg.is_loop(e)) {
            out.b[g.index_of(dg.loop_anchor(e))][e] = 1;
            continue;
        }
        auto [u, v] = dg.endpoints(e);
        if (mode == Mode::Q) {
            out.b[g.index_of(u)][e] = 1;
            out.b[g.index_of(v)][e] = 1;
            continue;
        }
        // Oriented form: the arc runs from the smaller vertex id to the larger.
        VertexId tail = std::min(u, v), head = std::max(u, v);
        if (reverse_orientation) std::swap(tail, head);
        out.b[g.index_of(head)][e] = 1;
        out.b[g.index_of(tail)][e] = -1;
    }
    return out;
}

}  // namespace greenfn
