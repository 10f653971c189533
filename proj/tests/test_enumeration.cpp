#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "greenfn/enumeration.hpp"
#include "greenfn/poly_matrix.hpp"
#include "test_support.hpp"

using namespace greenfn;
using testsupport::P;

namespace {

std::set<std::vector<int>> edge_sets(const std::vector<Factor>& factors) {
    std::set<std::vector<int>> out;
    for (const Factor& f : factors) out.insert(f.edge_subset);
    return out;
}

}  // namespace

TEST_CASE("weight tables on the worked example") {
    BoundaryGraph g = testsupport::c3p2();

    EdgeWeightTable l = weight_table(g, Mode::L);
    for (int e = 0; e < 4; ++e) CHECK(l.weight[e] == Poly(-1));
    CHECK(l.weight[4] == Poly::linear(3, -1));   // loop at 1: -z + 3
    CHECK(l.weight[5] == Poly::linear(2, -1));   // loops at 2, 3: -z + 2
    CHECK(l.weight[6] == Poly::linear(2, -1));

    EdgeWeightTable q = weight_table(g, Mode::Q);
    for (int e = 0; e < 4; ++e) CHECK(q.weight[e] == Poly(1));
    CHECK(q.weight[4] == Poly::linear(-3, -1));  // -z - 3
    CHECK(q.weight[5] == Poly::linear(-2, -1));
    CHECK(q.weight[6] == Poly::linear(-2, -1));
}

TEST_CASE("weight table shape on random graphs") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 10; ++trial) {
        BoundaryGraph g = testsupport::random_connected_graph(rng);
        int real_edges = static_cast<int>(g.edges().size());
        for (Mode mode : {Mode::L, Mode::Q}) {
            EdgeWeightTable t = weight_table(g, mode);
            REQUIRE(static_cast<int>(t.weight.size()) == real_edges + g.interior_count());
            for (int e = 0; e < real_edges; ++e) CHECK(t.weight[e].degree() == 0);
            for (std::size_t e = real_edges; e < t.weight.size(); ++e) {
                CHECK(t.weight[e].degree() == 1);
                CHECK(t.weight[e].coeff(1) == Rational(-1));
            }
        }
    }
}

TEST_CASE("sums do not depend on the edge listing order") {
    std::mt19937 rng(707);
    for (int trial = 0; trial < 8; ++trial) {
        BoundaryGraph g = testsupport::random_connected_graph(rng);
        std::vector<Edge> shuffled = g.edges();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::vector<VertexId> boundary;
        for (int i = g.interior_count(); i < g.vertex_count(); ++i)
            boundary.push_back(g.vertex_at(i));
        std::map<VertexId, Rational> pot;
        for (VertexId v : g.vertices()) pot[v] = g.potential(v);
        BoundaryGraph reordered(g.vertices(), shuffled, boundary, pot);
        for (Mode mode : {Mode::L, Mode::Q}) {
            CHECK(iota1(reordered, mode).value == iota1(g, mode).value);
            CHECK(greens_from_factors(reordered, mode) == greens_from_factors(g, mode));
        }
    }
}

TEST_CASE("potential equal to pi makes Q loops vanish at z = 0") {
    BoundaryGraph k3 = testsupport::complete_graph(3, {});
    std::map<VertexId, Rational> pot;
    for (VertexId v : k3.vertices()) pot[v] = k3.pi(v);
    BoundaryGraph tuned({1, 2, 3}, k3.edges(), {}, pot);
    EdgeWeightTable q = weight_table(tuned, Mode::Q);
    for (std::size_t e = 3; e < q.weight.size(); ++e) {
        CHECK(q.weight[e] == Poly::linear(0, -1));  // plain -z
        CHECK(q.weight[e].eval(0).is_zero());
    }
}

TEST_CASE("family enumeration on a path") {
    DeformedGraph dg = deform(testsupport::p2());
    for (Mode mode : {Mode::L, Mode::Q}) {
        auto factors = enumerate_H(dg, mode);
        REQUIRE(factors.size() == 2);
        auto sets = edge_sets(factors);
        CHECK(sets.count({0}) == 1);  // the edge
        CHECK(sets.count({1}) == 1);  // the loop
    }
}

TEST_CASE("family enumeration on the worked example") {
    DeformedGraph dg = deform(testsupport::c3p2());
    auto l = enumerate_H(dg, Mode::L);
    auto q = enumerate_H(dg, Mode::Q);
    CHECK(l.size() == 24);
    CHECK(q.size() == 25);

    // the Q-family exceeds the L-family by exactly the triangle factor
    auto lsets = edge_sets(l), qsets = edge_sets(q);
    for (const auto& s : lsets) CHECK(qsets.count(s) == 1);
    std::vector<std::vector<int>> extra;
    for (const auto& s : qsets)
        if (!lsets.count(s)) extra.push_back(s);
    REQUIRE(extra.size() == 1);
    CHECK(extra[0] == std::vector<int>{0, 1, 2});  // the three triangle edges

    const Factor* tri = nullptr;
    for (const Factor& f : q)
        if (f.edge_subset == extra[0]) tri = &f;
    REQUIRE(tri != nullptr);
    CHECK(tri->b1_noloop == 1);
    CHECK(tri->omega == 2);
    CHECK(tri->loops.empty());
}

TEST_CASE("pair family on the worked example") {
    DeformedGraph dg = deform(testsupport::c3p2());
    for (Mode mode : {Mode::L, Mode::Q}) {
        auto f12 = enumerate_H_pair(dg, mode, 1, 2);
        REQUIRE(f12.size() == 4);
        int omega2 = 0;
        for (const Factor& f : f12)
            if (f.omega == 2) ++omega2;
        CHECK(omega2 == 3);
        // the lone loop factor keeps the marked pair adjacent
        for (const Factor& f : f12) {
            if (f.omega == 3) {
                CHECK(f.pair_distance == 1);
                CHECK(f.loops.size() == 1);
            }
        }
    }

    // marked component must avoid the boundary: no factor may use edge 1-4
    auto f11 = enumerate_H_pair(dg, Mode::Q, 1, 1);
    CHECK(f11.size() == 8);
    for (const Factor& f : f11)
        CHECK(std::find(f.edge_subset.begin(), f.edge_subset.end(), 3) ==
              f.edge_subset.end());

    CHECK_THROWS_AS(enumerate_H_pair(dg, Mode::L, 1, 4), GraphError);
}

TEST_CASE("pair family degenerate cases") {
    DeformedGraph dg = deform(testsupport::p2());
    auto factors = enumerate_H_pair(dg, Mode::L, 1, 1);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].edge_subset.empty());
    CHECK(factors[0].omega == 2);
    CHECK(factors[0].pair_distance == 0);
    CHECK(factor_weight(factors[0], weight_table(testsupport::p2(), Mode::L)) == Poly(1));
}

TEST_CASE("factor weights multiply the table entries") {
    BoundaryGraph g = testsupport::c3p2();
    DeformedGraph dg = deform(g);
    EdgeWeightTable l = weight_table(g, Mode::L);

    Factor all_loops;
    all_loops.edge_subset = {4, 5, 6};
    // (-z+3)(-z+2)^2 expanded
    CHECK(factor_weight(all_loops, l) == P({12, -16, 7, -1}));

    EdgeWeightTable q = weight_table(g, Mode::Q);
    Factor triangle;
    triangle.edge_subset = {0, 1, 2};
    CHECK(factor_weight(triangle, q) == Poly(1));
}

TEST_CASE("iota1 on the worked example") {
    BoundaryGraph g = testsupport::c3p2();
    Poly expected = P({2, 3, 0, -1});  // -(z-2)(z+1)^2
    for (Mode mode : {Mode::L, Mode::Q}) {
        IotaResult r = iota1(g, mode);
        CHECK(r.value == expected);
        CHECK(r.factor_count == (mode == Mode::L ? 24 : 25));
        CHECK(r.term_class_count() == (mode == Mode::L ? 6 : 7));
    }
}

TEST_CASE("iota1 on a path") {
    IotaResult r = iota1(testsupport::p2(), Mode::L);
    CHECK(r.value == Poly::linear(0, -1));
    CHECK(r.factor_count == 2);
}

TEST_CASE("iota2 on the worked example") {
    BoundaryGraph g = testsupport::c3p2();
    Poly diag = P({-1, 0, 1});  // (z-1)(z+1)
    Poly off = P({1, 1});       // z + 1
    for (Mode mode : {Mode::L, Mode::Q}) {
        CHECK(iota2(g, mode, 1, 1).value == diag);
        CHECK(iota2(g, mode, 3, 3).value == diag);
        CHECK(iota2(g, mode, 1, 2).value == off);
        CHECK(iota2(g, mode, 2, 3).value == off);
    }
    // weight-class counts of the pair families (Q carries the distance sign)
    CHECK(iota2(g, Mode::Q, 1, 1).term_class_count() == 3);
    CHECK(iota2(g, Mode::Q, 1, 2).term_class_count() == 3);
    CHECK(iota2(g, Mode::Q, 2, 3).term_class_count() == 3);
    CHECK(iota2(g, Mode::Q, 3, 3).term_class_count() == 4);

    CHECK_THROWS_AS(iota2(g, Mode::L, 4, 1), GraphError);
}

TEST_CASE("iota2 is symmetric in the marked pair") {
    std::mt19937 rng(303);
    for (int trial = 0; trial < 10; ++trial) {
        BoundaryGraph g = testsupport::random_connected_graph(rng);
        if (g.interior_count() < 2) continue;
        VertexId a = g.vertex_at(0), b = g.vertex_at(1);
        for (Mode mode : {Mode::L, Mode::Q})
            CHECK(iota2(g, mode, a, b).value == iota2(g, mode, b, a).value);
    }
}

TEST_CASE("factor sums match the determinant route") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 12; ++trial) {
        BoundaryGraph g = testsupport::random_connected_graph(rng);
        PolyMatrix theta = build_theta(g);
        Poly det = det_fraction_free(theta);
        CHECK(iota1(g, Mode::L).value == det);
        CHECK(iota1(g, Mode::Q).value == det);

        for (int i = 0; i < g.interior_count(); ++i) {
            for (int j = i; j < g.interior_count(); ++j) {
                Poly cof = det_fraction_free(minor_matrix(theta, i, j));
                if ((i + j) % 2 != 0) cof = -cof;
                CHECK(iota2(g, Mode::L, g.vertex_at(i), g.vertex_at(j)).value == cof);
                CHECK(iota2(g, Mode::Q, g.vertex_at(i), g.vertex_at(j)).value == cof);
            }
        }
    }
}

TEST_CASE("L-family factors embed into the Q-family") {
    std::mt19937 rng(505);
    for (int trial = 0; trial < 10; ++trial) {
        BoundaryGraph g = testsupport::random_connected_graph(rng);
        DeformedGraph dg = deform(g);
        auto lsets = edge_sets(enumerate_H(dg, Mode::L));
        auto qsets = edge_sets(enumerate_H(dg, Mode::Q));
        for (const auto& s : lsets) CHECK(qsets.count(s) == 1);
    }
}

TEST_CASE("greens from factors equals the cofactor route") {
    BoundaryGraph g = testsupport::c3p2();
    Poly z = Poly::z();
    auto diag = RationalFunction::reduce(-(z - 1), (z - 2) * (z + 1));
    auto off = RationalFunction::reduce(Poly(-1), (z - 2) * (z + 1));
    for (Mode mode : {Mode::L, Mode::Q}) {
        GreensMatrix gm = greens_from_factors(g, mode);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(gm[i][j] == (i == j ? diag : off));
    }

    CHECK(greens_from_factors(testsupport::p2(), Mode::L)[0][0] ==
          RationalFunction::reduce(Poly(-1), Poly::z()));

    std::mt19937 rng(606);
    for (int trial = 0; trial < 6; ++trial) {
        BoundaryGraph r = testsupport::random_connected_graph(rng);
        GreensMatrix la = greens_linear_algebra(r);
        CHECK(greens_from_factors(r, Mode::L) == la);
        CHECK(greens_from_factors(r, Mode::Q) == la);
    }
}

TEST_CASE("enumeration cap") {
    DeformedGraph dg = deform(testsupport::c3p2());
    CHECK_THROWS_AS(enumerate_H(dg, Mode::L, 10), CapExceededError);  // C(7,3) = 35
    CHECK(enumerate_H(dg, Mode::L, 35).size() == 24);
}
