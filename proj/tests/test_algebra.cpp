#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "greenfn/poly.hpp"
#include "greenfn/rational.hpp"
#include "greenfn/rational_function.hpp"
#include "test_support.hpp"

using namespace greenfn;
using testsupport::P;

namespace {

Poly random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> coeffs;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) coeffs.push_back(testsupport::random_rational(rng, true));
    return Poly(std::move(coeffs));
}

Poly random_nonzero_poly(std::mt19937& rng, int max_degree) {
    while (true) {
        Poly p = random_poly(rng, max_degree);
        if (!p.is_zero()) return p;
    }
}

/// Independent schoolbook convolution used as the multiplication oracle.
Poly mul_reference(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (j < a.coeffs().size() && i - j < b.coeffs().size())
                out[i] += a.coeffs()[j] * b.coeffs()[i - j];
    return Poly(std::move(out));
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational::parse("6/8").str() == "3/4");
    CHECK(Rational::parse("-3").str() == "-3");
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("abc"), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic and order") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2).reciprocal() == Rational(1, 2));
}

TEST_CASE("poly arithmetic on the worked products") {
    Poly z = Poly::z();
    CHECK((z + 1) * (z - 2) == P({-2, -1, 1}));

    Poly p = P({3, 0, -1, 2});
    CHECK(p + Poly() == p);

    // (z-2)(z+1)^2, multiplied out two independent ways
    Poly expanded = (z - 2) * (z + 1) * (z + 1);
    CHECK(expanded == P({-2, -3, 0, 1}));
    CHECK(mul_reference(mul_reference(z - 2, z + 1), z + 1) == expanded);
}

TEST_CASE("poly degree bookkeeping") {
    CHECK(Poly().degree() == -1);
    CHECK(Poly(5).degree() == 0);
    CHECK((P({1, 1}) - P({0, 1})).degree() == 0);  // cancellation strips
    CHECK(P({0, 0, 0}).is_zero());
    CHECK(Poly::linear(3, -1).str() == "-z + 3");
    CHECK(P({-2, -3, 0, 1}).str() == "z^3 - 3*z - 2");
    CHECK(P({2, 3, 0, -1}).str() == "-z^3 + 3*z + 2");
}

TEST_CASE("poly ring axioms on random triples") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(mul_reference(a, b) == a * b);
    }
}

TEST_CASE("poly gcd") {
    Poly z = Poly::z();
    CHECK(poly_gcd((z + 1) * (z + 1), (z + 1) * (z - 2)) == z + 1);
    CHECK(poly_gcd(z, z + 1) == Poly(1));
    CHECK(poly_gcd(P({-2, -3, 0, 1}), P({-2, -1, 1})) == P({-2, -1, 1}));
    CHECK_THROWS_AS(poly_gcd(Poly(), Poly()), std::domain_error);
    CHECK(poly_gcd(Poly(), z + 1) == z + 1);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Poly a = random_nonzero_poly(rng, 4), b = random_nonzero_poly(rng, 4);
        Poly g = poly_gcd(a, b);
        CHECK(g.is_monic());
        CHECK(poly_divmod(a, g).second.is_zero());
        CHECK(poly_divmod(b, g).second.is_zero());
    }
}

TEST_CASE("poly division") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Poly a = random_poly(rng, 5), b = random_nonzero_poly(rng, 3);
        auto [q, r] = poly_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(poly_divmod(Poly(1), Poly()), std::domain_error);
    CHECK_THROWS_AS(poly_div_exact(Poly::z() + 1, Poly::z()), std::domain_error);
}

TEST_CASE("square-free factorization") {
    Poly z = Poly::z();
    // -z^3 + 3z + 2 = -1 * (z - 2) * (z + 1)^2
    auto decomp = squarefree_factorization(P({2, 3, 0, -1}));
    CHECK(decomp.constant == Rational(-1));
    REQUIRE(decomp.factors.size() == 2);
    CHECK(decomp.factors[0].first == z - 2);
    CHECK(decomp.factors[0].second == 1);
    CHECK(decomp.factors[1].first == z + 1);
    CHECK(decomp.factors[1].second == 2);
    CHECK(decomp.str() == "-1 * (z - 2) * (z + 1)^2");

    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = random_nonzero_poly(rng, 4);
        auto d = squarefree_factorization(p);
        Poly rebuilt(d.constant);
        for (const auto& [f, mult] : d.factors)
            for (int i = 0; i < mult; ++i) rebuilt *= f;
        CHECK(rebuilt == p);
    }
}

TEST_CASE("rational function reduction") {
    Poly z = Poly::z();
    auto f = RationalFunction::reduce(z + 1, (z + 1) * (z - 2));
    CHECK(f.num() == Poly(1));
    CHECK(f.den() == z - 2);

    // diagonal entry of the worked example, before cancellation
    auto g = RationalFunction::reduce(-((z - 1) * (z + 1)), -((z - 2) * (z + 1) * (z + 1)));
    CHECK(g.num() == z - 1);
    CHECK(g.den() == (z - 2) * (z + 1));

    auto zero = RationalFunction::reduce(Poly(), z + 5);
    CHECK(zero.num() == Poly());
    CHECK(zero.den() == Poly(1));

    CHECK_THROWS_AS(RationalFunction::reduce(z, Poly()), std::domain_error);
}

TEST_CASE("rational function evaluation") {
    Poly z = Poly::z();
    auto f = RationalFunction::reduce(z - 1, (z - 2) * (z + 1));
    CHECK(f.eval(Rational(0)) == Rational(1, 2));
    CHECK_THROWS_AS(f.eval(Rational(2)), PoleError);
    try {
        f.eval(Rational(-1));
        CHECK(false);
    } catch (const PoleError& e) {
        CHECK(e.at == Rational(-1));
    }
    CHECK(RationalFunction().eval(Rational(17)) == Rational(0));
}

TEST_CASE("reduction is idempotent and value-preserving") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        Poly p = random_poly(rng, 3);
        Poly q = random_nonzero_poly(rng, 3);
        Poly r = random_nonzero_poly(rng, 2);
        auto reduced = RationalFunction::reduce(p, q);
        auto again = RationalFunction::reduce(reduced.num(), reduced.den());
        CHECK(reduced == again);

        auto padded = RationalFunction::reduce(p * r, q * r);
        CHECK(padded == reduced);
        for (long v : {0L, 1L, -2L, 3L}) {
            Rational at(v);
            if (q.eval(at).is_zero() || r.eval(at).is_zero()) continue;
            CHECK(padded.eval(at) == reduced.eval(at));
        }
    }
}
