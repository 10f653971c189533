#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "greenfn/rational.hpp"

namespace greenfn {

/// Univariate polynomial in the formal variable z with exact rational
/// coefficients. Stored dense, ascending degree, trailing zeros stripped;
/// the zero polynomial has an empty coefficient list and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);  // NOLINT: implicit constant embedding
    Poly(long constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs);

    /// The indeterminate itself.
    static Poly z();
    /// c0 + c1*z.
    static Poly linear(Rational c0, Rational c1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of z^k; zero beyond the degree.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const Rational& s, const Poly& p);

    Rational eval(const Rational& at) const;
    /// p(-z): negates odd-degree coefficients.
    Poly reflected() const;
    Poly derivative() const;
    /// Same polynomial scaled to leading coefficient 1 (zero stays zero).
    Poly monic() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    /// Ordering by degree, then coefficients from the top; used as a map key.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

    /// Human rendering, descending degree: "-z^3 + 3*z + 2", "1/2*z - 1".
    std::string str() const;

private:
    void strip();

    std::vector<Rational> coeffs_;
};

/// Euclidean division over the rationals: a = q*b + r with deg r < deg b.
/// Throws std::domain_error when b is zero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Exact quotient; throws std::domain_error when the remainder is nonzero.
Poly poly_div_exact(const Poly& a, const Poly& b);

/// Monic gcd via the Euclidean algorithm. Throws std::domain_error when both
/// inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Square-free decomposition p = constant * prod_i factors[i].first ^
/// factors[i].second with monic square-free factors and strictly increasing
/// multiplicities.
struct SquareFreeDecomposition {
    Rational constant;
    std::vector<std::pair<Poly, int>> factors;

    std::string str() const;
};
SquareFreeDecomposition squarefree_factorization(const Poly& p);

}  // namespace greenfn
