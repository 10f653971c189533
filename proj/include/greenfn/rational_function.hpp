#pragma once

#include <stdexcept>
#include <string>

#include "greenfn/poly.hpp"
#include "greenfn/rational.hpp"

namespace greenfn {

/// Evaluation at a root of the denominator.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(Rational at)
        : std::runtime_error("evaluation at pole z = " + at.str()), at(std::move(at)) {}

    Rational at;
};

/// Reduced rational function num/den: gcd(num, den) = 1 and den monic.
/// Zero is 0/1. Canonical, so equality is plain field-wise comparison.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Poly& constant) : num_(constant), den_(Rational(1)) {}  // NOLINT

    /// Cancels the gcd and scales the denominator monic. Throws
    /// std::domain_error when den is the zero polynomial.
    static RationalFunction reduce(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

    /// Exact value at z0; throws PoleError when den(z0) = 0.
    Rational eval(const Rational& at) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "num / den", or just "num" when the denominator is 1.
    std::string str() const;
    /// Same with numerator and denominator in square-free factored form.
    std::string str_factored() const;

private:
    Poly num_, den_;
};

}  // namespace greenfn
