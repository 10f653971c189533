#include "greenfn/rational_function.hpp"

namespace greenfn {

RationalFunction RationalFunction::reduce(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RationalFunction f;
    if (num.is_zero()) return f;  // canonical 0/1
    Poly g = poly_gcd(num, den);
    Poly n = poly_div_exact(num, g);
    Poly d = poly_div_exact(den, g);
    Rational scale = d.leading().reciprocal();
    f.num_ = scale * n;
    f.den_ = scale * d;
    return f;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::reduce(a.num_ * b.num_, a.den_ * b.den_);
}

Rational RationalFunction::eval(const Rational& at) const {
    Rational d = den_.eval(at);
    if (d.is_zero()) throw PoleError(at);
    return num_.eval(at) / d;
}

std::string RationalFunction::str() const {
    if (den_ == Poly(Rational(1))) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::string RationalFunction::str_factored() const {
    if (is_zero()) return "0";
    std::string n = squarefree_factorization(num_).str();
    if (den_ == Poly(Rational(1))) return n;
    return "[" + n + "] / [" + squarefree_factorization(den_).str() + "]";
}

}  // namespace greenfn
