#include "greenfn/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace greenfn {

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Poly Poly::z() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

Poly Poly::linear(Rational c0, Rational c1) {
    return Poly(std::vector<Rational>{std::move(c0), std::move(c1)});
}

void Poly::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Poly::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[k];
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(out));
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    Poly r(p);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Rational Poly::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::reflected() const {
    Poly r(*this);
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> out(coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return leading().reciprocal() * *this;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() <=> b.coeffs_.size();
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
        auto c = a.coeffs_[i] <=> b.coeffs_[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag == Rational(1);
        if (k == 0) {
            os << mag.str();
        } else {
            if (!unit) os << mag.str() << "*";
            os << (k == 1 ? "z" : "z^" + std::to_string(k));
        }
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    if (rem.degree() < b.degree()) return {Poly(), rem};
    std::vector<Rational> q(rem.degree() - b.degree() + 1, Rational(0));
    Rational lead_inv = b.leading().reciprocal();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational factor = rem.leading() * lead_inv;
        q[shift] = factor;
        std::vector<Rational> sub(shift, Rational(0));
        sub.push_back(factor);
        rem = rem - Poly(std::move(sub)) * b;
    }
    return {Poly(std::move(q)), rem};
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

SquareFreeDecomposition squarefree_factorization(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("square-free factorization of zero");
    SquareFreeDecomposition out;
    out.constant = p.leading();
    Poly f = p.monic();
    if (f.degree() == 0) return out;
    // Yun's algorithm over a field of characteristic zero.
    Poly g = poly_gcd(f, f.derivative());
    Poly w = poly_div_exact(f, g);
    int multiplicity = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, g);
        Poly factor = poly_div_exact(w, y);
        if (factor.degree() > 0) out.factors.emplace_back(factor, multiplicity);
        g = poly_div_exact(g, y);
        w = std::move(y);
        ++multiplicity;
    }
    return out;
}

std::string SquareFreeDecomposition::str() const {
    std::ostringstream os;
    bool need_dot = false;
    if (!(constant == Rational(1)) || factors.empty()) {
        os << constant.str();
        need_dot = true;
    }
    for (const auto& [factor, mult] : factors) {
        if (need_dot) os << " * ";
        os << "(" << factor.str() << ")";
        if (mult > 1) os << "^" << mult;
        need_dot = true;
    }
    return os.str();
}

}  // namespace greenfn
